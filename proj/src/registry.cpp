#include "cotlab/registry.hpp"

#include "cotlab/construct.hpp"
#include "cotlab/profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace cotlab {

const std::vector<std::string>& family_names()
{
    static const std::vector<std::string> names{"zero-cot", "bernstein", "pminimal-local", "plane",
                                                "zero",     "xy2",       "quartic"};
    return names;
}

namespace {

template <typename T>
const T& need(const std::optional<T>& v, const char* name, const std::string& family)
{
    if (!v)
        throw std::invalid_argument("family '" + family + "' requires parameter " + name);
    return *v;
}

} // namespace

SurfaceGraph make_family(const FamilyParams& p)
{
    const auto& fam = p.family;
    if (fam == "zero")
        return surfaces::zero();
    if (fam == "xy2")
        return surfaces::xy_half();
    if (fam == "quartic")
        return surfaces::quartic();
    if (fam == "plane")
        return surfaces::plane(need(p.a, "a", fam), need(p.b, "b", fam), need(p.c, "c", fam));
    if (fam == "zero-cot")
        return zero_cot_solution(need(p.c1, "c1", fam), need(p.c2, "c2", fam), parse_profile(need(p.F, "F", fam)));
    if (fam == "bernstein") {
        const double a = need(p.a, "a", fam);
        const double b = need(p.b, "b", fam);
        if (p.g && p.c)
            throw std::invalid_argument("family 'bernstein' takes either c (linear) or g (quadratic), not both");
        if (p.g)
            return bernstein(BernsteinQuadratic{a, b, parse_profile(*p.g)});
        return bernstein(BernsteinLinear{a, b, need(p.c, "c or g", fam)});
    }
    if (fam == "pminimal-local")
        return pminimal_local(need(p.x0, "x0", fam), parse_profile(need(p.F, "F", fam)),
                              parse_profile(need(p.G, "G", fam)));
    throw std::invalid_argument("unknown family '" + fam + "'");
}

} // namespace cotlab

#include "cotlab/transversality.hpp"

#include "cotlab/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace cotlab {

namespace {

void require_regular(const TransversalityData& td, double eps, const char* what)
{
    if (classify_point(td, eps) == PointKind::Singular)
        throw SingularPoint(std::string(what) + ": singular point (sqrt(D) = "
                            + std::to_string(td.sqrt_d()) + ")");
}

} // namespace

double dot(const TransversalityData& td, double eps)
{
    require_regular(td, eps, "dot");
    return -2.0 / td.sqrt_d();
}

double dot(const Jet2& jet, double eps)
{
    return dot(transversality_data(jet), eps);
}

double dot_level_set(const LevelSetFunction& g, const Vec3& point, double eps)
{
    const auto [x, y, z] = point;
    const Vec3 grad = g.gradient(x, y, z);
    const double u1g = grad[0] - 0.5 * y * grad[2];
    const double u2g = grad[1] + 0.5 * x * grad[2];
    const double horizontal = std::hypot(u1g, u2g);
    if (horizontal < eps)
        throw SingularPoint("dot_level_set: horizontal gradient vanishes");
    return std::abs(grad[2]) / horizontal;
}

double cot(const Jet2& jet, double eps)
{
    const auto td = transversality_data(jet);
    require_regular(td, eps, "cot");
    const double p = td.p;
    const double q = td.q;
    const double bracket =
        p * p * (1.0 + 2.0 * jet.fxy) + 2.0 * p * q * (jet.fyy - jet.fxx) + q * q * (1.0 - 2.0 * jet.fxy);
    return -2.0 * bracket / (td.D * td.D);
}

double cot(const SurfaceGraph& surface, double x, double y, double eps)
{
    return cot(surface.jet(x, y), eps);
}

double cot_printed(const Jet2& jet, double eps)
{
    const auto td = transversality_data(jet);
    require_regular(td, eps, "cot_printed");
    const double p = td.p;
    const double q = td.q;
    const double d2 = td.D * td.D;
    return (4.0 * p * q * (jet.fyy - jet.fxx) + 2.0 * (1.0 - 2.0 * jet.fxy) * q * q) / d2
        + 2.0 * p * p * (1.0 + 2.0 * jet.fxy) / d2;
}

double cot_printed(const SurfaceGraph& surface, double x, double y, double eps)
{
    return cot_printed(surface.jet(x, y), eps);
}

TransversalityData transversality(const Jet2& jet, double eps)
{
    auto td = transversality_data(jet);
    td.a = dot(td, eps);
    td.r = cot(jet, eps);
    return td;
}

double zcot_residual(const Jet2& jet) noexcept
{
    const auto td = transversality_data(jet);
    const double p = td.p;
    const double q = td.q;
    return 2.0 * p * q * (jet.fyy - jet.fxx) + (1.0 - 2.0 * jet.fxy) * q * q + p * p * (1.0 + 2.0 * jet.fxy);
}

double zcot_residual_normalized(const Jet2& jet) noexcept
{
    const double d = transversality_data(jet).D;
    if (d == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return zcot_residual(jet) / (d * d);
}

double pminimal_residual(const Jet2& jet) noexcept
{
    const auto td = transversality_data(jet);
    return td.p * td.p * jet.fxx + 2.0 * td.p * td.q * jet.fxy + td.q * td.q * jet.fyy;
}

double pminimal_residual_normalized(const Jet2& jet) noexcept
{
    const double d = transversality_data(jet).D;
    if (d == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return pminimal_residual(jet) / (d * d);
}

} // namespace cotlab

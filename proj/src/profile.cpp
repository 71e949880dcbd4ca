#include "cotlab/profile.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cotlab {

ProfileFunction::ProfileFunction(std::string tag, std::function<ProfileValue(double)> eval,
                                 std::optional<double> sup_abs_derivative)
    : tag_(std::move(tag))
    , eval_(std::move(eval))
    , sup_df_(sup_abs_derivative)
{
}

ProfileFunction ProfileFunction::sin()
{
    return {"sin", [](double r) { return ProfileValue{std::sin(r), std::cos(r), -std::sin(r)}; }, 1.0};
}

ProfileFunction ProfileFunction::cos()
{
    return {"cos", [](double r) { return ProfileValue{std::cos(r), -std::sin(r), -std::cos(r)}; }, 1.0};
}

ProfileFunction ProfileFunction::constant(double c)
{
    std::ostringstream os;
    os.precision(17);
    os << "const:" << c;
    return {os.str(), [c](double) { return ProfileValue{c, 0.0, 0.0}; }, 0.0};
}

ProfileFunction ProfileFunction::linear(double slope, double intercept)
{
    std::ostringstream os;
    os.precision(17);
    os << "linear:" << slope << "," << intercept;
    return {os.str(), [slope, intercept](double r) { return ProfileValue{slope * r + intercept, slope, 0.0}; },
            std::abs(slope)};
}

ProfileFunction ProfileFunction::polynomial(std::vector<double> coeffs)
{
    std::ostringstream os;
    os.precision(17);
    os << "poly:";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        os << (i ? "," : "") << coeffs[i];
    std::optional<double> sup;
    if (coeffs.size() <= 2)
        sup = coeffs.size() == 2 ? std::abs(coeffs[1]) : 0.0;
    auto eval = [c = std::move(coeffs)](double r) {
        // Horner for value and both derivatives.
        double f = 0.0;
        double df = 0.0;
        double d2f = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            d2f = d2f * r + 2.0 * df;
            df = df * r + f;
            f = f * r + *it;
        }
        return ProfileValue{f, df, d2f};
    };
    return {os.str(), std::move(eval), sup};
}

namespace {

std::vector<double> parse_numbers(std::string_view s)
{
    std::vector<double> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = s.substr(0, comma);
        double v = 0.0;
        const auto* first = item.data();
        const auto* last = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last)
            throw std::invalid_argument("bad number '" + std::string(item) + "' in profile spec");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

ProfileFunction parse_profile(std::string_view spec)
{
    const auto colon = spec.find(':');
    const auto kind = spec.substr(0, colon);
    const auto args = colon == std::string_view::npos ? std::vector<double>{} : parse_numbers(spec.substr(colon + 1));
    auto want = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("profile '" + std::string(kind) + "' expects " + std::to_string(n)
                                        + " parameter(s)");
    };
    if (kind == "sin") {
        want(0);
        return ProfileFunction::sin();
    }
    if (kind == "cos") {
        want(0);
        return ProfileFunction::cos();
    }
    if (kind == "zero") {
        want(0);
        return ProfileFunction::constant(0.0);
    }
    if (kind == "const") {
        want(1);
        return ProfileFunction::constant(args[0]);
    }
    if (kind == "linear") {
        want(2);
        return ProfileFunction::linear(args[0], args[1]);
    }
    if (kind == "poly") {
        if (args.empty())
            throw std::invalid_argument("profile 'poly' needs at least one coefficient");
        return ProfileFunction::polynomial(args);
    }
    throw std::invalid_argument("unknown profile kind '" + std::string(kind) + "'");
}

} // namespace cotlab

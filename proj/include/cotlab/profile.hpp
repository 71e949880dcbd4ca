#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cotlab {

struct ProfileValue {
    double f;
    double df;
    double d2f;
};

/// A twice-differentiable function of one variable, carried with its first
/// two derivatives. Used for the arbitrary functions F, G, g appearing in
/// the solution families.
class ProfileFunction {
public:
    ProfileFunction(std::string tag, std::function<ProfileValue(double)> eval,
                    std::optional<double> sup_abs_derivative);

    [[nodiscard]] ProfileValue operator()(double r) const { return eval_(r); }
    [[nodiscard]] double value(double r) const { return eval_(r).f; }
    [[nodiscard]] const std::string& tag() const noexcept { return tag_; }
    /// sup |F'| over the real line, when known.
    [[nodiscard]] const std::optional<double>& sup_abs_derivative() const noexcept { return sup_df_; }

    static ProfileFunction sin();
    static ProfileFunction cos();
    static ProfileFunction constant(double c);
    /// F(r) = slope * r + intercept
    static ProfileFunction linear(double slope, double intercept);
    /// Coefficients in ascending order: c0 + c1 r + c2 r^2 + ...
    static ProfileFunction polynomial(std::vector<double> coeffs);

private:
    std::string tag_;
    std::function<ProfileValue(double)> eval_;
    std::optional<double> sup_df_;
};

/// Parses "sin", "cos", "zero", "const:c", "linear:slope,intercept",
/// "poly:c0,c1,...". Throws std::invalid_argument on anything else.
ProfileFunction parse_profile(std::string_view spec);

} // namespace cotlab

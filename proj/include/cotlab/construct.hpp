#pragma once

#include "cotlab/profile.hpp"
#include "cotlab/surface.hpp"

#include <variant>

namespace cotlab {

// ---------------------------------------------------------------------------
// Zero-COT graphs
// ---------------------------------------------------------------------------

/// Entire zero-COT graph with constants (c1, c2) and profile F:
///   c2 != 0:  f = c1 x^2 / (2 c2) - x y / 2 + F(c1 x - c2 y)
///   c2 == 0:  f = x y / 2 + F(x)
/// Throws DegenerateParams when c1 = c2 = 0.
SurfaceGraph zero_cot_solution(double c1, double c2, const ProfileFunction& F);

// ---------------------------------------------------------------------------
// Global p-minimal families
// ---------------------------------------------------------------------------

struct BernsteinLinear {
    double a;
    double b;
    double c;
};

/// Quadratic family along the direction (a, b); g is an arbitrary profile
/// of -b x + a y.
struct BernsteinQuadratic {
    double a;
    double b;
    ProfileFunction g;
};

using BernsteinBranch = std::variant<BernsteinLinear, BernsteinQuadratic>;

/// Linear: f = a x + b y + c.
/// Quadratic: f = -(-ab x^2 + (a^2 - b^2) x y + ab y^2) / (2 (a^2 + b^2)) + g(-b x + a y).
/// The quadratic polynomial is rescaled from the u-convention (u = -2f, unit
/// direction) into the f-convention used by pminimal_residual.
SurfaceGraph bernstein(const BernsteinBranch& branch);

/// f = -ab x^2 + (a^2 - b^2) x y + ab y^2 + g(-b x + a y) taken literally.
/// It does not solve the f-convention p-minimal equation; kept as a regression
/// surface next to bernstein().
SurfaceGraph bernstein_literal_quadratic(double a, double b, const ProfileFunction& g);

// ---------------------------------------------------------------------------
// Local p-minimal solution near a regular point
// ---------------------------------------------------------------------------

struct RootSolve {
    double ytilde;
    double residual; // Phi(ytilde)
    double dphi;     // Phi'(ytilde)
    int iterations;
};

/// f(x, y) = (-yt + x0 F(yt)) (x - x0) / 2 + G(yt), where yt = yt(x, y) solves
///   Phi(yt) = (x - x0) F(yt) + yt - y = 0.
class PMinimalLocal {
public:
    PMinimalLocal(double x0, ProfileFunction F, ProfileFunction G);

    /// Newton from yt = y, safeguarded by bisection on a bracket grown from y.
    /// Throws RootNotBracketed or ValidityViolated (Phi' <= 0 at the root).
    [[nodiscard]] RootSolve solve(double x, double y) const;
    [[nodiscard]] double ytilde(double x, double y) const { return solve(x, y).ytilde; }

    [[nodiscard]] double value(double x, double y) const;
    /// Exact jet by implicit differentiation of Phi.
    [[nodiscard]] Jet2 jet(double x, double y) const;

    /// |x - x0| < 1 / (sup|F'| + eps) when sup|F'| is known, else the whole
    /// plane (validity is then checked per point by solve()).
    [[nodiscard]] Domain validity_domain() const;
    [[nodiscard]] SurfaceGraph surface() const;

    [[nodiscard]] double x0() const noexcept { return x0_; }
    [[nodiscard]] const ProfileFunction& F() const noexcept { return F_; }
    [[nodiscard]] const ProfileFunction& G() const noexcept { return G_; }

private:
    double x0_;
    ProfileFunction F_;
    ProfileFunction G_;
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kRootMaxIterations = 60;

SurfaceGraph pminimal_local(double x0, const ProfileFunction& F, const ProfileFunction& G);

// ---------------------------------------------------------------------------
// Burgers splitting
// ---------------------------------------------------------------------------

enum class BurgersBranch {
    G, // g = q / p
    H, // h = p / q
};

enum class BurgersConvention {
    Backward, // g_y = g g_x
    Forward,  // g_x = -g g_y
};

enum class PartialsMode { Analytic, FiniteDifference };

struct BurgersSample {
    double value;
    double dx;
    double dy;
};

/// Pointwise g = (y + 2f_x)/(x - 2f_y) or h = 1/g on a surface.
class BurgersField {
public:
    BurgersField(SurfaceGraph surface, BurgersBranch branch, BurgersConvention convention,
                 PartialsMode mode = PartialsMode::Analytic, double threshold = kSingularEps);

    [[nodiscard]] bool defined(double x, double y) const;
    /// Throws BranchUndefined where |denominator| < threshold.
    [[nodiscard]] double value(double x, double y) const;
    [[nodiscard]] BurgersSample sample(double x, double y) const;

    [[nodiscard]] BurgersBranch branch() const noexcept { return branch_; }
    [[nodiscard]] BurgersConvention convention() const noexcept { return convention_; }
    [[nodiscard]] const SurfaceGraph& surface() const noexcept { return surface_; }

private:
    SurfaceGraph surface_;
    BurgersBranch branch_;
    BurgersConvention convention_;
    PartialsMode mode_;
    double threshold_;
};

BurgersField burgers_field(const SurfaceGraph& surface, BurgersBranch branch, BurgersConvention convention,
                           PartialsMode mode = PartialsMode::Analytic);

/// G when |p| >= |q|, H otherwise.
BurgersBranch default_branch(const Jet2& jet) noexcept;

/// Backward: g_y - g g_x (h: h_x - h h_y). Forward: g_x + g g_y (h: h_y + h h_x).
double burgers_residual(const BurgersField& field, double x, double y);

// ---------------------------------------------------------------------------
// Characteristic lines
// ---------------------------------------------------------------------------

struct Line {
    double px;
    double py;
    double dx;
    double dy;

    [[nodiscard]] std::array<double, 2> at(double t) const noexcept { return {px + t * dx, py + t * dy}; }
};

/// x = -g (y - b) + a, i.e. through (a, b) with direction (-g, 1).
Line characteristic_line(double a, double b, double g_value);
/// y = -h (x - a) + b, direction (1, -h); used where g is infinite.
Line characteristic_line_h(double a, double b, double h_value);
/// Direction (1, g): the lines carrying constant g for the forward equation.
Line forward_characteristic_line(double a, double b, double g_value);

/// max |g(line(t)) - g(line(0))| over n_samples equally spaced t in [t_min, t_max].
double constancy_along_line(const BurgersField& field, const Line& line, int n_samples, double t_min = -1.0,
                            double t_max = 1.0);

} // namespace cotlab

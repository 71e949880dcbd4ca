#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace cotlab {

/// Second-order jet of a graph function f at the plane point (x, y).
struct Jet2 {
    double x = 0.0;
    double y = 0.0;
    double f = 0.0;
    double fx = 0.0;
    double fy = 0.0;
    double fxx = 0.0;
    double fxy = 0.0;
    double fyy = 0.0;

    [[nodiscard]] bool finite() const noexcept;
};

struct Rect {
    double xmin;
    double xmax;
    double ymin;
    double ymax;

    [[nodiscard]] bool contains(double x, double y) const noexcept
    {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

using ScalarField = std::function<double(double, double)>;
using JetEvaluator = std::function<Jet2(double, double)>;

/// Where a surface may be evaluated. Either the whole plane, a closed
/// rectangle, or an arbitrary predicate (optionally with a bounding box).
class Domain {
public:
    static Domain plane();
    static Domain rect(Rect r);
    static Domain where(std::function<bool(double, double)> pred, std::string description);

    [[nodiscard]] bool contains(double x, double y) const;
    [[nodiscard]] const std::string& description() const noexcept { return description_; }
    [[nodiscard]] const std::optional<Rect>& bounds() const noexcept { return bounds_; }

private:
    std::optional<Rect> bounds_;
    std::function<bool(double, double)> pred_;
    std::string description_ = "plane";
};

/// A graph surface N = {(x, y, f(x, y))} over a planar domain, evaluated
/// through a jet rule. Immutable once built; copies share nothing mutable.
class SurfaceGraph {
public:
    SurfaceGraph(std::string provenance, JetEvaluator jet, Domain domain = Domain::plane(),
                 ScalarField value = {});

    /// Throws OutOfDomain outside the declared domain.
    [[nodiscard]] Jet2 jet(double x, double y) const;
    [[nodiscard]] double value(double x, double y) const;

    [[nodiscard]] bool contains(double x, double y) const { return domain_.contains(x, y); }
    [[nodiscard]] const Domain& domain() const noexcept { return domain_; }
    [[nodiscard]] const std::string& provenance() const noexcept { return provenance_; }
    /// The scalar function alone, for finite-difference oracles.
    [[nodiscard]] ScalarField scalar_field() const;

private:
    std::string provenance_;
    JetEvaluator jet_;
    Domain domain_;
    ScalarField value_;
};

Jet2 eval_jet(const SurfaceGraph& surface, double x, double y);

inline constexpr double kFiniteDiffStep = 1e-4;

/// Step used by the generic callable wrapper: kFiniteDiffStep * max(1, |x|, |y|).
double default_fd_step(double x, double y) noexcept;

/// Central differences on the 9-point stencil, O(h^2). When a domain is
/// given, every stencil node must lie inside it (else StencilOutOfDomain).
Jet2 finite_diff_jet(const ScalarField& field, double x, double y, double h,
                     const Domain* domain = nullptr);

/// Wraps a plain function; jets come from finite_diff_jet with default_fd_step.
SurfaceGraph from_callable(std::string name, ScalarField field, Domain domain = Domain::plane());

struct TransversalityData {
    double p = 0.0; // x - 2 f_y
    double q = 0.0; // y + 2 f_x
    double D = 0.0; // p^2 + q^2
    std::optional<double> a;
    std::optional<double> r;

    [[nodiscard]] double sqrt_d() const noexcept;
};

TransversalityData transversality_data(const Jet2& jet) noexcept;

inline constexpr double kSingularEps = 1e-8;

enum class PointKind { Regular, Singular };

/// Singular iff sqrt(D) < eps.
PointKind classify_point(const TransversalityData& td, double eps = kSingularEps);

using Vec3 = std::array<double, 3>;

/// Adapted frame in (d/dx, d/dy, d/dz) components.
struct Frame {
    Vec3 v0;
    Vec3 v1;
    Vec3 v2;
};

/// Throws SingularPoint when sqrt(D) < eps.
Frame adapted_frame_graph(const Jet2& jet, double eps = kSingularEps);

/// Named test surfaces.
namespace surfaces {
SurfaceGraph zero();
/// f = a x + b y + c
SurfaceGraph plane(double a, double b, double c);
/// f = x y / 2
SurfaceGraph xy_half();
/// f = x^4, used as a negative control.
SurfaceGraph quartic();
} // namespace surfaces

} // namespace cotlab

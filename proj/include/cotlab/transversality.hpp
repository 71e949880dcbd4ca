#pragma once

#include "cotlab/surface.hpp"

#include <functional>

namespace cotlab {

/// Degree of transversality a = -2/sqrt(D). Throws SingularPoint when
/// sqrt(D) < eps.
double dot(const TransversalityData& td, double eps = kSingularEps);
double dot(const Jet2& jet, double eps = kSingularEps);

/// A scalar function g(x, y, z) on the Heisenberg group with its gradient.
struct LevelSetFunction {
    std::function<double(double, double, double)> value;
    std::function<Vec3(double, double, double)> gradient;
};

/// |a| for the level set through `point`, computed as |v0 g| / |grad_H g|
/// with v0 = -d/dz, u1 = d/dx - (y/2) d/dz, u2 = d/dy + (x/2) d/dz.
double dot_level_set(const LevelSetFunction& g, const Vec3& point, double eps = kSingularEps);

/// Curvature of transversality r = v1 a - a^2 from the 2-jet. This is the
/// sign for which da/dt = a^2 + r holds along characteristics.
double cot(const Jet2& jet, double eps = kSingularEps);
double cot(const SurfaceGraph& surface, double x, double y, double eps = kSingularEps);

/// The literal graph COT expression
///   [4pq(fyy - fxx) + 2(1 - 2fxy) q^2 + 2p^2 (1 + 2fxy)] / D^2,
/// which equals -cot. Kept for regression against the Riccati-consistent form.
double cot_printed(const Jet2& jet, double eps = kSingularEps);
double cot_printed(const SurfaceGraph& surface, double x, double y, double eps = kSingularEps);

/// Fills a and r; throws SingularPoint at singular points.
TransversalityData transversality(const Jet2& jet, double eps = kSingularEps);

/// 2pq(fyy - fxx) + (1 - 2fxy) q^2 + p^2 (1 + 2fxy). Vanishes on zero-COT graphs.
double zcot_residual(const Jet2& jet) noexcept;
/// zcot_residual / D^2, for plotting; NaN at D = 0.
double zcot_residual_normalized(const Jet2& jet) noexcept;

/// p^2 fxx + 2pq fxy + q^2 fyy. Vanishes on p-minimal graphs.
double pminimal_residual(const Jet2& jet) noexcept;
double pminimal_residual_normalized(const Jet2& jet) noexcept;

} // namespace cotlab

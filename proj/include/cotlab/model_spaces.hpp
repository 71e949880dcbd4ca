#pragma once

#include "cotlab/exact.hpp"

#include <array>
#include <complex>
#include <string>
#include <variant>

namespace cotlab {

enum class ModelName { Heisenberg, SU2, SL2 };

const char* to_string(ModelName m) noexcept;

using MatrixFrame = std::array<exact::Matrix, 3>;
using VectorFieldFrame = std::array<exact::VectorField, 3>;

/// Three-dimensional subriemannian model given by a frame (v0, v1, v2):
/// left-invariant matrices for SU(2) and SL(2), polynomial vector fields for
/// the Heisenberg group.
struct ModelSpace {
    ModelName name;
    std::variant<MatrixFrame, VectorFieldFrame> frame;

    static ModelSpace heisenberg();
    static ModelSpace su2();
    static ModelSpace sl2();
};

/// a[i][j][k] with [v_i, v_j] = sum_k a[i][j][k] v_k (antisymmetric in i, j).
struct StructureConstants {
    std::array<std::array<std::array<exact::Rational, 3>, 3>, 3> a{};

    [[nodiscard]] const exact::Rational& operator()(int i, int j, int k) const
    {
        return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
};

/// XY - YX. Throws DimensionMismatch on size mismatch.
exact::Matrix bracket(const exact::Matrix& X, const exact::Matrix& Y);

/// Bracket of two frame elements of the model, expressed in the frame basis.
std::array<exact::Rational, 3> bracket_coefficients(const ModelSpace& model, int i, int j);

/// Throws FrameNotBasis if the frame is dependent or a bracket leaves its span
/// with constant coefficients.
StructureConstants structure_constants(const ModelSpace& model);

/// [v0,[v1,v2]] + [v1,[v2,v0]] + [v2,[v0,v1]] == 0, checked exactly.
bool jacobi_holds(const ModelSpace& model);

/// r = -a01^2 - a * a12^2.
double cot_from_constants(const StructureConstants& constants, double a);
double cot_from_constants(const ModelSpace& model, double a);

/// Product of the rotation by theta1/2 and the i-rotation by theta2/2.
using Mat2c = std::array<std::array<std::complex<double>, 2>, 2>;
Mat2c su2_example_surface(double theta1, double theta2);

struct RescaleResult {
    exact::Rational lambda;
    /// Factor mu with v0' = mu v0 forced by a12'^0 = -1 for the frame (lambda v1, lambda v2).
    exact::Rational reeb_scale;
    StructureConstants constants;
    exact::Rational cot;
};

/// Rescales the horizontal frame by lambda, renormalizes the Reeb field so that
/// a12^0 = -1, and recomputes the constant COT -a01^2 - a a12^2 (a12^2 = 0 for
/// SU(2) and SL(2), so the value is independent of a).
RescaleResult rescale_check(const ModelSpace& model, const exact::Rational& lambda);

} // namespace cotlab

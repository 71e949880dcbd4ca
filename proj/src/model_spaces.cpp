#include "cotlab/model_spaces.hpp"

#include "cotlab/errors.hpp"

#include <cmath>
#include <set>

namespace cotlab {

using exact::GaussianRational;
using exact::Matrix;
using exact::Polynomial;
using exact::Rational;
using exact::VectorField;

const char* to_string(ModelName m) noexcept
{
    switch (m) {
    case ModelName::Heisenberg:
        return "Heisenberg";
    case ModelName::SU2:
        return "SU2";
    case ModelName::SL2:
        return "SL2";
    }
    return "?";
}

namespace {

const Rational half(1, 2);

GaussianRational re(const Rational& r)
{
    return {r, Rational(0)};
}

GaussianRational im(const Rational& r)
{
    return {Rational(0), r};
}

} // namespace

ModelSpace ModelSpace::heisenberg()
{
    const Polynomial x = Polynomial::variable(0);
    const Polynomial y = Polynomial::variable(1);
    const Polynomial zero;
    const Polynomial one(Rational(1));
    // v0 = -d/dz, u1 = d/dx - (y/2) d/dz, u2 = d/dy + (x/2) d/dz
    VectorField v0{{zero, zero, Polynomial(Rational(-1))}};
    VectorField v1{{one, zero, Polynomial(-half) * y}};
    VectorField v2{{zero, one, Polynomial(half) * x}};
    return {ModelName::Heisenberg, VectorFieldFrame{v0, v1, v2}};
}

ModelSpace ModelSpace::su2()
{
    Matrix v0{{im(-half), re(0)}, {re(0), im(half)}};
    Matrix v1{{re(0), re(half)}, {re(-half), re(0)}};
    Matrix v2{{re(0), im(half)}, {im(half), re(0)}};
    return {ModelName::SU2, MatrixFrame{v0, v1, v2}};
}

ModelSpace ModelSpace::sl2()
{
    Matrix v0{{re(0), re(-half)}, {re(half), re(0)}};
    Matrix v1{{re(half), re(0)}, {re(0), re(-half)}};
    Matrix v2{{re(0), re(half)}, {re(half), re(0)}};
    return {ModelName::SL2, MatrixFrame{v0, v1, v2}};
}

Matrix bracket(const Matrix& X, const Matrix& Y)
{
    if (X.size() != Y.size())
        throw DimensionMismatch("bracket: matrices of different size");
    return X * Y - Y * X;
}

namespace {

// Real coordinates of a matrix: (Re, Im) of each entry.
std::vector<Rational> flatten(const Matrix& m)
{
    std::vector<Rational> out;
    out.reserve(2 * m.entries().size());
    for (const auto& e : m.entries()) {
        out.push_back(e.re);
        out.push_back(e.im);
    }
    return out;
}

// Coefficients of a vector field on a fixed list of (component, monomial) slots.
using Slot = std::pair<int, Polynomial::Exponent>;

std::vector<Rational> flatten(const VectorField& v, const std::vector<Slot>& slots)
{
    std::vector<Rational> out;
    out.reserve(slots.size());
    for (const auto& [comp, e] : slots) {
        const auto& terms = v.c[static_cast<std::size_t>(comp)].terms();
        const auto it = terms.find(e);
        out.push_back(it == terms.end() ? Rational(0) : it->second);
    }
    return out;
}

std::vector<Slot> slots_of(std::initializer_list<const VectorField*> fields)
{
    std::set<Slot> s;
    for (const auto* f : fields)
        for (int k = 0; k < 3; ++k)
            for (const auto& [e, c] : f->c[static_cast<std::size_t>(k)].terms())
                s.emplace(k, e);
    return {s.begin(), s.end()};
}

std::array<Rational, 3> decompose(const MatrixFrame& frame, const Matrix& w)
{
    const auto sol = exact::solve_exact({flatten(frame[0]), flatten(frame[1]), flatten(frame[2])}, flatten(w));
    if (!sol)
        throw FrameNotBasis("bracket is not a constant combination of the frame");
    return {(*sol)[0], (*sol)[1], (*sol)[2]};
}

std::array<Rational, 3> decompose(const VectorFieldFrame& frame, const VectorField& w)
{
    // Constant coefficients only: matching every monomial of every component
    // makes the identity sum c_k v_k = w exact.
    const auto slots = slots_of({&frame[0], &frame[1], &frame[2], &w});
    const auto sol = exact::solve_exact(
        {flatten(frame[0], slots), flatten(frame[1], slots), flatten(frame[2], slots)}, flatten(w, slots));
    if (!sol)
        throw FrameNotBasis("bracket is not a constant combination of the frame");
    return {(*sol)[0], (*sol)[1], (*sol)[2]};
}

} // namespace

std::array<Rational, 3> bracket_coefficients(const ModelSpace& model, int i, int j)
{
    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    if (const auto* mf = std::get_if<MatrixFrame>(&model.frame))
        return decompose(*mf, bracket((*mf)[ui], (*mf)[uj]));
    const auto& vf = std::get<VectorFieldFrame>(model.frame);
    return decompose(vf, exact::lie_bracket(vf[ui], vf[uj]));
}

StructureConstants structure_constants(const ModelSpace& model)
{
    StructureConstants sc;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const auto coeffs = bracket_coefficients(model, i, j);
            for (int k = 0; k < 3; ++k) {
                sc.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    coeffs[static_cast<std::size_t>(k)];
                sc.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    -coeffs[static_cast<std::size_t>(k)];
            }
        }
    return sc;
}

bool jacobi_holds(const ModelSpace& model)
{
    if (const auto* mf = std::get_if<MatrixFrame>(&model.frame)) {
        const auto& [v0, v1, v2] = *mf;
        return (bracket(v0, bracket(v1, v2)) + bracket(v1, bracket(v2, v0)) + bracket(v2, bracket(v0, v1))).is_zero();
    }
    const auto& [v0, v1, v2] = std::get<VectorFieldFrame>(model.frame);
    using exact::lie_bracket;
    return (lie_bracket(v0, lie_bracket(v1, v2)) + lie_bracket(v1, lie_bracket(v2, v0))
            + lie_bracket(v2, lie_bracket(v0, v1)))
        .is_zero();
}

double cot_from_constants(const StructureConstants& constants, double a)
{
    const double a01_2 = constants(0, 1, 2).to_double();
    const double a12_2 = constants(1, 2, 2).to_double();
    // Skip the product when a12^2 = 0 so the result is exact for any a.
    return a12_2 == 0.0 ? -a01_2 : -a01_2 - a * a12_2;
}

double cot_from_constants(const ModelSpace& model, double a)
{
    return cot_from_constants(structure_constants(model), a);
}

Mat2c su2_example_surface(double theta1, double theta2)
{
    using C = std::complex<double>;
    const double c1 = std::cos(theta1 / 2.0);
    const double s1 = std::sin(theta1 / 2.0);
    const double c2 = std::cos(theta2 / 2.0);
    const double s2 = std::sin(theta2 / 2.0);
    const Mat2c A{{{C(c1), C(s1)}, {C(-s1), C(c1)}}};
    const Mat2c B{{{C(c2), C(0, s2)}, {C(0, s2), C(c2)}}};
    Mat2c out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
    return out;
}

RescaleResult rescale_check(const ModelSpace& model, const Rational& lambda)
{
    if (!(Rational(0) < lambda))
        throw std::invalid_argument("rescale_check: lambda must be positive");
    ModelSpace scaled = model;
    if (auto* mf = std::get_if<MatrixFrame>(&scaled.frame)) {
        (*mf)[1] = lambda * (*mf)[1];
        (*mf)[2] = lambda * (*mf)[2];
    } else {
        auto& vf = std::get<VectorFieldFrame>(scaled.frame);
        vf[1] = Polynomial(lambda) * vf[1];
        vf[2] = Polynomial(lambda) * vf[2];
    }
    // a12^0 of the rescaled horizontal frame against the old Reeb field; the
    // new Reeb field is -a12^0 v0 so that its coefficient becomes -1.
    const Rational reeb_scale = -bracket_coefficients(scaled, 1, 2)[0];
    if (auto* mf = std::get_if<MatrixFrame>(&scaled.frame))
        (*mf)[0] = reeb_scale * (*mf)[0];
    else {
        auto& vf = std::get<VectorFieldFrame>(scaled.frame);
        vf[0] = Polynomial(reeb_scale) * vf[0];
    }
    RescaleResult out{lambda, reeb_scale, structure_constants(scaled), Rational(0)};
    out.cot = -out.constants(0, 1, 2);
    if (!out.constants(1, 2, 2).is_zero())
        throw FrameNotBasis("rescale_check: a12^2 != 0, COT is not constant for this model");
    return out;
}

} // namespace cotlab

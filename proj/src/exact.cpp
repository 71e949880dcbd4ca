#include "cotlab/exact.hpp"

#include "cotlab/errors.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace cotlab::exact {

namespace {

__int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(std::int64_t n)
    : num_(n)
    , den_(1)
{
}

Rational::Rational(std::int64_t n, std::int64_t d)
{
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d)
{
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi)
        throw std::overflow_error("Rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

std::string Rational::str() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0)
        throw std::domain_error("Rational: division by zero");
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b)
{
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string GaussianRational::str() const
{
    if (im.is_zero())
        return re.str();
    const std::string imag = (im == Rational(1) ? "" : (im == Rational(-1) ? "-" : im.str())) + "i";
    if (re.is_zero())
        return imag;
    return re.str() + (im < Rational(0) ? "" : "+") + imag;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t n)
    : n_(n)
    , data_(n * n)
{
}

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : n_(rows.size())
{
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_)
            throw DimensionMismatch("Matrix: rows must form a square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

bool Matrix::is_zero() const noexcept
{
    for (const auto& e : data_)
        if (!e.is_zero())
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.n_ != b.n_)
        throw DimensionMismatch("Matrix product: size mismatch");
    Matrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t j = 0; j < a.n_; ++j) {
            GaussianRational acc;
            for (std::size_t k = 0; k < a.n_; ++k)
                acc = acc + a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.n_ != b.n_)
        throw DimensionMismatch("Matrix sum: size mismatch");
    Matrix out(a.n_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.n_ != b.n_)
        throw DimensionMismatch("Matrix difference: size mismatch");
    Matrix out(a.n_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a)
{
    Matrix out(a.n_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = s * a.data_[i];
    return out;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(Rational c)
{
    add_term({0, 0, 0}, c);
}

Polynomial Polynomial::variable(int index)
{
    Polynomial p;
    Exponent e{0, 0, 0};
    e.at(static_cast<std::size_t>(index)) = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::derivative(int index) const
{
    Polynomial out;
    const auto i = static_cast<std::size_t>(index);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0)
            continue;
        Exponent d = e;
        --d[i];
        out.add_term(d, c * Rational(e[i]));
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_)
        out.add_term(e, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_)
        out.add_term(e, -c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

VectorField operator+(const VectorField& a, const VectorField& b)
{
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
}

VectorField operator-(const VectorField& a, const VectorField& b)
{
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}};
}

VectorField operator*(const Polynomial& s, const VectorField& a)
{
    return {{s * a.c[0], s * a.c[1], s * a.c[2]}};
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y)
{
    VectorField out;
    for (int k = 0; k < 3; ++k) {
        Polynomial acc;
        for (int i = 0; i < 3; ++i)
            acc = acc + X.c[i] * Y.c[k].derivative(i) - Y.c[i] * X.c[k].derivative(i);
        out.c[k] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& columns,
                                                 const std::vector<Rational>& rhs)
{
    const std::size_t n = columns.size();
    const std::size_t m = rhs.size();
    for (const auto& c : columns)
        if (c.size() != m)
            throw DimensionMismatch("solve_exact: column length mismatch");

    // Augmented row-major matrix [A | b].
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = columns[j][i];
        rows[i][n] = rhs[i];
    }

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m && rows[sel][col].is_zero())
            ++sel;
        if (sel == m)
            return std::nullopt; // dependent columns
        std::swap(rows[sel], rows[pivot_row]);
        const Rational inv = Rational(1) / rows[pivot_row][col];
        for (auto& v : rows[pivot_row])
            v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pivot_row || rows[i][col].is_zero())
                continue;
            const Rational f = rows[i][col];
            for (std::size_t j = col; j <= n; ++j)
                rows[i][j] -= f * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    for (std::size_t i = pivot_row; i < m; ++i)
        if (!rows[i][n].is_zero())
            return std::nullopt; // inconsistent
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = rows[j][n];
    return out;
}

} // namespace cotlab::exact

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cotlab::exact {

/// Reduced fraction with 64-bit numerator and positive denominator.
/// Arithmetic throws std::overflow_error rather than wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n); // NOLINT: implicit from integers is intended
    Rational(std::int64_t n, std::int64_t d);

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    [[nodiscard]] std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// a + b i with rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    [[nodiscard]] bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    [[nodiscard]] std::string str() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const Rational& s, const GaussianRational& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

/// Square matrix over the Gaussian rationals.
class Matrix {
public:
    explicit Matrix(std::size_t n);
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] const std::vector<GaussianRational>& entries() const noexcept { return data_; }

    /// Throws DimensionMismatch on size mismatch.
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t n_;
    std::vector<GaussianRational> data_;
};

/// Polynomial in (x, y, z) with rational coefficients.
class Polynomial {
public:
    using Exponent = std::array<int, 3>;

    Polynomial() = default;
    Polynomial(Rational c); // NOLINT: constants convert implicitly
    static Polynomial variable(int index);

    [[nodiscard]] Polynomial derivative(int index) const;
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void add_term(const Exponent& e, const Rational& c);

    std::map<Exponent, Rational> terms_;
};

/// Vector field with polynomial components along d/dx, d/dy, d/dz.
struct VectorField {
    std::array<Polynomial, 3> c;

    [[nodiscard]] bool is_zero() const noexcept { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const Polynomial& s, const VectorField& a);
    friend bool operator==(const VectorField& a, const VectorField& b) = default;
};

/// Lie bracket of vector fields: [X, Y]^k = X(Y^k) - Y(X^k).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// Solves A c = b exactly, where the columns of A are given. Returns nothing
/// when the columns are dependent or the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& columns,
                                                 const std::vector<Rational>& rhs);

} // namespace cotlab::exact

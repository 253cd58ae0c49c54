#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmvf {

/// Polynomial in t with integer coefficients, indexed by degree.
///
/// Poincare and Conley polynomials have nonnegative coefficients; signed
/// values appear only transiently inside Morse-equation arithmetic.
/// Trailing zeros are normalized away, so the zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial monomial(int degree, std::int64_t coeff = 1);
    static Polynomial constant(std::int64_t value) { return monomial(0, value); }
    /// 1 + t
    static Polynomial one_plus_t();

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int degree) const {
        return (degree >= 0 && degree < static_cast<int>(c_.size())) ? c_[degree] : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    bool nonnegative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    Polynomial operator*(const Polynomial& o) const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

    /// Exact division by (1 + t). Returns false when the division leaves a remainder.
    bool divide_by_one_plus_t(Polynomial& quotient) const;

    /// "a0 + a1*t + a2*t^2" with zero terms omitted and unit coefficients
    /// elided; the zero polynomial renders as "0". This exact string is the
    /// CLI / golden-test format.
    std::string to_string() const;

    /// Inverse of to_string for the same grammar. Throws std::invalid_argument.
    static Polynomial parse(const std::string& text);

private:
    void normalize();
    std::vector<std::int64_t> c_;
};

} // namespace cmvf

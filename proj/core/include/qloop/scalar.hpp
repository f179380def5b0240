#ifndef QLOOP_SCALAR_HPP
#define QLOOP_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qloop {

/// Dense polynomial in v with arbitrary-precision integer coefficients.
/// Coefficient of v^k sits at index k; trailing zeros are trimmed, so the
/// zero polynomial has an empty coefficient vector and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long n);
    IntPoly(const mpz_class& n);
    static IntPoly monomial(const mpz_class& coef, int exp);

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const;
    const mpz_class& coeff(int k) const;
    const mpz_class& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return coeff_ == o.coeff_; }
    std::strong_ordering operator<=>(const IntPoly& o) const;

    /// Multiply by v^k (k >= 0).
    IntPoly shifted(int k) const;
    /// Coefficients in reverse order: rev(p)(v) = v^deg(p) * p(1/v).
    IntPoly reversed() const;
    IntPoly pow(unsigned e) const;

    /// Exact division; throws std::domain_error if the remainder is nonzero.
    IntPoly div_exact(const IntPoly& d) const;
    /// gcd over Z[v], integer contents included, positive leading coefficient.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);
    mpz_class content() const;

    void set_coeff(int k, const mpz_class& val);

private:
    void trim();
    std::vector<mpz_class> coeff_;
};

std::string to_string(const IntPoly& p);

/// Element of Q(v): a reduced fraction of integer polynomials in v.
/// Canonical form: gcd(num, den) = 1 (integer contents included) and the
/// denominator has positive leading coefficient, so equality of values is
/// equality of representations.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    Scalar(const mpz_class& n) : num_(n), den_(1) {}
    Scalar(const mpq_class& q);
    static Scalar v_power(long k);
    static Scalar from_fraction(IntPoly num, IntPoly den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Throws std::domain_error on division by zero.
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const;
    /// The involution v -> v^-1 on coefficients.
    Scalar bar() const;

    bool operator==(const Scalar& o) const = default;
    std::strong_ordering operator<=>(const Scalar& o) const;

    std::string to_string() const;
    /// Parses the scalar literal grammar: integers, `v`, `+ - * / ^`
    /// (integer exponents, possibly negative) and parentheses.
    static Scalar parse(std::string_view text);

private:
    void normalize();
    IntPoly num_, den_;
};

/// Truncated Laurent expansion at v = infinity: exact rational coefficients
/// of v^k for k >= -low_order, zero coefficients omitted.
struct SeriesWindow {
    std::map<int, mpq_class> coefficients;
    int low_order = 0;

    mpq_class coeff(int k) const;
};

/// Expansion of s in decreasing powers of v, keeping exponents >= -order.
/// Every Scalar admits such an expansion.
SeriesWindow expand_series(const Scalar& s, int order);

/// Semi-decision at the given order for membership in 1 + v^-1 N[[v^-1]]:
/// constant coefficient 1, no positive powers of v, and nonnegative integer
/// coefficients down to v^-order. A `true` certifies only the inspected window.
bool in_one_plus_vinv_nat(const Scalar& s, int order);

/// Same window test for v^-1 N[[v^-1]]: strictly negative exponents only,
/// nonnegative integer coefficients.
bool in_vinv_nat(const Scalar& s, int order);

}  // namespace qloop

#endif

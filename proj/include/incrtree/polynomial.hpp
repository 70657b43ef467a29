#ifndef INCRTREE_POLYNOMIAL_HPP
#define INCRTREE_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace incrtree {

/// Univariate polynomial with exact integer coefficients, lowest degree
/// first. Trailing zero coefficients are always trimmed, so the zero
/// polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial constant(const mpz_class& c);
    /// c * x^degree.
    static IntPolynomial monomial(int degree, const mpz_class& c = 1);

    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i; zero beyond the degree.
    mpz_class coefficient(int i) const;

    mpz_class evaluate(const mpz_class& x) const;
    IntPolynomial pow(unsigned exponent) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

/// Human-readable form such as "x^3 - 3x^2 + 2x"; "0" for the zero polynomial.
std::string to_string(const IntPolynomial& p, const std::string& var = "x");

}  // namespace incrtree

#endif

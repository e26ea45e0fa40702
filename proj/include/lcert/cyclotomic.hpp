#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcert/intutil.hpp"
#include "lcert/rational.hpp"

namespace lcert {

// Automorphism of Q(zeta_N) determined by zeta_N -> zeta_N^d with gcd(d, N) = 1.
// Composition corresponds to multiplication of exponents mod N.
struct GaloisElement {
    i64 level;
    i64 exponent;

    GaloisElement(i64 N, i64 d);
    GaloisElement compose(const GaloisElement& other) const;
};

// Exact element of the cyclotomic field Q(zeta_N), stored as a sparse map
// exponent -> rational coefficient over a fixed canonical basis of Q(zeta_N)
// (see reduction notes in the implementation). Equality of canonical forms is
// equality in the field. Values are immutable after construction; every
// operation returns a fresh value, so instances may be shared freely across
// threads.
class CycNumber {
  public:
    CycNumber() : level_(1) {}

    static CycNumber zero(i64 level = 1);
    static CycNumber one();
    static CycNumber from_rational(const Rational& r, i64 level = 1);
    static CycNumber root_of_unity(i64 level, i64 exponent);
    // General constructor: sum of terms c * zeta_level^k, exponents arbitrary
    // integers (reduced mod level). Rejects level < 1.
    static CycNumber make(i64 level, const std::vector<std::pair<i64, Rational>>& terms);

    i64 level() const { return level_; }
    const std::map<i64, Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    Rational rational_value() const;  // throws when the value is irrational

    // Representative of the same field element at a larger level (level | new_level).
    CycNumber promoted(i64 new_level) const;

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator-() const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator*(const Rational& s) const;
    CycNumber operator/(const Rational& s) const;

    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

    // Semantic equality: operands are promoted to the lcm level and their
    // canonical forms compared.
    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    CycNumber inverse() const;  // throws on zero
    CycNumber pow(i64 e) const;
    CycNumber conjugate() const;

    // Apply sigma: zeta^k -> zeta^{k d}. The automorphism's level must equal
    // this value's level; use galois_apply to promote first.
    CycNumber galois(const GaloisElement& sigma) const;
    bool fixed_by(const GaloisElement& sigma) const;

    // Numeric value under the identity embedding zeta_N -> exp(2*pi*i/N),
    // computed internally at `precision_bits` (>= 53) binary digits and
    // rounded to double.
    std::complex<double> embed(unsigned precision_bits = 64) const;

    std::string str() const;

  private:
    i64 level_;
    std::map<i64, Rational> coeffs_;
};

inline CycNumber operator*(const Rational& s, const CycNumber& a) { return a * s; }

// Promotes a to sigma.level when needed (a.level must divide it), then applies.
CycNumber galois_apply(const GaloisElement& sigma, const CycNumber& a);

// True iff a is fixed by every automorphism in the generating set. When the
// set generates Gal(Q(zeta_N)/F) this certifies membership in F.
bool is_fixed_by(const CycNumber& a, const std::vector<GaloisElement>& generators);

// Coefficients of the N-th cyclotomic polynomial, ascending degree, computed
// by the Moebius/quotient recurrence Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d.
std::vector<mpz_class> cyclotomic_polynomial(i64 n);

}  // namespace lcert

#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include "lcert/characters.hpp"

namespace lcert {

// Plain and character-twisted Bernoulli numbers, B_1 = -1/2 convention.
// Append-only; reads and writes are serialized internally so a single cache
// may be shared across threads.
class BernoulliCache {
  public:
    Rational plain(int n);
    // B_{n,chi} for primitive chi; cached by (character label, n).
    CycNumber by_character(const DirichletCharacter& chi, int n);

  private:
    std::mutex mu_;
    std::vector<Rational> plain_{Rational(1), Rational(-1, 2)};
    std::map<std::pair<std::string, int>, CycNumber> twisted_;
};

BernoulliCache& bernoulli_cache();

Rational bernoulli_number(int n);
// B_n(x) via the binomial expansion over cached Bernoulli numbers.
Rational bernoulli_polynomial(int n, const Rational& x);

// B_{n,chi} = f^{n-1} sum_{a=1}^{f} chi(a) B_n(a/f), chi primitive of conductor f.
CycNumber generalized_bernoulli(const DirichletCharacter& chi, int n);

// L(chi, s) = -B_{1-s,chi}/(1-s) for s <= 0, chi primitive.
CycNumber l_value_nonpositive(const DirichletCharacter& chi, int s);

enum class CriticalCondition { I, II, None };

struct CriticalityVerdict {
    int m;
    bool critical;
    CriticalCondition condition;
};

const char* condition_name(CriticalCondition c);

// Parity-signature classification of a non-positive integer argument:
// condition I when m is odd and every constituent is even, condition II when
// m is even and every constituent is odd; mixed parities are never critical.
CriticalityVerdict classify_criticality(const std::vector<int>& parities, int m);

// Hurwitz zeta via Euler-Maclaurin (30 direct terms, 12 corrections), for
// s >= 1.5 and 0 < x <= 1. digamma(x) serves the s = 1 limit.
double hurwitz_zeta(double s, double x);
double digamma(double x);

// Numeric L(chi, s) for primitive chi: s >= 1.5, or s = 1 for non-principal
// chi (where the Hurwitz poles cancel). Relative accuracy ~1e-10 on the
// validated range f <= 60, 1.5 <= s <= 12.
std::complex<double> l_value_numeric(const DirichletCharacter& chi, double s);

// sqrt(n) for a positive integer, exact inside a cyclotomic field: square
// parts are pulled out, sqrt(2) = zeta_8 + zeta_8^-1, and sqrt(p) for odd p
// comes from the quadratic Gauss sum mod p (divided by i when p = 3 mod 4).
CycNumber sqrt_exact(i64 n);

// Root number W(chi) = tau(chi) / (i^p sqrt(f)), exact; |W| = 1 through
// W * conj(W) = 1.
CycNumber root_number(const DirichletCharacter& chi);

struct FunctionalEquationResidual {
    double absolute;
    double relative;
    int sign;  // the +-1 minimizing the residual
    std::complex<double> lhs, rhs;
};

// Compares exact L(chi, m) against the numeric right side of the explicit
// functional equation at s = 1 - m. The undetermined sign is resolved by
// minimizing the residual; the winning sign is reported.
FunctionalEquationResidual functional_equation_check(const DirichletCharacter& chi, int m);

}  // namespace lcert

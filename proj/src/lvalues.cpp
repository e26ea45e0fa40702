#include "lcert/lvalues.hpp"

#include <cmath>
#include <numeric>

#include "lcert/gauss.hpp"

namespace lcert {

Rational BernoulliCache::plain(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: index must be non-negative");
    std::lock_guard<std::mutex> lock(mu_);
    while ((int)plain_.size() <= n) {
        // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
        int m = (int)plain_.size();
        Rational acc(0);
        for (int k = 0; k < m; ++k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
            acc += Rational(binom) * plain_[k];
        }
        plain_.push_back(-acc / Rational(m + 1));
    }
    return plain_[n];
}

CycNumber BernoulliCache::by_character(const DirichletCharacter& chi, int n) {
    if (!chi.is_primitive())
        throw std::invalid_argument("generalized_bernoulli: character must be primitive");
    if (n < 1) throw std::invalid_argument("generalized_bernoulli: index must be positive");
    auto key = std::make_pair(chi.label(), n);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = twisted_.find(key);
        if (it != twisted_.end()) return it->second;
    }
    i64 f = chi.conductor();
    std::vector<std::pair<i64, Rational>> terms;
    for (i64 a = 1; a <= f; ++a) {
        auto e = chi.unity_exponent(a);
        if (!e) continue;
        terms.emplace_back(*e, bernoulli_polynomial(n, Rational(a, f)));
    }
    CycNumber value = CycNumber::make(chi.order(), terms) * rational_power_int(f, n - 1);
    std::lock_guard<std::mutex> lock(mu_);
    twisted_.emplace(key, value);
    return value;
}

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(int n) { return bernoulli_cache().plain(n); }

Rational bernoulli_polynomial(int n, const Rational& x) {
    if (n < 0) throw std::invalid_argument("bernoulli_polynomial: degree must be non-negative");
    Rational acc(0), xpow(1);
    // sum_k C(n,k) B_{n-k} x^k
    for (int k = 0; k <= n; ++k) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        acc += Rational(binom) * bernoulli_number(n - k) * xpow;
        xpow *= x;
    }
    return acc;
}

CycNumber generalized_bernoulli(const DirichletCharacter& chi, int n) {
    return bernoulli_cache().by_character(chi, n);
}

CycNumber l_value_nonpositive(const DirichletCharacter& chi, int s) {
    if (s > 0) throw std::invalid_argument("l_value_nonpositive: argument must be <= 0");
    int n = 1 - s;
    return -generalized_bernoulli(chi, n) / Rational(n);
}

const char* condition_name(CriticalCondition c) {
    switch (c) {
        case CriticalCondition::I: return "I";
        case CriticalCondition::II: return "II";
        default: return "none";
    }
}

CriticalityVerdict classify_criticality(const std::vector<int>& parities, int m) {
    if (m > 0) throw std::invalid_argument("classify_criticality: m must be non-positive");
    if (parities.empty())
        throw std::invalid_argument("classify_criticality: empty parity signature");
    bool all_even = true, all_odd = true;
    for (int p : parities) {
        if (p == 1) all_odd = false;
        else if (p == -1) all_even = false;
        else throw std::invalid_argument("classify_criticality: parity must be +-1");
    }
    bool m_odd = mod_reduce(m, 2) == 1;
    if (m_odd && all_even) return {m, true, CriticalCondition::I};
    if (!m_odd && all_odd) return {m, true, CriticalCondition::II};
    return {m, false, CriticalCondition::None};
}

namespace {

constexpr int kEulerMaclaurinTerms = 30;
constexpr int kEulerMaclaurinCorrections = 12;

double bernoulli_over_factorial(int two_j) {
    static const std::vector<double> table = [] {
        std::vector<double> t;
        mpz_class fact = 1;
        for (int n = 0; n <= 2 * kEulerMaclaurinCorrections; ++n) {
            if (n > 0) fact *= n;
            t.push_back((bernoulli_number(n) / Rational(fact)).to_double());
        }
        return t;
    }();
    return table[two_j];
}

double bernoulli_double(int n) { return bernoulli_number(n).to_double(); }

}  // namespace

double hurwitz_zeta(double s, double x) {
    if (!(s >= 1.5)) throw std::invalid_argument("hurwitz_zeta: s must be >= 1.5");
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("hurwitz_zeta: need 0 < x <= 1");
    const int M = kEulerMaclaurinTerms, J = kEulerMaclaurinCorrections;
    double sum = 0.0;
    for (int k = 0; k < M; ++k) sum += std::pow(x + k, -s);
    double y = x + M;
    sum += std::pow(y, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(y, -s);
    double poch = s;          // (s)_{2j-1} built incrementally
    double ypow = std::pow(y, -s - 1.0);
    for (int j = 1; j <= J; ++j) {
        sum += bernoulli_over_factorial(2 * j) * poch * ypow;
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        ypow /= y * y;
    }
    return sum;
}

double digamma(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("digamma: need 0 < x <= 1");
    const int M = kEulerMaclaurinTerms, J = kEulerMaclaurinCorrections;
    double sum = 0.0;
    for (int k = 0; k < M; ++k) sum -= 1.0 / (x + k);
    double y = x + M;
    sum += std::log(y) - 0.5 / y;
    double y2 = y * y, ypow = y2;
    for (int j = 1; j <= J; ++j) {
        sum -= bernoulli_double(2 * j) / (2 * j * ypow);
        ypow *= y2;
    }
    return sum;
}

std::complex<double> l_value_numeric(const DirichletCharacter& chi_in, double s) {
    DirichletCharacter chi = chi_in.primitivize();
    i64 f = chi.conductor();
    const double two_pi = 2.0 * std::acos(-1.0);
    if (s == 1.0) {
        if (chi.is_principal())
            throw std::invalid_argument("l_value_numeric: pole of the principal L at s = 1");
        std::complex<double> acc(0.0, 0.0);
        for (i64 a : chi.group().units()) {
            double e = (double)*chi.unity_exponent(a) / (double)chi.order();
            acc += std::polar(1.0, two_pi * e) * (-digamma((double)a / (double)f));
        }
        return acc / (double)f;
    }
    if (s < 1.5) throw std::invalid_argument("l_value_numeric: s out of implementation range");
    std::complex<double> acc(0.0, 0.0);
    for (i64 a : chi.group().units()) {
        double e = (double)*chi.unity_exponent(a) / (double)chi.order();
        i64 aa = f == 1 ? 1 : a;
        acc += std::polar(1.0, two_pi * e) * hurwitz_zeta(s, (double)aa / (double)f);
    }
    return acc * std::pow((double)f, -s);
}

CycNumber sqrt_exact(i64 n) {
    if (n < 1) throw std::invalid_argument("sqrt_exact: argument must be positive");
    CycNumber out = CycNumber::one();
    i64 outer = 1;
    for (const auto& pp : factorize(n)) {
        outer *= ipow(pp.p, pp.e / 2);
        if (pp.e % 2 == 0) continue;
        if (pp.p == 2) {
            out *= CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7);
        } else {
            // quadratic Gauss sum: sqrt(p) when p = 1 mod 4, i sqrt(p) otherwise
            std::vector<std::pair<i64, Rational>> terms;
            for (i64 x = 1; x < pp.p; ++x)
                terms.emplace_back(x, Rational(legendre_symbol(x, pp.p)));
            CycNumber tau = CycNumber::make(pp.p, terms);
            if (pp.p % 4 == 3) tau *= CycNumber::root_of_unity(4, 3);  // divide by i
            out *= tau;
        }
    }
    return out * Rational(outer);
}

CycNumber root_number(const DirichletCharacter& chi_in) {
    DirichletCharacter chi = chi_in.primitivize();
    i64 f = chi.conductor();
    CycNumber tau = gauss_sum(chi);
    CycNumber sq = sqrt_exact(f);
    // 1/sqrt(f) = sqrt(f)/f, and 1/i = -i
    CycNumber w = tau * sq / Rational(f);
    if (!chi.is_even()) w *= CycNumber::root_of_unity(4, 3);
    return w;
}

FunctionalEquationResidual functional_equation_check(const DirichletCharacter& chi_in, int m) {
    DirichletCharacter chi = chi_in.primitivize();
    CycNumber exact = l_value_nonpositive(chi, m);
    if (exact.is_zero())
        throw std::invalid_argument("functional_equation_check: L(chi, m) vanishes (non-critical m)");
    int s = 1 - m;
    i64 f = chi.conductor();
    bool even = chi.is_even();

    std::complex<double> lhs = exact.embed(64);

    const double pi = std::acos(-1.0);
    // cos(pi s / 2), sin(pi s / 2) at integer s, exactly
    static const int cos_table[4] = {1, 0, -1, 0};
    static const int sin_table[4] = {0, 1, 0, -1};
    double trig = even ? cos_table[s % 4] : sin_table[s % 4];
    std::complex<double> i_pow = even ? std::complex<double>(1, 0) : std::complex<double>(0, -1);
    std::complex<double> tau = gauss_sum(chi).embed(64);
    std::complex<double> lnum = l_value_numeric(chi.conjugate(), (double)s);
    std::complex<double> rhs = i_pow * (tau / std::sqrt((double)f)) *
                               std::pow((double)f, s - 0.5) * trig * 2.0 *
                               std::pow(2.0 * pi, -(double)s) * std::tgamma((double)s) * lnum;

    double plus = std::abs(lhs - rhs), minus = std::abs(lhs + rhs);
    FunctionalEquationResidual r;
    r.sign = plus <= minus ? 1 : -1;
    r.absolute = std::min(plus, minus);
    r.relative = r.absolute / std::abs(lhs);
    r.lhs = lhs;
    r.rhs = r.sign == 1 ? rhs : -rhs;
    return r;
}

}  // namespace lcert

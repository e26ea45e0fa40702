#include "lcert/cyclotomic.hpp"

#include <mpfr.h>

#include <numeric>
#include <sstream>

namespace lcert {

// ---------------------------------------------------------------------------
// Canonical form.
//
// For N = prod p^e, Q(zeta_N) is the tensor product over p of Q(zeta_{p^e}),
// and { zeta_N^k : the top base-p digit of (k mod p^e) is != p-1 for all p }
// is a Q-basis (of size phi(N)). A monomial whose digit at p is p-1 rewrites
// through the vanishing sum of p-th roots of unity:
//
//   zeta_N^k = - sum_{j=1}^{p-1} zeta_N^{k + j N/p}    (exponents mod N)
//
// which fixes the digits at every other prime. Reducing a sparse element
// costs O(#terms) in the typical case, against O(N phi(N)) for a dense
// polynomial remainder, which is what makes the exhaustive Gauss-sum checks
// affordable. Equality over this basis is a syntactic map comparison.
// ---------------------------------------------------------------------------

namespace {

void accumulate_basis(std::map<i64, Rational>& out, i64 n,
                      const std::vector<PrimePower>& pps, i64 k, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& pp : pps) {
        i64 digit = (k % pp.q) / (pp.q / pp.p);
        if (digit == pp.p - 1) {
            Rational neg = -c;
            i64 step = n / pp.p;
            for (i64 j = 1; j < pp.p; ++j)
                accumulate_basis(out, n, pps, (k + j * step) % n, neg);
            return;
        }
    }
    auto it = out.find(k);
    if (it == out.end()) {
        out.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

std::map<i64, Rational> canonicalize(i64 n, const std::map<i64, Rational>& raw) {
    std::map<i64, Rational> out;
    auto pps = factorize(n);
    for (const auto& [k, c] : raw) accumulate_basis(out, n, pps, k, c);
    return out;
}

}  // namespace

GaloisElement::GaloisElement(i64 N, i64 d) : level(N), exponent(mod_reduce(d, N)) {
    if (N < 1) throw std::invalid_argument("GaloisElement: level must be positive");
    if (std::gcd(exponent, N) != 1)
        throw std::invalid_argument("GaloisElement: exponent not coprime to level");
}

GaloisElement GaloisElement::compose(const GaloisElement& other) const {
    if (level != other.level)
        throw std::invalid_argument("GaloisElement::compose: level mismatch");
    return GaloisElement(level, (i64)((__int128)exponent * other.exponent % level));
}

CycNumber CycNumber::zero(i64 level) {
    if (level < 1) throw std::invalid_argument("CycNumber: level must be positive");
    CycNumber a;
    a.level_ = level;
    return a;
}

CycNumber CycNumber::one() { return from_rational(Rational(1)); }

CycNumber CycNumber::from_rational(const Rational& r, i64 level) {
    CycNumber a = zero(level);
    if (!r.is_zero()) a.coeffs_.emplace(0, r);
    return a;
}

CycNumber CycNumber::root_of_unity(i64 level, i64 exponent) {
    return make(level, {{exponent, Rational(1)}});
}

CycNumber CycNumber::make(i64 level, const std::vector<std::pair<i64, Rational>>& terms) {
    CycNumber a = zero(level);
    auto pps = factorize(level);
    std::map<i64, Rational> raw;
    for (const auto& [k, c] : terms) {
        if (c.is_zero()) continue;
        auto it = raw.find(mod_reduce(k, level));
        if (it == raw.end()) raw.emplace(mod_reduce(k, level), c);
        else it->second += c;
    }
    for (const auto& [k, c] : raw) accumulate_basis(a.coeffs_, level, pps, k, c);
    return a;
}

bool CycNumber::is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational CycNumber::rational_value() const {
    if (coeffs_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("CycNumber: value is not rational");
    return coeffs_.begin()->second;
}

CycNumber CycNumber::promoted(i64 new_level) const {
    if (new_level == level_) return *this;
    if (new_level < 1 || new_level % level_ != 0)
        throw std::invalid_argument("CycNumber::promoted: current level must divide target");
    CycNumber a = zero(new_level);
    i64 scale = new_level / level_;
    auto pps = factorize(new_level);
    for (const auto& [k, c] : coeffs_)
        accumulate_basis(a.coeffs_, new_level, pps, k * scale % new_level, c);
    return a;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    i64 n = std::lcm(level_, o.level_);
    CycNumber a = promoted(n), b = o.promoted(n);
    for (const auto& [k, c] : b.coeffs_) {
        auto it = a.coeffs_.find(k);
        if (it == a.coeffs_.end()) {
            a.coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) a.coeffs_.erase(it);
        }
    }
    return a;
}

CycNumber CycNumber::operator-() const {
    CycNumber a = *this;
    for (auto& [k, c] : a.coeffs_) c = -c;
    return a;
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator*(const CycNumber& o) const {
    i64 n = std::lcm(level_, o.level_);
    CycNumber a = promoted(n), b = o.promoted(n);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return zero(n);
    // Accumulate raw products by exponent mod n first, then reduce once.
    std::map<i64, Rational> raw;
    for (const auto& [k1, c1] : a.coeffs_) {
        for (const auto& [k2, c2] : b.coeffs_) {
            i64 k = k1 + k2;
            if (k >= n) k -= n;
            Rational prod = c1 * c2;
            auto it = raw.find(k);
            if (it == raw.end()) raw.emplace(k, std::move(prod));
            else it->second += prod;
        }
    }
    CycNumber r = zero(n);
    r.coeffs_ = canonicalize(n, raw);
    return r;
}

CycNumber CycNumber::operator*(const Rational& s) const {
    if (s.is_zero()) return zero(level_);
    CycNumber a = *this;
    for (auto& [k, c] : a.coeffs_) c *= s;
    return a;
}

CycNumber CycNumber::operator/(const Rational& s) const {
    if (s.is_zero()) throw std::domain_error("CycNumber: division by zero rational");
    return *this * s.inverse();
}

bool CycNumber::operator==(const CycNumber& o) const {
    if (level_ == o.level_) return coeffs_ == o.coeffs_;
    i64 n = std::lcm(level_, o.level_);
    return promoted(n).coeffs_ == o.promoted(n).coeffs_;
}

CycNumber CycNumber::pow(i64 e) const {
    if (e < 0) return inverse().pow(-e);
    CycNumber r = one(), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

CycNumber CycNumber::conjugate() const {
    return galois(GaloisElement(level_, level_ - 1));
}

CycNumber CycNumber::galois(const GaloisElement& sigma) const {
    if (sigma.level != level_)
        throw std::invalid_argument("CycNumber::galois: level mismatch (promote first)");
    CycNumber a = zero(level_);
    auto pps = factorize(level_);
    for (const auto& [k, c] : coeffs_)
        accumulate_basis(a.coeffs_, level_, pps, (i64)((__int128)k * sigma.exponent % level_), c);
    return a;
}

bool CycNumber::fixed_by(const GaloisElement& sigma) const {
    return galois_apply(sigma, *this) == *this;
}

CycNumber CycNumber::inverse() const {
    if (coeffs_.empty()) throw std::domain_error("CycNumber: inverse of zero");
    if (is_rational()) return from_rational(rational_value().inverse(), level_);
    if (coeffs_.size() == 1) {
        const auto& [k, c] = *coeffs_.begin();
        return root_of_unity(level_, level_ - k) * c.inverse();
    }
    // Product of the remaining Galois conjugates divided by the (rational) norm.
    CycNumber partial = one();
    for (i64 d : unit_residues(level_)) {
        if (d == 1) continue;
        partial *= galois(GaloisElement(level_, d));
    }
    CycNumber norm = *this * partial;
    if (!norm.is_rational())
        throw std::logic_error("CycNumber::inverse: norm failed to be rational");
    return partial * norm.rational_value().inverse();
}

CycNumber galois_apply(const GaloisElement& sigma, const CycNumber& a) {
    if (a.level() == sigma.level) return a.galois(sigma);
    if (sigma.level % a.level() == 0) return a.promoted(sigma.level).galois(sigma);
    throw std::invalid_argument("galois_apply: value level does not divide automorphism level");
}

bool is_fixed_by(const CycNumber& a, const std::vector<GaloisElement>& generators) {
    for (const auto& sigma : generators)
        if (galois_apply(sigma, a) != a) return false;
    return true;
}

std::complex<double> CycNumber::embed(unsigned precision_bits) const {
    if (precision_bits < 53)
        throw std::invalid_argument("CycNumber::embed: precision must be at least 53 bits");
    mpfr_prec_t prec = precision_bits + 32;
    mpfr_t re, im, ang, s, c, coef, tmp;
    mpfr_inits2(prec, re, im, ang, s, c, coef, tmp, (mpfr_ptr) nullptr);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    for (const auto& [k, r] : coeffs_) {
        mpfr_const_pi(ang, MPFR_RNDN);
        mpfr_mul_si(ang, ang, 2 * k, MPFR_RNDN);
        mpfr_div_si(ang, ang, level_, MPFR_RNDN);
        mpfr_sin_cos(s, c, ang, MPFR_RNDN);
        mpfr_set_z(coef, r.num().get_mpz_t(), MPFR_RNDN);
        mpfr_div_z(coef, coef, r.den().get_mpz_t(), MPFR_RNDN);
        mpfr_mul(tmp, coef, c, MPFR_RNDN);
        mpfr_add(re, re, tmp, MPFR_RNDN);
        mpfr_mul(tmp, coef, s, MPFR_RNDN);
        mpfr_add(im, im, tmp, MPFR_RNDN);
    }
    std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpfr_clears(re, im, ang, s, c, coef, tmp, (mpfr_ptr) nullptr);
    return out;
}

std::string CycNumber::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        std::string coef = c.str();
        if (!first) {
            if (c.sign() < 0) { os << " - "; coef = (-c).str(); }
            else os << " + ";
        }
        first = false;
        if (k == 0) {
            os << coef;
        } else {
            if (coef == "1") {}
            else if (coef == "-1") os << "-";
            else os << coef << "*";
            os << "z" << level_;
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<mpz_class> cyclotomic_polynomial(i64 n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // x^n - 1
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (i64 d : divisors(n)) {
        if (d == n) continue;
        std::vector<mpz_class> phi_d = cyclotomic_polynomial(d);
        // Exact polynomial division num /= phi_d.
        std::vector<mpz_class> q(num.size() - phi_d.size() + 1, 0);
        std::vector<mpz_class> rem = num;
        for (i64 i = (i64)q.size() - 1; i >= 0; --i) {
            mpz_class lead = rem[i + phi_d.size() - 1];
            if (lead == 0) continue;
            q[i] = lead;  // phi_d is monic
            for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= lead * phi_d[j];
        }
        for (const auto& rcoef : rem)
            if (rcoef != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
        num = std::move(q);
    }
    return num;
}

}  // namespace lcert

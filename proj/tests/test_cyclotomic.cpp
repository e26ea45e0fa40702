#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lcert/cyclotomic.hpp"

using namespace lcert;

namespace {

CycNumber zeta(i64 n, i64 k = 1) { return CycNumber::root_of_unity(n, k); }

CycNumber random_cyc(std::mt19937& rng, i64 level, int terms, int height) {
    std::uniform_int_distribution<i64> expo(0, level - 1);
    std::uniform_int_distribution<long> num(-height, height);
    std::uniform_int_distribution<long> den(1, height);
    std::vector<std::pair<i64, Rational>> ts;
    for (int i = 0; i < terms; ++i) ts.emplace_back(expo(rng), Rational(num(rng), den(rng)));
    return CycNumber::make(level, ts);
}

// Independent reduction route: polynomial remainder mod Phi_N, then rebuild.
// Used to check that the library's canonical form defines the same equality.
CycNumber reduce_mod_cyclotomic_poly(i64 n, const std::vector<std::pair<i64, Rational>>& terms) {
    auto phi = cyclotomic_polynomial(n);
    size_t deg = phi.size() - 1;
    std::vector<Rational> poly(n, Rational(0));
    for (const auto& [k, c] : terms) poly[mod_reduce(k, n)] += c;
    for (i64 i = n - 1; i >= (i64)deg; --i) {
        if (poly[i].is_zero()) continue;
        Rational lead = poly[i];
        for (size_t j = 0; j < phi.size(); ++j)
            poly[i - deg + j] -= lead * Rational(phi[j]);
    }
    std::vector<std::pair<i64, Rational>> reduced;
    for (size_t k = 0; k < deg; ++k)
        if (!poly[k].is_zero()) reduced.emplace_back((i64)k, poly[k]);
    return CycNumber::make(n, reduced);
}

}  // namespace

TEST_CASE("make: basic construction and canonical vanishing") {
    // zeta_4 = i
    CycNumber i4 = CycNumber::make(4, {{1, Rational(1)}});
    CHECK(i4 == zeta(4));
    // level-1 field is Q
    CycNumber r = CycNumber::make(1, {{0, Rational(5, 3)}});
    CHECK(r.is_rational());
    CHECK(r.rational_value() == Rational(5, 3));
    // vanishing sum of all cube roots of unity
    CycNumber s = CycNumber::make(3, {{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}});
    CHECK(s.is_zero());
    // negative/overflowing exponents are reduced mod level
    CHECK(CycNumber::make(5, {{-1, Rational(1)}}) == zeta(5, 4));
    CHECK(CycNumber::make(5, {{7, Rational(1)}}) == zeta(5, 2));
    CHECK_THROWS_AS(CycNumber::zero(0), std::invalid_argument);
}

TEST_CASE("field operations: worked examples") {
    CHECK(zeta(4) * zeta(4) == CycNumber::from_rational(Rational(-1)));
    CHECK(zeta(5).inverse() == zeta(5, 4));
    CHECK((zeta(8) + zeta(8, 5)).is_zero());
    CHECK_THROWS_AS(CycNumber::zero(3).inverse(), std::domain_error);
}

TEST_CASE("conjugate: worked examples") {
    CHECK(zeta(4).conjugate() == -zeta(4));
    CycNumber r = CycNumber::from_rational(Rational(3, 7));
    CHECK(r.conjugate() == r);
    CycNumber real = zeta(5) + zeta(5, 4);
    CHECK(real.conjugate() == real);
}

TEST_CASE("galois action: worked examples") {
    CHECK(galois_apply(GaloisElement(4, 3), zeta(4)) == -zeta(4));
    CycNumber a = zeta(12, 7) + CycNumber::from_rational(Rational(2, 3));
    CHECK(galois_apply(GaloisElement(12, 1), a) == a);
    // direct substitution oracle: d = 2 at level 5 on zeta + zeta^4
    CycNumber x = zeta(5) + zeta(5, 4);
    CycNumber expect = zeta(5, 2) + zeta(5, 3);
    CHECK(galois_apply(GaloisElement(5, 2), x) == expect);
    CHECK_THROWS_AS(GaloisElement(10, 4), std::invalid_argument);
}

TEST_CASE("embed: worked examples") {
    auto v = zeta(4).embed(64);
    CHECK(std::abs(v.real()) < 1e-15);
    CHECK(std::abs(v.imag() - 1.0) < 1e-15);
    // zeta_5 + zeta_5^4 is the positive root of x^2 + x - 1
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    auto g = (zeta(5) + zeta(5, 4)).embed(64);
    CHECK(std::abs(g.real() - golden) < 1e-14);
    CHECK(std::abs(g.imag()) < 1e-14);
    auto z = CycNumber::zero(7).embed();
    CHECK(z == std::complex<double>(0.0, 0.0));
    CHECK_THROWS_AS(zeta(3).embed(10), std::invalid_argument);
}

TEST_CASE("is_fixed_by: worked examples") {
    CycNumber r = CycNumber::from_rational(Rational(3, 2));
    std::vector<GaloisElement> full;
    for (i64 d : unit_residues(12)) full.emplace_back(12, d);
    CHECK(is_fixed_by(r.promoted(12), full));
    CHECK_FALSE(is_fixed_by(zeta(5), {GaloisElement(5, 2)}));
    CHECK(is_fixed_by(zeta(5) + zeta(5, 4), {GaloisElement(5, 4)}));
}

TEST_CASE("field axioms on random small values") {
    std::mt19937 rng(20240811);
    for (i64 level : {4, 6, 9, 12, 20}) {
        for (int rep = 0; rep < 20; ++rep) {
            CycNumber a = random_cyc(rng, level, 3, 6);
            CycNumber b = random_cyc(rng, level, 3, 6);
            CycNumber c = random_cyc(rng, level, 2, 6);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == CycNumber::one());
                CHECK(a.pow(-2) * a.pow(2) == CycNumber::one());
            }
        }
    }
}

TEST_CASE("galois_apply is multiplicative in the exponent") {
    std::mt19937 rng(7);
    for (i64 level : {5, 8, 12, 15}) {
        auto units = unit_residues(level);
        for (int rep = 0; rep < 10; ++rep) {
            CycNumber a = random_cyc(rng, level, 3, 5);
            for (i64 d1 : units) {
                for (i64 d2 : units) {
                    GaloisElement s1(level, d1), s2(level, d2);
                    CHECK(galois_apply(s1, galois_apply(s2, a)) ==
                          galois_apply(s1.compose(s2), a));
                }
            }
        }
    }
}

TEST_CASE("conjugation is galois with d = N-1 and is an involution") {
    std::mt19937 rng(99);
    for (i64 level : {3, 4, 10, 18}) {
        for (int rep = 0; rep < 10; ++rep) {
            CycNumber a = random_cyc(rng, level, 4, 8);
            CHECK(a.conjugate() == galois_apply(GaloisElement(level, level - 1), a));
            CHECK(a.conjugate().conjugate() == a);
        }
    }
}

TEST_CASE("embed is a ring homomorphism up to float tolerance") {
    std::mt19937 rng(4242);
    for (i64 level : {24, 60, 120}) {
        for (int rep = 0; rep < 8; ++rep) {
            CycNumber a = random_cyc(rng, level, 4, 100);
            CycNumber b = random_cyc(rng, level, 4, 100);
            auto pa = a.embed(80), pb = b.embed(80), pab = (a * b).embed(80);
            CHECK(std::abs(pab - pa * pb) < 1e-10);
            CHECK(std::abs((a + b).embed(80) - (pa + pb)) < 1e-10);
        }
    }
}

TEST_CASE("canonical form agrees with remainder mod the cyclotomic polynomial") {
    // Both reduction routes must define identical field elements.
    std::mt19937 rng(31337);
    for (i64 n : {8, 12, 15, 30, 36}) {
        std::uniform_int_distribution<i64> expo(0, n - 1);
        std::uniform_int_distribution<long> num(-9, 9);
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<std::pair<i64, Rational>> terms;
            for (int i = 0; i < 6; ++i) terms.emplace_back(expo(rng), Rational(num(rng)));
            CHECK(CycNumber::make(n, terms) == reduce_mod_cyclotomic_poly(n, terms));
        }
        // Phi_n(zeta_n) = 0 under the library reduction
        auto phi = cyclotomic_polynomial(n);
        std::vector<std::pair<i64, Rational>> phi_at_zeta;
        for (size_t k = 0; k < phi.size(); ++k)
            phi_at_zeta.emplace_back((i64)k, Rational(phi[k]));
        CHECK(CycNumber::make(n, phi_at_zeta).is_zero());
    }
}

TEST_CASE("cyclotomic polynomial recurrence sanity") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
}

TEST_CASE("promotion and mixed-level arithmetic") {
    CycNumber a = zeta(3);
    CycNumber b = zeta(4);
    CycNumber p = a * b;
    CHECK(p.level() == 12);
    CHECK(p == zeta(12, 7));
    CHECK(a.promoted(12) == zeta(12, 4));
    CHECK_THROWS_AS(a.promoted(10), std::invalid_argument);
    // level of sums/products of same-level inputs stays that level
    CHECK((zeta(8) + zeta(8, 2)).level() == 8);
    CHECK((zeta(8) * zeta(8, 2)).level() == 8);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "lcert/gauss.hpp"

using namespace lcert;

namespace {

std::vector<DirichletCharacter> primitive_characters(i64 f) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : DirichletCharacter::enumerate(f))
        if (chi.is_primitive()) out.push_back(chi);
    return out;
}

}  // namespace

TEST_CASE("gauss_sum: worked examples") {
    CHECK(gauss_sum(DirichletCharacter::principal(1)) == CycNumber::one());

    auto chi4 = DirichletCharacter::from_label("4.1");
    CHECK(gauss_sum(chi4) == CycNumber::root_of_unity(4, 1) * Rational(2));  // 2i

    auto chi5 = DirichletCharacter::from_label("5.2");
    REQUIRE(chi5.order() == 2);
    CycNumber expected = CycNumber::make(5, {{1, Rational(1)},
                                             {4, Rational(1)},
                                             {2, Rational(-1)},
                                             {3, Rational(-1)}});
    CHECK(gauss_sum(chi5) == expected);
    // positivity via the identity embedding: tau = +sqrt(5)
    auto v = gauss_sum(chi5).embed();
    CHECK(std::abs(v.real() - std::sqrt(5.0)) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("gauss_sum value record annotates primitivization") {
    auto imprim = DirichletCharacter::principal(12);
    auto rec = gauss_sum_value(imprim);
    CHECK(rec.requested_label == "12.0");
    CHECK(rec.character_label == "1.0");
    CHECK(rec.value == CycNumber::one());
}

TEST_CASE("shift identity: worked examples") {
    auto chi4 = DirichletCharacter::from_label("4.1");
    CHECK(shift_identity_check(chi4, 3));
    CHECK(gauss_sum(chi4, 3) == CycNumber::root_of_unity(4, 3) * Rational(2));  // -2i

    for (auto& chi : primitive_characters(5)) {
        CHECK(shift_identity_check(chi, 5));
        CHECK(gauss_sum(chi, 5).is_zero());
    }

    auto chi5 = DirichletCharacter::from_label("5.2");
    CHECK(shift_identity_check(chi5, 2));
    CHECK(gauss_sum(chi5, 2) == -gauss_sum(chi5));  // chi(2) = -1
}

TEST_CASE("conjugation product: worked examples") {
    CHECK(conjugation_product(DirichletCharacter::principal(1)) == CycNumber::one());
    CHECK(conjugation_product(DirichletCharacter::from_label("4.1")) ==
          CycNumber::from_rational(Rational(-4)));
    CHECK(conjugation_product(DirichletCharacter::from_label("5.2")) ==
          CycNumber::from_rational(Rational(5)));
}

TEST_CASE("conjugation product law for conductors up to 20") {
    for (i64 f = 1; f <= 20; ++f) {
        for (auto& chi : primitive_characters(f)) {
            CHECK(conjugation_product(chi) ==
                  CycNumber::from_rational(Rational(chi.parity() * f)));
        }
    }
}

TEST_CASE("shift identity across a window of shifts") {
    for (i64 f = 1; f <= 16; ++f)
        for (auto& chi : primitive_characters(f))
            for (i64 a = 0; a < 2 * f; ++a) CHECK(shift_identity_check(chi, a));
}

TEST_CASE("galois equivariance: worked examples") {
    auto chi4 = DirichletCharacter::from_label("4.1");
    CHECK(galois_equivariance_check(chi4, 1));
    CHECK(galois_equivariance_check(chi4, 3));
    // both sides equal -2i
    CHECK(galois_apply(GaloisElement(4, 3), gauss_sum(chi4)) ==
          CycNumber::root_of_unity(4, 3) * Rational(2));

    auto chi5 = DirichletCharacter::from_label("5.1");
    REQUIRE(chi5.order() == 4);
    CHECK(galois_equivariance_check(chi5, 7));  // computed at level 20
}

TEST_CASE("galois equivariance across all valid d for small conductors") {
    for (i64 f = 1; f <= 14; ++f) {
        for (auto& chi : primitive_characters(f)) {
            i64 level = std::lcm(f, chi.order());
            for (i64 d = 1; d < level; ++d) {
                if (std::gcd(d, level) != 1) continue;
                CHECK(galois_equivariance_check(chi, d));
            }
        }
    }
}

TEST_CASE("conjugate gauss sum relation") {
    for (i64 f = 1; f <= 16; ++f) {
        for (auto& chi : primitive_characters(f)) {
            CHECK(gauss_sum(chi.conjugate()) ==
                  chi(f - 1 + (f == 1)) * gauss_sum(chi).conjugate());
        }
    }
}

TEST_CASE("imprimitive input is normalized; the raw sum misbehaves") {
    // conductor-4 character at modulus 8
    DirichletCharacter imprim = [&] {
        for (auto& chi : DirichletCharacter::enumerate(8))
            if (chi.conductor() == 4) return chi;
        throw std::logic_error("unreachable");
    }();
    CHECK(gauss_sum(imprim) == gauss_sum(imprim.primitivize()));
    // raw sum at the imprimitive modulus: sum chi(x) zeta_8^x over units mod 8
    CycNumber raw = CycNumber::zero();
    for (i64 x : imprim.group().units())
        raw += imprim(x) * CycNumber::root_of_unity(8, x);
    CHECK(raw.is_zero());  // |raw|^2 = 0 != 4, so the primitive identity fails
    CHECK(raw * raw.conjugate() != CycNumber::from_rational(Rational(4)));
}

TEST_CASE("gauss_sum_inverse") {
    for (i64 f : {1, 3, 4, 5, 7, 8, 9, 11, 12}) {
        for (auto& chi : primitive_characters(f)) {
            CHECK(gauss_sum(chi) * gauss_sum_inverse(chi) == CycNumber::one());
        }
    }
    CHECK_THROWS_AS(gauss_sum_inverse(DirichletCharacter::principal(12)),
                    std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lcert/brauer.hpp"

using namespace lcert;

namespace {

std::string corpus(const std::string& name) {
    return std::string(LCERT_REPO_DIR) + "/groups/" + name;
}

std::multiset<size_t> class_sizes(const FiniteGroup& g) {
    std::multiset<size_t> out;
    for (const auto& c : g.conjugacy_classes()) out.insert(c.size());
    return out;
}

std::multiset<long> irreducible_degrees(const FiniteGroup& g) {
    std::multiset<long> out;
    for (const auto& chi : irreducible_characters(g))
        out.insert(chi.dimension().rational_value().num().get_si());
    return out;
}

// <psi, Res chi>_H computed directly on subgroup elements.
CycNumber restricted_inner(const std::vector<int>& H,
                           const std::vector<CycNumber>& psi, const ClassFunction& chi) {
    CycNumber acc = CycNumber::zero();
    for (size_t i = 0; i < H.size(); ++i) acc += psi[i] * chi.value_at(H[i]).conjugate();
    return acc / Rational((long long)H.size());
}

}  // namespace

TEST_CASE("conjugacy classes: worked examples") {
    auto c4 = FiniteGroup::from_file(corpus("c4_table.grp"));
    CHECK(c4.order() == 4);
    CHECK(c4.class_count() == 4);
    CHECK(c4.is_abelian());

    auto s3 = FiniteGroup::from_file(corpus("s3.grp"));
    CHECK(class_sizes(s3) == std::multiset<size_t>{1, 2, 3});

    auto q8 = FiniteGroup::from_file(corpus("q8.grp"));
    CHECK(q8.order() == 8);
    CHECK(class_sizes(q8) == std::multiset<size_t>{1, 1, 2, 2, 2});
    // exactly one element of order 2 pins the quaternion group
    int order2 = 0;
    for (int a = 0; a < 8; ++a) order2 += q8.element_order(a) == 2;
    CHECK(order2 == 1);
}

TEST_CASE("group file parsing is whitespace-tolerant and validated") {
    std::istringstream bad("order 5\nperm\n(1 2)\n");
    CHECK_THROWS_AS(FiniteGroup::parse(bad, "<bad>"), std::invalid_argument);
    std::istringstream nonassoc("order 2\ntable\n0 1\n1 1\n");
    CHECK_THROWS_AS(FiniteGroup::parse(nonassoc, "<bad>"), std::invalid_argument);
    std::istringstream spaced("order 6\nperm\n  ( 1 2 )\n(1 2 3)  # a comment\n\n");
    CHECK(FiniteGroup::parse(spaced, "<ok>").order() == 6);
}

TEST_CASE("subgroup lattice sizes") {
    CHECK(FiniteGroup::from_file(corpus("s3.grp")).subgroups().size() == 6);
    CHECK(FiniteGroup::from_file(corpus("d4.grp")).subgroups().size() == 10);
    CHECK(FiniteGroup::from_file(corpus("q8.grp")).subgroups().size() == 6);
    CHECK(FiniteGroup::from_file(corpus("a4.grp")).subgroups().size() == 10);
    CHECK(FiniteGroup::from_file(corpus("s4.grp")).subgroups().size() == 30);
}

TEST_CASE("linear characters through the abelianization") {
    CHECK(linear_characters(FiniteGroup::from_file(corpus("s3.grp"))).size() == 2);
    CHECK(linear_characters(FiniteGroup::from_file(corpus("d4.grp"))).size() == 4);
    CHECK(linear_characters(FiniteGroup::from_file(corpus("q8.grp"))).size() == 4);
    CHECK(linear_characters(FiniteGroup::from_file(corpus("a4.grp"))).size() == 3);
    CHECK(linear_characters(FiniteGroup::from_file(corpus("c12.grp"))).size() == 12);
}

TEST_CASE("induce: worked examples") {
    auto s3 = FiniteGroup::from_file(corpus("s3.grp"));

    // induction from the whole group is the identity
    std::vector<int> all(s3.order());
    std::iota(all.begin(), all.end(), 0);
    for (const auto& psi : linear_characters(s3)) {
        ClassFunction ind = induce(s3, all, psi);
        for (int c = 0; c < s3.class_count(); ++c)
            CHECK(ind.value_on_class(c) == psi[s3.conjugacy_classes()[c][0]]);
    }

    // Ind_{A3}^{S3}(omega) is the 2-dimensional irreducible (2, 0, -1)
    std::vector<int> a3;
    for (const auto& h : s3.subgroups())
        if (h.size() == 3) a3 = h;
    REQUIRE(a3.size() == 3);
    auto view = subgroup_as_group(s3, a3);
    auto lins = linear_characters(view.group);
    REQUIRE(lins.size() == 3);
    int checked = 0;
    for (const auto& psi : lins) {
        bool trivial = true;
        for (const auto& v : psi) trivial = trivial && v == CycNumber::one();
        if (trivial) continue;
        ClassFunction ind = induce(s3, a3, psi);
        for (int c = 0; c < s3.class_count(); ++c) {
            int rep = s3.conjugacy_classes()[c][0];
            int ord = s3.element_order(rep);
            CycNumber want = ord == 1   ? CycNumber::from_rational(Rational(2))
                             : ord == 2 ? CycNumber::zero()
                                        : CycNumber::from_rational(Rational(-1));
            CHECK(ind.value_on_class(c) == want);
        }
        ++checked;
    }
    CHECK(checked == 2);

    // non-multiplicative psi is rejected
    std::vector<CycNumber> junk{CycNumber::one(), CycNumber::from_rational(Rational(2)),
                                CycNumber::one()};
    CHECK_THROWS_AS(induce(s3, a3, junk), std::invalid_argument);
}

TEST_CASE("abelian induction closed form") {
    // Ind_H^G(psi) = sum of the characters of G restricting to psi, G abelian
    for (i64 N : {5, 8, 12, 15, 16, 21, 24}) {
        auto G = FiniteGroup::unit_group_of(N);
        auto gchars = linear_characters(G);
        for (const auto& H : G.subgroups()) {
            auto view = subgroup_as_group(G, H);
            for (const auto& psi : linear_characters(view.group)) {
                ClassFunction ind = induce(G, H, psi);
                std::vector<CycNumber> acc(G.class_count(), CycNumber::zero());
                for (const auto& chi : gchars) {
                    bool restricts = true;
                    for (size_t i = 0; i < H.size(); ++i)
                        if (chi[H[i]] != psi[i]) { restricts = false; break; }
                    if (!restricts) continue;
                    for (int c = 0; c < G.class_count(); ++c)
                        acc[c] += chi[G.conjugacy_classes()[c][0]];
                }
                CHECK(ind == ClassFunction(&G, acc));
            }
        }
    }
}

TEST_CASE("Frobenius reciprocity") {
    for (const char* name : {"s3.grp", "d4.grp", "q8.grp", "c12.grp"}) {
        auto G = FiniteGroup::from_file(corpus(name));
        auto irr = irreducible_characters(G);
        for (const auto& H : G.subgroups()) {
            auto view = subgroup_as_group(G, H);
            for (const auto& psi : linear_characters(view.group)) {
                ClassFunction ind = induce(G, H, psi);
                for (const auto& chi : irr)
                    CHECK(ind.inner(chi) == restricted_inner(H, psi, chi));
            }
        }
    }
}

TEST_CASE("irreducible character tables of the corpus groups") {
    CHECK(irreducible_degrees(FiniteGroup::from_file(corpus("s3.grp"))) ==
          std::multiset<long>{1, 1, 2});
    CHECK(irreducible_degrees(FiniteGroup::from_file(corpus("d4.grp"))) ==
          std::multiset<long>{1, 1, 1, 1, 2});
    CHECK(irreducible_degrees(FiniteGroup::from_file(corpus("q8.grp"))) ==
          std::multiset<long>{1, 1, 1, 1, 2});
    CHECK(irreducible_degrees(FiniteGroup::from_file(corpus("a4.grp"))) ==
          std::multiset<long>{1, 1, 1, 3});
    CHECK(irreducible_degrees(FiniteGroup::from_file(corpus("s4.grp"))) ==
          std::multiset<long>{1, 1, 2, 3, 3});
}

TEST_CASE("brauer_decompose: worked examples and reconstruction") {
    for (const char* name : {"s3.grp", "d4.grp", "q8.grp", "a4.grp"}) {
        auto G = FiniteGroup::from_file(corpus(name));
        auto gens = brauer_generators(G);
        for (const auto& chi : irreducible_characters(G)) {
            auto dec = brauer_decompose(chi, gens);
            CHECK(reconstruct(G, gens, dec) == chi);
            CHECK(dec.index_weighted_degree(G, gens) ==
                  chi.dimension().rational_value().num().get_si());
            // a degree-one character comes back as a single whole-group term
            if (chi.dimension().rational_value() == Rational(1)) {
                REQUIRE(dec.terms.size() == 1);
                CHECK(dec.terms[0].coefficient == 1);
                CHECK(gens[dec.terms[0].generator_index].subgroup_order == G.order());
            }
        }
    }

    // regular character of S3
    auto s3 = FiniteGroup::from_file(corpus("s3.grp"));
    auto gens = brauer_generators(s3);
    std::vector<CycNumber> reg(s3.class_count(), CycNumber::zero());
    reg[s3.class_of(s3.identity())] = CycNumber::from_rational(Rational(6));
    ClassFunction regular(&s3, reg);
    auto dec = brauer_decompose(regular, gens);
    CHECK(reconstruct(s3, gens, dec) == regular);
    CHECK(dec.index_weighted_degree(s3, gens) == 6);

    // a non-virtual class function is refused
    std::vector<CycNumber> frac(s3.class_count(), CycNumber::from_rational(Rational(1, 2)));
    CHECK_THROWS_AS(brauer_decompose(ClassFunction(&s3, frac), gens), std::invalid_argument);
}

TEST_CASE("abelian character bridge: worked examples") {
    auto single = abelian_character_bridge(7, {"7.0"});
    for (const auto& v : single.values_per_class) CHECK(v == CycNumber::one());

    auto both3 = abelian_character_bridge(3, {"3.0", "3.1"});
    REQUIRE(both3.group.order() == 2);
    CHECK(both3.class_function().value_at(0) == CycNumber::from_rational(Rational(2)));
    CHECK(both3.class_function().value_at(1).is_zero());

    auto all5 = abelian_character_bridge(5, {"5.0", "5.1", "5.2", "5.3"});
    for (int c = 0; c < all5.group.class_count(); ++c) {
        int rep = all5.group.conjugacy_classes()[c][0];
        if (all5.group.residues()[rep] == 1)
            CHECK(all5.values_per_class[c] == CycNumber::from_rational(Rational(4)));
        else
            CHECK(all5.values_per_class[c].is_zero());
    }
}

TEST_CASE("artin symbol restriction check: worked examples") {
    // full group: F = Q, trivially true
    auto chi12 = DirichletCharacter::from_label("12.1");
    CHECK(artin_symbol_restriction_check(12, unit_residues(12), chi12, 7));

    // N = 5, H = {1, 4}, order-4 chi, d = 2: least power of 2 landing in H is 2
    auto chi5 = DirichletCharacter::from_label("5.1");
    REQUIRE(chi5.order() == 4);
    CHECK(artin_symbol_restriction_check(5, {1, 4}, chi5, 2));

    // N = 12, H = {1}, every chi, d = 7
    for (const auto& chi : DirichletCharacter::enumerate(12))
        CHECK(artin_symbol_restriction_check(12, {1}, chi, 7));

    CHECK_THROWS_AS(artin_symbol_restriction_check(12, {1}, chi12, 3),
                    std::invalid_argument);  // ramified prime
    CHECK_THROWS_AS(artin_symbol_restriction_check(12, {1, 5, 7}, chi12, 7),
                    std::invalid_argument);  // not a subgroup
}

TEST_CASE("artin symbol restriction check: exhaustive small range") {
    for (i64 N = 1; N <= 24; ++N) {
        auto G = FiniteGroup::unit_group_of(N);
        auto chars = DirichletCharacter::enumerate(N);
        for (const auto& H : G.subgroups()) {
            std::vector<i64> residues;
            for (int idx : H) residues.push_back(G.residues()[idx]);
            for (const auto& chi : chars)
                for (i64 d = 1; d < 50; ++d) {
                    if (std::gcd(d, N) != 1) continue;
                    bool ramified = false;
                    for (const auto& pp : factorize(d))
                        if (N % pp.p == 0) ramified = true;
                    if (ramified) continue;
                    CHECK(artin_symbol_restriction_check(N, residues, chi, d));
                }
        }
    }
}

TEST_CASE("group linear characters agree with Dirichlet enumeration") {
    for (i64 N : {5, 8, 12, 15}) {
        auto G = FiniteGroup::unit_group_of(N);
        auto glin = linear_characters(G);
        auto dchars = DirichletCharacter::enumerate(N);
        REQUIRE(glin.size() == dchars.size());
        // compare as value-vector sets over the unit residues
        auto key = [&](const std::vector<CycNumber>& vals) {
            std::string s;
            for (const auto& v : vals) s += v.str() + "|";
            return s;
        };
        std::set<std::string> a, b;
        for (const auto& psi : glin) a.insert(key(psi));
        for (const auto& chi : dchars) {
            std::vector<CycNumber> vals;
            for (i64 r : G.residues()) vals.push_back(chi(r));
            b.insert(key(vals));
        }
        CHECK(a == b);
    }
}

TEST_CASE("integer system solver") {
    // 3x + 5y = 1 has integer solutions
    auto sol = solve_integer_system({{3, 5}}, {1});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] * 3 + (*sol)[1] * 5 == 1);
    // 2x + 4y = 1 does not
    CHECK_FALSE(solve_integer_system({{2, 4}}, {1}).has_value());
    // inconsistent rows
    CHECK_FALSE(solve_integer_system({{1, 0}, {1, 0}}, {1, 2}).has_value());
    // unique solution
    auto s2 = solve_integer_system({{1, 1}, {0, 1}}, {5, 2});
    REQUIRE(s2.has_value());
    CHECK((*s2)[0] == 3);
    CHECK((*s2)[1] == 2);
}

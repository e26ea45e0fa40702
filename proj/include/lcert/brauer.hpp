#pragma once

#include <optional>

#include "lcert/characters.hpp"
#include "lcert/group.hpp"

namespace lcert {

// Complex-valued (CycNumber-valued) function constant on conjugacy classes.
class ClassFunction {
  public:
    ClassFunction(const FiniteGroup* group, std::vector<CycNumber> values_per_class);

    const FiniteGroup& group() const { return *group_; }
    const std::vector<CycNumber>& values() const { return values_; }
    const CycNumber& value_on_class(int c) const { return values_[c]; }
    const CycNumber& value_at(int element) const { return values_[group_->class_of(element)]; }
    CycNumber dimension() const { return value_at(group_->identity()); }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction scaled(long long k) const;
    bool operator==(const ClassFunction& o) const;
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }

    // <this, other> = (1/|G|) sum_g this(g) conj(other(g)), exact.
    CycNumber inner(const ClassFunction& o) const;

  private:
    const FiniteGroup* group_;
    std::vector<CycNumber> values_;
};

// All degree-one characters of H (through its abelianization), in a fixed
// enumeration order; values are indexed by H's own element indices.
std::vector<std::vector<CycNumber>> linear_characters(const FiniteGroup& H);

// Induced class function on G from a degree-one character psi of the subgroup
// with the given elements; psi values are indexed by position in `elements`
// (ascending element order). Rejects non-multiplicative psi.
ClassFunction induce(const FiniteGroup& G, const std::vector<int>& elements,
                     const std::vector<CycNumber>& psi);

struct BrauerTerm {
    int generator_index;  // index into the brauer_generators ordering
    int character_index;  // index into linear_characters of that subgroup
    long long coefficient;
};

// One inducible generator: a subgroup together with one of its degree-one
// characters and the induced class function.
struct InducedGenerator {
    std::vector<int> subgroup_elements;
    int subgroup_order;
    int character_index;
    std::vector<CycNumber> psi;  // by position in subgroup_elements
    ClassFunction induced;
};

// Generators in the solver's deterministic order: subgroups by order
// descending (ties by element list), characters by enumeration index.
std::vector<InducedGenerator> brauer_generators(const FiniteGroup& G);

struct BrauerDecomposition {
    std::vector<BrauerTerm> terms;
    // Sum of n_i * [G : H_i]; must equal the target's dimension.
    long long index_weighted_degree(const FiniteGroup& G,
                                    const std::vector<InducedGenerator>& gens) const;
};

// Integer combination of induced degree-one characters reconstructing the
// target exactly; throws when no integer solution exists (the target is not
// a virtual character of the induced lattice).
BrauerDecomposition brauer_decompose(const ClassFunction& target,
                                     const std::vector<InducedGenerator>& gens);
BrauerDecomposition brauer_decompose(const ClassFunction& target);

ClassFunction reconstruct(const FiniteGroup& G, const std::vector<InducedGenerator>& gens,
                          const BrauerDecomposition& dec);

// Irreducible characters of G obtained by sieving induced degree-one
// characters (complete for the monomial groups of the stock corpus; a
// failure to complete the table is reported, not patched).
std::vector<ClassFunction> irreducible_characters(const FiniteGroup& G);

// chi_rho = sum of the labelled Dirichlet characters, as a class function on
// (Z/N)^*; keeps the constituent list for L-factorization downstream.
struct AbelianBridge {
    i64 level;
    FiniteGroup group;  // (Z/N)^*
    std::vector<DirichletCharacter> constituents;
    std::vector<CycNumber> values_per_class;
    ClassFunction class_function() const { return ClassFunction(&group, values_per_class); }
};

AbelianBridge abelian_character_bridge(i64 N, const std::vector<std::string>& labels);

// Unramified Artin-symbol bookkeeping for the fixed field of H <= (Z/N)^*:
// for d = prod p^a coprime to N, checks chi((d))^{[G:H]} against the product
// over primes of chi(p^f)^g with f the residue degree and g the number of
// primes above p. Primes dividing N are rejected.
bool artin_symbol_restriction_check(i64 N, const std::vector<i64>& subgroup_residues,
                                    const DirichletCharacter& chi, i64 d);

// Solve A x = b over the integers (A given row-wise); empty when no integral
// solution exists. Deterministic column Hermite reduction.
std::optional<std::vector<mpz_class>> solve_integer_system(
    std::vector<std::vector<mpz_class>> rows, std::vector<mpz_class> rhs);

}  // namespace lcert

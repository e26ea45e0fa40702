#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcert/cyclotomic.hpp"

namespace lcert {

// Structure of the unit group (Z/qZ)^* as a product of cyclic factors with
// canonical generators: smallest primitive root for each odd prime power, and
// the {-1, 5} pair for 2^e with e >= 3. Every unit has a unique exponent
// vector on the generators.
class UnitGroup {
  public:
    explicit UnitGroup(i64 q);

    i64 modulus() const { return q_; }
    i64 phi() const { return phi_; }
    i64 exponent() const { return exponent_; }  // lcm of factor orders
    const std::vector<i64>& generators() const { return generators_; }
    const std::vector<i64>& orders() const { return orders_; }
    const std::vector<i64>& units() const { return units_; }

    bool is_unit(i64 a) const;
    std::vector<i64> exponent_vector(i64 a) const;  // throws when gcd(a, q) > 1

  private:
    struct Factor {
        i64 modulus;          // prime power
        i64 generator;        // generator residue mod `modulus`
        i64 order;
        std::vector<i64> dlog;  // residue mod `modulus` -> exponent (-1 for non-units)
    };

    i64 q_, phi_, exponent_;
    std::vector<Factor> factors_;
    std::vector<i64> generators_;  // lifted to residues mod q
    std::vector<i64> orders_;
    std::vector<i64> units_;
};

// Dirichlet character mod q, encoded by one exponent per unit-group generator.
// chi(a) = 0 when gcd(a, q) > 1. Conductor, order, and parity are computed at
// construction. Characters are identified by (modulus, exponent vector); the
// index in the canonical enumeration of modulus q gives the external label
// "q.k".
class DirichletCharacter {
  public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<i64> exponents);

    static DirichletCharacter principal(i64 q);
    static std::vector<DirichletCharacter> enumerate(i64 q);
    static DirichletCharacter from_label(const std::string& label);  // "q.k"
    static DirichletCharacter from_index(i64 q, i64 index);

    i64 modulus() const { return group_->modulus(); }
    const UnitGroup& group() const { return *group_; }
    const std::vector<i64>& exponents() const { return exponents_; }

    i64 conductor() const { return conductor_; }
    i64 order() const { return order_; }
    int parity() const { return parity_; }  // chi(-1)
    bool is_even() const { return parity_ == 1; }
    bool is_principal() const { return order_ == 1; }
    bool is_primitive() const { return conductor_ == modulus(); }

    i64 index() const;          // position in the canonical enumeration
    std::string label() const;  // "q.k"

    // Exponent e with chi(a) = zeta_order^e, or nullopt when gcd(a, q) > 1.
    std::optional<i64> unity_exponent(i64 a) const;
    CycNumber operator()(i64 a) const;  // exact value, zero when not a unit

    DirichletCharacter conjugate() const;
    DirichletCharacter primitivize() const;
    // sigma(chi) = chi^d; requires gcd(d, order) = 1.
    DirichletCharacter galois_conjugated(i64 d) const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus() == o.modulus() && exponents_ == o.exponents_;
    }
    bool operator!=(const DirichletCharacter& o) const { return !(*this == o); }

  private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<i64> exponents_;
    i64 conductor_, order_;
    int parity_;

    void compute_caches();
};

// The primitive character inducing the pointwise product, built at modulus
// lcm(q1, q2) and then primitivized.
DirichletCharacter twist(const DirichletCharacter& a, const DirichletCharacter& b);

// sigma-image of a character: the character with values sigma(chi(a)).
inline DirichletCharacter galois_act_on_character(const GaloisElement& sigma,
                                                  const DirichletCharacter& chi) {
    return chi.galois_conjugated(sigma.exponent);
}

// Reduce a root of unity zeta_level^exp to lowest terms (order, exponent).
std::pair<i64, i64> reduce_root_of_unity(i64 level, i64 exp);

}  // namespace lcert

#pragma once

#include <string>

#include "lcert/characters.hpp"

namespace lcert {

// tau(chi, a) = sum over x mod f, gcd(x, f) = 1, of chi(x) zeta_f^{a x},
// at level lcm(f, order(chi)). Imprimitive input is primitivized first; the
// returned record keeps both labels so reports can annotate the substitution.
struct GaussSumValue {
    std::string character_label;    // character actually summed (primitive)
    std::string requested_label;    // label as passed in
    i64 shift;
    CycNumber value;
};

CycNumber gauss_sum(const DirichletCharacter& chi, i64 shift = 1);
GaussSumValue gauss_sum_value(const DirichletCharacter& chi, i64 shift = 1);

// 1/tau(chi) = conj(tau(chi)) / f for primitive chi.
CycNumber gauss_sum_inverse(const DirichletCharacter& chi);

// tau(chi, a) = conj(chi)(a) tau(chi), including the zero case gcd(a, f) > 1.
bool shift_identity_check(const DirichletCharacter& chi, i64 a);

// tau(chi) tau(conj(chi)); equals chi(-1) f for primitive chi.
CycNumber conjugation_product(const DirichletCharacter& chi);

// sigma_d(tau(chi)) = conj(sigma_d(chi))(d) * tau(sigma_d(chi)) for
// gcd(d, lcm(f, order)) = 1.
bool galois_equivariance_check(const DirichletCharacter& chi, i64 d);

}  // namespace lcert

#include "lcert/gauss.hpp"

#include <numeric>

namespace lcert {

CycNumber gauss_sum(const DirichletCharacter& chi_in, i64 shift) {
    DirichletCharacter chi = chi_in.is_primitive() ? chi_in : chi_in.primitivize();
    i64 f = chi.conductor();
    i64 level = std::lcm(f, chi.order());
    std::vector<std::pair<i64, Rational>> terms;
    terms.reserve(chi.group().units().size());
    i64 sh = mod_reduce(shift, f);
    for (i64 x : chi.group().units()) {
        i64 e = *chi.unity_exponent(x);
        i64 k = mod_reduce(e * (level / chi.order()) + (sh * x % f) * (level / f), level);
        terms.emplace_back(k, Rational(1));
    }
    return CycNumber::make(level, terms);
}

GaussSumValue gauss_sum_value(const DirichletCharacter& chi, i64 shift) {
    DirichletCharacter prim = chi.primitivize();
    return GaussSumValue{prim.label(), chi.label(), shift, gauss_sum(prim, shift)};
}

CycNumber gauss_sum_inverse(const DirichletCharacter& chi) {
    if (!chi.is_primitive())
        throw std::invalid_argument("gauss_sum_inverse: character must be primitive");
    return gauss_sum(chi).conjugate() / Rational(chi.conductor());
}

bool shift_identity_check(const DirichletCharacter& chi_in, i64 a) {
    DirichletCharacter chi = chi_in.primitivize();
    CycNumber lhs = gauss_sum(chi, a);
    CycNumber rhs = chi.conjugate()(a) * gauss_sum(chi, 1);
    return lhs == rhs;
}

CycNumber conjugation_product(const DirichletCharacter& chi_in) {
    DirichletCharacter chi = chi_in.primitivize();
    return gauss_sum(chi) * gauss_sum(chi.conjugate());
}

bool galois_equivariance_check(const DirichletCharacter& chi_in, i64 d) {
    DirichletCharacter chi = chi_in.primitivize();
    i64 level = std::lcm(chi.conductor(), chi.order());
    if (std::gcd(mod_reduce(d, level), level) != 1)
        throw std::invalid_argument("galois_equivariance_check: d not coprime to lcm(f, order)");
    GaloisElement sigma(level, d);
    CycNumber lhs = galois_apply(sigma, gauss_sum(chi));
    DirichletCharacter sigma_chi = chi.galois_conjugated(d);
    CycNumber rhs = sigma_chi.conjugate()(d) * gauss_sum(sigma_chi);
    return lhs == rhs;
}

}  // namespace lcert

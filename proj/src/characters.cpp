#include "lcert/characters.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lcert {

UnitGroup::UnitGroup(i64 q) : q_(q) {
    if (q < 1) throw std::invalid_argument("UnitGroup: modulus must be positive");
    phi_ = euler_phi(q);
    units_ = unit_residues(q);

    for (const auto& pp : factorize(q)) {
        if (pp.p == 2) {
            if (pp.e == 1) continue;  // (Z/2)^* is trivial
            if (pp.e == 2) {
                factors_.push_back({4, 3, 2, {}});
            } else {
                // {-1, 5} convention for 2^e, e >= 3
                factors_.push_back({pp.q, pp.q - 1, 2, {}});
                factors_.push_back({pp.q, 5, pp.q / 4, {}});
            }
        } else {
            factors_.push_back({pp.q, smallest_primitive_root(pp.q), euler_phi(pp.q), {}});
        }
    }

    // Discrete log tables per factor. For 2^e (e >= 3) the two factors share
    // the decomposition a = (-1)^s 5^t, stored separately.
    size_t fi = 0;
    while (fi < factors_.size()) {
        Factor& f = factors_[fi];
        if (f.modulus % 2 == 0 && f.modulus >= 8 && f.generator == f.modulus - 1) {
            Factor& g = factors_[fi + 1];
            f.dlog.assign(f.modulus, -1);
            g.dlog.assign(f.modulus, -1);
            i64 m = f.modulus;
            for (i64 s = 0; s < 2; ++s) {
                i64 base = s == 0 ? 1 : m - 1;
                i64 x = base;
                for (i64 t = 0; t < g.order; ++t) {
                    f.dlog[x] = s;
                    g.dlog[x] = t;
                    x = x * 5 % m;
                }
            }
            fi += 2;
        } else {
            f.dlog.assign(f.modulus, -1);
            i64 x = 1;
            for (i64 t = 0; t < f.order; ++t) {
                f.dlog[x] = t;
                x = (__int128)x * f.generator % f.modulus;
            }
            ++fi;
        }
    }

    exponent_ = 1;
    i64 check_phi = 1;
    for (const auto& f : factors_) {
        exponent_ = std::lcm(exponent_, f.order);
        check_phi *= f.order;
        orders_.push_back(f.order);
        // lift generator to a residue mod q: f.generator at its factor, 1 elsewhere
        i64 r = 0, m = 1;
        for (const auto& pp : factorize(q)) {
            i64 target = pp.q == f.modulus ? f.generator % pp.q : 1;
            r = m == 1 ? target : crt_pair(r, m, target, pp.q);
            m *= pp.q;
        }
        generators_.push_back(r);
    }
    if (check_phi != phi_) throw std::logic_error("UnitGroup: factor orders do not multiply to phi");
}

bool UnitGroup::is_unit(i64 a) const { return std::gcd(mod_reduce(a, q_), q_) == 1 || q_ == 1; }

std::vector<i64> UnitGroup::exponent_vector(i64 a) const {
    a = mod_reduce(a, q_);
    if (!is_unit(a)) throw std::invalid_argument("UnitGroup::exponent_vector: not a unit");
    std::vector<i64> ev;
    ev.reserve(factors_.size());
    for (const auto& f : factors_) {
        i64 e = f.dlog[a % f.modulus];
        assert(e >= 0);
        ev.push_back(e);
    }
    return ev;
}

std::pair<i64, i64> reduce_root_of_unity(i64 level, i64 exp) {
    exp = mod_reduce(exp, level);
    i64 g = std::gcd(exp, level);
    if (exp == 0) return {1, 0};
    return {level / g, exp / g};
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<i64> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& orders = group_->orders();
    if (exponents_.size() != orders.size())
        throw std::invalid_argument("DirichletCharacter: exponent vector length mismatch");
    for (size_t i = 0; i < exponents_.size(); ++i)
        exponents_[i] = mod_reduce(exponents_[i], orders[i]);
    compute_caches();
}

void DirichletCharacter::compute_caches() {
    const auto& orders = group_->orders();
    order_ = 1;
    for (size_t i = 0; i < exponents_.size(); ++i)
        order_ = std::lcm(order_, orders[i] / std::gcd(orders[i], exponents_[i]));

    i64 q = group_->modulus();
    if (q <= 2) {
        parity_ = 1;
    } else {
        i64 e = *unity_exponent(q - 1);
        parity_ = e == 0 ? 1 : -1;
    }

    // Smallest f | q such that chi is trivial on units congruent to 1 mod f.
    conductor_ = q;
    for (i64 f : divisors(q)) {
        bool ok = true;
        for (i64 a : group_->units()) {
            if (a % f != 1 % f) continue;
            if (*unity_exponent(a) != 0) { ok = false; break; }
        }
        if (ok) { conductor_ = f; break; }
    }
}

std::optional<i64> DirichletCharacter::unity_exponent(i64 a) const {
    if (!group_->is_unit(a)) return std::nullopt;
    if (group_->orders().empty()) return 0;
    i64 E = group_->exponent();
    auto ev = group_->exponent_vector(a);
    i64 t = 0;
    for (size_t i = 0; i < ev.size(); ++i) {
        i64 ord = group_->orders()[i];
        t = (i64)((t + (__int128)ev[i] * exponents_[i] % E * (E / ord)) % E);
    }
    auto [m, u] = reduce_root_of_unity(E, t);
    assert(order_ % m == 0);
    return u * (order_ / m) % order_;
}

CycNumber DirichletCharacter::operator()(i64 a) const {
    auto e = unity_exponent(a);
    if (!e) return CycNumber::zero(order_);
    return CycNumber::root_of_unity(order_, *e);
}

DirichletCharacter DirichletCharacter::principal(i64 q) {
    auto U = std::make_shared<const UnitGroup>(q);
    return DirichletCharacter(U, std::vector<i64>(U->orders().size(), 0));
}

std::vector<DirichletCharacter> DirichletCharacter::enumerate(i64 q) {
    auto U = std::make_shared<const UnitGroup>(q);
    const auto& orders = U->orders();
    std::vector<DirichletCharacter> out;
    out.reserve(U->phi());
    std::vector<i64> ev(orders.size(), 0);
    while (true) {
        out.emplace_back(U, ev);
        // odometer, last generator fastest
        size_t i = orders.size();
        while (i > 0) {
            --i;
            if (++ev[i] < orders[i]) break;
            ev[i] = 0;
            if (i == 0) return out;
        }
        if (orders.empty()) return out;
    }
}

i64 DirichletCharacter::index() const {
    const auto& orders = group_->orders();
    i64 idx = 0;
    for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + exponents_[i];
    return idx;
}

std::string DirichletCharacter::label() const {
    return std::to_string(modulus()) + "." + std::to_string(index());
}

DirichletCharacter DirichletCharacter::from_index(i64 q, i64 index) {
    auto U = std::make_shared<const UnitGroup>(q);
    const auto& orders = U->orders();
    if (index < 0 || index >= U->phi())
        throw std::invalid_argument("DirichletCharacter: index out of range for modulus");
    std::vector<i64> ev(orders.size(), 0);
    for (size_t i = orders.size(); i-- > 0;) {
        ev[i] = index % orders[i];
        index /= orders[i];
    }
    return DirichletCharacter(U, ev);
}

DirichletCharacter DirichletCharacter::from_label(const std::string& label) {
    auto dot = label.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= label.size())
        throw std::invalid_argument("character label must have the form q.k");
    i64 q, k;
    try {
        q = std::stoll(label.substr(0, dot));
        k = std::stoll(label.substr(dot + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("character label must have the form q.k");
    }
    if (q < 1) throw std::invalid_argument("character label: modulus must be positive");
    return from_index(q, k);
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<i64> ev(exponents_.size());
    for (size_t i = 0; i < ev.size(); ++i) ev[i] = -exponents_[i];
    return DirichletCharacter(group_, ev);
}

DirichletCharacter DirichletCharacter::galois_conjugated(i64 d) const {
    i64 dd = mod_reduce(d, order_);
    if (std::gcd(dd, order_) != 1)
        throw std::invalid_argument("galois_conjugated: d not coprime to character order");
    std::vector<i64> ev(exponents_.size());
    for (size_t i = 0; i < ev.size(); ++i)
        ev[i] = (i64)((__int128)exponents_[i] * dd % group_->orders()[i]);
    return DirichletCharacter(group_, ev);
}

DirichletCharacter DirichletCharacter::primitivize() const {
    i64 f = conductor_;
    i64 q = modulus();
    if (f == q) return *this;
    auto Uf = std::make_shared<const UnitGroup>(f);
    std::vector<i64> ev;
    for (size_t i = 0; i < Uf->generators().size(); ++i) {
        i64 g = Uf->generators()[i];
        i64 gord = Uf->orders()[i];
        // Lift g to a unit mod q congruent to g mod f.
        i64 lift = 1 % q, m = 1;
        for (const auto& pp : factorize(q)) {
            i64 target = (f % pp.p == 0) ? g % pp.q : 1;
            // When p | f the lift must agree with g modulo p^{e_p(f)}; taking
            // g mod p^{e_p(q)} directly does, because f | q digit-wise.
            lift = m == 1 ? target : crt_pair(lift, m, target, pp.q);
            m *= pp.q;
        }
        i64 e = *unity_exponent(lift);
        auto [mv, u] = reduce_root_of_unity(order_, e);
        if (gord % mv != 0) throw std::logic_error("primitivize: value order exceeds generator order");
        ev.push_back(u * (gord / mv) % gord);
    }
    DirichletCharacter prim(Uf, ev);
    if (prim.order() != order_ || prim.conductor() != f)
        throw std::logic_error("primitivize: inconsistent induced character");
    // Value agreement on every residue coprime to the original modulus.
    for (i64 a : group_->units()) {
        auto [m1, u1] = reduce_root_of_unity(order_, *unity_exponent(a));
        auto [m2, u2] = reduce_root_of_unity(prim.order(), *prim.unity_exponent(a % f));
        if (m1 != m2 || u1 != u2) throw std::logic_error("primitivize: value mismatch");
    }
    return prim;
}

DirichletCharacter twist(const DirichletCharacter& a, const DirichletCharacter& b) {
    i64 L = std::lcm(a.modulus(), b.modulus());
    auto UL = std::make_shared<const UnitGroup>(L);
    i64 T = std::lcm(a.order(), b.order());
    std::vector<i64> ev;
    for (size_t i = 0; i < UL->generators().size(); ++i) {
        i64 g = UL->generators()[i];
        i64 gord = UL->orders()[i];
        i64 ea = *a.unity_exponent(g), eb = *b.unity_exponent(g);
        i64 t = (ea * (T / a.order()) + eb * (T / b.order())) % T;
        auto [m, u] = reduce_root_of_unity(T, t);
        if (gord % m != 0) throw std::logic_error("twist: value order exceeds generator order");
        ev.push_back(u * (gord / m) % gord);
    }
    return DirichletCharacter(UL, ev).primitivize();
}

}  // namespace lcert

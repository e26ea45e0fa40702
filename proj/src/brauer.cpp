#include "lcert/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lcert {

ClassFunction::ClassFunction(const FiniteGroup* group, std::vector<CycNumber> values_per_class)
    : group_(group), values_(std::move(values_per_class)) {
    if ((int)values_.size() != group_->class_count())
        throw std::invalid_argument("ClassFunction: one value per conjugacy class required");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    if (group_ != o.group_) throw std::invalid_argument("ClassFunction: group mismatch");
    std::vector<CycNumber> v;
    for (size_t i = 0; i < values_.size(); ++i) v.push_back(values_[i] + o.values_[i]);
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    if (group_ != o.group_) throw std::invalid_argument("ClassFunction: group mismatch");
    std::vector<CycNumber> v;
    for (size_t i = 0; i < values_.size(); ++i) v.push_back(values_[i] - o.values_[i]);
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scaled(long long k) const {
    std::vector<CycNumber> v;
    for (const auto& x : values_) v.push_back(x * Rational(k));
    return ClassFunction(group_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    if (group_ != o.group_) return false;
    for (size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != o.values_[i]) return false;
    return true;
}

CycNumber ClassFunction::inner(const ClassFunction& o) const {
    if (group_ != o.group_) throw std::invalid_argument("ClassFunction::inner: group mismatch");
    CycNumber acc = CycNumber::zero();
    for (int c = 0; c < group_->class_count(); ++c) {
        i64 size = (i64)group_->conjugacy_classes()[c].size();
        acc += values_[c] * o.values_[c].conjugate() * Rational(size);
    }
    return acc / Rational(group_->order());
}

namespace {

// Cyclic decomposition of an abelian group: generators with orders, found by
// repeatedly splitting off a maximal-order cyclic factor and a complement.
std::vector<std::pair<int, int>> cyclic_decomposition(const FiniteGroup& Q) {
    if (Q.order() == 1) return {};
    if (!Q.is_abelian()) throw std::invalid_argument("cyclic_decomposition: group not abelian");
    int g = 0, best = 0;
    for (int x = 0; x < Q.order(); ++x)
        if (Q.element_order(x) > best) { best = Q.element_order(x); g = x; }
    std::vector<int> cyc = Q.closure({g});
    if ((int)cyc.size() == Q.order()) return {{g, best}};
    for (const auto& k : Q.subgroups()) {
        if ((int)k.size() * best != Q.order()) continue;
        std::vector<int> meet;
        std::set_intersection(k.begin(), k.end(), cyc.begin(), cyc.end(),
                              std::back_inserter(meet));
        if (meet.size() != 1) continue;  // must meet only in the identity
        auto sub = subgroup_as_group(Q, k);
        std::vector<std::pair<int, int>> rest = cyclic_decomposition(sub.group);
        std::vector<std::pair<int, int>> out{{g, best}};
        for (auto [elem, ord] : rest) out.emplace_back(sub.parent_index[elem], ord);
        return out;
    }
    throw std::logic_error("cyclic_decomposition: no complement found");
}

}  // namespace

std::vector<std::vector<CycNumber>> linear_characters(const FiniteGroup& H) {
    auto derived = commutator_subgroup(H);
    auto quo = quotient_group(H, derived);
    const FiniteGroup& Q = quo.group;

    auto factors = cyclic_decomposition(Q);
    int r = (int)factors.size();
    i64 expo = 1;
    for (auto [g, m] : factors) expo = std::lcm(expo, (i64)m);

    // exponent tuple of every element of Q over the factor generators
    std::vector<std::vector<int>> tuple_of(Q.order());
    {
        std::vector<int> tup(r, 0);
        bool done = Q.order() == 1;
        std::vector<bool> seen(Q.order(), false);
        while (true) {
            int prod = Q.identity();
            for (int i = 0; i < r; ++i) {
                int p = factors[i].first;
                for (int t = 0; t < tup[i]; ++t) prod = Q.mul(prod, p);
            }
            if (seen[prod]) throw std::logic_error("linear_characters: decomposition not direct");
            seen[prod] = true;
            tuple_of[prod] = tup;
            if (done) break;
            int i = r;
            bool wrapped = true;
            while (i-- > 0) {
                if (++tup[i] < factors[i].second) { wrapped = false; break; }
                tup[i] = 0;
            }
            if (wrapped) break;
        }
        for (bool s : seen)
            if (!s) throw std::logic_error("linear_characters: decomposition misses elements");
    }

    // characters of Q, value-tuple odometer with the last factor fastest
    std::vector<std::vector<CycNumber>> out;
    std::vector<int> val(r, 0);
    while (true) {
        i64 order = 1;
        for (int i = 0; i < r; ++i)
            order = std::lcm(order, (i64)factors[i].second /
                                        std::gcd((i64)factors[i].second, (i64)val[i]));
        std::vector<CycNumber> values(H.order());
        for (int h = 0; h < H.order(); ++h) {
            const auto& tup = tuple_of[quo.coset_of[h]];
            i64 e = 0;
            for (int i = 0; i < r; ++i)
                e = (e + (i64)val[i] * tup[i] % expo * (expo / factors[i].second)) % expo;
            auto [m, u] = reduce_root_of_unity(expo, e);
            values[h] = CycNumber::root_of_unity(order, u * (order / m));
        }
        out.push_back(std::move(values));
        int i = r;
        bool wrapped = true;
        while (i-- > 0) {
            if (++val[i] < factors[i].second) { wrapped = false; break; }
            val[i] = 0;
        }
        if (wrapped || r == 0) break;
    }
    return out;
}

ClassFunction induce(const FiniteGroup& G, const std::vector<int>& elements,
                     const std::vector<CycNumber>& psi) {
    std::vector<int> elems = elements;
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
        throw std::invalid_argument("induce: repeated subgroup elements");
    if (psi.size() != elems.size())
        throw std::invalid_argument("induce: one value per subgroup element required");
    std::vector<int> pos(G.order(), -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = (int)i;
    // psi must be a homomorphism into the roots of unity
    for (int a : elems)
        for (int b : elems) {
            int ab = G.mul(a, b);
            if (pos[ab] < 0) throw std::invalid_argument("induce: set is not a subgroup");
            if (psi[pos[a]] * psi[pos[b]] != psi[pos[ab]])
                throw std::invalid_argument("induce: character is not multiplicative");
        }
    if (psi[pos[G.identity()]] != CycNumber::one())
        throw std::invalid_argument("induce: character does not send identity to 1");

    std::vector<CycNumber> values;
    Rational inv_h(1, (long long)elems.size());
    for (int c = 0; c < G.class_count(); ++c) {
        int rep = G.conjugacy_classes()[c][0];
        CycNumber acc = CycNumber::zero();
        for (int x = 0; x < G.order(); ++x) {
            int conj = G.conjugate_element(rep, G.inverse(x));  // x^-1 rep x
            if (pos[conj] >= 0) acc += psi[pos[conj]];
        }
        values.push_back(acc * inv_h);
    }
    return ClassFunction(&G, std::move(values));
}

std::vector<InducedGenerator> brauer_generators(const FiniteGroup& G) {
    std::vector<std::vector<int>> subs = G.subgroups();
    std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<InducedGenerator> gens;
    for (const auto& elems : subs) {
        auto view = subgroup_as_group(G, elems);
        auto lins = linear_characters(view.group);
        for (size_t li = 0; li < lins.size(); ++li)
            gens.push_back(InducedGenerator{elems, (int)elems.size(), (int)li, lins[li],
                                            induce(G, elems, lins[li])});
    }
    return gens;
}

namespace {

std::vector<i64> basis_exponents(i64 n) {
    std::vector<i64> out;
    auto pps = factorize(n);
    for (i64 k = 0; k < n; ++k) {
        bool ok = true;
        for (const auto& pp : pps)
            if ((k % pp.q) / (pp.q / pp.p) == pp.p - 1) { ok = false; break; }
        if (ok) out.push_back(k);
    }
    return out;
}

}  // namespace

std::optional<std::vector<mpz_class>> solve_integer_system(
    std::vector<std::vector<mpz_class>> rows, std::vector<mpz_class> rhs) {
    size_t R = rows.size();
    size_t C = R == 0 ? 0 : rows[0].size();
    std::vector<std::vector<mpz_class>> U(C, std::vector<mpz_class>(C, 0));
    for (size_t i = 0; i < C; ++i) U[i][i] = 1;

    auto col_sub = [&](size_t j, size_t j0, const mpz_class& q) {
        for (size_t r = 0; r < R; ++r) rows[r][j] -= q * rows[r][j0];
        for (size_t r = 0; r < C; ++r) U[r][j] -= q * U[r][j0];
    };
    auto col_swap = [&](size_t j, size_t j0) {
        for (size_t r = 0; r < R; ++r) std::swap(rows[r][j], rows[r][j0]);
        for (size_t r = 0; r < C; ++r) std::swap(U[r][j], U[r][j0]);
    };
    auto col_negate = [&](size_t j) {
        for (size_t r = 0; r < R; ++r) rows[r][j] = -rows[r][j];
        for (size_t r = 0; r < C; ++r) U[r][j] = -U[r][j];
    };

    std::vector<long> pivot_col(R, -1);
    size_t col = 0;
    for (size_t r = 0; r < R && col < C; ++r) {
        while (true) {
            size_t j0 = C;
            for (size_t j = col; j < C; ++j) {
                if (rows[r][j] == 0) continue;
                if (j0 == C || mpz_cmpabs(rows[r][j].get_mpz_t(), rows[r][j0].get_mpz_t()) < 0)
                    j0 = j;
            }
            if (j0 == C) break;  // row has no pivot in the active range
            bool others = false;
            for (size_t j = col; j < C; ++j) {
                if (j == j0 || rows[r][j] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), rows[r][j].get_mpz_t(), rows[r][j0].get_mpz_t());
                col_sub(j, j0, q);
                if (rows[r][j] != 0) others = true;
            }
            if (!others) {
                if (j0 != col) col_swap(j0, col);
                if (rows[r][col] < 0) col_negate(col);
                pivot_col[r] = (long)col;
                ++col;
                break;
            }
        }
    }

    // forward substitution over the echelon rows
    std::vector<mpz_class> y(C, 0);
    for (size_t r = 0; r < R; ++r) {
        mpz_class acc = 0;
        for (size_t j = 0; j < C; ++j)
            if (y[j] != 0 && rows[r][j] != 0) acc += rows[r][j] * y[j];
        mpz_class need = rhs[r] - acc;
        if (pivot_col[r] >= 0) {
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), need.get_mpz_t(),
                        rows[r][pivot_col[r]].get_mpz_t());
            if (rem != 0) return std::nullopt;
            y[pivot_col[r]] = q;
        } else if (need != 0) {
            return std::nullopt;
        }
    }
    std::vector<mpz_class> x(C, 0);
    for (size_t i = 0; i < C; ++i) {
        for (size_t j = 0; j < C; ++j)
            if (y[j] != 0) x[i] += U[i][j] * y[j];
    }
    return x;
}

BrauerDecomposition brauer_decompose(const ClassFunction& target,
                                     const std::vector<InducedGenerator>& gens) {
    // tie-break pre-pass: a generator equal to the target wins outright
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        if (gens[gi].induced == target) {
            BrauerDecomposition dec;
            dec.terms.push_back({(int)gi, gens[gi].character_index, 1});
            return dec;
        }
    }

    i64 level = 1;
    for (const auto& v : target.values()) level = std::lcm(level, v.level());
    for (const auto& g : gens)
        for (const auto& v : g.induced.values()) level = std::lcm(level, v.level());
    std::vector<i64> basis = basis_exponents(level);
    std::map<i64, size_t> slot;
    for (size_t i = 0; i < basis.size(); ++i) slot[basis[i]] = i;

    int nclass = target.group().class_count();
    size_t R = (size_t)nclass * basis.size();
    std::vector<std::vector<Rational>> A(R, std::vector<Rational>(gens.size(), Rational(0)));
    std::vector<Rational> b(R, Rational(0));
    auto fill = [&](const ClassFunction& f, auto&& put) {
        for (int c = 0; c < nclass; ++c) {
            CycNumber v = f.value_on_class(c).promoted(level);
            for (const auto& [k, coef] : v.coeffs())
                put((size_t)c * basis.size() + slot.at(k), coef);
        }
    };
    for (size_t gi = 0; gi < gens.size(); ++gi)
        fill(gens[gi].induced, [&](size_t row, const Rational& c) { A[row][gi] = c; });
    fill(target, [&](size_t row, const Rational& c) { b[row] = c; });

    // scale each row to integers
    std::vector<std::vector<mpz_class>> Ai(R, std::vector<mpz_class>(gens.size()));
    std::vector<mpz_class> bi(R);
    for (size_t r = 0; r < R; ++r) {
        mpz_class den = b[r].den();
        for (const auto& c : A[r]) den = lcm(den, c.den());
        for (size_t j = 0; j < gens.size(); ++j) Ai[r][j] = A[r][j].num() * (den / A[r][j].den());
        bi[r] = b[r].num() * (den / b[r].den());
    }

    auto x = solve_integer_system(std::move(Ai), std::move(bi));
    if (!x)
        throw std::invalid_argument(
            "brauer_decompose: no integer solution (input is not a virtual character)");
    BrauerDecomposition dec;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        if ((*x)[gi] == 0) continue;
        if (!(*x)[gi].fits_slong_p())
            throw std::logic_error("brauer_decompose: coefficient overflow");
        dec.terms.push_back({(int)gi, gens[gi].character_index, (*x)[gi].get_si()});
    }
    ClassFunction check = reconstruct(target.group(), gens, dec);
    if (check != target) throw std::logic_error("brauer_decompose: reconstruction mismatch");
    return dec;
}

BrauerDecomposition brauer_decompose(const ClassFunction& target) {
    return brauer_decompose(target, brauer_generators(target.group()));
}

ClassFunction reconstruct(const FiniteGroup& G, const std::vector<InducedGenerator>& gens,
                          const BrauerDecomposition& dec) {
    std::vector<CycNumber> acc(G.class_count(), CycNumber::zero());
    ClassFunction out(&G, acc);
    for (const auto& t : dec.terms)
        out = out + gens[t.generator_index].induced.scaled(t.coefficient);
    return out;
}

long long BrauerDecomposition::index_weighted_degree(
    const FiniteGroup& G, const std::vector<InducedGenerator>& gens) const {
    long long acc = 0;
    for (const auto& t : terms)
        acc += t.coefficient * (G.order() / gens[t.generator_index].subgroup_order);
    return acc;
}

std::vector<ClassFunction> irreducible_characters(const FiniteGroup& G) {
    auto gens = brauer_generators(G);
    std::vector<ClassFunction> knowns;
    auto integer_inner = [](const ClassFunction& a, const ClassFunction& b) -> long long {
        CycNumber v = a.inner(b);
        Rational r = v.rational_value();
        if (!r.is_integer()) throw std::logic_error("character inner product not integral");
        return r.num().get_si();
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& g : gens) {
            ClassFunction w = g.induced;
            for (const auto& chi : knowns) {
                long long mult = integer_inner(w, chi);
                if (mult != 0) w = w - chi.scaled(mult);
            }
            bool zero = true;
            for (const auto& v : w.values())
                if (!v.is_zero()) { zero = false; break; }
            if (zero) continue;
            if (integer_inner(w, w) == 1) {
                if (w.dimension().rational_value().sign() < 0) w = w.scaled(-1);
                knowns.push_back(w);
                progress = true;
            }
        }
    }
    long long dim2 = 0;
    for (const auto& chi : knowns) {
        Rational d = chi.dimension().rational_value();
        dim2 += d.num().get_si() * d.num().get_si();
    }
    if (dim2 != G.order())
        throw std::runtime_error(
            "irreducible_characters: induced-character sieve did not complete the table");
    std::sort(knowns.begin(), knowns.end(), [](const ClassFunction& a, const ClassFunction& b) {
        Rational da = a.dimension().rational_value(), db = b.dimension().rational_value();
        if (da != db) return da < db;
        std::ostringstream sa, sb;
        for (const auto& v : a.values()) sa << v.level() << ":" << v.str() << ";";
        for (const auto& v : b.values()) sb << v.level() << ":" << v.str() << ";";
        return sa.str() < sb.str();
    });
    return knowns;
}

AbelianBridge abelian_character_bridge(i64 N, const std::vector<std::string>& labels) {
    AbelianBridge bridge{N, FiniteGroup::unit_group_of(N), {}, {}};
    for (const auto& label : labels) {
        DirichletCharacter chi = DirichletCharacter::from_label(label);
        if (N % chi.modulus() != 0)
            throw std::invalid_argument("abelian_character_bridge: label modulus must divide N");
        bridge.constituents.push_back(std::move(chi));
    }
    for (int c = 0; c < bridge.group.class_count(); ++c) {
        int rep = bridge.group.conjugacy_classes()[c][0];
        i64 residue = bridge.group.residues()[rep];
        CycNumber acc = CycNumber::zero();
        for (const auto& chi : bridge.constituents) acc += chi(residue);
        bridge.values_per_class.push_back(acc);
    }
    return bridge;
}

bool artin_symbol_restriction_check(i64 N, const std::vector<i64>& subgroup_residues,
                                    const DirichletCharacter& chi, i64 d) {
    if (d < 1 || std::gcd(mod_reduce(d, N), N) != 1)
        throw std::invalid_argument("artin_symbol_restriction_check: d must be coprime to N");
    std::set<i64> H;
    for (i64 h : subgroup_residues) H.insert(mod_reduce(h, N));
    if (!H.count(1 % N))
        throw std::invalid_argument("artin_symbol_restriction_check: subgroup must contain 1");
    for (i64 a : H)
        for (i64 b : H)
            if (!H.count(a * b % N))
                throw std::invalid_argument("artin_symbol_restriction_check: set is not a subgroup");
    i64 phi = euler_phi(N);
    if (phi % (i64)H.size() != 0)
        throw std::invalid_argument("artin_symbol_restriction_check: invalid subgroup size");
    i64 index = phi / (i64)H.size();

    i64 ord = chi.order();
    i64 lhs = 0;  // exponent of the product over primes, at level ord
    for (const auto& pp : factorize(d)) {
        if (N % pp.p == 0)
            throw std::invalid_argument("artin_symbol_restriction_check: ramified prime in d");
        i64 f = 1;
        while (!H.count(mod_pow(pp.p, f, N))) {
            if (++f > index) throw std::logic_error("artin_symbol_restriction_check: bad orbit");
        }
        if (index % f != 0) throw std::logic_error("artin_symbol_restriction_check: f does not divide the index");
        i64 g = index / f;
        i64 chi_pf = *chi.unity_exponent(mod_pow(pp.p, f, N));
        lhs = (lhs + (i64)((__int128)chi_pf * g % ord) * pp.e) % ord;
    }
    i64 rhs = (i64)((__int128)(*chi.unity_exponent(d)) * index % ord);
    return lhs == rhs;
}

}  // namespace lcert

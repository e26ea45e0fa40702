#include "lcert/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lcert {

namespace {

constexpr int kMaxOrder = 32;  // stock corpus needs <= 24

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

void FiniteGroup::finalize() {
    n_ = (int)table_.size();
    if (n_ == 0) throw std::invalid_argument("group: empty table");
    if (n_ > kMaxOrder) throw std::invalid_argument("group: order exceeds supported bound");
    for (const auto& row : table_) {
        if ((int)row.size() != n_) throw std::invalid_argument("group: table is not square");
        for (int x : row)
            if (x < 0 || x >= n_) throw std::invalid_argument("group: table entry out of range");
    }
    // associativity
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("group: multiplication is not associative");
    // identity
    identity_ = -1;
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int x = 0; x < n_; ++x)
            if (table_[e][x] != x || table_[x][e] != x) { ok = false; break; }
        if (ok) { identity_ = e; break; }
    }
    if (identity_ < 0) throw std::invalid_argument("group: no identity element");
    // inverses
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) { inverse_[a] = b; break; }
        if (inverse_[a] < 0) throw std::invalid_argument("group: missing inverse");
    }
    // element orders
    element_order_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        int x = a, ord = 1;
        while (x != identity_) { x = table_[x][a]; ++ord; }
        element_order_[a] = ord;
    }
    // conjugacy classes, ordered by smallest member; identity class first
    class_of_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        if (class_of_[g] >= 0) continue;
        std::set<int> orbit;
        for (int x = 0; x < n_; ++x) orbit.insert(conjugate_element(g, x));
        int id = (int)classes_.size();
        classes_.emplace_back(orbit.begin(), orbit.end());
        for (int y : orbit) class_of_[y] = id;
    }
    // all subgroups by closure saturation
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work{{identity_}};
    seen.insert({identity_});
    for (size_t w = 0; w < work.size(); ++w) {
        std::vector<int> h = work[w];
        for (int g = 0; g < n_; ++g) {
            if (std::binary_search(h.begin(), h.end(), g)) continue;
            std::vector<int> seed = h;
            seed.push_back(g);
            std::vector<int> k = closure(seed);
            if (seen.insert(k).second) work.push_back(k);
        }
    }
    subgroups_.assign(seen.begin(), seen.end());
    std::sort(subgroups_.begin(), subgroups_.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

std::vector<int> FiniteGroup::closure(std::vector<int> seed) const {
    std::vector<bool> in(n_, false);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!in[x]) { in[x] = true; elems.push_back(x); }
    };
    add(identity_);
    for (int x : seed) {
        if (x < 0 || x >= n_) throw std::invalid_argument("closure: element out of range");
        add(x);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = elems.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j) {
                int p = table_[elems[i]][elems[j]];
                if (!in[p]) { in[p] = true; elems.push_back(p); grew = true; }
            }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.table_ = std::move(table);
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(int declared_order,
                                           const std::vector<std::vector<int>>& generators) {
    if (generators.empty()) throw std::invalid_argument("group: no generators");
    size_t points = 0;
    for (const auto& g : generators) points = std::max(points, g.size());
    // pad generators to act on the same point set
    std::vector<std::vector<int>> gens;
    for (auto g : generators) {
        size_t base = g.size();
        for (size_t i = base; i < points; ++i) g.push_back((int)i);
        std::vector<int> check = sorted_unique(g);
        if (check.size() != points || check.front() != 0 || check.back() != (int)points - 1)
            throw std::invalid_argument("group: generator is not a permutation");
        gens.push_back(std::move(g));
    }
    std::vector<int> id(points);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> elems{id};
    std::vector<std::vector<int>> work{id};
    for (size_t w = 0; w < work.size(); ++w) {
        for (const auto& g : gens) {
            std::vector<int> prod(points);
            for (size_t i = 0; i < points; ++i) prod[i] = g[work[w][i]];
            if (elems.insert(prod).second) {
                if ((int)elems.size() > kMaxOrder)
                    throw std::invalid_argument("group: generated group exceeds supported order");
                work.push_back(prod);
            }
        }
    }
    if (declared_order > 0 && (int)elems.size() != declared_order)
        throw std::invalid_argument("group: generated order does not match declaration");
    std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = (int)i;
    int n = (int)sorted.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(points);
            for (size_t i = 0; i < points; ++i) prod[i] = sorted[a][sorted[b][i]];
            table[a][b] = index.at(prod);
        }
    FiniteGroup g;
    g.table_ = std::move(table);
    g.finalize();
    // cycle-notation names for display
    g.names_.resize(n);
    for (int a = 0; a < n; ++a) {
        const auto& p = sorted[a];
        std::string s;
        std::vector<bool> done(points, false);
        for (size_t i = 0; i < points; ++i) {
            if (done[i] || p[i] == (int)i) continue;
            s += "(";
            size_t j = i;
            bool first = true;
            while (!done[j]) {
                done[j] = true;
                s += (first ? "" : " ") + std::to_string(j + 1);
                first = false;
                j = (size_t)p[j];
            }
            s += ")";
        }
        g.names_[a] = s.empty() ? "()" : s;
    }
    return g;
}

FiniteGroup FiniteGroup::unit_group_of(i64 modulus) {
    auto units = unit_residues(modulus);
    int n = (int)units.size();
    if (n > kMaxOrder) throw std::invalid_argument("unit_group_of: modulus too large");
    std::map<i64, int> index;
    for (int i = 0; i < n; ++i) index[units[i]] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = index.at(units[a] * units[b] % modulus);
    FiniteGroup g;
    g.table_ = std::move(table);
    g.finalize();
    g.residues_ = units;
    g.names_.resize(n);
    for (int i = 0; i < n; ++i) g.names_[i] = std::to_string(units[i]);
    return g;
}

FiniteGroup FiniteGroup::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("group file not found: " + path);
    return parse(in, path);
}

FiniteGroup FiniteGroup::parse(std::istream& raw, const std::string& origin) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("group file " + origin + ": " + why);
    };
    // strip # comments up front
    std::stringstream in;
    {
        std::string l;
        while (std::getline(raw, l)) {
            auto hash = l.find('#');
            if (hash != std::string::npos) l.erase(hash);
            in << l << '\n';
        }
    }
    std::string word;
    if (!(in >> word) || word != "order") fail("expected header 'order n'");
    int declared = 0;
    if (!(in >> declared) || declared < 1) fail("bad order");
    if (!(in >> word)) fail("expected 'table' or 'perm'");
    if (word == "table") {
        std::vector<std::vector<int>> table(declared, std::vector<int>(declared));
        for (int i = 0; i < declared; ++i)
            for (int j = 0; j < declared; ++j)
                if (!(in >> table[i][j])) fail("truncated table");
        return from_table(std::move(table));
    }
    if (word != "perm") fail("unknown body kind '" + word + "'");
    // remaining lines: products of cycles, 1-based points
    std::vector<std::vector<int>> gens;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        std::vector<std::vector<int>> cycles;
        std::vector<int> cur;
        bool open = false;
        std::istringstream ls(line);
        char ch;
        while (ls >> ch) {
            if (ch == '(') {
                if (open) fail("nested cycle");
                open = true;
                cur.clear();
            } else if (ch == ')') {
                if (!open) fail("unbalanced cycle");
                open = false;
                cycles.push_back(cur);
            } else if (ch == ',' ) {
                continue;
            } else {
                ls.putback(ch);
                int pt;
                if (!(ls >> pt) || pt < 1) fail("bad point in cycle");
                cur.push_back(pt - 1);
            }
        }
        if (open) fail("unbalanced cycle");
        int maxpt = 0;
        for (const auto& c : cycles)
            for (int p : c) maxpt = std::max(maxpt, p + 1);
        std::vector<int> perm(maxpt);
        std::iota(perm.begin(), perm.end(), 0);
        for (const auto& c : cycles) {
            if (c.size() < 2) continue;
            for (size_t i = 0; i < c.size(); ++i) perm[c[i]] = c[(i + 1) % c.size()];
        }
        gens.push_back(std::move(perm));
    }
    if (gens.empty()) fail("perm body has no generators");
    return from_permutations(declared, gens);
}

std::string FiniteGroup::element_name(int a) const {
    if (!names_.empty()) return names_[a];
    return "g" + std::to_string(a);
}

SubgroupView subgroup_as_group(const FiniteGroup& G, const std::vector<int>& elements) {
    std::vector<int> elems = sorted_unique(elements);
    std::map<int, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    int n = (int)elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(G.mul(elems[a], elems[b]));
            if (it == index.end())
                throw std::invalid_argument("subgroup_as_group: set is not closed");
            table[a][b] = it->second;
        }
    return SubgroupView{FiniteGroup::from_table(std::move(table)), elems};
}

std::vector<int> commutator_subgroup(const FiniteGroup& G) {
    std::vector<int> gens;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            gens.push_back(G.mul(G.mul(a, b), G.mul(G.inverse(a), G.inverse(b))));
    return G.closure(sorted_unique(gens));
}

QuotientView quotient_group(const FiniteGroup& G, const std::vector<int>& normal_subgroup) {
    std::vector<int> nsub = sorted_unique(normal_subgroup);
    for (int x = 0; x < G.order(); ++x)
        for (int h : nsub) {
            int conj = G.conjugate_element(h, x);
            if (!std::binary_search(nsub.begin(), nsub.end(), conj))
                throw std::invalid_argument("quotient_group: subgroup is not normal");
        }
    std::vector<int> coset_of(G.order(), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (coset_of[g] >= 0) continue;
        int id = (int)reps.size();
        reps.push_back(g);
        for (int h : nsub) coset_of[G.mul(g, h)] = id;
    }
    int m = (int)reps.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[a][b] = coset_of[G.mul(reps[a], reps[b])];
    return QuotientView{FiniteGroup::from_table(std::move(table)), coset_of};
}

}  // namespace lcert

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lcert {

using i64 = long long;

struct PrimePower {
    i64 p;
    int e;
    i64 q;  // p^e
};

inline i64 ipow(i64 base, int exp) {
    i64 r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline i64 mod_reduce(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline std::vector<PrimePower> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<PrimePower> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) { n /= p; ++pp.e; pp.q *= p; }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline i64 euler_phi(i64 n) {
    i64 phi = 1;
    for (const auto& pp : factorize(n)) phi *= pp.q - pp.q / pp.p;
    return phi;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> ds{1};
    for (const auto& pp : factorize(n)) {
        size_t sz = ds.size();
        i64 pk = 1;
        for (int i = 0; i < pp.e; ++i) {
            pk *= pp.p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline i64 mod_pow(i64 base, i64 exp, i64 mod) {
    if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    i64 r = 1 % mod;
    base = mod_reduce(base, mod);
    while (exp > 0) {
        if (exp & 1) r = (__int128)r * base % mod;
        base = (__int128)base * base % mod;
        exp >>= 1;
    }
    return r;
}

inline i64 mod_inverse(i64 a, i64 m) {
    i64 t = 0, nt = 1, r = m, nr = mod_reduce(a, m);
    while (nr != 0) {
        i64 q = r / nr;
        i64 tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return mod_reduce(t, m);
}

inline i64 multiplicative_order(i64 a, i64 m) {
    a = mod_reduce(a, m);
    if (std::gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
    i64 x = a % m, ord = 1;
    while (x != 1 % m) {
        x = (__int128)x * a % m;
        if (++ord > m) throw std::logic_error("multiplicative_order: did not terminate");
    }
    return ord;
}

// Smallest primitive root modulo an odd prime power (also handles 2 and 4).
inline i64 smallest_primitive_root(i64 q) {
    if (q == 1 || q == 2) return 1;
    i64 phi = euler_phi(q);
    for (i64 g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        if (multiplicative_order(g, q) == phi) return g;
    }
    throw std::invalid_argument("smallest_primitive_root: no primitive root exists");
}

inline int legendre_symbol(i64 a, i64 p) {
    a = mod_reduce(a, p);
    if (a == 0) return 0;
    i64 s = mod_pow(a, (p - 1) / 2, p);
    return s == 1 ? 1 : -1;
}

// x with x = r1 (mod m1), x = r2 (mod m2); moduli must be coprime.
inline i64 crt_pair(i64 r1, i64 m1, i64 r2, i64 m2) {
    i64 inv = mod_inverse(m1 % m2, m2);
    i64 diff = mod_reduce(r2 - r1, m2);
    return mod_reduce(r1 + (__int128)m1 * ((__int128)diff * inv % m2) % (m1 * m2), m1 * m2);
}

inline std::vector<i64> unit_residues(i64 n) {
    if (n == 1) return {0};
    std::vector<i64> out;
    for (i64 a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) out.push_back(a);
    return out;
}

}  // namespace lcert

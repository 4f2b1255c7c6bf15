#pragma once

// Shared fixtures and independent oracles for the unit tests. Oracles here use
// elementary number theory or brute force over subsets, never the library's
// own enumeration routines.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qspec/qspec.hpp"

namespace qtest {

using qspec::Bitset;
using qspec::Elem;
using qspec::RingPtr;

inline std::vector<std::string> battery_exprs() {
    std::vector<std::string> out;
    for (int n = 2; n <= 64; ++n) out.push_back("Zmod(" + std::to_string(n) + ")");
    out.push_back("PolyQuot(Zmod(2),x,x^2+x+1)");
    out.push_back("PolyQuot(Zmod(2),x,x^2)");
    out.push_back("PolyQuot(Zmod(4),x,x^2)");
    out.push_back("Prod(PolyQuot(Zmod(2),x,x^2),Zmod(3))");
    out.push_back("PolyQuot(Zmod(2),x,x^3)");
    out.push_back("PolyQuot(PolyQuot(Zmod(2),x,x^2),y,y^2)");
    return out;
}

inline RingPtr ring(const std::string& expr) { return qspec::parse_and_evaluate(expr); }

// ---- elementary number theory for Z/n ----

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k) out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t squarefree_part(std::uint64_t d) {
    std::uint64_t r = 1;
    for (auto [p, k] : factor(d)) r *= p;
    return r;
}

inline bool is_prime_power(std::uint64_t d) { return d > 1 && factor(d).size() == 1; }
inline bool is_prime_number(std::uint64_t d) { return d > 1 && factor(d).size() == 1 && factor(d)[0].second == 1; }

// The ideal dZ/nZ as a member set.
inline Bitset zmod_ideal(std::uint64_t n, std::uint64_t d) {
    Bitset b(n);
    for (std::uint64_t a = 0; a < n; a += d) b.set(a);
    return b;
}

// Quasi-primes of Z/n: (p^k) for prime powers p^k dividing n.
inline std::vector<std::uint64_t> zmod_quasi_prime_generators(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto d : divisors(n))
        if (is_prime_power(d)) out.push_back(d);
    return out;
}

// ---- brute force over subsets (small rings only) ----

inline std::vector<Bitset> brute_force_ideals(const qspec::FiniteRing& r) {
    const std::size_t n = r.size();
    std::vector<Bitset> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {  // must contain 0
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!(mask >> a & 1)) continue;
            for (std::size_t b = 0; b < n && ok; ++b) {
                if ((mask >> b & 1) && !(mask >> r.add(Elem(a), Elem(b)) & 1)) ok = false;
                if (!(mask >> r.mul(Elem(a), Elem(b)) & 1)) ok = false;
            }
        }
        if (!ok) continue;
        Bitset s(n);
        for (std::size_t a = 0; a < n; ++a)
            if (mask >> a & 1) s.set(a);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Radical by repeated multiplication until a power repeats.
inline Bitset brute_force_radical(const qspec::FiniteRing& r, const Bitset& ideal) {
    Bitset out(r.size());
    for (Elem a = 0; a < r.size(); ++a) {
        Elem p = a;
        for (std::size_t k = 0; k <= r.size(); ++k) {
            if (ideal.test(p)) {
                out.set(a);
                break;
            }
            p = r.mul(p, a);
        }
    }
    return out;
}

inline bool brute_force_is_prime(const qspec::FiniteRing& r, const Bitset& ideal) {
    if (ideal.test(1)) return false;
    for (Elem a = 0; a < r.size(); ++a)
        for (Elem b = 0; b < r.size(); ++b)
            if (ideal.test(r.mul(a, b)) && !ideal.test(a) && !ideal.test(b)) return false;
    return true;
}

// ---- random generators ----

// Random preorder on n points: min_open(x) = points reachable from x in a random digraph.
inline qspec::FinTopSpace random_space(std::mt19937& rng, std::size_t n, double edge_p = 0.25) {
    std::bernoulli_distribution edge(edge_p);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && edge(rng)) adj[a][b] = true;
    std::vector<Bitset> min_open;
    for (std::size_t x = 0; x < n; ++x) {
        Bitset seen(n);
        std::vector<std::size_t> stack{x};
        seen.set(x);
        while (!stack.empty()) {
            const auto a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < n; ++b)
                if (adj[a][b] && !seen.test(b)) {
                    seen.set(b);
                    stack.push_back(b);
                }
        }
        min_open.push_back(std::move(seen));
    }
    return qspec::FinTopSpace(std::move(min_open));
}

// All open sets of X by brute force over subsets.
inline std::vector<Bitset> brute_force_open_sets(const qspec::FinTopSpace& X) {
    const std::size_t n = X.size();
    std::vector<Bitset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Bitset s(n);
        for (std::size_t a = 0; a < n; ++a)
            if (mask >> a & 1) s.set(a);
        bool open = true;
        for (std::size_t a = 0; a < n && open; ++a)
            if (s.test(a) && !X.min_open(a).is_subset_of(s)) open = false;
        if (open) out.push_back(std::move(s));
    }
    return out;
}

// Random ring expression with a small evaluated size.
inline qspec::RingExpr random_ring_expr(std::mt19937& rng, int depth, int& var_counter) {
    using qspec::RingExpr;
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 0);
    RingExpr e;
    switch (pick(rng)) {
    case 0: {
        e.kind = RingExpr::Kind::zmod;
        e.modulus = std::uniform_int_distribution<std::uint64_t>(2, 9)(rng);
        return e;
    }
    case 1: {
        e.kind = RingExpr::Kind::product;
        e.children.push_back(random_ring_expr(rng, 0, var_counter));
        e.children.push_back(random_ring_expr(rng, depth - 1, var_counter));
        return e;
    }
    case 2: {
        e.kind = RingExpr::Kind::poly_quotient;
        RingExpr base;
        base.kind = RingExpr::Kind::zmod;
        base.modulus = std::uniform_int_distribution<std::uint64_t>(2, 4)(rng);
        e.children.push_back(base);
        e.var = std::string(1, static_cast<char>('a' + var_counter++ % 8));
        const unsigned degree = std::uniform_int_distribution<unsigned>(1, 2)(rng);
        e.poly.push_back({"", degree});
        for (unsigned k = degree; k-- > 0;) {
            const auto c = std::uniform_int_distribution<std::uint64_t>(0, base.modulus - 1)(rng);
            if (c == 0) continue;
            if (c == 1 && k > 0 && std::bernoulli_distribution(0.5)(rng)) e.poly.push_back({"", k});
            else e.poly.push_back({std::to_string(c), k});
        }
        return e;
    }
    default: {
        e.kind = RingExpr::Kind::quotient;
        RingExpr base;
        base.kind = RingExpr::Kind::zmod;
        base.modulus = std::uniform_int_distribution<std::uint64_t>(4, 30)(rng);
        e.children.push_back(base);
        // a proper divisor d > 1 generates a proper ideal
        std::vector<std::uint64_t> ds;
        for (auto d : divisors(base.modulus))
            if (d > 1) ds.push_back(d);
        e.literals.push_back(std::to_string(ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)]));
        return e;
    }
    }
}

}  // namespace qtest

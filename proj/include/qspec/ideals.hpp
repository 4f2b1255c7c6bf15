#pragma once

// Ideals of a finite ring as member bitsets, the full ideal lattice, radicals,
// and the prime/primary/quasi-prime/regular classifiers.

#include <algorithm>
#include <compare>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"
#include "finring.hpp"

namespace qspec {

class Ideal {
public:
    // `members` must already be an ideal; use ideal_generated() otherwise.
    Ideal(RingPtr ring, Bitset members) : ring_(std::move(ring)), members_(std::move(members)) {}

    const RingPtr& ring() const noexcept { return ring_; }
    const Bitset& members() const noexcept { return members_; }
    bool contains(Elem a) const { return members_.test(a); }
    std::size_t size() const { return members_.count(); }
    bool is_proper() const { return !members_.test(FiniteRing::one()); }
    bool is_zero() const { return members_.count() == 1; }
    bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        members_.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
        return out;
    }

    // Ring identity is compared by address: ideals of different rings never compare equal.
    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.ring_.get() == b.ring_.get() && a.members_ == b.members_;
    }
    friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) { return a.members_ <=> b.members_; }

private:
    RingPtr ring_;
    Bitset members_;
};

struct IdealHash {
    std::size_t operator()(const Ideal& i) const noexcept { return i.members().hash(); }
};

namespace detail {

inline void require_same_ring(const Ideal& a, const Ideal& b) {
    if (a.ring().get() != b.ring().get()) throw DomainError("ideals belong to different rings");
}

// Additive subgroup generated by `members` plus `extra`, assuming every
// element of `extra` has already been closed under ring multiplication.
inline Bitset additive_closure(const FiniteRing& ring, Bitset members, const std::vector<Elem>& extra) {
    std::vector<Elem> list;
    members.for_each([&](std::size_t i) { list.push_back(static_cast<Elem>(i)); });
    for (Elem s : extra) {
        if (members.test(s)) continue;
        // H + <s> is the union of the cosets H + ks, stopping once ks lands in H.
        const std::size_t base_count = list.size();
        Elem t = s;
        while (!members.test(t)) {
            for (std::size_t k = 0; k < base_count; ++k) {
                const Elem x = ring.add(list[k], t);
                if (!members.test(x)) {
                    members.set(x);
                    list.push_back(x);
                }
            }
            t = ring.add(t, s);
        }
    }
    return members;
}

}  // namespace detail

// Least ideal containing `gens`. Multiplying generators by every ring element
// gives a multiplicatively closed set, and its additive closure stays closed
// under multiplication, so one pass of each reaches the fixpoint.
inline Ideal ideal_generated(const RingPtr& ring, std::span<const Elem> gens) {
    const auto& r = *ring;
    Bitset seen(r.size());
    std::vector<Elem> products;
    for (Elem g : gens) {
        if (g >= r.size()) throw DomainError("generator index out of range");
        for (Elem a = 0; a < r.size(); ++a) {
            const Elem p = r.mul(a, g);
            if (!seen.test(p)) {
                seen.set(p);
                products.push_back(p);
            }
        }
    }
    Bitset zero(r.size());
    zero.set(r.zero());
    return Ideal(ring, detail::additive_closure(r, std::move(zero), products));
}

inline Ideal ideal_generated(const RingPtr& ring, std::initializer_list<Elem> gens) {
    return ideal_generated(ring, std::span<const Elem>(gens.begin(), gens.size()));
}

inline Ideal zero_ideal(const RingPtr& ring) { return ideal_generated(ring, std::span<const Elem>{}); }
inline Ideal unit_ideal(const RingPtr& ring) { return Ideal(ring, Bitset::full(ring->size())); }

// I + (a)
inline Ideal ideal_extend(const Ideal& ideal, Elem a) {
    const auto& r = *ideal.ring();
    if (ideal.contains(a)) return ideal;
    std::vector<Elem> products;
    Bitset seen(r.size());
    for (Elem x = 0; x < r.size(); ++x) {
        const Elem p = r.mul(x, a);
        if (!seen.test(p)) {
            seen.set(p);
            products.push_back(p);
        }
    }
    return Ideal(ideal.ring(), detail::additive_closure(r, ideal.members(), products));
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    detail::require_same_ring(a, b);
    Ideal acc = a;
    b.members().for_each([&](std::size_t x) { acc = ideal_extend(acc, static_cast<Elem>(x)); });
    return acc;
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    detail::require_same_ring(a, b);
    return Ideal(a.ring(), a.members() & b.members());
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    detail::require_same_ring(a, b);
    const auto& r = *a.ring();
    std::vector<Elem> gens;
    Bitset seen(r.size());
    for (Elem x : a.elements())
        for (Elem y : b.elements()) {
            const Elem p = r.mul(x, y);
            if (!seen.test(p)) {
                seen.set(p);
                gens.push_back(p);
            }
        }
    return ideal_generated(a.ring(), gens);
}

inline Ideal ideal_power(const Ideal& a, unsigned n) {
    Ideal acc = unit_ideal(a.ring());
    for (unsigned k = 0; k < n; ++k) acc = ideal_product(acc, a);
    return acc;
}

// Every ideal exactly once, ascending by member bit pattern. Breadth-first
// saturation from (0): each discovered ideal I spawns I + (a) for a not in I.
inline std::vector<Ideal> enumerate_ideals(const RingPtr& ring, const Limits& limits = {}) {
    const auto& r = *ring;
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Ideal> found;
    std::deque<std::size_t> frontier;
    auto discover = [&](Ideal ideal) {
        if (seen.insert(ideal.members()).second) {
            if (found.size() >= limits.max_ideals)
                throw SizingError("ideal lattice exceeds the cap of " + std::to_string(limits.max_ideals) +
                                  " ideals (raise --max-ideals)");
            found.push_back(std::move(ideal));
            frontier.push_back(found.size() - 1);
        }
    };
    discover(zero_ideal(ring));
    while (!frontier.empty()) {
        const Ideal current = found[frontier.front()];
        frontier.pop_front();
        for (Elem a = 0; a < r.size(); ++a)
            if (!current.contains(a)) discover(ideal_extend(current, a));
    }
    std::sort(found.begin(), found.end());
    return found;
}

// { f : f^k in I for some 1 <= k <= |A| }
inline Ideal radical(const Ideal& ideal) {
    const auto& r = *ideal.ring();
    Bitset members(r.size());
    for (Elem f = 0; f < r.size(); ++f) {
        Elem p = f;
        for (std::size_t k = 1; k <= r.size(); ++k) {
            if (ideal.contains(p)) {
                members.set(f);
                break;
            }
            p = r.mul(p, f);
        }
    }
    return Ideal(ideal.ring(), std::move(members));
}

inline Ideal nilradical(const RingPtr& ring) { return radical(zero_ideal(ring)); }

inline bool is_prime(const Ideal& ideal) {
    if (!ideal.is_proper()) return false;
    const auto& r = *ideal.ring();
    for (Elem f = 0; f < r.size(); ++f) {
        if (ideal.contains(f)) continue;
        for (Elem g = 0; g < r.size(); ++g)
            if (!ideal.contains(g) && ideal.contains(r.mul(f, g))) return false;
    }
    return true;
}

// Definitional scan: fg in q implies f or g in the radical of q.
inline bool is_quasi_prime(const Ideal& ideal) {
    if (!ideal.is_proper()) return false;
    const auto& r = *ideal.ring();
    const Ideal rad = radical(ideal);
    for (Elem f = 0; f < r.size(); ++f) {
        if (rad.contains(f)) continue;
        for (Elem g = 0; g < r.size(); ++g)
            if (!rad.contains(g) && ideal.contains(r.mul(f, g))) return false;
    }
    return true;
}

inline bool is_primary(const Ideal& ideal) {
    if (!ideal.is_proper()) return false;
    const auto& r = *ideal.ring();
    const Ideal rad = radical(ideal);
    for (Elem f = 0; f < r.size(); ++f) {
        if (ideal.contains(f)) continue;
        for (Elem g = 0; g < r.size(); ++g)
            if (!rad.contains(g) && ideal.contains(r.mul(f, g))) return false;
    }
    return true;
}

// Direct scan: every a outside I already generates the unit ideal together with I.
inline bool is_maximal(const Ideal& ideal) {
    if (!ideal.is_proper()) return false;
    const auto& r = *ideal.ring();
    for (Elem a = 0; a < r.size(); ++a)
        if (!ideal.contains(a) && ideal_extend(ideal, a).is_proper()) return false;
    return true;
}

// Lattice form: no enumerated ideal lies strictly between I and A.
inline bool is_maximal(const Ideal& ideal, std::span<const Ideal> lattice) {
    if (!ideal.is_proper()) return false;
    for (const auto& j : lattice)
        if (j.is_proper() && j != ideal && ideal.is_subset_of(j)) return false;
    return true;
}

inline bool is_regular_ideal(const Ideal& ideal) {
    std::vector<Elem> gens;
    for (Elem e : idempotents(*ideal.ring()))
        if (ideal.contains(e)) gens.push_back(e);
    return ideal_generated(ideal.ring(), gens) == ideal;
}

// Maximal proper regular ideals. In a finite ring every regular ideal is
// principal on an idempotent (e, e' generate the same ideal as e + e' - ee'),
// so the candidates are the ideals eA for idempotents e != 1.
inline std::vector<Ideal> max_regular_ideals(const RingPtr& ring) {
    std::vector<Ideal> regular;
    for (Elem e : idempotents(*ring)) {
        if (e == FiniteRing::one()) continue;
        Ideal i = ideal_generated(ring, {e});
        if (std::find(regular.begin(), regular.end(), i) == regular.end()) regular.push_back(std::move(i));
    }
    std::vector<Ideal> out;
    for (const auto& i : regular) {
        bool maximal = true;
        for (const auto& j : regular)
            if (j != i && i.is_subset_of(j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_max_regular(const Ideal& ideal) {
    const auto all = max_regular_ideals(ideal.ring());
    return std::find(all.begin(), all.end(), ideal) != all.end();
}

// { a : h(a) in I }
inline Ideal preimage_ideal(const RingHom& h, const Ideal& ideal) {
    if (ideal.ring().get() != h.target().get()) throw DomainError("ideal does not belong to the hom's target");
    Bitset members(h.source()->size());
    for (Elem a = 0; a < h.source()->size(); ++a)
        if (ideal.contains(h(a))) members.set(a);
    return Ideal(h.source(), std::move(members));
}

inline Ideal image_ideal(const RingHom& h, const Ideal& ideal) {
    std::vector<Elem> gens;
    for (Elem a : ideal.elements()) gens.push_back(h(a));
    return ideal_generated(h.target(), gens);
}

inline Ideal kernel(const RingHom& h) { return preimage_ideal(h, zero_ideal(h.target())); }

// Small generating set: a single generator when the ideal is principal,
// otherwise a greedy ascending-index cover.
inline std::vector<Elem> generators(const Ideal& ideal) {
    const auto& ring = ideal.ring();
    if (ideal.is_zero()) return {FiniteRing::zero()};
    for (Elem a : ideal.elements())
        if (a != FiniteRing::zero() && ideal_generated(ring, {a}) == ideal) return {a};
    std::vector<Elem> gens;
    Ideal acc = zero_ideal(ring);
    for (Elem a : ideal.elements()) {
        if (acc.contains(a)) continue;
        gens.push_back(a);
        acc = ideal_extend(acc, a);
        if (acc == ideal) break;
    }
    return gens;
}

inline std::string ideal_name(const Ideal& ideal) {
    std::string out = "(";
    bool first = true;
    for (Elem g : generators(ideal)) {
        if (!first) out += ",";
        out += ideal.ring()->name(g);
        first = false;
    }
    return out + ")";
}

struct IdealClassification {
    bool is_proper = false;
    bool is_prime = false;
    bool is_maximal = false;
    bool is_primary = false;
    bool is_quasi_prime = false;
    bool is_regular = false;
    bool is_max_regular = false;
    Ideal radical;
};

inline IdealClassification classify(const Ideal& ideal) {
    return IdealClassification{ideal.is_proper(),        is_prime(ideal),        is_maximal(ideal),
                               is_primary(ideal),        is_quasi_prime(ideal),  is_regular_ideal(ideal),
                               is_max_regular(ideal),    radical(ideal)};
}

// A/I with least-index coset representatives and the canonical surjection.
struct Quotient {
    RingPtr ring;
    RingHom projection;
};

inline Quotient make_quotient(const RingPtr& ring, const Ideal& ideal, const Limits& limits = {}) {
    if (ideal.ring().get() != ring.get()) throw DomainError("ideal does not belong to the ring");
    if (!ideal.is_proper()) throw DomainError("quotient by the unit ideal is the zero ring");
    const auto& r = *ring;
    std::vector<Elem> coset(r.size(), no_elem);  // element -> coset number
    std::vector<Elem> reps;
    for (Elem a = 0; a < r.size(); ++a) {
        if (coset[a] != no_elem) continue;
        const Elem c = static_cast<Elem>(reps.size());
        reps.push_back(a);
        for (Elem i : ideal.elements()) coset[r.add(a, i)] = c;
    }
    const std::size_t n = reps.size();
    FiniteRing::Tables t;
    t.size = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        t.names.push_back(text::wrap_if_compound(r.name(reps[x])) + "+I");
        for (std::size_t y = 0; y < n; ++y) {
            t.add[x * n + y] = coset[r.add(reps[x], reps[y])];
            t.mul[x * n + y] = coset[r.mul(reps[x], reps[y])];
        }
    }
    t.zero = coset[r.zero()];
    t.one = coset[r.one()];

    Recipe rec;
    rec.kind = RingKind::quotient;
    std::string lits;
    for (Elem g : generators(ideal)) lits += (lits.empty() ? "" : ",") + r.name(g);
    rec.expr = "Quot(" + r.expr() + ",[" + lits + "])";
    rec.base = ring;
    rec.coords.resize(n);
    for (std::size_t x = 0; x < n; ++x) rec.coords[x] = {reps[x]};
    rec.lookup = coset;
    auto q = FiniteRing::build(std::move(t), std::move(rec), limits);

    std::vector<Elem> map(r.size());
    for (Elem a = 0; a < r.size(); ++a) map[a] = q->recipe().lookup[a];
    return Quotient{q, RingHom(ring, q, std::move(map))};
}

}  // namespace qspec

#pragma once

// Finite commutative unital rings given by explicit operation tables.
//
// Elements are dense indices 0..size-1. After canonicalization zero is index 0
// and one is index 1; the remaining elements keep the relative order of the
// constructor's natural enumeration, so every ring (and every report built on
// it) is deterministic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "text.hpp"

namespace qspec {

using Elem = std::uint32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

enum class RingKind { zmod, product, poly_quotient, quotient, localization };

// How a ring was built. `coords[i]` describes element i in terms of the base
// ring(s): a product pair, the polynomial coefficients (low degree first), the
// least coset representative, or the ambient element of a localization.
// `lookup` maps a raw key back to the element index (npos when absent).
struct Recipe {
    RingKind kind = RingKind::zmod;
    std::string expr;
    std::uint64_t modulus = 0;
    RingPtr base;
    RingPtr second;
    std::string var;
    std::vector<Elem> modulus_poly;
    std::vector<std::vector<Elem>> coords;
    std::vector<Elem> lookup;
};

inline constexpr Elem no_elem = std::numeric_limits<Elem>::max();

class FiniteRing {
public:
    // Raw operation tables in an arbitrary element order.
    struct Tables {
        std::size_t size = 0;
        std::vector<Elem> add;
        std::vector<Elem> mul;
        Elem zero = 0;
        Elem one = 0;
        std::vector<std::string> names;
    };

    // Reorders elements so zero/one come first, permutes recipe coordinates
    // along, and runs the axiom scan when size <= limits.verify_axioms_up_to.
    static RingPtr build(Tables raw, Recipe recipe, const Limits& limits = {}) {
        const std::size_t n = raw.size;
        if (n < 2) throw DomainError("zero ring is not allowed");
        if (n > limits.max_ring_size)
            throw SizingError("ring of size " + std::to_string(n) + " exceeds the cap " +
                              std::to_string(limits.max_ring_size) + " (raise --max-ring-size)");
        if (raw.add.size() != n * n || raw.mul.size() != n * n || raw.names.size() != n)
            throw DomainError("operation tables have the wrong shape");
        if (raw.zero >= n || raw.one >= n) throw DomainError("identity index out of range");
        if (raw.zero == raw.one) throw DomainError("zero ring is not allowed (0 == 1)");

        std::vector<Elem> order;  // new index -> raw index
        order.reserve(n);
        order.push_back(raw.zero);
        order.push_back(raw.one);
        for (Elem i = 0; i < n; ++i)
            if (i != raw.zero && i != raw.one) order.push_back(i);
        std::vector<Elem> to_new(n);
        for (Elem k = 0; k < n; ++k) to_new[order[k]] = k;

        auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
        ring->size_ = n;
        ring->add_.resize(n * n);
        ring->mul_.resize(n * n);
        ring->names_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            ring->names_[a] = std::move(raw.names[order[a]]);
            for (std::size_t b = 0; b < n; ++b) {
                const Elem s = raw.add[order[a] * n + order[b]];
                const Elem p = raw.mul[order[a] * n + order[b]];
                if (s >= n || p >= n) throw DomainError("operation table entry out of range");
                ring->add_[a * n + b] = to_new[s];
                ring->mul_[a * n + b] = to_new[p];
            }
        }
        if (!recipe.coords.empty()) {
            std::vector<std::vector<Elem>> coords(n);
            for (std::size_t a = 0; a < n; ++a) coords[a] = std::move(recipe.coords[order[a]]);
            recipe.coords = std::move(coords);
        }
        for (auto& e : recipe.lookup)
            if (e != no_elem) e = to_new[e];
        ring->recipe_ = std::move(recipe);

        for (std::size_t a = 0; a < n; ++a) {
            if (ring->names_[a].empty()) throw DomainError("empty element name");
            auto [it, fresh] = ring->by_name_.emplace(ring->names_[a], static_cast<Elem>(a));
            if (!fresh) throw DomainError("duplicate element name '" + ring->names_[a] + "'");
        }

        if (n <= limits.verify_axioms_up_to) {
            if (auto bad = ring->find_axiom_violation())
                throw DomainError("tables do not define a commutative unital ring: " + *bad);
            ring->verified_ = true;
        }
        ring->neg_.assign(n, no_elem);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (ring->add(a, b) == 0) {
                    ring->neg_[a] = b;
                    break;
                }
        for (Elem a = 0; a < n; ++a)
            if (ring->neg_[a] == no_elem) throw DomainError("element " + ring->names_[a] + " has no additive inverse");
        return ring;
    }

    std::size_t size() const noexcept { return size_; }
    static constexpr Elem zero() noexcept { return 0; }
    static constexpr Elem one() noexcept { return 1; }

    Elem add(Elem a, Elem b) const { return add_[std::size_t{a} * size_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[std::size_t{a} * size_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem pow(Elem a, std::uint64_t k) const {
        Elem result = one();
        Elem base = a;
        while (k) {
            if (k & 1) result = mul(result, base);
            base = mul(base, base);
            k >>= 1;
        }
        return result;
    }

    bool is_idempotent(Elem a) const { return mul(a, a) == a; }
    bool is_unit(Elem a) const {
        for (Elem b = 0; b < size_; ++b)
            if (mul(a, b) == one()) return true;
        return false;
    }
    bool is_nilpotent(Elem a) const {
        Elem p = a;
        for (std::size_t k = 0; k < size_; ++k) {
            if (p == zero()) return true;
            p = mul(p, a);
        }
        return p == zero();
    }

    const std::string& name(Elem a) const { return names_[a]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const Recipe& recipe() const noexcept { return recipe_; }
    const std::string& expr() const noexcept { return recipe_.expr; }
    bool axioms_verified() const noexcept { return verified_; }

    std::optional<Elem> find_name(std::string_view name) const {
        auto it = by_name_.find(std::string(name));
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    // Exhaustive O(size^3) scan of the commutative-ring axioms. Returns a
    // description of the first violation found.
    std::optional<std::string> find_axiom_violation() const {
        const std::size_t n = size_;
        auto nm = [&](std::size_t a) { return names_[a]; };
        if (add(0, 0) != 0 || mul(1, 1) != 1) return "identities are not idempotent";
        for (Elem a = 0; a < n; ++a) {
            if (add(a, 0) != a) return "0 is not an additive identity for " + nm(a);
            if (mul(a, 1) != a) return "1 is not a multiplicative identity for " + nm(a);
            bool has_inverse = false;
            for (Elem b = 0; b < n; ++b) {
                if (add(a, b) != add(b, a)) return "addition not commutative at " + nm(a) + "," + nm(b);
                if (mul(a, b) != mul(b, a)) return "multiplication not commutative at " + nm(a) + "," + nm(b);
                if (add(a, b) == 0) has_inverse = true;
            }
            if (!has_inverse) return "no additive inverse for " + nm(a);
        }
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                const Elem ab_sum = add(a, b);
                const Elem ab_prod = mul(a, b);
                for (Elem c = 0; c < n; ++c) {
                    if (add(ab_sum, c) != add(a, add(b, c))) return "addition not associative";
                    if (mul(ab_prod, c) != mul(a, mul(b, c))) return "multiplication not associative";
                    if (mul(a, add(b, c)) != add(ab_prod, mul(a, c))) return "distributivity fails";
                }
            }
        return std::nullopt;
    }

    // Parses an element literal in this ring's syntax (see README). Throws ParseError.
    Elem parse_element(std::string_view literal) const {
        const std::string s = text::strip_ws(literal);
        auto fail = [&](const std::string& why) -> Elem {
            throw ParseError(0, "bad element literal '" + s + "' for " + recipe_.expr + ": " + why);
        };
        const std::string_view body = text::unwrap(s);
        switch (recipe_.kind) {
        case RingKind::zmod: {
            std::uint64_t v = 0;
            if (!text::parse_uint(body, v)) return fail("expected a decimal integer");
            return recipe_.lookup[v % recipe_.modulus];
        }
        case RingKind::product: {
            if (body.size() < 2 || body.front() != '(' || body.back() != ')')
                return fail("expected '(a,b)'");
            auto parts = text::split_top(body.substr(1, body.size() - 2), ',');
            if (parts.size() != 2) return fail("expected exactly two components");
            const Elem a = recipe_.base->parse_element(parts[0]);
            const Elem b = recipe_.second->parse_element(parts[1]);
            return recipe_.lookup[std::size_t{a} * recipe_.second->size() + b];
        }
        case RingKind::poly_quotient: {
            const auto& base = *recipe_.base;
            const std::size_t d = recipe_.modulus_poly.size() - 1;
            std::vector<Elem> coeffs(d, base.zero());
            for (const auto& term : text::parse_poly_terms(s, recipe_.var)) {
                if (term.exponent >= d) return fail("degree must be below " + std::to_string(d));
                const Elem c = term.coeff.empty() ? base.one() : base.parse_element(text::unwrap(term.coeff));
                coeffs[term.exponent] = base.add(coeffs[term.exponent], c);
            }
            std::size_t key = 0;
            for (std::size_t k = d; k-- > 0;) key = key * base.size() + coeffs[k];
            return recipe_.lookup[key];
        }
        case RingKind::quotient: {
            auto parts = text::split_top(body, '+');
            if (parts.size() < 2 || parts.back() != "I") return fail("expected 'a+I'");
            const auto rep = body.substr(0, body.size() - 2);
            return recipe_.lookup[recipe_.base->parse_element(text::unwrap(rep))];
        }
        case RingKind::localization: {
            const Elem a = recipe_.base->parse_element(s);
            const Elem idx = recipe_.lookup[a];
            if (idx == no_elem) return fail("not an element of the localized ring");
            return idx;
        }
        }
        return fail("unknown ring kind");
    }

private:
    FiniteRing() = default;

    std::size_t size_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Elem> by_name_;
    Recipe recipe_;
    bool verified_ = false;
};

namespace detail {

inline std::size_t checked_size_product(std::size_t a, std::size_t b, const Limits& limits) {
    if (a != 0 && b > limits.max_ring_size / a)
        throw SizingError("ring would exceed the size cap " + std::to_string(limits.max_ring_size) +
                          " (raise --max-ring-size)");
    const std::size_t n = a * b;
    if (n > limits.max_ring_size)
        throw SizingError("ring of size " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(limits.max_ring_size) + " (raise --max-ring-size)");
    return n;
}

// Canonical polynomial text: leading monomial first, coefficients wrapped when compound.
inline std::string poly_text(const FiniteRing& base, const std::string& var, const std::vector<Elem>& coeffs,
                             bool wrap_constants) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Elem c = coeffs[k];
        if (c == base.zero()) continue;
        if (!out.empty()) out += "+";
        const std::string var_part = k == 1 ? var : var + "^" + std::to_string(k);
        if (k == 0) out += wrap_constants ? text::wrap_if_compound(base.name(c)) : base.name(c);
        else if (c == base.one()) out += var_part;
        else out += text::wrap_if_compound(base.name(c)) + "*" + var_part;
    }
    return out.empty() ? base.name(base.zero()) : out;
}

}  // namespace detail

inline RingPtr make_zmod(std::uint64_t n, const Limits& limits = {}) {
    if (n < 2) throw DomainError(n == 1 ? "Zmod(1) is the zero ring" : "Zmod(0) is not a finite ring");
    if (n > limits.max_ring_size)
        throw SizingError("Zmod(" + std::to_string(n) + ") exceeds the size cap " +
                          std::to_string(limits.max_ring_size) + " (raise --max-ring-size)");
    FiniteRing::Tables t;
    t.size = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b) {
            t.add[a * n + b] = static_cast<Elem>((a + b) % n);
            t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    t.zero = 0;
    t.one = 1;
    for (std::uint64_t a = 0; a < n; ++a) t.names.push_back(std::to_string(a));
    Recipe r;
    r.kind = RingKind::zmod;
    r.expr = "Zmod(" + std::to_string(n) + ")";
    r.modulus = n;
    r.lookup.resize(n);
    for (Elem a = 0; a < n; ++a) r.lookup[a] = a;
    return FiniteRing::build(std::move(t), std::move(r), limits);
}

inline RingPtr make_product(const RingPtr& left, const RingPtr& right, const Limits& limits = {}) {
    const std::size_t m = right->size();
    const std::size_t n = detail::checked_size_product(left->size(), m, limits);
    FiniteRing::Tables t;
    t.size = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    Recipe r;
    r.kind = RingKind::product;
    r.expr = "Prod(" + left->expr() + "," + right->expr() + ")";
    r.base = left;
    r.second = right;
    r.coords.resize(n);
    r.lookup.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        const Elem a = static_cast<Elem>(x / m), b = static_cast<Elem>(x % m);
        r.coords[x] = {a, b};
        r.lookup[x] = static_cast<Elem>(x);
        t.names.push_back("(" + left->name(a) + "," + right->name(b) + ")");
        for (std::size_t y = 0; y < n; ++y) {
            const Elem c = static_cast<Elem>(y / m), d = static_cast<Elem>(y % m);
            t.add[x * n + y] = static_cast<Elem>(std::size_t{left->add(a, c)} * m + right->add(b, d));
            t.mul[x * n + y] = static_cast<Elem>(std::size_t{left->mul(a, c)} * m + right->mul(b, d));
        }
    }
    t.zero = 0;
    t.one = static_cast<Elem>(std::size_t{FiniteRing::one()} * m + FiniteRing::one());
    return FiniteRing::build(std::move(t), std::move(r), limits);
}

// base[var]/(f) for a monic f given low-degree-first. Elements are the
// coefficient tuples of degree < deg f.
inline RingPtr make_poly_quotient(const RingPtr& base, const std::string& var, std::vector<Elem> modulus,
                                  const Limits& limits = {}) {
    if (!text::is_identifier(var) || var == "I") throw DomainError("invalid variable name '" + var + "'");
    while (modulus.size() > 1 && modulus.back() == base->zero()) modulus.pop_back();
    if (modulus.size() < 2) throw DomainError("modulus polynomial must have degree >= 1");
    if (modulus.back() != base->one()) throw DomainError("modulus polynomial must be monic");
    for (auto c : modulus)
        if (c >= base->size()) throw DomainError("modulus coefficient out of range");
    const std::size_t d = modulus.size() - 1;
    const std::size_t q = base->size();
    std::size_t n = 1;
    for (std::size_t k = 0; k < d; ++k) n = detail::checked_size_product(n, q, limits);

    auto decode = [&](std::size_t x) {
        std::vector<Elem> c(d);
        for (std::size_t k = 0; k < d; ++k) {
            c[k] = static_cast<Elem>(x % q);
            x /= q;
        }
        return c;
    };
    auto encode = [&](const std::vector<Elem>& c) {
        std::size_t x = 0;
        for (std::size_t k = d; k-- > 0;) x = x * q + c[k];
        return static_cast<Elem>(x);
    };

    std::vector<std::vector<Elem>> coords(n);
    for (std::size_t x = 0; x < n; ++x) coords[x] = decode(x);

    FiniteRing::Tables t;
    t.size = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    std::vector<Elem> sum(d), prod(2 * d - 1);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto& a = coords[x];
            const auto& b = coords[y];
            for (std::size_t k = 0; k < d; ++k) sum[k] = base->add(a[k], b[k]);
            t.add[x * n + y] = encode(sum);
            std::fill(prod.begin(), prod.end(), base->zero());
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) prod[i + j] = base->add(prod[i + j], base->mul(a[i], b[j]));
            // x^k = -(f_0 + ... + f_{d-1} x^{d-1}) x^{k-d} for k >= d
            for (std::size_t k = prod.size(); k-- > d;) {
                const Elem c = prod[k];
                if (c == base->zero()) continue;
                for (std::size_t i = 0; i < d; ++i)
                    prod[k - d + i] = base->sub(prod[k - d + i], base->mul(c, modulus[i]));
                prod[k] = base->zero();
            }
            t.mul[x * n + y] = encode(std::vector<Elem>(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d)));
        }
    std::vector<Elem> unit(d, base->zero());
    unit[0] = base->one();
    t.zero = 0;
    t.one = encode(unit);
    for (std::size_t x = 0; x < n; ++x) t.names.push_back(detail::poly_text(*base, var, coords[x], true));

    Recipe r;
    r.kind = RingKind::poly_quotient;
    r.expr = "PolyQuot(" + base->expr() + "," + var + "," + detail::poly_text(*base, var, modulus, true) + ")";
    r.base = base;
    r.var = var;
    r.modulus_poly = std::move(modulus);
    r.coords = std::move(coords);
    r.lookup.resize(n);
    for (Elem x = 0; x < n; ++x) r.lookup[x] = x;
    return FiniteRing::build(std::move(t), std::move(r), limits);
}

// A unital ring homomorphism given by its element map. Construction validates
// the homomorphism laws exhaustively.
class RingHom {
public:
    RingHom(RingPtr source, RingPtr target, std::vector<Elem> map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
        if (auto bad = find_violation()) throw DomainError("not a ring homomorphism: " + *bad);
    }

    static RingHom identity(const RingPtr& ring) {
        std::vector<Elem> m(ring->size());
        for (Elem a = 0; a < m.size(); ++a) m[a] = a;
        return RingHom(ring, ring, std::move(m));
    }

    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }
    const std::vector<Elem>& map() const noexcept { return map_; }
    Elem operator()(Elem a) const { return map_[a]; }

    std::optional<std::string> find_violation() const {
        const auto& s = *source_;
        const auto& t = *target_;
        if (map_.size() != s.size()) return std::string("map has the wrong length");
        for (auto v : map_)
            if (v >= t.size()) return std::string("image index out of range");
        if (map_[s.zero()] != t.zero()) return std::string("0 is not preserved");
        if (map_[s.one()] != t.one()) return std::string("1 is not preserved");
        for (Elem a = 0; a < s.size(); ++a)
            for (Elem b = 0; b < s.size(); ++b) {
                if (map_[s.add(a, b)] != t.add(map_[a], map_[b]))
                    return "addition not preserved at " + s.name(a) + "," + s.name(b);
                if (map_[s.mul(a, b)] != t.mul(map_[a], map_[b]))
                    return "multiplication not preserved at " + s.name(a) + "," + s.name(b);
            }
        return std::nullopt;
    }

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<Elem> map_;
};

inline std::vector<Elem> idempotents(const FiniteRing& ring) {
    std::vector<Elem> out;
    for (Elem a = 0; a < ring.size(); ++a)
        if (ring.is_idempotent(a)) out.push_back(a);
    return out;
}

// The idempotent in the cycle of powers of f (powers of any element of a
// finite ring are eventually periodic, and the cycle is a group).
inline Elem eventual_idempotent(const FiniteRing& ring, Elem f) {
    Elem p = f;
    for (std::size_t k = 1; k <= 2 * ring.size(); ++k) {
        if (ring.is_idempotent(p)) return p;
        p = ring.mul(p, f);
    }
    throw ConsistencyError("powers of " + ring.name(f) + " never reach an idempotent");
}

struct Localization {
    RingPtr ring;
    RingHom map;
    Elem idempotent;
};

// The localization A_f realized as eA with identity e, the idempotent power of
// f. Returns nullopt when e = 0 (f nilpotent): the localization is the zero ring.
inline std::optional<Localization> localize_at(const RingPtr& ring, Elem f, const Limits& limits = {}) {
    const auto& r = *ring;
    if (f >= r.size()) throw DomainError("element index out of range");
    const Elem e = eventual_idempotent(r, f);
    if (e == r.zero()) return std::nullopt;

    std::vector<Elem> members;  // ambient indices of eA, ascending
    for (Elem a = 0; a < r.size(); ++a)
        if (r.mul(e, a) == a) members.push_back(a);
    std::vector<Elem> local(r.size(), no_elem);
    for (Elem k = 0; k < members.size(); ++k) local[members[k]] = k;

    const std::size_t n = members.size();
    FiniteRing::Tables t;
    t.size = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        t.names.push_back(r.name(members[x]));
        for (std::size_t y = 0; y < n; ++y) {
            t.add[x * n + y] = local[r.add(members[x], members[y])];
            t.mul[x * n + y] = local[r.mul(members[x], members[y])];
        }
    }
    t.zero = local[r.zero()];
    t.one = local[e];

    Recipe rec;
    rec.kind = RingKind::localization;
    rec.expr = "Loc(" + r.expr() + "," + r.name(f) + ")";
    rec.base = ring;
    rec.coords.resize(n);
    for (std::size_t x = 0; x < n; ++x) rec.coords[x] = {members[x]};
    rec.lookup = local;
    auto loc = FiniteRing::build(std::move(t), std::move(rec), limits);

    std::vector<Elem> map(r.size());
    for (Elem a = 0; a < r.size(); ++a) map[a] = loc->recipe().lookup[r.mul(e, a)];
    return Localization{loc, RingHom(ring, loc, std::move(map)), e};
}

}  // namespace qspec

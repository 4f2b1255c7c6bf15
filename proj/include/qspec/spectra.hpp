#pragma once

// Quasi-prime, prime, maximal and primary spectra of a finite ring with the
// topology generated by the basic opens U_f = { q : f not in rad(q) }.
//
// Closure of a point q is { p : q subset of rad(p) }, so the minimal open of q
// is the down-set { p : p subset of rad(q) }. Spectrum stores that preorder and
// exposes it as a FinTopSpace.

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"
#include "finring.hpp"
#include "ideals.hpp"
#include "topspace.hpp"

namespace qspec {

enum class SpectrumKind { quasi, prime, maximal, primary };

inline const char* to_string(SpectrumKind k) {
    switch (k) {
    case SpectrumKind::quasi: return "quasi";
    case SpectrumKind::prime: return "prime";
    case SpectrumKind::maximal: return "max";
    case SpectrumKind::primary: return "primary";
    }
    return "?";
}

class Spectrum {
public:
    Spectrum(RingPtr ring, SpectrumKind kind, std::vector<Ideal> points)
        : ring_(std::move(ring)), kind_(kind), points_(std::move(points)) {
        std::sort(points_.begin(), points_.end());
        const std::size_t n = points_.size();
        for (const auto& p : points_) {
            if (p.ring().get() != ring_.get()) throw DomainError("spectrum point from another ring");
            radicals_.push_back(radical(p));
        }
        closures_.assign(n, Bitset(n));
        min_opens_.assign(n, Bitset(n));
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t p = 0; p < n; ++p)
                if (points_[q].is_subset_of(radicals_[p])) {
                    closures_[q].set(p);
                    min_opens_[p].set(q);
                }
    }

    const RingPtr& ring() const noexcept { return ring_; }
    SpectrumKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Ideal& point(std::size_t i) const { return points_[i]; }
    const std::vector<Ideal>& points() const noexcept { return points_; }
    const Ideal& radical_of(std::size_t i) const { return radicals_[i]; }

    // p lies in the closure of {q}
    bool specializes(std::size_t q, std::size_t p) const { return closures_[q].test(p); }
    const Bitset& closure_of_point(std::size_t q) const { return closures_[q]; }
    const Bitset& min_open(std::size_t q) const { return min_opens_[q]; }

    std::optional<std::size_t> index_of(const Ideal& ideal) const {
        auto it = std::lower_bound(points_.begin(), points_.end(), ideal);
        if (it == points_.end() || *it != ideal) return std::nullopt;
        return static_cast<std::size_t>(it - points_.begin());
    }

    // Points that are their own radical (the primes, for kind = quasi).
    Bitset radical_points() const {
        Bitset out(size());
        for (std::size_t i = 0; i < size(); ++i)
            if (points_[i] == radicals_[i]) out.set(i);
        return out;
    }

    Bitset all() const { return Bitset::full(size()); }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (const auto& p : points_) out.push_back(ideal_name(p));
        return out;
    }

    FinTopSpace space() const { return FinTopSpace(min_opens_, labels()); }

private:
    RingPtr ring_;
    SpectrumKind kind_;
    std::vector<Ideal> points_;
    std::vector<Ideal> radicals_;
    std::vector<Bitset> closures_;
    std::vector<Bitset> min_opens_;
};

using SpectrumPtr = std::shared_ptr<const Spectrum>;

inline bool passes_classifier(SpectrumKind kind, const Ideal& i, std::span<const Ideal> lattice) {
    switch (kind) {
    case SpectrumKind::quasi: return is_quasi_prime(i);
    case SpectrumKind::prime: return is_prime(i);
    case SpectrumKind::maximal: return is_maximal(i, lattice);
    case SpectrumKind::primary: return is_primary(i);
    }
    return false;
}

inline Spectrum make_spectrum(const RingPtr& ring, SpectrumKind kind, std::span<const Ideal> lattice) {
    std::vector<Ideal> pts;
    for (const auto& i : lattice)
        if (passes_classifier(kind, i, lattice)) pts.push_back(i);
    return Spectrum(ring, kind, std::move(pts));
}

inline Spectrum quasi_spectrum(const RingPtr& ring, const Limits& limits = {}) {
    return make_spectrum(ring, SpectrumKind::quasi, enumerate_ideals(ring, limits));
}
inline Spectrum prime_spectrum(const RingPtr& ring, const Limits& limits = {}) {
    return make_spectrum(ring, SpectrumKind::prime, enumerate_ideals(ring, limits));
}
inline Spectrum max_spectrum(const RingPtr& ring, const Limits& limits = {}) {
    return make_spectrum(ring, SpectrumKind::maximal, enumerate_ideals(ring, limits));
}
inline Spectrum primary_spectrum(const RingPtr& ring, const Limits& limits = {}) {
    return make_spectrum(ring, SpectrumKind::primary, enumerate_ideals(ring, limits));
}

inline void require_ring(const Spectrum& s, const FiniteRing& r) {
    if (s.ring().get() != &r) throw DomainError("element or ideal belongs to a different ring");
}

// U_f, tested as f not in rad(q): some power of f lies in q iff f lies in rad(q).
inline Bitset basis_open(const Spectrum& s, Elem f) {
    if (f >= s.ring()->size()) throw DomainError("element index out of range");
    Bitset out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s.radical_of(i).contains(f)) out.set(i);
    return out;
}

// V(I) = { q : I subset of rad(q) }
inline Bitset closed_set(const Spectrum& s, const Ideal& ideal) {
    require_ring(s, *ideal.ring());
    Bitset out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (ideal.is_subset_of(s.radical_of(i))) out.set(i);
    return out;
}

inline Bitset closure_of_point(const Spectrum& s, std::size_t q) { return s.closure_of_point(q); }

// Finite subcover of U_f by the U_g: scan gs in input order accumulating
// generators until f lies in the radical of the ideal they generate, then drop
// (again in input order) every generator not needed for that certificate.
inline std::vector<Elem> cover_refine(const Spectrum& s, Elem f, std::span<const Elem> gs) {
    const auto& ring = s.ring();
    Bitset covered(s.size());
    for (Elem g : gs) covered |= basis_open(s, g);
    if (!basis_open(s, f).is_subset_of(covered)) throw DomainError("not a cover: U_f is not inside the union of the U_g");

    auto certifies = [&](const std::vector<Elem>& sub) { return radical(ideal_generated(ring, sub)).contains(f); };
    std::vector<Elem> chosen;
    if (!certifies(chosen)) {
        for (Elem g : gs) {
            chosen.push_back(g);
            if (certifies(chosen)) break;
        }
    }
    if (!certifies(chosen)) throw ConsistencyError("cover does not certify f in the radical of (g_i)");
    for (std::size_t k = 0; k < chosen.size();) {
        auto without = chosen;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(k));
        if (certifies(without)) chosen = std::move(without);
        else ++k;
    }
    return chosen;
}

class SpectrumMap {
public:
    SpectrumMap(SpectrumPtr source, SpectrumPtr target, std::vector<std::size_t> point_map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(point_map)) {
        if (map_.size() != source_->size()) throw DomainError("point map has the wrong length");
        for (auto p : map_)
            if (p >= target_->size()) throw DomainError("point map leaves the target spectrum");
    }

    const SpectrumPtr& source() const noexcept { return source_; }
    const SpectrumPtr& target() const noexcept { return target_; }
    const std::vector<std::size_t>& point_map() const noexcept { return map_; }
    std::size_t operator()(std::size_t q) const { return map_[q]; }

    Bitset image(const Bitset& s) const {
        Bitset out(target_->size());
        s.for_each([&](std::size_t q) { out.set(map_[q]); });
        return out;
    }
    Bitset preimage(const Bitset& s) const {
        Bitset out(source_->size());
        for (std::size_t q = 0; q < map_.size(); ++q)
            if (s.test(map_[q])) out.set(q);
        return out;
    }
    bool is_injective() const {
        auto sorted = map_;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    ContinuousMap as_continuous_map() const {
        return ContinuousMap(std::make_shared<const FinTopSpace>(source_->space()),
                             std::make_shared<const FinTopSpace>(target_->space()), map_);
    }
    bool is_continuous() const { return as_continuous_map().is_continuous(); }
    bool is_open_map() const { return as_continuous_map().is_open_map(); }

private:
    SpectrumPtr source_;
    SpectrumPtr target_;
    std::vector<std::size_t> map_;
};

// q -> rad(q), from Sp A onto Spec A.
inline SpectrumMap retraction_gamma(const SpectrumPtr& sp, const SpectrumPtr& spec) {
    if (sp->ring().get() != spec->ring().get()) throw DomainError("spectra of different rings");
    std::vector<std::size_t> m(sp->size());
    for (std::size_t q = 0; q < sp->size(); ++q) {
        auto idx = spec->index_of(sp->radical_of(q));
        if (!idx) throw ConsistencyError("radical of " + ideal_name(sp->point(q)) + " is not a prime point");
        m[q] = *idx;
    }
    return SpectrumMap(sp, spec, std::move(m));
}

inline SpectrumMap retraction_gamma(const RingPtr& ring, const Limits& limits = {}) {
    const auto lattice = enumerate_ideals(ring, limits);
    return retraction_gamma(std::make_shared<const Spectrum>(make_spectrum(ring, SpectrumKind::quasi, lattice)),
                            std::make_shared<const Spectrum>(make_spectrum(ring, SpectrumKind::prime, lattice)));
}

struct RetractionCheck {
    bool continuous = true;          // gamma^-1(D(f)) == U_f for every f
    bool open = true;
    bool fixes_primes = true;
    bool closed_preimages = true;    // gamma^-1(V(I)) == V_sp(I) for every ideal I
    std::vector<std::string> violations;
    bool ok() const { return continuous && open && fixes_primes && closed_preimages; }
};

inline RetractionCheck check_retraction(const SpectrumMap& gamma, std::span<const Ideal> lattice) {
    RetractionCheck out;
    const auto& sp = *gamma.source();
    const auto& spec = *gamma.target();
    const auto& ring = *sp.ring();
    for (Elem f = 0; f < ring.size(); ++f)
        if (gamma.preimage(basis_open(spec, f)) != basis_open(sp, f)) {
            out.continuous = false;
            out.violations.push_back("preimage of D(" + ring.name(f) + ") differs from U_" + ring.name(f));
        }
    if (!gamma.is_continuous()) {
        out.continuous = false;
        out.violations.push_back("not continuous for the minimal-open topology");
    }
    if (!gamma.is_open_map()) {
        out.open = false;
        out.violations.push_back("not an open map");
    }
    for (std::size_t p = 0; p < spec.size(); ++p) {
        auto idx = sp.index_of(spec.point(p));
        if (!idx || gamma(*idx) != p) {
            out.fixes_primes = false;
            out.violations.push_back("prime " + ideal_name(spec.point(p)) + " is not fixed");
        }
    }
    for (const auto& i : lattice)
        if (gamma.preimage(closed_set(spec, i)) != closed_set(sp, i)) {
            out.closed_preimages = false;
            out.violations.push_back("preimage of V" + ideal_name(i) + " differs");
        }
    return out;
}

// phi* : Sp(target) -> Sp(source), q -> phi^-1(q).
inline SpectrumMap induced_map(const RingHom& h, const SpectrumPtr& target_spectrum,
                               const SpectrumPtr& source_spectrum) {
    if (target_spectrum->ring().get() != h.target().get() || source_spectrum->ring().get() != h.source().get())
        throw DomainError("spectra do not match the homomorphism");
    std::vector<std::size_t> m(target_spectrum->size());
    for (std::size_t q = 0; q < target_spectrum->size(); ++q) {
        const Ideal pre = preimage_ideal(h, target_spectrum->point(q));
        auto idx = source_spectrum->index_of(pre);
        if (!idx) throw ConsistencyError("preimage " + ideal_name(pre) + " is not a point of the source spectrum");
        m[q] = *idx;
    }
    return SpectrumMap(target_spectrum, source_spectrum, std::move(m));
}

// (phi*)^-1(U_f) == U_phi(f) for every f in the source ring.
inline bool induced_map_preserves_basis(const RingHom& h, const SpectrumMap& m) {
    for (Elem f = 0; f < h.source()->size(); ++f)
        if (m.preimage(basis_open(*m.target(), f)) != basis_open(*m.source(), h(f))) return false;
    return true;
}

struct ClopenPairing {
    Bitset set;
    Elem idempotent;
};

// Clopens of the spectrum, each paired with the idempotent e with U_e equal to
// it. The clopens are enumerated topologically (unions of connected
// components) and the pairing e -> U_e must be a bijection onto them.
inline std::vector<ClopenPairing> clopen_sets(const Spectrum& s, std::size_t max_sets = std::size_t{1} << 20) {
    const FinTopSpace X = s.space();
    const auto comps = connected_components(X);
    if (comps.size() >= 63 || (std::size_t{1} << comps.size()) > max_sets)
        throw SizingError("too many clopen sets to enumerate");
    std::vector<Bitset> clopens;
    for (std::size_t mask = 0; mask < (std::size_t{1} << comps.size()); ++mask) {
        Bitset c(s.size());
        for (std::size_t k = 0; k < comps.size(); ++k)
            if (mask >> k & 1) c |= comps[k];
        clopens.push_back(std::move(c));
    }
    std::sort(clopens.begin(), clopens.end());

    const auto idem = idempotents(*s.ring());
    std::vector<ClopenPairing> out;
    std::vector<bool> hit(clopens.size(), false);
    for (Elem e : idem) {
        Bitset u = basis_open(s, e);
        auto it = std::lower_bound(clopens.begin(), clopens.end(), u);
        if (it == clopens.end() || *it != u)
            throw ConsistencyError("U_" + s.ring()->name(e) + " is not clopen");
        const auto k = static_cast<std::size_t>(it - clopens.begin());
        if (hit[k]) throw ConsistencyError("two idempotents give the same clopen U_" + s.ring()->name(e));
        hit[k] = true;
        out.push_back({std::move(u), e});
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw ConsistencyError("some clopen set is not of the form U_e");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.set < b.set; });
    return out;
}

// Topological components, checked against { V(M) : M max-regular }.
inline std::vector<Bitset> connected_components(const Spectrum& s) {
    auto comps = connected_components(s.space());
    std::vector<Bitset> expected;
    for (const auto& m : max_regular_ideals(s.ring())) expected.push_back(closed_set(s, m));
    std::sort(expected.begin(), expected.end());
    if (s.kind() == SpectrumKind::quasi && comps != expected)
        throw ConsistencyError("connected components differ from the V(M) for max-regular M");
    return comps;
}

// Local chain rings: powers m, m^2, ..., m^n = (0) of the maximal ideal
// exhaust the ideals. The cyclic table sends (i, j) to ((i + j - 1) mod n) + 1.
struct ChainRingReport {
    bool applicable = false;
    std::string reason;
    std::vector<Ideal> powers;                 // m^1 .. m^n
    bool spectrum_matches = false;             // Sp R == { m^1, ..., m^n }
    std::vector<std::vector<unsigned>> cyclic_table;  // exponents, 1-based
    bool products_saturate = false;            // m^i m^j == m^min(i+j, n)
};

inline ChainRingReport chain_ring_monoid(const RingPtr& ring, const Limits& limits = {}) {
    ChainRingReport out;
    const auto lattice = enumerate_ideals(ring, limits);
    std::vector<Ideal> maximal;
    for (const auto& i : lattice)
        if (is_maximal(i, lattice)) maximal.push_back(i);
    if (maximal.size() != 1) {
        out.reason = "ring is not local (" + std::to_string(maximal.size()) + " maximal ideals)";
        return out;
    }
    const Ideal& m = maximal.front();
    Ideal power = m;
    out.powers.push_back(power);
    while (!power.is_zero()) {
        Ideal next = ideal_product(power, m);
        if (next == power) break;
        power = std::move(next);
        out.powers.push_back(power);
    }
    if (!out.powers.back().is_zero()) {
        out.reason = "maximal ideal is not nilpotent";
        out.powers.clear();
        return out;
    }
    for (const auto& i : lattice) {
        if (!i.is_proper()) continue;
        if (std::find(out.powers.begin(), out.powers.end(), i) == out.powers.end()) {
            out.reason = "ideal " + ideal_name(i) + " is not a power of the maximal ideal";
            out.powers.clear();
            return out;
        }
    }
    out.applicable = true;
    const auto n = static_cast<unsigned>(out.powers.size());
    const Spectrum sp = make_spectrum(ring, SpectrumKind::quasi, lattice);
    auto sorted = out.powers;
    std::sort(sorted.begin(), sorted.end());
    out.spectrum_matches = sp.points() == sorted;
    out.products_saturate = true;
    out.cyclic_table.assign(n, std::vector<unsigned>(n));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            out.cyclic_table[i - 1][j - 1] = (i + j - 1) % n + 1;
            if (ideal_product(out.powers[i - 1], out.powers[j - 1]) != out.powers[std::min(i + j, n) - 1])
                out.products_saturate = false;
        }
    return out;
}

}  // namespace qspec

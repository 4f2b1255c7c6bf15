#pragma once

// Finite topological spaces stored by minimal open neighbourhoods, i.e. as a
// preorder: y is in min_open(x) iff x lies in the closure of {y}.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace qspec {

class FinTopSpace {
public:
    FinTopSpace() = default;

    explicit FinTopSpace(std::vector<Bitset> min_open, std::vector<std::string> labels = {})
        : min_open_(std::move(min_open)), labels_(std::move(labels)) {
        const std::size_t n = min_open_.size();
        if (labels_.empty())
            for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
        if (labels_.size() != n) throw DomainError("label count does not match point count");
        for (std::size_t x = 0; x < n; ++x) {
            if (min_open_[x].universe() != n) throw DomainError("minimal open has the wrong universe");
            if (!min_open_[x].test(x)) throw DomainError("point " + labels_[x] + " is not in its minimal open");
        }
        for (std::size_t x = 0; x < n; ++x)
            min_open_[x].for_each([&](std::size_t y) {
                if (!min_open_[y].is_subset_of(min_open_[x]))
                    throw DomainError("minimal opens are not transitive at " + labels_[x] + "," + labels_[y]);
            });
        closures_.assign(n, Bitset(n));
        for (std::size_t y = 0; y < n; ++y) min_open_[y].for_each([&](std::size_t x) { closures_[x].set(y); });
    }

    std::size_t size() const noexcept { return min_open_.size(); }
    const std::string& label(std::size_t x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Bitset& min_open(std::size_t x) const { return min_open_[x]; }
    const std::vector<Bitset>& min_opens() const noexcept { return min_open_; }
    const Bitset& closure_of_point(std::size_t x) const { return closures_[x]; }

    Bitset empty_set() const { return Bitset(size()); }
    Bitset whole() const { return Bitset::full(size()); }

    bool is_open(const Bitset& s) const {
        bool ok = true;
        s.for_each([&](std::size_t x) { ok = ok && min_open_[x].is_subset_of(s); });
        return ok;
    }
    bool is_closed(const Bitset& s) const {
        bool ok = true;
        s.for_each([&](std::size_t x) { ok = ok && closures_[x].is_subset_of(s); });
        return ok;
    }

private:
    std::vector<Bitset> min_open_;
    std::vector<std::string> labels_;
    std::vector<Bitset> closures_;
};

using SpacePtr = std::shared_ptr<const FinTopSpace>;

// min_open(x) is the intersection of the basis sets containing x, which is the
// least open of the topology the family generates even when it is not closed
// under intersection.
inline FinTopSpace from_basis(std::size_t n, const std::vector<Bitset>& basis, std::vector<std::string> labels = {}) {
    std::vector<Bitset> min_open(n, Bitset::full(n));
    std::vector<bool> covered(n, false);
    for (const auto& b : basis) {
        if (b.universe() != n) throw DomainError("basis set has the wrong universe");
        b.for_each([&](std::size_t x) {
            min_open[x] &= b;
            covered[x] = true;
        });
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!covered[x]) throw DomainError("basis does not cover point " + std::to_string(x));
    return FinTopSpace(std::move(min_open), std::move(labels));
}

inline Bitset closure(const FinTopSpace& X, const Bitset& s) {
    Bitset out(X.size());
    for (std::size_t x = 0; x < X.size(); ++x)
        if (X.min_open(x).intersects(s)) out.set(x);
    return out;
}

inline Bitset interior(const FinTopSpace& X, const Bitset& s) {
    Bitset out(X.size());
    for (std::size_t x = 0; x < X.size(); ++x)
        if (X.min_open(x).is_subset_of(s)) out.set(x);
    return out;
}

inline bool is_clopen(const FinTopSpace& X, const Bitset& s) { return X.is_open(s) && X.is_closed(s); }

// Smallest open set containing s.
inline Bitset open_hull(const FinTopSpace& X, const Bitset& s) {
    Bitset out(X.size());
    s.for_each([&](std::size_t x) { out |= X.min_open(x); });
    return out;
}

// All open sets (unions of minimal opens), ascending. Throws SizingError past `cap`.
inline std::vector<Bitset> open_sets(const FinTopSpace& X, std::size_t cap) {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> out;
    std::vector<std::size_t> stack;
    auto discover = [&](Bitset b) {
        if (seen.insert(b).second) {
            if (out.size() >= cap)
                throw SizingError("space has more than " + std::to_string(cap) +
                                  " open sets (raise --max-closed-sets or use point closures only)");
            out.push_back(std::move(b));
            stack.push_back(out.size() - 1);
        }
    };
    discover(X.empty_set());
    while (!stack.empty()) {
        const Bitset current = out[stack.back()];
        stack.pop_back();
        for (std::size_t x = 0; x < X.size(); ++x)
            if (!current.test(x)) discover(current | X.min_open(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Bitset> closed_sets(const FinTopSpace& X, std::size_t cap) {
    auto opens = open_sets(X, cap);
    std::vector<Bitset> out;
    out.reserve(opens.size());
    for (const auto& o : opens) out.push_back(o.complement());
    std::sort(out.begin(), out.end());
    return out;
}

// Components of the comparability graph of the specialization preorder.
inline std::vector<Bitset> connected_components(const FinTopSpace& X) {
    const std::size_t n = X.size();
    std::vector<bool> visited(n, false);
    std::vector<Bitset> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        Bitset component(n);
        std::vector<std::size_t> stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            component.set(x);
            const Bitset neighbours = X.min_open(x) | X.closure_of_point(x);
            neighbours.for_each([&](std::size_t y) {
                if (!visited[y]) {
                    visited[y] = true;
                    stack.push_back(y);
                }
            });
        }
        out.push_back(std::move(component));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_connected(const FinTopSpace& X) { return connected_components(X).size() <= 1; }

// Z is irreducible iff no two points of Z have minimal opens that miss each
// other inside Z: Z \ min_open(x) is the largest closed subset of Z avoiding x.
inline bool is_irreducible_closed(const FinTopSpace& X, const Bitset& z) {
    if (z.none() || !X.is_closed(z)) return false;
    const auto pts = z.to_vector();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!(X.min_open(pts[i]) & X.min_open(pts[j])).intersects(z)) return false;
    return true;
}

struct IrreducibleOptions {
    std::size_t max_closed_sets = std::size_t{1} << 20;
    bool point_closures_only = false;
};

// Point closures, plus an exhaustive sweep over the remaining closed sets
// (empty in finite spaces, kept as a cross-check) unless disabled.
inline std::vector<Bitset> irreducible_closed_subsets(const FinTopSpace& X, const IrreducibleOptions& opts = {}) {
    std::vector<Bitset> out;
    for (std::size_t x = 0; x < X.size(); ++x)
        if (std::find(out.begin(), out.end(), X.closure_of_point(x)) == out.end())
            out.push_back(X.closure_of_point(x));
    if (!opts.point_closures_only) {
        const std::size_t point_closures = out.size();
        for (const auto& z : closed_sets(X, opts.max_closed_sets)) {
            if (std::find(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(point_closures), z) !=
                out.begin() + static_cast<std::ptrdiff_t>(point_closures))
                continue;
            if (is_irreducible_closed(X, z)) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Bitset generic_points(const FinTopSpace& X, const Bitset& z) {
    if (!is_irreducible_closed(X, z)) throw DomainError("set is not irreducible and closed");
    Bitset out(X.size());
    for (std::size_t x = 0; x < X.size(); ++x)
        if (X.closure_of_point(x) == z) out.set(x);
    return out;
}

// Maximal irreducible closed subsets.
inline std::vector<Bitset> irreducible_components(const FinTopSpace& X, const IrreducibleOptions& opts = {}) {
    auto all = irreducible_closed_subsets(X, opts);
    std::vector<Bitset> out;
    for (const auto& z : all) {
        bool maximal = true;
        for (const auto& w : all)
            if (w != z && z.is_subset_of(w)) maximal = false;
        if (maximal) out.push_back(z);
    }
    return out;
}

// Finite Hausdorff spaces are discrete: distinct points need disjoint minimal opens.
inline bool is_hausdorff(const FinTopSpace& X) {
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t y = x + 1; y < X.size(); ++y)
            if (X.min_open(x).intersects(X.min_open(y))) return false;
    return true;
}

inline bool is_sober(const FinTopSpace& X, const IrreducibleOptions& opts = {}) {
    for (const auto& z : irreducible_closed_subsets(X, opts))
        if (generic_points(X, z).count() != 1) return false;
    return true;
}

// Every pair of disjoint closed sets has disjoint open neighbourhoods; the
// smallest neighbourhood of a set is its open hull.
inline bool is_normal(const FinTopSpace& X, std::size_t max_closed_sets = std::size_t{1} << 20) {
    const auto closed = closed_sets(X, max_closed_sets);
    std::vector<Bitset> hulls;
    hulls.reserve(closed.size());
    for (const auto& c : closed) hulls.push_back(open_hull(X, c));
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i + 1; j < closed.size(); ++j)
            if (!closed[i].intersects(closed[j]) && hulls[i].intersects(hulls[j])) return false;
    return true;
}

inline bool has_closed_point(const FinTopSpace& X) {
    for (std::size_t x = 0; x < X.size(); ++x)
        if (X.closure_of_point(x).count() == 1) return true;
    return false;
}

inline Bitset closed_points(const FinTopSpace& X) {
    Bitset out(X.size());
    for (std::size_t x = 0; x < X.size(); ++x)
        if (X.closure_of_point(x).count() == 1) out.set(x);
    return out;
}

// Finite spaces are quasi-compact with a basis of quasi-compact opens, so
// spectrality reduces to sobriety.
inline bool is_spectral_finite(const FinTopSpace& X, const IrreducibleOptions& opts = {}) {
    return is_sober(X, opts);
}

// Subspace on the points of `s`, in ascending index order.
inline FinTopSpace subspace(const FinTopSpace& X, const Bitset& s) {
    const auto pts = s.to_vector();
    std::vector<std::size_t> local(X.size(), pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) local[pts[k]] = k;
    std::vector<Bitset> min_open;
    std::vector<std::string> labels;
    for (std::size_t x : pts) {
        Bitset m(pts.size());
        (X.min_open(x) & s).for_each([&](std::size_t y) { m.set(local[y]); });
        min_open.push_back(std::move(m));
        labels.push_back(X.label(x));
    }
    return FinTopSpace(std::move(min_open), std::move(labels));
}

class ContinuousMap {
public:
    ContinuousMap(SpacePtr source, SpacePtr target, std::vector<std::size_t> map)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
        if (map_.size() != source_->size()) throw DomainError("point map has the wrong length");
        for (auto y : map_)
            if (y >= target_->size()) throw DomainError("point map leaves the target space");
    }

    const SpacePtr& source() const noexcept { return source_; }
    const SpacePtr& target() const noexcept { return target_; }
    const std::vector<std::size_t>& map() const noexcept { return map_; }
    std::size_t operator()(std::size_t x) const { return map_[x]; }

    Bitset image(const Bitset& s) const {
        Bitset out(target_->size());
        s.for_each([&](std::size_t x) { out.set(map_[x]); });
        return out;
    }
    Bitset preimage(const Bitset& s) const {
        Bitset out(source_->size());
        for (std::size_t x = 0; x < map_.size(); ++x)
            if (s.test(map_[x])) out.set(x);
        return out;
    }

    bool is_continuous() const {
        for (std::size_t y = 0; y < target_->size(); ++y)
            if (!source_->is_open(preimage(target_->min_open(y)))) return false;
        return true;
    }
    // Images commute with unions, so minimal opens suffice.
    bool is_open_map() const {
        for (std::size_t x = 0; x < source_->size(); ++x)
            if (!target_->is_open(image(source_->min_open(x)))) return false;
        return true;
    }
    bool is_injective() const {
        Bitset hit(target_->size());
        for (auto y : map_) {
            if (hit.test(y)) return false;
            hit.set(y);
        }
        return true;
    }
    bool is_surjective() const { return image(Bitset::full(source_->size())).count() == target_->size(); }

private:
    SpacePtr source_;
    SpacePtr target_;
    std::vector<std::size_t> map_;
};

inline ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
    if (f.target().get() != g.source().get() && f.target()->min_opens() != g.source()->min_opens())
        throw DomainError("maps are not composable");
    std::vector<std::size_t> m(f.map().size());
    for (std::size_t x = 0; x < m.size(); ++x) m[x] = g(f(x));
    return ContinuousMap(f.source(), g.target(), std::move(m));
}

inline ContinuousMap identity_map(const SpacePtr& X) {
    std::vector<std::size_t> m(X->size());
    for (std::size_t x = 0; x < m.size(); ++x) m[x] = x;
    return ContinuousMap(X, X, std::move(m));
}

inline bool is_homeomorphism(const ContinuousMap& f) {
    return f.is_injective() && f.is_surjective() && f.is_continuous() && f.is_open_map();
}

inline std::string set_label(const FinTopSpace& X, const Bitset& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t x) {
        if (!first) out += ",";
        out += X.label(x);
        first = false;
    });
    return out + "}";
}

// t(X): points are the irreducible closed subsets of X, closed sets are the
// t(Y) = { Z : Z subset of Y } for Y closed in X. The closure of a point Z in
// t(X) is therefore { Z' subset of Z }, which makes min_open(Z) = { Z' superset of Z }.
struct TSpace {
    SpacePtr space;
    std::vector<Bitset> points;
    ContinuousMap eta;  // x -> closure{x}

    std::optional<std::size_t> index_of(const Bitset& z) const {
        auto it = std::lower_bound(points.begin(), points.end(), z);
        if (it == points.end() || *it != z) return std::nullopt;
        return static_cast<std::size_t>(it - points.begin());
    }
};

inline TSpace t_space(const SpacePtr& X, const IrreducibleOptions& opts = {}) {
    auto points = irreducible_closed_subsets(*X, opts);
    const std::size_t n = points.size();
    std::vector<Bitset> min_open(n, Bitset(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(set_label(*X, points[a]));
        for (std::size_t b = 0; b < n; ++b)
            if (points[a].is_subset_of(points[b])) min_open[a].set(b);
    }
    auto space = std::make_shared<const FinTopSpace>(std::move(min_open), std::move(labels));
    std::vector<std::size_t> eta(X->size());
    for (std::size_t x = 0; x < X->size(); ++x) {
        auto it = std::lower_bound(points.begin(), points.end(), X->closure_of_point(x));
        eta[x] = static_cast<std::size_t>(it - points.begin());
    }
    ContinuousMap eta_map(X, space, std::move(eta));
    if (!eta_map.is_continuous()) throw ConsistencyError("canonical map X -> t(X) is not continuous");
    return TSpace{space, std::move(points), std::move(eta_map)};
}

// t(f): Z -> closure(f(Z)).
inline ContinuousMap t_map(const ContinuousMap& f, const TSpace& source, const TSpace& target) {
    if (!f.is_continuous()) throw DomainError("t_map needs a continuous map");
    const auto& Y = *f.target();
    std::vector<std::size_t> m(source.points.size());
    for (std::size_t a = 0; a < source.points.size(); ++a) {
        auto idx = target.index_of(closure(Y, f.image(source.points[a])));
        if (!idx) throw ConsistencyError("closure of an irreducible image is not a point of t(Y)");
        m[a] = *idx;
    }
    return ContinuousMap(source.space, target.space, std::move(m));
}

}  // namespace qspec

#pragma once

// Registry of structural checks over one ring. Each check recomputes a
// statement about Sp A from independent routes and reports pass/fail with the
// witnesses it found. Check names and order are fixed.

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "finring.hpp"
#include "ideals.hpp"
#include "spectra.hpp"
#include "topspace.hpp"

namespace qspec {

using json = nlohmann::ordered_json;

enum class Status { pass, fail, inapplicable, error };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inapplicable: return "inapplicable";
    case Status::error: return "error";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    Status status = Status::pass;
    json details = json::object();
    double seconds = 0.0;
    bool cap_exceeded = false;
};

struct CheckReport {
    std::string ring_expr;
    std::size_t ring_size = 0;
    std::vector<CheckResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (r.status == Status::fail || r.status == Status::error) return false;
        return true;
    }
    bool cap_exceeded() const {
        for (const auto& r : results)
            if (r.cap_exceeded) return true;
        return false;
    }
    const CheckResult* find(std::string_view name) const {
        for (const auto& r : results)
            if (r.name == name) return &r;
        return nullptr;
    }
};

inline json ideal_json(const Ideal& i) {
    json members = json::array();
    json elements = json::array();
    for (Elem a : i.elements()) {
        members.push_back(a);
        elements.push_back(i.ring()->name(a));
    }
    return json{{"name", ideal_name(i)}, {"members", members}, {"elements", elements}};
}

inline json point_set_json(const std::vector<std::string>& labels, const Bitset& s) {
    json out = json::array();
    s.for_each([&](std::size_t i) { out.push_back(labels[i]); });
    return out;
}

// Lazily computed structures shared by the checks of one run.
class CheckContext {
public:
    CheckContext(RingPtr ring, Limits limits) : ring_(std::move(ring)), limits_(limits) {}

    const RingPtr& ring() const { return ring_; }
    const FiniteRing& r() const { return *ring_; }
    const Limits& limits() const { return limits_; }
    IrreducibleOptions irreducible_options() const { return {limits_.max_closed_sets, false}; }

    const std::vector<Ideal>& lattice() {
        if (!lattice_) lattice_ = enumerate_ideals(ring_, limits_);
        return *lattice_;
    }
    const SpectrumPtr& sp() { return spectrum(SpectrumKind::quasi, sp_); }
    const SpectrumPtr& spec() { return spectrum(SpectrumKind::prime, spec_); }
    const SpectrumPtr& max() { return spectrum(SpectrumKind::maximal, max_); }
    const SpectrumPtr& primary() { return spectrum(SpectrumKind::primary, primary_); }

    const SpacePtr& sp_space() {
        if (!sp_space_) sp_space_ = std::make_shared<const FinTopSpace>(sp()->space());
        return sp_space_;
    }
    const SpacePtr& spec_space() {
        if (!spec_space_) spec_space_ = std::make_shared<const FinTopSpace>(spec()->space());
        return spec_space_;
    }
    const std::vector<std::string>& sp_labels() {
        if (sp_labels_.empty()) sp_labels_ = sp()->labels();
        return sp_labels_;
    }

    // Prime points of Sp A as a subset of its point indices.
    Bitset prime_points() {
        Bitset out(sp()->size());
        for (const auto& p : spec()->points()) out.set(*sp()->index_of(p));
        return out;
    }
    Bitset max_points() {
        Bitset out(sp()->size());
        for (const auto& p : max()->points()) out.set(*sp()->index_of(p));
        return out;
    }

    std::vector<Quotient> quotients() {
        std::vector<Quotient> out;
        for (const auto& i : lattice())
            if (i.is_proper()) out.push_back(make_quotient(ring_, i, limits_));
        return out;
    }

    bool is_local() { return max()->size() == 1; }
    bool is_field() { return lattice().size() == 2; }

private:
    const SpectrumPtr& spectrum(SpectrumKind kind, SpectrumPtr& slot) {
        if (!slot) slot = std::make_shared<const Spectrum>(make_spectrum(ring_, kind, lattice()));
        return slot;
    }

    RingPtr ring_;
    Limits limits_;
    std::optional<std::vector<Ideal>> lattice_;
    SpectrumPtr sp_, spec_, max_, primary_;
    SpacePtr sp_space_, spec_space_;
    std::vector<std::string> sp_labels_;
};

struct CheckDef {
    std::string_view name;
    std::string_view summary;
    std::function<void(CheckContext&, CheckResult&)> run;
};

namespace checks {

inline void fail_if(CheckResult& r, bool bad) {
    if (bad) r.status = Status::fail;
}

inline void ring_axioms(CheckContext& c, CheckResult& r) {
    auto bad = c.r().find_axiom_violation();
    r.details["size"] = c.r().size();
    r.details["verified_at_construction"] = c.r().axioms_verified();
    if (bad) {
        r.details["violation"] = *bad;
        r.status = Status::fail;
    }
}

inline void quasi_prime_radical(CheckContext& c, CheckResult& r) {
    json mismatches = json::array();
    for (const auto& i : c.lattice())
        if (is_quasi_prime(i) != is_prime(radical(i))) mismatches.push_back(ideal_name(i));
    r.details["ideals"] = c.lattice().size();
    r.details["mismatches"] = mismatches;
    fail_if(r, !mismatches.empty());
}

inline void primary_chain(CheckContext& c, CheckResult& r) {
    json violations = json::array();
    for (const auto& i : c.lattice()) {
        const bool p = is_prime(i), pr = is_primary(i), q = is_quasi_prime(i);
        if ((p && !pr) || (pr && !q)) violations.push_back("implication fails at " + ideal_name(i));
        const Ideal rad = radical(i);
        if (radical(rad) != rad || !i.is_subset_of(rad)) violations.push_back("radical laws fail at " + ideal_name(i));
    }
    std::size_t powers_checked = 0;
    for (const auto& p : c.spec()->points()) {
        Ideal power = p;
        for (unsigned n = 1; n <= c.r().size(); ++n) {
            ++powers_checked;
            if (!is_quasi_prime(power)) violations.push_back(ideal_name(p) + "^" + std::to_string(n) + " is not quasi-prime");
            Ideal next = ideal_product(power, p);
            if (next == power) break;
            power = std::move(next);
        }
    }
    r.details["prime_powers_checked"] = powers_checked;
    r.details["violations"] = violations;
    fail_if(r, !violations.empty());
}

inline void primary_equals_quasi(CheckContext& c, CheckResult& r) {
    json differing = json::array();
    for (const auto& i : c.lattice())
        if (is_primary(i) != is_quasi_prime(i)) differing.push_back(ideal_name(i));
    const bool same_spectrum = c.primary()->points() == c.sp()->points();
    r.details["primary_spectrum_equals_quasi_spectrum"] = same_spectrum;
    r.details["differing_ideals"] = differing;
    r.details["note"] =
        "every prime ideal of a finite ring is maximal, so every quasi-prime ideal is primary; "
        "quasi-prime ideals that are not primary only exist in infinite rings such as k[x,y,z]/(xy-z^2) "
        "and k[x,y,z,t]/(xy-z^2), which is why those counterexamples are out of scope here";
    fail_if(r, !same_spectrum || !differing.empty());
}

inline void basis_law(CheckContext& c, CheckResult& r) {
    const auto& s = *c.sp();
    const auto& ring = c.r();
    std::vector<Bitset> u;
    for (Elem f = 0; f < ring.size(); ++f) u.push_back(basis_open(s, f));
    std::size_t violations = 0;
    json examples = json::array();
    for (Elem f = 0; f < ring.size(); ++f)
        for (Elem g = 0; g < ring.size(); ++g)
            if ((u[f] & u[g]) != u[ring.mul(f, g)]) {
                if (++violations <= 5) examples.push_back(ring.name(f) + "," + ring.name(g));
            }
    const bool unit_is_all = u[FiniteRing::one()] == s.all();
    r.details["pairs_checked"] = ring.size() * ring.size();
    r.details["violations"] = violations;
    r.details["examples"] = examples;
    r.details["U_1_is_everything"] = unit_is_all;
    fail_if(r, violations != 0 || !unit_is_all);
}

inline void density(CheckContext& c, CheckResult& r) {
    const auto& s = *c.sp();
    const Bitset primes = c.prime_points();
    json bad = json::array();
    for (Elem f = 0; f < c.r().size(); ++f) {
        const Bitset u = basis_open(s, f);
        if (u.any() && !u.intersects(primes)) bad.push_back(c.r().name(f));
        // D(f) = U_f restricted to Spec
        Bitset d(s.size());
        basis_open(*c.spec(), f).for_each([&](std::size_t p) { d.set(*s.index_of(c.spec()->point(p))); });
        if (d != (u & primes)) bad.push_back("D(" + c.r().name(f) + ")");
    }
    r.details["closure_of_spec_is_everything"] = closure(*c.sp_space(), primes) == s.all();
    r.details["violations"] = bad;
    fail_if(r, !bad.empty() || !r.details["closure_of_spec_is_everything"].get<bool>());
}

inline void quasi_compact(CheckContext& c, CheckResult& r) {
    const auto& s = *c.sp();
    const auto& ring = c.r();
    std::size_t covers = 0;
    json bad = json::array();
    for (Elem f = 0; f < ring.size(); ++f) {
        const Bitset uf = basis_open(s, f);
        std::vector<Elem> gs;
        Bitset uni(s.size());
        for (Elem g = 0; g < ring.size(); ++g) {
            if (g == f) continue;
            const Bitset ug = basis_open(s, g);
            if (ug.is_subset_of(uf)) {
                gs.push_back(g);
                uni |= ug;
            }
        }
        if (uni != uf) continue;
        ++covers;
        const auto sub = cover_refine(s, f, gs);
        Bitset refined(s.size());
        for (Elem g : sub) refined |= basis_open(s, g);
        if (refined != uf || !radical(ideal_generated(c.ring(), sub)).contains(f)) bad.push_back(ring.name(f));
    }
    r.details["covers_refined"] = covers;
    r.details["violations"] = bad;
    fail_if(r, !bad.empty());
}

// Topology generated by { U_f } closed under unions and intersections,
// computed without the closure formula.
inline std::vector<Bitset> brute_force_opens(const Spectrum& s) {
    std::vector<Bitset> opens{Bitset(s.size()), s.all()};
    for (Elem f = 0; f < s.ring()->size(); ++f) opens.push_back(basis_open(s, f));
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t n = opens.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (const Bitset& cand : {opens[i] | opens[j], opens[i] & opens[j]})
                    if (std::find(opens.begin(), opens.end(), cand) == opens.end()) {
                        opens.push_back(cand);
                        grew = true;
                    }
    }
    std::sort(opens.begin(), opens.end());
    return opens;
}

inline void closure_of_point_check(CheckContext& c, CheckResult& r) {
    const auto& s = *c.sp();
    json bad = json::array();
    std::string oracle;
    if (s.size() <= 12) {
        oracle = "brute-force union/intersection closure of the U_f";
        const auto opens = brute_force_opens(s);
        for (std::size_t q = 0; q < s.size(); ++q) {
            Bitset outside(s.size());
            for (const auto& o : opens)
                if (!o.test(q)) outside |= o;
            if (outside.complement() != closure_of_point(s, q)) bad.push_back(c.sp_labels()[q]);
        }
    } else {
        oracle = "minimal opens from the U_f basis";
        std::vector<Bitset> basis;
        for (Elem f = 0; f < c.r().size(); ++f) basis.push_back(basis_open(s, f));
        const FinTopSpace X = from_basis(s.size(), basis);
        for (std::size_t q = 0; q < s.size(); ++q)
            if (X.closure_of_point(q) != closure_of_point(s, q)) bad.push_back(c.sp_labels()[q]);
    }
    json closures = json::object();
    for (std::size_t q = 0; q < s.size(); ++q) closures[c.sp_labels()[q]] = point_set_json(c.sp_labels(), closure_of_point(s, q));
    r.details["oracle"] = oracle;
    r.details["closures"] = closures;
    r.details["mismatches"] = bad;
    fail_if(r, !bad.empty());
}

inline void closed_sets_check(CheckContext& c, CheckResult& r) {
    const auto& s = *c.sp();
    json bad = json::array();
    for (std::size_t q = 0; q < s.size(); ++q) {
        auto rq = s.index_of(s.radical_of(q));
        if (!rq || closure_of_point(s, q) != closure_of_point(s, *rq))
            bad.push_back("closure of " + c.sp_labels()[q] + " differs from closure of its radical");
    }
    std::vector<Bitset> from_ideals;
    for (const auto& i : c.lattice()) {
        const Bitset v = closed_set(s, i);
        v.for_each([&](std::size_t q) {
            auto rq = s.index_of(s.radical_of(q));
            if (!rq || !v.test(*rq)) bad.push_back("V" + ideal_name(i) + " misses a radical");
        });
        // V(I) restricted to Spec is the prime closed set V(I)
        Bitset restricted(s.size());
        closed_set(*c.spec(), i).for_each([&](std::size_t p) { restricted.set(*s.index_of(c.spec()->point(p))); });
        if (restricted != (v & c.prime_points())) bad.push_back("V" + ideal_name(i) + " does not restrict to V(I) on Spec");
        from_ideals.push_back(v);
    }
    std::sort(from_ideals.begin(), from_ideals.end());
    from_ideals.erase(std::unique(from_ideals.begin(), from_ideals.end()), from_ideals.end());
    const auto topological = closed_sets(*c.sp_space(), c.limits().max_closed_sets);
    const bool same = topological == from_ideals;
    r.details["closed_sets"] = topological.size();
    r.details["closed_sets_equal_V_of_ideals"] = same;
    r.details["violations"] = bad;
    fail_if(r, !bad.empty() || !same);
}

inline void retraction(CheckContext& c, CheckResult& r) {
    const auto gamma = retraction_gamma(c.sp(), c.spec());
    const auto res = check_retraction(gamma, c.lattice());
    json mapping = json::object();
    for (std::size_t q = 0; q < c.sp()->size(); ++q)
        mapping[c.sp_labels()[q]] = ideal_name(c.spec()->point(gamma(q)));
    r.details["gamma"] = mapping;
    r.details["continuous"] = res.continuous;
    r.details["open"] = res.open;
    r.details["fixes_primes"] = res.fixes_primes;
    r.details["closed_preimages"] = res.closed_preimages;
    r.details["violations"] = res.violations;
    fail_if(r, !res.ok());
}

inline void idempotent_clopen(CheckContext& c, CheckResult& r) {
    const auto pairs = clopen_sets(*c.sp(), c.limits().max_closed_sets);
    const auto idem = idempotents(c.r());
    json list = json::array();
    for (const auto& p : pairs)
        list.push_back(json{{"idempotent", c.r().name(p.idempotent)}, {"clopen", point_set_json(c.sp_labels(), p.set)}});
    r.details["idempotents"] = idem.size();
    r.details["clopens"] = pairs.size();
    r.details["pairing"] = list;
    fail_if(r, pairs.size() != idem.size());
}

inline void connected_iff(CheckContext& c, CheckResult& r) {
    const bool connected = is_connected(*c.sp_space());
    const auto idem = idempotents(c.r()).size();
    r.details["connected"] = connected;
    r.details["idempotents"] = idem;
    fail_if(r, connected != (idem == 2));
}

inline void induced_map_check(CheckContext& c, CheckResult& r) {
    json bad = json::array();
    std::size_t maps = 0;
    auto check_hom = [&](const RingHom& h, const std::string& label) {
        ++maps;
        const auto target_lattice = enumerate_ideals(h.target(), c.limits());
        auto target_sp = std::make_shared<const Spectrum>(make_spectrum(h.target(), SpectrumKind::quasi, target_lattice));
        const auto m = induced_map(h, target_sp, c.sp());
        if (!induced_map_preserves_basis(h, m) || !m.is_continuous()) bad.push_back(label + ": not continuous");
        for (const auto& j : target_lattice)
            if (radical(preimage_ideal(h, j)) != preimage_ideal(h, radical(j)))
                bad.push_back(label + ": radical does not commute with preimage at " + ideal_name(j));
    };
    for (const auto& q : c.quotients()) check_hom(q.projection, q.ring->expr());
    for (Elem f = 0; f < c.r().size(); ++f)
        if (auto loc = localize_at(c.ring(), f, c.limits())) check_hom(loc->map, loc->ring->expr());
    r.details["maps_checked"] = maps;
    r.details["violations"] = bad;
    fail_if(r, !bad.empty());
}

inline void quotient_embedding(CheckContext& c, CheckResult& r) {
    json rows = json::array();
    for (const auto& q : c.quotients()) {
        const Ideal ker = kernel(q.projection);
        auto target_sp = std::make_shared<const Spectrum>(quasi_spectrum(q.ring, c.limits()));
        const auto m = induced_map(q.projection, target_sp, c.sp());
        const bool injective = m.is_injective();
        const Bitset image = m.image(Bitset::full(target_sp->size()));
        const Bitset v = closed_set(*c.sp(), ker);
        Bitset containing(c.sp()->size());
        for (std::size_t i = 0; i < c.sp()->size(); ++i)
            if (ker.is_subset_of(c.sp()->point(i))) containing.set(i);
        const bool image_ok = image == v;
        json row{{"ideal", ideal_name(ker)}, {"injective", injective}, {"image_is_V(I)", image_ok}};
        if (!image_ok) {
            row["image"] = point_set_json(c.sp_labels(), image);
            row["V(I)"] = point_set_json(c.sp_labels(), v);
            row["V(I)_minus_image"] = point_set_json(c.sp_labels(), v - image);
        }
        row["image_is_quasi_primes_containing_I"] = image == containing;
        rows.push_back(std::move(row));
        fail_if(r, !injective || !image_ok);
    }
    r.details["quotients"] = rows;
    if (r.status == Status::fail)
        r.details["note"] = "the image is the set of quasi-primes containing I; V(I) also holds every q with I inside rad(q), "
                            "so the two differ whenever some such q does not contain I";
}

inline void localization_image(CheckContext& c, CheckResult& r) {
    json rows = json::array();
    for (Elem f = 0; f < c.r().size(); ++f) {
        auto loc = localize_at(c.ring(), f, c.limits());
        if (!loc) continue;
        auto target_sp = std::make_shared<const Spectrum>(quasi_spectrum(loc->ring, c.limits()));
        const auto m = induced_map(loc->map, target_sp, c.sp());
        const bool inside = m.image(Bitset::full(target_sp->size())).is_subset_of(basis_open(*c.sp(), f));
        const bool unit = loc->ring->is_unit(loc->map(f));
        rows.push_back(json{{"f", c.r().name(f)},
                            {"idempotent", c.r().name(loc->idempotent)},
                            {"image_in_U_f", inside},
                            {"f_becomes_unit", unit},
                            {"injective", m.is_injective()}});
        fail_if(r, !inside || !unit);
    }
    r.details["localizations"] = rows;
}

inline void components(CheckContext& c, CheckResult& r) {
    const auto comps = connected_components(*c.sp());
    const auto mreg = max_regular_ideals(c.ring());
    json cs = json::array();
    for (const auto& comp : comps) cs.push_back(point_set_json(c.sp_labels(), comp));
    json ms = json::array();
    for (const auto& m : mreg)
        ms.push_back(json{{"max_regular", ideal_name(m)}, {"V", point_set_json(c.sp_labels(), closed_set(*c.sp(), m))}});
    r.details["components"] = cs;
    r.details["max_regular"] = ms;
    fail_if(r, comps.size() != mreg.size());
}

// phi : t(Sp A) -> Spec A, Z -> rad(q) for any generic point q of Z.
struct TFunctorResult {
    TSpace t;
    SpacePtr spec_space;
    std::optional<ContinuousMap> phi;
    bool well_defined = true;
    bool homeomorphism = false;
};

inline TFunctorResult t_functor_phi(CheckContext& c) {
    TFunctorResult out{t_space(c.sp_space(), c.irreducible_options()), c.spec_space(), std::nullopt};
    const auto& s = *c.sp();
    std::vector<std::size_t> m;
    for (const auto& z : out.t.points) {
        const auto gens = generic_points(*c.sp_space(), z).to_vector();
        std::optional<std::size_t> image;
        for (std::size_t q : gens) {
            auto p = c.spec()->index_of(s.radical_of(q));
            if (!p || (image && *image != *p)) out.well_defined = false;
            else image = p;
        }
        if (!image) {
            out.well_defined = false;
            return out;
        }
        m.push_back(*image);
    }
    out.phi.emplace(out.t.space, out.spec_space, std::move(m));
    out.homeomorphism = out.well_defined && is_homeomorphism(*out.phi);
    return out;
}

inline void t_functor(CheckContext& c, CheckResult& r) {
    auto res = t_functor_phi(c);
    json phi = json::object();
    if (res.phi)
        for (std::size_t z = 0; z < res.t.points.size(); ++z)
            phi[res.t.space->label(z)] = res.spec_space->label((*res.phi)(z));
    const TSpace tt = t_space(res.t.space, c.irreducible_options());
    const bool idempotent = is_homeomorphism(tt.eta);
    r.details["t_points"] = res.t.points.size();
    r.details["spec_points"] = c.spec()->size();
    r.details["phi"] = phi;
    r.details["well_defined"] = res.well_defined;
    r.details["homeomorphism"] = res.homeomorphism;
    r.details["t_of_t_homeomorphic"] = idempotent;
    fail_if(r, !res.homeomorphism || !idempotent);
}

inline void generic_points_check(CheckContext& c, CheckResult& r) {
    const auto& X = *c.sp_space();
    json rows = json::array();
    for (const auto& z : irreducible_closed_subsets(X, c.irreducible_options())) {
        const Bitset g = generic_points(X, z);
        rows.push_back(json{{"set", point_set_json(c.sp_labels(), z)}, {"generic_points", point_set_json(c.sp_labels(), g)}});
        fail_if(r, g.none());
    }
    r.details["irreducible_closed"] = rows;
}

inline void irreducible_components_check(CheckContext& c, CheckResult& r) {
    const auto comps = irreducible_components(*c.sp_space(), c.irreducible_options());
    std::vector<Bitset> expected;
    for (const auto& p : c.spec()->points()) {
        bool minimal = true;
        for (const auto& other : c.spec()->points())
            if (other != p && other.is_subset_of(p)) minimal = false;
        if (minimal) expected.push_back(closed_set(*c.sp(), p));
    }
    std::sort(expected.begin(), expected.end());
    json cs = json::array();
    for (const auto& z : comps) cs.push_back(point_set_json(c.sp_labels(), z));
    r.details["irreducible_components"] = cs;
    r.details["minimal_primes"] = expected.size();
    fail_if(r, comps != expected);
}

inline bool is_pm_ring(CheckContext& c) {
    for (const auto& p : c.spec()->points()) {
        std::size_t above = 0;
        for (const auto& m : c.max()->points())
            if (p.is_subset_of(m)) ++above;
        if (above != 1) return false;
    }
    return true;
}

inline void normality(CheckContext& c, CheckResult& r) {
    const auto cap = c.limits().max_closed_sets;
    const bool sp_normal = is_normal(*c.sp_space(), cap);
    const bool spec_normal = is_normal(subspace(*c.sp_space(), c.prime_points()), cap);
    const bool pm = is_pm_ring(c);
    r.details["sp_normal"] = sp_normal;
    r.details["spec_normal"] = spec_normal;
    r.details["pm_ring"] = pm;
    fail_if(r, sp_normal != spec_normal || spec_normal != pm);
}

inline void max_normal(CheckContext& c, CheckResult& r) {
    const auto cap = c.limits().max_closed_sets;
    const bool spec_normal = is_normal(*c.spec_space(), cap);
    const FinTopSpace max_sub = subspace(*c.sp_space(), c.max_points());
    const bool max_normal_v = is_normal(max_sub, cap);
    const bool max_hausdorff = is_hausdorff(max_sub);
    r.details["spec_normal"] = spec_normal;
    r.details["max_normal"] = max_normal_v;
    r.details["max_hausdorff"] = max_hausdorff;
    fail_if(r, spec_normal && !(max_normal_v && max_hausdorff));
}

inline void spectral(CheckContext& c, CheckResult& r) {
    const bool sober = is_sober(*c.sp_space(), c.irreducible_options());
    const bool spectral_v = is_spectral_finite(*c.sp_space(), c.irreducible_options());
    const bool sp_is_spec = c.sp()->size() == c.spec()->size();
    const bool reduced = nilradical(c.ring()).is_zero();
    r.details["sober"] = sober;
    r.details["spectral"] = spectral_v;
    r.details["sp_equals_spec"] = sp_is_spec;
    r.details["reduced"] = reduced;
    fail_if(r, sober != sp_is_spec || spectral_v != sp_is_spec || reduced != sp_is_spec);
}

inline void hausdorff(CheckContext& c, CheckResult& r) {
    const bool sp_h = is_hausdorff(*c.sp_space());
    const bool spec_h = is_hausdorff(*c.spec_space());
    const bool sp_is_max = c.sp()->size() == c.max()->size();
    r.details["sp_hausdorff"] = sp_h;
    r.details["spec_hausdorff"] = spec_h;
    r.details["sp_equals_max"] = sp_is_max;
    fail_if(r, sp_h != sp_is_max || (sp_h && !spec_h));
}

// For a local ring: field, Sp Hausdorff, Sp spectral and Sp having a closed
// point are reported separately; disagreement is a failure with witnesses.
inline void local_four_way(CheckContext& c, CheckResult& r) {
    if (!c.is_local()) {
        r.status = Status::inapplicable;
        r.details["reason"] = "ring is not local";
        return;
    }
    const auto& X = *c.sp_space();
    const bool field = c.is_field();
    const bool h = is_hausdorff(X);
    const bool sp = is_spectral_finite(X, c.irreducible_options());
    const bool cp = has_closed_point(X);
    r.details["field"] = field;
    r.details["hausdorff"] = h;
    r.details["spectral"] = sp;
    r.details["has_closed_point"] = cp;
    r.details["closed_points"] = point_set_json(c.sp_labels(), closed_points(X));
    json closures = json::object();
    for (std::size_t q = 0; q < X.size(); ++q) closures[c.sp_labels()[q]] = point_set_json(c.sp_labels(), X.closure_of_point(q));
    r.details["point_closures"] = closures;
    if (!(field == h && h == sp && sp == cp)) {
        r.status = Status::fail;
        r.details["note"] = "the four predicates disagree on this ring";
    }
}

inline void chain_ring(CheckContext& c, CheckResult& r) {
    const auto rep = chain_ring_monoid(c.ring(), c.limits());
    if (!rep.applicable) {
        r.status = Status::inapplicable;
        r.details["reason"] = rep.reason;
        return;
    }
    json powers = json::array();
    for (const auto& p : rep.powers) powers.push_back(ideal_name(p));
    r.details["n"] = rep.powers.size();
    r.details["powers"] = powers;
    r.details["spectrum_matches"] = rep.spectrum_matches;
    r.details["cyclic_table"] = rep.cyclic_table;
    r.details["ideal_products_saturate"] = rep.products_saturate;
    fail_if(r, !rep.spectrum_matches || !rep.products_saturate);
}

}  // namespace checks

inline const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> registry = {
        {"ring:axioms", "operation tables satisfy the commutative ring axioms", checks::ring_axioms},
        {"def:quasi-prime-radical", "q is quasi-prime iff rad(q) is prime", checks::quasi_prime_radical},
        {"def:primary-chain", "prime => primary => quasi-prime; prime powers are quasi-prime", checks::primary_chain},
        {"finite:primary-equals-quasi", "primary spectrum equals quasi-prime spectrum for finite rings", checks::primary_equals_quasi},
        {"top:basis-law", "U_f & U_g == U_fg and U_1 == Sp A", checks::basis_law},
        {"top:density", "Spec A is dense in Sp A and D(f) = U_f & Spec A", checks::density},
        {"thm:quasi-compact", "covers of U_f by basic opens refine to finite subcovers", checks::quasi_compact},
        {"thm:closure-of-point", "closure{q} == { p : q subset rad(p) }", checks::closure_of_point_check},
        {"thm:closed-sets", "closed sets are the V(I); they contain radicals of their points", checks::closed_sets_check},
        {"lem:retraction", "q -> rad(q) is a continuous open retraction onto Spec A", checks::retraction},
        {"prop:idempotent-clopen", "e -> U_e is a bijection from idempotents onto clopens", checks::idempotent_clopen},
        {"cor:connected-iff-no-idempotents", "Sp A connected iff A has no nontrivial idempotents", checks::connected_iff},
        {"prop:induced-map", "induced maps of ring homs are continuous", checks::induced_map_check},
        {"lem:quotient-embedding", "Sp(A/I) -> Sp A is injective with image V(I)", checks::quotient_embedding},
        {"rem:localization-image", "Sp(A_f) -> Sp A lands in U_f", checks::localization_image},
        {"thm:components", "connected components are the V(M) for max-regular M", checks::components},
        {"thm:t-functor", "t(Sp A) is homeomorphic to Spec A", checks::t_functor},
        {"prop:generic-points", "every irreducible closed subset has a generic point", checks::generic_points_check},
        {"prop:irreducible-components", "irreducible components are V(p) for minimal primes p", checks::irreducible_components_check},
        {"prop:normality", "Sp A normal iff Spec A normal iff A is a pm-ring", checks::normality},
        {"prop:max-normal", "Spec A normal implies Max A normal", checks::max_normal},
        {"cor:spectral", "Sp A spectral (sober) iff Sp A == Spec A", checks::spectral},
        {"prop:hausdorff", "Sp A Hausdorff iff Sp A == Max A; then Spec A is Hausdorff", checks::hausdorff},
        {"cor:local-four-way", "local ring: field, Hausdorff, spectral, closed point agree", checks::local_four_way},
        {"sec:chain-ring-cyclic", "chain rings: Sp A = { m, ..., m^n } with cyclic exponent table", checks::chain_ring},
    };
    return registry;
}

inline CheckResult run_check(const CheckDef& def, CheckContext& ctx) {
    CheckResult result;
    result.name = std::string(def.name);
    const auto start = std::chrono::steady_clock::now();
    try {
        def.run(ctx, result);
    } catch (const SizingError& e) {
        result.status = Status::error;
        result.cap_exceeded = true;
        result.details["error"] = e.what();
    } catch (const ConsistencyError& e) {
        // a recomputed structure disagreed: the statement failed on this ring
        result.status = Status::fail;
        result.details["violation"] = e.what();
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.details["error"] = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

// Runs the selected checks (all when `selection` is empty) in registry order.
inline CheckReport run_checks(const RingPtr& ring, std::span<const std::string> selection = {},
                              const Limits& limits = {}, std::string expr = {}) {
    const auto& registry = check_registry();
    for (const auto& name : selection) {
        const bool known = std::any_of(registry.begin(), registry.end(), [&](const CheckDef& d) { return d.name == name; });
        if (!known) throw DomainError("unknown check '" + name + "'");
    }
    CheckReport report;
    report.ring_expr = expr.empty() ? ring->expr() : std::move(expr);
    report.ring_size = ring->size();
    CheckContext ctx(ring, limits);
    for (const auto& def : registry) {
        if (!selection.empty() && std::find(selection.begin(), selection.end(), def.name) == selection.end()) continue;
        report.results.push_back(run_check(def, ctx));
    }
    return report;
}

}  // namespace qspec

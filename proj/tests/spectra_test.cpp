#include <gtest/gtest.h>

#include "support.hpp"

using namespace qspec;

namespace {

std::vector<std::string> names(const Spectrum& s) { return s.labels(); }

std::vector<std::string> names_of(const Spectrum& s, const Bitset& pts) {
    std::vector<std::string> out;
    pts.for_each([&](std::size_t i) { out.push_back(ideal_name(s.point(i))); });
    return out;
}

SpectrumPtr shared(Spectrum s) { return std::make_shared<const Spectrum>(std::move(s)); }

// Index in Sp Z/n of the ideal (d).
std::size_t zmod_point(const Spectrum& s, std::uint64_t n, std::uint64_t d) {
    return *s.index_of(Ideal(s.ring(), qtest::zmod_ideal(n, d)));
}

}  // namespace

TEST(QuasiSpectrum, Zmod8) {
    auto r = make_zmod(8);
    EXPECT_EQ(names(quasi_spectrum(r)), (std::vector<std::string>{"(0)", "(4)", "(2)"}));
    EXPECT_EQ(names(prime_spectrum(r)), (std::vector<std::string>{"(2)"}));
    EXPECT_EQ(names(max_spectrum(r)), (std::vector<std::string>{"(2)"}));
}

TEST(QuasiSpectrum, Zmod12) {
    auto r = make_zmod(12);
    EXPECT_EQ(names(quasi_spectrum(r)), (std::vector<std::string>{"(4)", "(3)", "(2)"}));
    EXPECT_EQ(names(prime_spectrum(r)), (std::vector<std::string>{"(3)", "(2)"}));
}

TEST(QuasiSpectrum, ZmodPointsArePrimePowerIdeals) {
    for (std::uint64_t n = 2; n <= 64; ++n) {
        auto r = make_zmod(n);
        const auto sp = quasi_spectrum(r);
        const auto gens = qtest::zmod_quasi_prime_generators(n);
        ASSERT_EQ(sp.size(), gens.size()) << n;
        for (auto d : gens) EXPECT_TRUE(sp.index_of(Ideal(r, qtest::zmod_ideal(n, d)))) << n << " " << d;
        std::size_t primes = 0;
        for (auto d : gens) primes += qtest::is_prime_number(d);
        EXPECT_EQ(prime_spectrum(r).size(), primes) << n;
        EXPECT_EQ(max_spectrum(r).size(), primes) << n;
    }
}

TEST(QuasiSpectrum, PrimaryEqualsQuasiOnBattery) {
    for (const auto& expr : qtest::battery_exprs()) {
        auto r = qtest::ring(expr);
        EXPECT_EQ(primary_spectrum(r).points(), quasi_spectrum(r).points()) << expr;
    }
}

TEST(Topology, ClosureOfPointMatchesDivisibilityOracle) {
    // closure{(d)} = { (d') : rad(d') divides d }
    for (std::uint64_t n = 2; n <= 64; ++n) {
        auto r = make_zmod(n);
        const auto sp = quasi_spectrum(r);
        const auto gens = qtest::zmod_quasi_prime_generators(n);
        for (auto d : gens) {
            Bitset expected(sp.size());
            for (auto e : gens)
                if (d % qtest::squarefree_part(e) == 0) expected.set(zmod_point(sp, n, e));
            EXPECT_EQ(closure_of_point(sp, zmod_point(sp, n, d)), expected) << n << " " << d;
        }
    }
}

TEST(Topology, Zmod8IsIndiscrete) {
    const auto sp = quasi_spectrum(make_zmod(8));
    for (std::size_t q = 0; q < sp.size(); ++q) EXPECT_EQ(sp.closure_of_point(q), sp.all());
    const auto X = sp.space();
    EXPECT_FALSE(is_hausdorff(X));
    EXPECT_FALSE(is_sober(X));
    EXPECT_FALSE(has_closed_point(X));
    EXPECT_EQ(irreducible_closed_subsets(X), std::vector<Bitset>{sp.all()});
    EXPECT_EQ(generic_points(X, sp.all()), sp.all());
}

TEST(Topology, Zmod12Closures) {
    const auto sp = quasi_spectrum(make_zmod(12));
    const std::size_t four = zmod_point(sp, 12, 4), two = zmod_point(sp, 12, 2), three = zmod_point(sp, 12, 3);
    EXPECT_EQ(names_of(sp, sp.closure_of_point(four)), (std::vector<std::string>{"(4)", "(2)"}));
    EXPECT_EQ(names_of(sp, sp.closure_of_point(two)), (std::vector<std::string>{"(4)", "(2)"}));
    EXPECT_EQ(names_of(sp, sp.closure_of_point(three)), (std::vector<std::string>{"(3)"}));
    EXPECT_EQ(irreducible_closed_subsets(sp.space()).size(), 2u);
}

TEST(Topology, BasisOpensFollowRadicalMembership) {
    auto r = make_zmod(12);
    const auto sp = quasi_spectrum(r);
    EXPECT_EQ(basis_open(sp, 1), sp.all());
    EXPECT_EQ(names_of(sp, basis_open(sp, 2)), (std::vector<std::string>{"(3)"}));
    EXPECT_EQ(names_of(sp, basis_open(sp, 3)), (std::vector<std::string>{"(4)", "(2)"}));
    EXPECT_TRUE(basis_open(sp, 6).none());
    for (Elem f = 0; f < 12; ++f)
        for (Elem g = 0; g < 12; ++g) EXPECT_EQ(basis_open(sp, f) & basis_open(sp, g), basis_open(sp, r->mul(f, g)));
}

TEST(Topology, ClosedSetsAreVOfIdeals) {
    for (const auto& expr : qtest::battery_exprs()) {
        auto r = qtest::ring(expr);
        const auto sp = quasi_spectrum(r);
        const auto X = sp.space();
        std::vector<Bitset> from_ideals;
        for (const auto& i : enumerate_ideals(r)) from_ideals.push_back(closed_set(sp, i));
        std::sort(from_ideals.begin(), from_ideals.end());
        from_ideals.erase(std::unique(from_ideals.begin(), from_ideals.end()), from_ideals.end());
        EXPECT_EQ(closed_sets(X, 1 << 20), from_ideals) << expr;
    }
}

TEST(Topology, CoverRefinement) {
    auto r = make_zmod(12);
    const auto sp = quasi_spectrum(r);
    const std::vector<Elem> cover{4, 3, 6};
    EXPECT_EQ(cover_refine(sp, 1, cover), (std::vector<Elem>{4, 3}));
    const std::vector<Elem> not_cover{2, 6};
    EXPECT_THROW(cover_refine(sp, 1, not_cover), DomainError);
}

TEST(Retraction, GammaOnBattery) {
    for (const auto& expr : qtest::battery_exprs()) {
        auto r = qtest::ring(expr);
        const auto lattice = enumerate_ideals(r);
        auto sp = shared(make_spectrum(r, SpectrumKind::quasi, lattice));
        auto spec = shared(make_spectrum(r, SpectrumKind::prime, lattice));
        const auto gamma = retraction_gamma(sp, spec);
        const auto rc = check_retraction(gamma, lattice);
        EXPECT_TRUE(rc.ok()) << expr;
        for (std::size_t q = 0; q < sp->size(); ++q)
            EXPECT_EQ(spec->point(gamma(q)).members(), qtest::brute_force_radical(*r, sp->point(q).members()));
    }
}

TEST(Retraction, NotInjectiveOnZmod8) {
    const auto gamma = retraction_gamma(make_zmod(8));
    EXPECT_FALSE(is_homeomorphism(gamma.as_continuous_map()));
    EXPECT_TRUE(gamma.is_open_map());
}

TEST(Clopens, IdempotentPairing) {
    auto r6 = make_zmod(6);
    EXPECT_EQ(clopen_sets(quasi_spectrum(r6)).size(), 4u);
    for (const auto& expr : qtest::battery_exprs()) {
        auto r = qtest::ring(expr);
        const auto sp = quasi_spectrum(r);
        const auto pairs = clopen_sets(sp);
        EXPECT_EQ(pairs.size(), idempotents(*r).size()) << expr;
        for (const auto& p : pairs) EXPECT_EQ(basis_open(sp, p.idempotent), p.set);
    }
}

TEST(Components, Zmod12) {
    const auto sp = quasi_spectrum(make_zmod(12));
    std::vector<std::vector<std::string>> comps;
    for (const auto& c : connected_components(sp)) comps.push_back(names_of(sp, c));
    std::sort(comps.begin(), comps.end());
    EXPECT_EQ(comps, (std::vector<std::vector<std::string>>{{"(3)"}, {"(4)", "(2)"}}));
}

TEST(Components, CountIsNumberOfPrimeFactors) {
    for (std::uint64_t n = 2; n <= 64; ++n)
        EXPECT_EQ(connected_components(quasi_spectrum(make_zmod(n))).size(), qtest::factor(n).size()) << n;
}

TEST(InducedMaps, QuotientImageIsQuasiPrimesContainingIdeal) {
    for (const auto& expr : qtest::battery_exprs()) {
        auto r = qtest::ring(expr);
        auto sp = shared(quasi_spectrum(r));
        for (const auto& i : enumerate_ideals(r)) {
            if (!i.is_proper()) continue;
            auto q = make_quotient(r, i);
            auto qsp = shared(quasi_spectrum(q.ring));
            const auto m = induced_map(q.projection, qsp, sp);
            EXPECT_TRUE(m.is_injective()) << expr;
            EXPECT_TRUE(m.is_continuous()) << expr;
            EXPECT_TRUE(induced_map_preserves_basis(q.projection, m)) << expr;
            Bitset containing(sp->size());
            for (std::size_t k = 0; k < sp->size(); ++k)
                if (i.is_subset_of(sp->point(k))) containing.set(k);
            EXPECT_EQ(m.image(Bitset::full(qsp->size())), containing) << expr << " " << ideal_name(i);
        }
    }
}

TEST(InducedMaps, QuotientImageIsVOfIdealForReducedRings) {
    for (std::uint64_t n : {2, 6, 10, 15, 30}) {
        auto r = make_zmod(n);
        auto sp = shared(quasi_spectrum(r));
        for (const auto& i : enumerate_ideals(r)) {
            if (!i.is_proper()) continue;
            auto q = make_quotient(r, i);
            auto qsp = shared(quasi_spectrum(q.ring));
            EXPECT_EQ(induced_map(q.projection, qsp, sp).image(Bitset::full(qsp->size())), closed_set(*sp, i)) << n;
        }
    }
}

TEST(InducedMaps, QuotientImageFallsShortOfVOfIdealForZmod8) {
    auto r = make_zmod(8);
    auto sp = shared(quasi_spectrum(r));
    const Ideal four = ideal_generated(r, {4});
    auto q = make_quotient(r, four);
    auto qsp = shared(quasi_spectrum(q.ring));
    const auto image = induced_map(q.projection, qsp, sp).image(Bitset::full(qsp->size()));
    EXPECT_EQ(names_of(*sp, image), (std::vector<std::string>{"(4)", "(2)"}));
    EXPECT_EQ(names_of(*sp, closed_set(*sp, four)), (std::vector<std::string>{"(0)", "(4)", "(2)"}));
}

TEST(InducedMaps, LocalizationLandsInBasisOpen) {
    for (const auto& expr : qtest::battery_exprs()) {
        auto r = qtest::ring(expr);
        auto sp = shared(quasi_spectrum(r));
        for (Elem f = 0; f < r->size(); ++f) {
            auto loc = localize_at(r, f);
            if (!loc) {
                EXPECT_TRUE(r->is_nilpotent(f));
                continue;
            }
            auto lsp = shared(quasi_spectrum(loc->ring));
            const auto m = induced_map(loc->map, lsp, sp);
            EXPECT_TRUE(m.image(Bitset::full(lsp->size())).is_subset_of(basis_open(*sp, f))) << expr << " " << r->name(f);
        }
    }
}

TEST(SpaceProperties, SoberHausdorffAcrossBattery) {
    for (const auto& expr : qtest::battery_exprs()) {
        auto r = qtest::ring(expr);
        const auto lattice = enumerate_ideals(r);
        const auto sp = make_spectrum(r, SpectrumKind::quasi, lattice);
        const auto X = sp.space();
        const bool reduced = nilradical(r).is_zero();
        const bool sp_is_spec = sp.points() == make_spectrum(r, SpectrumKind::prime, lattice).points();
        const bool sp_is_max = sp.points() == make_spectrum(r, SpectrumKind::maximal, lattice).points();
        EXPECT_EQ(is_sober(X), sp_is_spec) << expr;
        EXPECT_EQ(is_sober(X), reduced) << expr;
        EXPECT_EQ(is_spectral_finite(X), sp_is_spec) << expr;
        EXPECT_EQ(is_hausdorff(X), sp_is_max) << expr;
        EXPECT_TRUE(is_normal(X)) << expr;
    }
}

TEST(SpaceProperties, TSpaceOfZmod12HasTwoPoints) {
    auto sp = std::make_shared<const FinTopSpace>(quasi_spectrum(make_zmod(12)).space());
    EXPECT_EQ(t_space(sp).points.size(), 2u);
}

TEST(ChainRings, CyclicMonoid) {
    auto z8 = chain_ring_monoid(make_zmod(8));
    ASSERT_TRUE(z8.applicable);
    EXPECT_EQ(z8.powers.size(), 3u);
    EXPECT_TRUE(z8.spectrum_matches);
    EXPECT_TRUE(z8.products_saturate);
    EXPECT_EQ(z8.cyclic_table[0], (std::vector<unsigned>{2, 3, 1}));
    auto z9 = chain_ring_monoid(make_zmod(9));
    ASSERT_TRUE(z9.applicable);
    EXPECT_EQ(z9.powers.size(), 2u);
    EXPECT_FALSE(chain_ring_monoid(qtest::ring("PolyQuot(PolyQuot(Zmod(2),x,x^2),y,y^2)")).applicable);
    EXPECT_FALSE(chain_ring_monoid(make_zmod(12)).applicable);
}

TEST(DotExport, Zmod12Diagram) {
    const auto dot = emit_dot(quasi_spectrum(make_zmod(12)));
    EXPECT_EQ(dot,
              "digraph \"Sp\" {\n"
              "  node [shape=circle];\n"
              "  n0 [label=\"(4)\"];\n"
              "  n1 [label=\"(3)\", shape=doublecircle];\n"
              "  n2 [label=\"(2)\", shape=doublecircle];\n"
              "  n0 -> n2;\n"
              "}\n");
}

// qspec: command-line front end for the quasi-prime spectrum engine.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error,
// 3 a resource cap was exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qspec/qspec.hpp"

namespace {

using qspec::json;

struct Options {
    std::string ring;
    std::string format = "json";
    qspec::Limits limits;
    std::string kind = "quasi";
    std::string dot_file;
    std::vector<std::string> only;
    bool timing = false;
};

qspec::SpectrumKind parse_kind(const std::string& k) {
    if (k == "quasi") return qspec::SpectrumKind::quasi;
    if (k == "prime") return qspec::SpectrumKind::prime;
    if (k == "max") return qspec::SpectrumKind::maximal;
    if (k == "primary") return qspec::SpectrumKind::primary;
    throw qspec::DomainError("unknown spectrum kind '" + k + "'");
}

json spectrum_json(const qspec::Spectrum& s) {
    const auto labels = s.labels();
    json points = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        json p = qspec::ideal_json(s.point(i));
        p["radical"] = qspec::ideal_name(s.radical_of(i));
        p["closure"] = qspec::point_set_json(labels, s.closure_of_point(i));
        points.push_back(std::move(p));
    }
    return json{{"kind", qspec::to_string(s.kind())}, {"points", points}};
}

json topology_json(const qspec::Spectrum& s, const qspec::Limits& limits) {
    const auto labels = s.labels();
    const qspec::FinTopSpace X = s.space();
    json min_open = json::object();
    json closures = json::object();
    for (std::size_t i = 0; i < X.size(); ++i) {
        min_open[labels[i]] = qspec::point_set_json(labels, X.min_open(i));
        closures[labels[i]] = qspec::point_set_json(labels, X.closure_of_point(i));
    }
    json comps = json::array();
    for (const auto& c : qspec::connected_components(s)) comps.push_back(qspec::point_set_json(labels, c));
    json out{{"kind", qspec::to_string(s.kind())},
             {"min_open", min_open},
             {"closures", closures},
             {"components", comps},
             {"closed_points", qspec::point_set_json(labels, qspec::closed_points(X))}};
    if (s.kind() == qspec::SpectrumKind::quasi) {
        json clopens = json::array();
        for (const auto& p : qspec::clopen_sets(s, limits.max_closed_sets))
            clopens.push_back(json{{"idempotent", s.ring()->name(p.idempotent)}, {"set", qspec::point_set_json(labels, p.set)}});
        out["clopens"] = clopens;
    }
    return out;
}

json tfunctor_json(const qspec::RingPtr& ring, const qspec::Limits& limits) {
    qspec::CheckContext ctx(ring, limits);
    auto res = qspec::checks::t_functor_phi(ctx);
    const auto& T = *res.t.space;
    json points = json::array();
    json min_open = json::object();
    for (std::size_t z = 0; z < T.size(); ++z) {
        points.push_back(T.label(z));
        min_open[T.label(z)] = qspec::point_set_json(T.labels(), T.min_open(z));
    }
    json eta = json::object();
    for (std::size_t x = 0; x < ctx.sp_space()->size(); ++x) eta[ctx.sp_space()->label(x)] = T.label(res.t.eta(x));
    json phi = json::object();
    if (res.phi)
        for (std::size_t z = 0; z < T.size(); ++z) phi[T.label(z)] = res.spec_space->label((*res.phi)(z));
    return json{{"points", points},     {"min_open", min_open},          {"eta", eta},
                {"phi", phi},           {"well_defined", res.well_defined}, {"homeomorphism", res.homeomorphism}};
}

int run(const std::string& command, const Options& opt) {
    const auto format = opt.format == "text" ? qspec::Format::text : qspec::Format::json;
    const auto expr = qspec::parse_ring(opt.ring);
    const auto ring = qspec::evaluate(expr, opt.limits);
    const std::string text = qspec::pretty(expr);

    if (command == "check") {
        const auto report = qspec::run_checks(ring, opt.only, opt.limits, text);
        std::cout << qspec::emit_report(report, format, opt.timing);
        if (report.cap_exceeded()) return 3;
        return report.all_passed() ? 0 : 1;
    }

    json doc = qspec::report_header(text, ring->size());
    if (command == "ring") {
        const std::vector<std::string> sel{"ring:axioms"};
        const auto report = qspec::run_checks(ring, sel, opt.limits, text);
        doc["results"] = qspec::results_json(report, opt.timing);
        doc["elements"] = ring->names();
        doc["idempotents"] = json::array();
        for (auto e : qspec::idempotents(*ring)) doc["idempotents"].push_back(ring->name(e));
        std::cout << qspec::emit(doc, format);
        return report.all_passed() ? 0 : 1;
    }
    if (command == "ideals") {
        json ideals = json::array();
        for (const auto& i : qspec::enumerate_ideals(ring, opt.limits)) {
            const auto c = qspec::classify(i);
            json row = qspec::ideal_json(i);
            row["classification"] = json{{"proper", c.is_proper},       {"prime", c.is_prime},
                                         {"maximal", c.is_maximal},     {"primary", c.is_primary},
                                         {"quasi_prime", c.is_quasi_prime}, {"regular", c.is_regular},
                                         {"max_regular", c.is_max_regular}, {"radical", qspec::ideal_name(c.radical)}};
            ideals.push_back(std::move(row));
        }
        doc["ideals"] = ideals;
    } else if (command == "spectrum") {
        const auto lattice = qspec::enumerate_ideals(ring, opt.limits);
        const auto s = qspec::make_spectrum(ring, parse_kind(opt.kind), lattice);
        doc["spectra"][opt.kind] = spectrum_json(s);
    } else if (command == "topology") {
        const auto lattice = qspec::enumerate_ideals(ring, opt.limits);
        const auto s = qspec::make_spectrum(ring, parse_kind(opt.kind), lattice);
        doc["spectra"][opt.kind] = topology_json(s, opt.limits);
        if (!opt.dot_file.empty()) {
            const std::string dot = qspec::emit_dot(s, opt.kind == "quasi" ? "Sp" : opt.kind);
            if (opt.dot_file == "-") {
                std::cout << dot;
                return 0;
            }
            std::ofstream out(opt.dot_file, std::ios::binary);
            if (!out) throw qspec::DomainError("cannot write " + opt.dot_file);
            out << dot;
        }
    } else if (command == "tfunctor") {
        doc["spectra"]["tfunctor"] = tfunctor_json(ring, opt.limits);
    }
    std::cout << qspec::emit(doc, format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-prime spectra of finite commutative rings"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--ring", opt.ring, "ring expression, e.g. \"Zmod(8)\"")->required();
    app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-ring-size", opt.limits.max_ring_size, "cap on constructed ring size");
    app.add_option("--max-ideals", opt.limits.max_ideals, "cap on the ideal lattice size");
    app.add_option("--max-closed-sets", opt.limits.max_closed_sets, "cap on enumerated closed sets");

    app.add_subcommand("ring", "construct the ring and scan the ring axioms");
    app.add_subcommand("ideals", "ideal lattice with classifications");
    auto* spectrum = app.add_subcommand("spectrum", "points of a spectrum");
    spectrum->add_option("--kind", opt.kind, "quasi, prime, max or primary")
        ->check(CLI::IsMember({"quasi", "prime", "max", "primary"}));
    auto* topology = app.add_subcommand("topology", "minimal opens, closures, components, clopens");
    topology->add_option("--kind", opt.kind, "quasi, prime, max or primary")
        ->check(CLI::IsMember({"quasi", "prime", "max", "primary"}));
    topology->add_option("--dot", opt.dot_file, "write the specialization diagram as DOT ('-' for stdout)");
    app.add_subcommand("tfunctor", "t(Sp A) and the comparison map to Spec A");
    auto* check = app.add_subcommand("check", "run the structural check suite");
    check->add_option("--only", opt.only, "comma-separated check names")->delimiter(',');
    check->add_flag("--timing", opt.timing, "include per-check timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const qspec::ParseError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return 2;
    } catch (const qspec::SizingError& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const qspec::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

#pragma once

// JSON/text reports and DOT export. Output is byte-deterministic: no
// timestamps, and timings only when explicitly requested.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "checks.hpp"
#include "spectra.hpp"
#include "topspace.hpp"

namespace qspec {

inline constexpr const char* report_schema = "qspec-report/1";

enum class Format { json, text };

inline json report_header(const std::string& expr, std::size_t size) {
    return json{{"schema", report_schema}, {"ring", {{"expr", expr}, {"size", size}}}, {"results", json::array()}};
}

inline json results_json(const CheckReport& report, bool include_timing) {
    json results = json::array();
    for (const auto& r : report.results) {
        json row{{"name", r.name}, {"status", to_string(r.status)}, {"details", r.details}};
        if (include_timing) row["seconds"] = r.seconds;
        results.push_back(std::move(row));
    }
    return results;
}

inline json report_json(const CheckReport& report, bool include_timing = false) {
    json doc = report_header(report.ring_expr, report.ring_size);
    doc["results"] = results_json(report, include_timing);
    return doc;
}

namespace detail {

inline void render_text(std::ostringstream& out, const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            const auto& child = it.value();
            if (child.is_structured() && !child.empty() && !(child.is_array() && !child.front().is_structured())) {
                out << pad << it.key() << ":\n";
                render_text(out, child, indent + 1);
            } else {
                out << pad << it.key() << ": " << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& child : v) {
            if (child.is_structured()) {
                out << pad << "-\n";
                render_text(out, child, indent + 1);
            } else {
                out << pad << "- " << (child.is_string() ? child.get<std::string>() : child.dump()) << "\n";
            }
        }
    } else {
        out << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace detail

// Check reports render as one "name: status" line per check followed by its
// details; other documents render as an indented outline.
inline std::string emit_text(const json& doc) {
    std::ostringstream out;
    out << "ring " << doc["ring"]["expr"].get<std::string>() << " (size " << doc["ring"]["size"].dump() << ")\n";
    for (const auto& r : doc["results"]) {
        out << r["name"].get<std::string>() << ": " << r["status"].get<std::string>();
        if (r.contains("seconds")) out << " (" << r["seconds"].dump() << " s)";
        out << "\n";
        detail::render_text(out, r["details"], 1);
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "schema" || it.key() == "ring" || it.key() == "results") continue;
        out << it.key() << ":\n";
        detail::render_text(out, it.value(), 1);
    }
    return out.str();
}

inline std::string emit(const json& doc, Format format) {
    return format == Format::json ? doc.dump(2) + "\n" : emit_text(doc);
}

inline std::string emit_report(const CheckReport& report, Format format, bool include_timing = false) {
    return emit(report_json(report, include_timing), format);
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Covering edges of the strict order among `reps`, given a reflexive
// "a specializes to b" relation.
template <class Specializes>
std::vector<std::pair<std::size_t, std::size_t>> covering_edges(const std::vector<std::size_t>& reps, Specializes spec) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto a : reps)
        for (auto b : reps) {
            if (a == b || !spec(a, b)) continue;
            bool covered = true;
            for (auto c : reps)
                if (c != a && c != b && spec(a, c) && spec(c, b)) covered = false;
            if (covered) edges.emplace_back(a, b);
        }
    return edges;
}

inline std::string render_dot(const std::string& name, const std::vector<std::string>& labels,
                              const std::vector<bool>& doubled, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(name) << "\" {\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"";
        if (doubled[i]) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace detail

// Specialization diagram of a spectrum. Points sharing a radical are
// topologically indistinguishable; each non-radical point gets one edge to its
// radical, and radical points are joined by covering edges of specialization.
// Radical points (the primes, for Sp A) are double-circled.
inline std::string emit_dot(const Spectrum& s, const std::string& name = "Sp") {
    const Bitset radical_pts = s.radical_points();
    std::vector<std::size_t> reps = radical_pts.to_vector();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t q = 0; q < s.size(); ++q) {
        if (radical_pts.test(q)) continue;
        if (auto r = s.index_of(s.radical_of(q))) edges.emplace_back(q, *r);
    }
    for (const auto& e : detail::covering_edges(reps, [&](std::size_t a, std::size_t b) { return s.specializes(a, b); }))
        edges.push_back(e);
    std::sort(edges.begin(), edges.end());
    std::vector<bool> doubled(s.size());
    for (std::size_t q = 0; q < s.size(); ++q) doubled[q] = radical_pts.test(q);
    return detail::render_dot(name, s.labels(), doubled, edges);
}

// Generic finite space: the lowest-index point of each class of
// indistinguishable points stands for the class.
inline std::string emit_dot(const FinTopSpace& X, const std::string& name = "X") {
    std::vector<std::size_t> reps;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t x = 0; x < X.size(); ++x) {
        std::size_t rep = x;
        for (std::size_t y = 0; y < x; ++y)
            if (X.closure_of_point(y) == X.closure_of_point(x)) {
                rep = y;
                break;
            }
        if (rep == x) reps.push_back(x);
        else edges.emplace_back(x, rep);
    }
    for (const auto& e : detail::covering_edges(reps, [&](std::size_t a, std::size_t b) { return X.closure_of_point(a).test(b); }))
        edges.push_back(e);
    std::sort(edges.begin(), edges.end());
    return detail::render_dot(name, X.labels(), std::vector<bool>(X.size(), false), edges);
}

}  // namespace qspec

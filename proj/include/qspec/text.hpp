#pragma once

// String helpers shared by the element-literal parser and the ring DSL.
// Literals nest: products use "(a,b)", quotients "a+I", polynomial
// coefficients are parenthesized whenever they contain '+', '*' or '^'.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace qspec::text {

inline std::string strip_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline bool is_open(char c) { return c == '(' || c == '['; }
inline bool is_close(char c) { return c == ')' || c == ']'; }

// Split on `sep` occurring outside any bracket pair.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (is_open(s[i])) ++depth;
        else if (is_close(s[i])) --depth;
        else if (s[i] == sep && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

inline bool has_top(std::string_view s, std::string_view chars) {
    int depth = 0;
    for (char c : s) {
        if (is_open(c)) ++depth;
        else if (is_close(c)) --depth;
        else if (depth == 0 && chars.find(c) != std::string_view::npos) return true;
    }
    return false;
}

// Index of the bracket closing the one opened at `open`, or npos.
inline std::size_t matching_close(std::string_view s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (is_open(s[i])) ++depth;
        else if (is_close(s[i]) && --depth == 0) return i;
    }
    return std::string_view::npos;
}

// "(x+1)" -> "x+1", but "(0,1)" stays: a top-level comma marks a pair literal.
inline std::string_view unwrap(std::string_view s) {
    while (s.size() >= 2 && s.front() == '(' && matching_close(s, 0) == s.size() - 1) {
        auto inner = s.substr(1, s.size() - 2);
        if (has_top(inner, ",")) break;
        s = inner;
    }
    return s;
}

inline bool is_compound(std::string_view s) { return has_top(s, "+*^"); }

inline std::string wrap_if_compound(const std::string& s) {
    return is_compound(s) ? "(" + s + ")" : s;
}

inline bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

inline bool parse_uint(std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

// One summand of a univariate polynomial. An empty coefficient means an
// implicit 1 ("x^2", "x"); exponent 0 means a constant term.
struct PolyTerm {
    std::string coeff;
    unsigned exponent = 0;
    friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

// Syntactic split of a whitespace-free polynomial in `var`. `offset` is added
// to reported error positions.
inline std::vector<PolyTerm> parse_poly_terms(std::string_view s, std::string_view var,
                                              std::size_t offset = 0) {
    if (s.empty()) throw ParseError(offset, "expected polynomial");
    std::vector<PolyTerm> terms;
    std::size_t pos = 0;
    auto var_part = [&](std::string_view v, std::size_t at) -> unsigned {
        if (v == var) return 1;
        if (v.size() > var.size() + 1 && v.substr(0, var.size()) == var && v[var.size()] == '^') {
            std::uint64_t e = 0;
            if (!parse_uint(v.substr(var.size() + 1), e) || e > 1000000)
                throw ParseError(at + var.size() + 1, "expected exponent after '^'");
            return static_cast<unsigned>(e);
        }
        throw ParseError(at, "expected '" + std::string(var) + "' or '" + std::string(var) + "^INT'");
    };
    for (auto piece : split_top(s, '+')) {
        if (piece.empty()) throw ParseError(offset + pos, "expected monomial");
        const std::size_t at = offset + pos;
        auto factors = split_top(piece, '*');
        if (factors.size() > 2) throw ParseError(at, "monomial has more than one '*'");
        if (factors.size() == 2) {
            if (factors[0].empty()) throw ParseError(at, "expected coefficient before '*'");
            terms.push_back({std::string(factors[0]), var_part(factors[1], at + factors[0].size() + 1)});
        } else if (piece == var || (piece.size() > var.size() && piece.substr(0, var.size()) == var &&
                                    piece[var.size()] == '^')) {
            terms.push_back({"", var_part(piece, at)});
        } else {
            terms.push_back({std::string(piece), 0});
        }
        pos += piece.size() + 1;
    }
    return terms;
}

}  // namespace qspec::text

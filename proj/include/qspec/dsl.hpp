#pragma once

// Ring description language.
//
//   expr     := "Zmod(" INT ")"
//             | "Prod(" expr "," expr ")"
//             | "PolyQuot(" expr "," IDENT "," poly ")"
//             | "Quot(" expr ",[" litlist "])"
//   poly     := monomial ("+" monomial)*
//   monomial := lit "*" IDENT "^" INT | IDENT "^" INT | IDENT | lit
//
// Whitespace is insignificant. Element literals are those of the base ring;
// compound coefficients must be parenthesized. The poly must be monic.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "finring.hpp"
#include "ideals.hpp"
#include "text.hpp"

namespace qspec {

struct RingExpr {
    enum class Kind { zmod, product, poly_quotient, quotient };

    Kind kind = Kind::zmod;
    std::uint64_t modulus = 0;
    std::vector<RingExpr> children;
    std::string var;
    std::vector<text::PolyTerm> poly;
    std::vector<std::string> literals;

    friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

inline std::string pretty(const RingExpr& e) {
    switch (e.kind) {
    case RingExpr::Kind::zmod: return "Zmod(" + std::to_string(e.modulus) + ")";
    case RingExpr::Kind::product: return "Prod(" + pretty(e.children[0]) + "," + pretty(e.children[1]) + ")";
    case RingExpr::Kind::poly_quotient: {
        std::string p;
        for (const auto& t : e.poly) {
            if (!p.empty()) p += "+";
            if (t.coeff.empty()) p += t.exponent == 1 ? e.var : e.var + "^" + std::to_string(t.exponent);
            else if (t.exponent == 0) p += t.coeff;
            else p += t.coeff + "*" + e.var + "^" + std::to_string(t.exponent);
        }
        return "PolyQuot(" + pretty(e.children[0]) + "," + e.var + "," + p + ")";
    }
    case RingExpr::Kind::quotient: {
        std::string l;
        for (const auto& lit : e.literals) l += (l.empty() ? "" : ",") + lit;
        return "Quot(" + pretty(e.children[0]) + ",[" + l + "])";
    }
    }
    return {};
}

namespace detail {

class RingExprParser {
public:
    explicit RingExprParser(std::string_view source) {
        for (std::size_t i = 0; i < source.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(source[i]))) {
                s_.push_back(source[i]);
                origin_.push_back(i);
            }
        origin_.push_back(source.size());
    }

    RingExpr parse() {
        RingExpr e = expr();
        if (pos_ != s_.size()) fail("expected end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(origin_[pos_], what); }
    [[noreturn]] void fail_at(std::size_t compact_pos, const std::string& what) const {
        throw ParseError(origin_[std::min(compact_pos, s_.size())], what);
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    // Text up to (not including) the first top-level occurrence of a char in
    // `stops`; brackets nest.
    std::string balanced_until(std::string_view stops) {
        const std::size_t start = pos_;
        int depth = 0;
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (depth == 0 && stops.find(c) != std::string_view::npos) break;
            if (text::is_open(c)) ++depth;
            else if (text::is_close(c)) {
                if (--depth < 0) break;
            }
            ++pos_;
        }
        return s_.substr(start, pos_ - start);
    }

    RingExpr expr() {
        const std::size_t start = pos_;
        const std::string head = identifier();
        RingExpr e;
        if (head == "Zmod") {
            expect('(');
            const std::size_t at = pos_;
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
            std::uint64_t n = 0;
            if (!text::parse_uint(digits, n)) fail_at(at, "expected INT");
            e.kind = RingExpr::Kind::zmod;
            e.modulus = n;
            expect(')');
        } else if (head == "Prod") {
            expect('(');
            e.kind = RingExpr::Kind::product;
            e.children.push_back(expr());
            expect(',');
            e.children.push_back(expr());
            expect(')');
        } else if (head == "PolyQuot") {
            expect('(');
            e.kind = RingExpr::Kind::poly_quotient;
            e.children.push_back(expr());
            expect(',');
            const std::size_t var_at = pos_;
            e.var = identifier();
            if (!text::is_identifier(e.var)) fail_at(var_at, "expected IDENT");
            if (e.var == "I") fail_at(var_at, "'I' is reserved for quotient literals");
            expect(',');
            const std::size_t poly_at = pos_;
            const std::string poly = balanced_until(")");
            try {
                e.poly = text::parse_poly_terms(poly, e.var, 0);
            } catch (const ParseError& err) {
                fail_at(poly_at + err.position(), std::string(err.what()).substr(std::string(err.what()).find(": ") + 2));
            }
            expect(')');
        } else if (head == "Quot") {
            expect('(');
            e.kind = RingExpr::Kind::quotient;
            e.children.push_back(expr());
            expect(',');
            expect('[');
            const std::size_t list_at = pos_;
            const std::string list = balanced_until("]");
            if (!list.empty()) {
                std::size_t offset = 0;
                for (auto lit : text::split_top(list, ',')) {
                    if (lit.empty()) fail_at(list_at + offset, "expected element literal");
                    e.literals.emplace_back(lit);
                    offset += lit.size() + 1;
                }
            }
            expect(']');
            expect(')');
        } else {
            pos_ = start;
            fail("expected one of Zmod, Prod, PolyQuot, Quot");
        }
        return e;
    }

    std::string s_;
    std::vector<std::size_t> origin_;
    std::size_t pos_ = 0;
};

inline void collect_vars(const RingExpr& e, std::vector<std::string>& out) {
    if (e.kind == RingExpr::Kind::poly_quotient) out.push_back(e.var);
    for (const auto& c : e.children) collect_vars(c, out);
}

}  // namespace detail

// Syntax only; semantic checks happen in evaluate().
inline RingExpr parse_ring(std::string_view source) { return detail::RingExprParser(source).parse(); }

inline RingPtr evaluate(const RingExpr& e, const Limits& limits = {}) {
    switch (e.kind) {
    case RingExpr::Kind::zmod: return make_zmod(e.modulus, limits);
    case RingExpr::Kind::product: return make_product(evaluate(e.children[0], limits), evaluate(e.children[1], limits), limits);
    case RingExpr::Kind::poly_quotient: {
        std::vector<std::string> vars;
        detail::collect_vars(e.children[0], vars);
        if (std::find(vars.begin(), vars.end(), e.var) != vars.end())
            throw DomainError("variable '" + e.var + "' is already used by the base ring");
        auto base = evaluate(e.children[0], limits);
        unsigned degree = 0;
        for (const auto& t : e.poly) degree = std::max(degree, t.exponent);
        std::vector<Elem> coeffs(degree + 1, base->zero());
        for (const auto& t : e.poly) {
            const Elem c = t.coeff.empty() ? base->one() : base->parse_element(text::unwrap(t.coeff));
            coeffs[t.exponent] = base->add(coeffs[t.exponent], c);
        }
        if (degree == 0) throw DomainError("modulus polynomial must have degree >= 1");
        if (coeffs[degree] != base->one())
            throw DomainError("modulus polynomial is not monic (leading coefficient " + base->name(coeffs[degree]) +
                              "); non-monic quotients are not supported");
        return make_poly_quotient(base, e.var, std::move(coeffs), limits);
    }
    case RingExpr::Kind::quotient: {
        auto base = evaluate(e.children[0], limits);
        std::vector<Elem> gens;
        for (const auto& lit : e.literals) gens.push_back(base->parse_element(lit));
        const Ideal ideal = ideal_generated(base, gens);
        if (!ideal.is_proper()) throw DomainError("quotient by the unit ideal is the zero ring");
        return make_quotient(base, ideal, limits).ring;
    }
    }
    throw DomainError("unknown ring expression");
}

inline RingPtr parse_and_evaluate(std::string_view source, const Limits& limits = {}) {
    return evaluate(parse_ring(source), limits);
}

}  // namespace qspec

#pragma once

// Text syntax for ring descriptors and element literals, plus polynomial
// rendering for reports. Descriptors: `Z`, `Q`, `Zmod 6` (or `Zmod6`),
// `Dual Z` (or `Dual(Z)`). Element literals: decimal integers, `p/q`
// rationals, decimal residues, `a+b*eps` dual numbers. Polynomials are
// rendered but never parsed.

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "ringalg/rings.hpp"

namespace ringalg {

enum class RingStyle {
    Canonical,  // file headers: "Zmod 6", "Dual Z"
    Compact,    // reports and flags: "Zmod6", "Dual(Z)"
};

inline std::string render_ring(const Ring& r, RingStyle style = RingStyle::Canonical) {
    switch (r->kind) {
        case RingKind::Integers:
            return "Z";
        case RingKind::Rationals:
            return "Q";
        case RingKind::IntegersMod:
            return (style == RingStyle::Canonical ? "Zmod " : "Zmod") + r->modulus.str();
        case RingKind::Dual:
            if (style == RingStyle::Canonical) return "Dual " + render_ring(r->base, style);
            return "Dual(" + render_ring(r->base, style) + ")";
        case RingKind::Poly:
            // Internal-only ring; rendered for diagnostics, never parsed.
            return "Poly(" + render_ring(r->base, style) + "," + std::to_string(r->var_count) + ")";
    }
    return "?";
}

namespace detail {

class RingTextParser {
  public:
    explicit RingTextParser(std::string_view s, int line) : s_(s), line_(line) {}

    Ring parse_full() {
        Ring r = parse_desc();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing characters after ring descriptor", line_);
        return r;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string ident() {
        std::string out;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            out.push_back(s_[pos_++]);
        return out;
    }

    Int number() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits.push_back(s_[pos_++]);
        if (digits.empty()) throw ParseError("expected a modulus", line_);
        return Int(digits);
    }

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Ring parse_desc() {
        skip_ws();
        const std::string id = ident();
        if (id == "Z") return integers();
        if (id == "Q") return rationals();
        if (id == "Zmod") {
            skip_ws();
            const bool paren = eat('(');
            skip_ws();
            Int n = number();
            skip_ws();
            if (paren && !eat(')')) throw ParseError("expected ')' after modulus", line_);
            return integers_mod(std::move(n));
        }
        if (id == "Dual") {
            skip_ws();
            const bool paren = eat('(');
            Ring base = parse_desc();
            skip_ws();
            if (paren && !eat(')')) throw ParseError("expected ')' after base ring", line_);
            return dual_numbers(std::move(base));
        }
        throw ParseError(id.empty() ? "expected a ring descriptor" : "unsupported ring '" + id + "'",
                         line_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

}  // namespace detail

inline Ring parse_ring(std::string_view text, int line = 1) {
    return detail::RingTextParser(text, line).parse_full();
}

namespace detail {

// Kinds whose literals carry their own sign that can be folded into a
// surrounding "+"/"-".
inline bool signed_literal_kind(const Ring& r) {
    return r->kind == RingKind::Integers || r->kind == RingKind::Rationals;
}

inline bool is_negative_literal(const Value& v) {
    if (v.ring()->kind == RingKind::Integers) return v.as_int() < 0;
    if (v.ring()->kind == RingKind::Rationals) return v.as_rat() < 0;
    return false;
}

// Literals containing top-level '+'/'-' need parentheses in products.
inline bool composite_literal_kind(const Ring& r) {
    return r->kind == RingKind::Dual || r->kind == RingKind::Poly;
}

}  // namespace detail

inline std::string render_element(const Value& v);

namespace detail {

inline std::string monomial_text(const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "X" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

inline std::string univariate_monomial_text(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "X";
    return "X^" + std::to_string(k);
}

// Appends one term to a polynomial rendering, folding the coefficient's sign
// into the joining operator where the literal syntax allows it.
inline void append_term(std::string& out, const Value& coeff, const std::string& mono) {
    bool negative = false;
    Value mag = coeff;
    if (signed_literal_kind(coeff.ring()) && is_negative_literal(coeff)) {
        negative = true;
        mag = neg(coeff);
    }
    std::string body;
    if (mono.empty()) {
        body = render_element(mag);
    } else if (mag == one(coeff.ring())) {
        body = mono;
    } else {
        std::string c = render_element(mag);
        if (composite_literal_kind(coeff.ring())) c = "(" + c + ")";
        body = c + "*" + mono;
    }
    if (out.empty())
        out = (negative ? "-" : "") + body;
    else
        out += (negative ? " - " : " + ") + body;
}

}  // namespace detail

inline std::string render_element(const Value& v) {
    const Ring& ring = v.ring();
    switch (ring->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return v.as_int().str();
        case RingKind::Rationals: {
            const Rat& r = v.as_rat();
            Int num = numerator(r);
            Int den = denominator(r);
            return den == 1 ? num.str() : num.str() + "/" + den.str();
        }
        case RingKind::Dual: {
            std::string a = render_element(v.dual_value());
            if (detail::composite_literal_kind(ring->base)) a = "(" + a + ")";
            const Value& b = v.dual_eps();
            std::string joiner = "+";
            std::string btext;
            if (detail::signed_literal_kind(ring->base) && detail::is_negative_literal(b)) {
                joiner = "-";
                btext = render_element(neg(b));
            } else {
                btext = render_element(b);
                if (detail::composite_literal_kind(ring->base)) btext = "(" + btext + ")";
            }
            return a + joiner + btext + "*eps";
        }
        case RingKind::Poly: {
            if (v.is_zero()) return "0";
            std::string out;
            if (ring->var_count == 1) {
                const auto& coeffs = v.poly_coeffs();
                for (std::size_t k = 0; k < coeffs.size(); ++k) {
                    if (coeffs[k].is_zero()) continue;
                    detail::append_term(out, coeffs[k], detail::univariate_monomial_text(k));
                }
            } else {
                for (const auto& [e, c] : v.mpoly_terms())
                    detail::append_term(out, c, detail::monomial_text(e));
            }
            return out;
        }
    }
    return "?";
}

inline std::ostream& operator<<(std::ostream& os, const Value& v) {
    return os << render_element(v);
}

namespace detail {

inline bool valid_int_literal(std::string_view t) {
    std::size_t p = 0;
    if (p < t.size() && (t[p] == '-' || t[p] == '+')) ++p;
    if (p == t.size()) return false;
    for (; p < t.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(t[p]))) return false;
    return true;
}

inline Int parse_int_literal(std::string_view t, int line) {
    if (!valid_int_literal(t))
        throw ParseError("malformed integer literal '" + std::string(t) + "'", line);
    return Int(std::string(t));
}

// Strips one balanced outer pair of parentheses, if present.
inline std::string_view strip_parens(std::string_view t) {
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return t;
    int depth = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        if (t[i] == ')') --depth;
        if (depth == 0) return t;  // outer '(' closes early; not a single pair
    }
    return t.substr(1, t.size() - 2);
}

}  // namespace detail

inline Value parse_element(const Ring& ring, std::string_view token, int line = 1) {
    switch (ring->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return Value(ring, detail::parse_int_literal(token, line));
        case RingKind::Rationals: {
            const auto slash = token.find('/');
            if (slash == std::string_view::npos)
                return Value(ring, Rat(detail::parse_int_literal(token, line)));
            Int num = detail::parse_int_literal(token.substr(0, slash), line);
            Int den = detail::parse_int_literal(token.substr(slash + 1), line);
            if (den == 0) throw ParseError("zero denominator", line);
            return Value(ring, make_rational(std::move(num), std::move(den)));
        }
        case RingKind::Dual: {
            constexpr std::string_view eps_suffix = "*eps";
            if (token.size() >= eps_suffix.size() &&
                token.substr(token.size() - eps_suffix.size()) == eps_suffix) {
                std::string_view head = token.substr(0, token.size() - eps_suffix.size());
                if (head.empty()) throw ParseError("malformed dual literal", line);
                // Last top-level '+'/'-' splits value part from eps coefficient.
                std::size_t split = std::string_view::npos;
                int depth = 0;
                for (std::size_t i = 0; i < head.size(); ++i) {
                    const char c = head[i];
                    if (c == '(') ++depth;
                    if (c == ')') --depth;
                    if (depth == 0 && (c == '+' || c == '-') && i > 0) {
                        const char prev = head[i - 1];
                        if (prev != '+' && prev != '-' && prev != '*' && prev != '/' && prev != '(')
                            split = i;
                    }
                }
                Value a = split == std::string_view::npos
                              ? zero(ring->base)
                              : parse_element(ring->base,
                                              detail::strip_parens(head.substr(0, split)), line);
                std::string_view btok =
                    split == std::string_view::npos ? head : head.substr(split + 1);
                Value b = parse_element(ring->base, detail::strip_parens(btok), line);
                if (split != std::string_view::npos && head[split] == '-') b = neg(b);
                return Value::make_dual(ring, std::move(a), std::move(b));
            }
            return Value::make_dual(
                ring, parse_element(ring->base, detail::strip_parens(token), line),
                zero(ring->base));
        }
        case RingKind::Poly:
            throw ParseError("polynomial literals are not accepted as input", line);
    }
    throw ParseError("unknown ring kind", line);
}

}  // namespace ringalg

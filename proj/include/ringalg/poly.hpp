#pragma once

// Helpers for values living in polynomial rings. A univariate polynomial
// over R is simply a Value whose ring is poly_ring(R, 1); the generic ring
// arithmetic already adds and multiplies them, so this header only supplies
// construction, inspection, evaluation and embedding.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ringalg/rings.hpp"

namespace ringalg {

inline Value poly_from_coeffs(const Ring& rx, std::vector<Value> coeffs) {
    return Value::make_poly(rx, std::move(coeffs));
}

// The monomial c*X^k.
inline Value poly_monomial(const Ring& rx, Value c, std::size_t k = 1) {
    std::vector<Value> coeffs(k, zero(rx->base));
    coeffs.push_back(std::move(c));
    return Value::make_poly(rx, std::move(coeffs));
}

inline Value poly_x(const Ring& rx) { return poly_monomial(rx, one(rx->base)); }

inline Value mpoly_monomial(const Ring& rx, Exponents e, Value c) {
    return Value::make_mpoly(rx, {{std::move(e), std::move(c)}});
}

inline Value mpoly_var(const Ring& rx, int i) {
    Exponents e(static_cast<std::size_t>(rx->var_count), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return mpoly_monomial(rx, std::move(e), one(rx->base));
}

// Degree of the zero polynomial is a dedicated minus-infinity sentinel
// (nullopt), never -1.
inline std::optional<int> poly_degree(const Value& p) {
    if (p.ring()->kind != RingKind::Poly || p.ring()->var_count != 1)
        throw MismatchError("poly_degree: not a univariate polynomial");
    if (p.poly_coeffs().empty()) return std::nullopt;
    return static_cast<int>(p.poly_coeffs().size()) - 1;
}

inline std::optional<int> mpoly_total_degree(const Value& p) {
    if (p.ring()->kind != RingKind::Poly) throw MismatchError("mpoly_total_degree: not a polynomial");
    if (p.ring()->var_count == 1) return poly_degree(p);
    std::optional<int> deg;
    for (const auto& [e, c] : p.mpoly_terms()) {
        const int d = static_cast<int>(total_degree_of(e));
        if (!deg || d > *deg) deg = d;
    }
    return deg;
}

// Coefficient of X^k, zero beyond the stored degree.
inline Value poly_coeff(const Value& p, std::size_t k) {
    if (p.ring()->kind != RingKind::Poly || p.ring()->var_count != 1)
        throw MismatchError("poly_coeff: not a univariate polynomial");
    const auto& c = p.poly_coeffs();
    return k < c.size() ? c[k] : zero(p.ring()->base);
}

inline Value poly_leading_coeff(const Value& p) {
    const auto deg = poly_degree(p);
    if (!deg) throw MismatchError("poly_leading_coeff: zero polynomial");
    return poly_coeff(p, static_cast<std::size_t>(*deg));
}

// Horner evaluation at a scalar from the coefficient ring.
inline Value poly_eval_scalar(const Value& p, const Value& x) {
    if (p.ring()->kind != RingKind::Poly || p.ring()->var_count != 1)
        throw MismatchError("poly_eval_scalar: not a univariate polynomial");
    require_same_ring(p.ring()->base, x.ring(), "poly_eval_scalar");
    Value acc = zero(x.ring());
    const auto& coeffs = p.poly_coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
    return acc;
}

// Canonical embeddings within the family: identity, base into its dual
// numbers (zero eps part), base into a polynomial ring over it (constant).
inline Value embed(const Value& v, const Ring& target) {
    if (same_ring(v.ring(), target)) return v;
    if (target->kind == RingKind::Dual && same_ring(v.ring(), target->base))
        return Value::make_dual(target, v, zero(target->base));
    if (target->kind == RingKind::Poly && same_ring(v.ring(), target->base)) {
        if (target->var_count == 1) return Value::make_poly(target, {v});
        if (v.is_zero()) return zero(target);
        return mpoly_monomial(target, Exponents(static_cast<std::size_t>(target->var_count), 0), v);
    }
    throw MismatchError("embed: no canonical embedding between these rings");
}

// Substitution of commuting values from a target ring for the variables;
// coefficients are embedded into the target. Target commutativity makes the
// term order irrelevant, so no check is needed here (the matrix overload in
// matrix.hpp is the one that must verify commutation).
inline Value mpoly_eval_values(const Value& p, const Ring& target,
                               const std::vector<Value>& args) {
    if (p.ring()->kind != RingKind::Poly) throw MismatchError("mpoly_eval_values: not a polynomial");
    if (static_cast<int>(args.size()) != p.ring()->var_count)
        throw MismatchError("mpoly_eval_values: argument count does not match variable count");
    for (const Value& a : args) require_same_ring(a.ring(), target, "mpoly_eval_values");
    Value acc = zero(target);
    if (p.ring()->var_count == 1) {
        for (std::size_t k = 0; k < p.poly_coeffs().size(); ++k) {
            const Value& c = p.poly_coeffs()[k];
            if (c.is_zero()) continue;
            acc = add(acc, mul(embed(c, target), pow_value(args[0], static_cast<std::uint32_t>(k))));
        }
        return acc;
    }
    for (const auto& [e, c] : p.mpoly_terms()) {
        Value term = embed(c, target);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = mul(term, pow_value(args[i], e[i]));
        acc = add(acc, term);
    }
    return acc;
}

inline Value random_poly(const Ring& rx, int max_degree, Rng& rng) {
    std::vector<Value> coeffs;
    const int deg = static_cast<int>(rng.uniform(0, max_degree));
    coeffs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) coeffs.push_back(random_element(rx->base, rng));
    return Value::make_poly(rx, std::move(coeffs));
}

inline Value random_mpoly(const Ring& rx, int max_exponent, int max_terms, Rng& rng) {
    std::vector<std::pair<Exponents, Value>> terms;
    const int count = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < count; ++t) {
        Exponents e(static_cast<std::size_t>(rx->var_count));
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.uniform(0, max_exponent));
        terms.emplace_back(std::move(e), random_element(rx->base, rng));
    }
    return Value::make_mpoly(rx, std::move(terms));
}

}  // namespace ringalg

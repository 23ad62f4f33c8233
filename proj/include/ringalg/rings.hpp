#pragma once

// Exact arithmetic over a closed family of commutative unital rings:
// the integers, residue rings Z/n (n >= 2), the rationals, dual numbers
// over a base ring, and polynomial rings over a base ring. Ring selection
// is dynamic: a Value carries a descriptor of the ring it lives in, and
// all operations dispatch on it. Every Value is kept in canonical form,
// so equality is plain structural comparison.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <utility>
#include <variant>
#include <vector>

#include "ringalg/errors.hpp"
#include "ringalg/rng.hpp"

namespace ringalg {

// Expression templates are disabled so that arithmetic yields plain values;
// the ambient Value layer dominates the cost anyway.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

enum class RingKind { Integers, IntegersMod, Rationals, Dual, Poly };

struct RingDesc;
using Ring = std::shared_ptr<const RingDesc>;

struct RingDesc {
    RingKind kind;
    Int modulus;        // IntegersMod only
    Ring base;          // Dual and Poly only
    int var_count = 0;  // Poly only
};

// Number of Dual/Poly layers above the scalar leaf.
inline int nesting_depth(const Ring& r) {
    switch (r->kind) {
        case RingKind::Dual:
        case RingKind::Poly:
            return 1 + nesting_depth(r->base);
        default:
            return 0;
    }
}

inline constexpr int kMaxNestingDepth = 2;

inline Ring integers() {
    static const Ring z = std::make_shared<RingDesc>(RingDesc{RingKind::Integers, 0, nullptr, 0});
    return z;
}

inline Ring rationals() {
    static const Ring q = std::make_shared<RingDesc>(RingDesc{RingKind::Rationals, 0, nullptr, 0});
    return q;
}

inline Ring integers_mod(Int n) {
    if (n < 2) throw InvalidRingError("modulus must be at least 2 (the zero ring is excluded)");
    return std::make_shared<RingDesc>(RingDesc{RingKind::IntegersMod, std::move(n), nullptr, 0});
}

inline Ring dual_numbers(Ring base) {
    if (!base) throw InvalidRingError("dual numbers need a base ring");
    if (nesting_depth(base) + 1 > kMaxNestingDepth) throw InvalidRingError("excessive ring nesting");
    return std::make_shared<RingDesc>(RingDesc{RingKind::Dual, 0, std::move(base), 0});
}

inline Ring poly_ring(Ring base, int var_count = 1) {
    if (!base) throw InvalidRingError("polynomial ring needs a base ring");
    if (var_count < 1) throw InvalidRingError("polynomial ring needs at least one variable");
    if (nesting_depth(base) + 1 > kMaxNestingDepth) throw InvalidRingError("excessive ring nesting");
    return std::make_shared<RingDesc>(RingDesc{RingKind::Poly, 0, std::move(base), var_count});
}

inline bool same_ring(const Ring& a, const Ring& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case RingKind::Integers:
        case RingKind::Rationals:
            return true;
        case RingKind::IntegersMod:
            return a->modulus == b->modulus;
        case RingKind::Dual:
            return same_ring(a->base, b->base);
        case RingKind::Poly:
            return a->var_count == b->var_count && same_ring(a->base, b->base);
    }
    return false;
}

inline void require_same_ring(const Ring& a, const Ring& b, const char* what) {
    if (!same_ring(a, b)) throw MismatchError(std::string(what) + ": operands from different rings");
}

class Value;

// Multivariate exponent vector; length equals the ring's var_count.
using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// Display and storage order for multivariate terms: graded lexicographic,
// highest first.
inline bool grlex_before(const Exponents& a, const Exponents& b) {
    const auto da = total_degree_of(a);
    const auto db = total_degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

namespace detail {

// parts[0] + parts[1]*eps, both always present.
struct DualPayload {
    std::vector<Value> parts;
};

// Dense, low degree first, trailing zeros trimmed; empty means zero.
struct PolyPayload {
    std::vector<Value> coeffs;
};

// Sorted by grlex_before, no zero coefficients stored.
struct MPolyPayload {
    std::vector<std::pair<Exponents, Value>> terms;
};

bool operator==(const DualPayload&, const DualPayload&);
bool operator==(const PolyPayload&, const PolyPayload&);
bool operator==(const MPolyPayload&, const MPolyPayload&);

}  // namespace detail

class Value {
  public:
    using Payload =
        std::variant<Int, Rat, detail::DualPayload, detail::PolyPayload, detail::MPolyPayload>;

    // Canonicalizing constructors; arithmetic below preserves canonical form.
    Value(Ring ring, Int v) : ring_(std::move(ring)), payload_(Int{}) {
        if (ring_->kind == RingKind::Integers) {
            payload_ = std::move(v);
        } else if (ring_->kind == RingKind::IntegersMod) {
            Int r = v % ring_->modulus;
            if (r < 0) r += ring_->modulus;
            payload_ = std::move(r);
        } else {
            throw MismatchError("integer payload only fits Z or Z/n");
        }
    }

    Value(Ring ring, Rat v) : ring_(std::move(ring)), payload_(std::move(v)) {
        if (ring_->kind != RingKind::Rationals) throw MismatchError("rational payload only fits Q");
    }

    static Value make_dual(Ring ring, Value value_part, Value eps_part) {
        if (ring->kind != RingKind::Dual) throw MismatchError("make_dual: not a dual-number ring");
        require_same_ring(ring->base, value_part.ring(), "make_dual");
        require_same_ring(ring->base, eps_part.ring(), "make_dual");
        Value v(std::move(ring));
        v.payload_ = detail::DualPayload{{std::move(value_part), std::move(eps_part)}};
        return v;
    }

    static Value make_poly(Ring ring, std::vector<Value> coeffs) {
        if (ring->kind != RingKind::Poly || ring->var_count != 1)
            throw MismatchError("make_poly: not a univariate polynomial ring");
        for (const Value& c : coeffs) require_same_ring(ring->base, c.ring(), "make_poly");
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
        Value v(std::move(ring));
        v.payload_ = detail::PolyPayload{std::move(coeffs)};
        return v;
    }

    // Accepts terms in any order, merges duplicate exponent vectors, drops zeros.
    static Value make_mpoly(Ring ring, std::vector<std::pair<Exponents, Value>> terms) {
        if (ring->kind != RingKind::Poly || ring->var_count < 2)
            throw MismatchError("make_mpoly: not a multivariate polynomial ring");
        for (auto& [e, c] : terms) {
            if (static_cast<int>(e.size()) != ring->var_count)
                throw MismatchError("make_mpoly: exponent vector of wrong length");
            require_same_ring(ring->base, c.ring(), "make_mpoly");
        }
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return grlex_before(a.first, b.first); });
        std::vector<std::pair<Exponents, Value>> merged;
        for (auto& [e, c] : terms) {
            if (!merged.empty() && merged.back().first == e) {
                merged.back().second = add(merged.back().second, c);
            } else {
                merged.emplace_back(std::move(e), std::move(c));
            }
        }
        std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
        Value v(std::move(ring));
        v.payload_ = detail::MPolyPayload{std::move(merged)};
        return v;
    }

    const Ring& ring() const noexcept { return ring_; }

    bool is_zero() const {
        switch (ring_->kind) {
            case RingKind::Integers:
            case RingKind::IntegersMod:
                return as_int() == 0;
            case RingKind::Rationals:
                return as_rat() == 0;
            case RingKind::Dual:
                return dual_value().is_zero() && dual_eps().is_zero();
            case RingKind::Poly:
                if (ring_->var_count == 1) return poly_coeffs().empty();
                return mpoly_terms().empty();
        }
        return false;
    }

    const Int& as_int() const { return std::get<Int>(payload_); }
    const Rat& as_rat() const { return std::get<Rat>(payload_); }
    const Value& dual_value() const { return std::get<detail::DualPayload>(payload_).parts[0]; }
    const Value& dual_eps() const { return std::get<detail::DualPayload>(payload_).parts[1]; }
    const std::vector<Value>& poly_coeffs() const {
        return std::get<detail::PolyPayload>(payload_).coeffs;
    }
    const std::vector<std::pair<Exponents, Value>>& mpoly_terms() const {
        return std::get<detail::MPolyPayload>(payload_).terms;
    }

    friend Value add(const Value& x, const Value& y);
    friend Value mul(const Value& x, const Value& y);
    friend Value neg(const Value& x);
    friend bool operator==(const Value& x, const Value& y);

  private:
    explicit Value(Ring ring) : ring_(std::move(ring)), payload_(Int{}) {}

    Ring ring_;
    Payload payload_;
};

namespace detail {
inline bool operator==(const DualPayload& a, const DualPayload& b) { return a.parts == b.parts; }
inline bool operator==(const PolyPayload& a, const PolyPayload& b) { return a.coeffs == b.coeffs; }
inline bool operator==(const MPolyPayload& a, const MPolyPayload& b) { return a.terms == b.terms; }
}  // namespace detail

inline bool operator==(const Value& x, const Value& y) {
    return same_ring(x.ring_, y.ring_) && x.payload_ == y.payload_;
}

inline bool operator!=(const Value& x, const Value& y) { return !(x == y); }

inline Value zero(const Ring& ring) {
    switch (ring->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return Value(ring, Int(0));
        case RingKind::Rationals:
            return Value(ring, Rat(0));
        case RingKind::Dual:
            return Value::make_dual(ring, zero(ring->base), zero(ring->base));
        case RingKind::Poly:
            if (ring->var_count == 1) return Value::make_poly(ring, {});
            return Value::make_mpoly(ring, {});
    }
    throw InvalidRingError("unknown ring kind");
}

inline Value one(const Ring& ring) {
    switch (ring->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return Value(ring, Int(1));
        case RingKind::Rationals:
            return Value(ring, Rat(1));
        case RingKind::Dual:
            return Value::make_dual(ring, one(ring->base), zero(ring->base));
        case RingKind::Poly:
            if (ring->var_count == 1) return Value::make_poly(ring, {one(ring->base)});
            return Value::make_mpoly(ring,
                                     {{Exponents(static_cast<std::size_t>(ring->var_count), 0),
                                       one(ring->base)}});
    }
    throw InvalidRingError("unknown ring kind");
}

// Embedding of k as k * 1 works in every ring of the family.
inline Value from_int(const Ring& ring, const Int& k) {
    switch (ring->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return Value(ring, k);
        case RingKind::Rationals:
            return Value(ring, Rat(k));
        case RingKind::Dual:
            return Value::make_dual(ring, from_int(ring->base, k), zero(ring->base));
        case RingKind::Poly: {
            Value c = from_int(ring->base, k);
            if (ring->var_count == 1)
                return Value::make_poly(ring, {std::move(c)});
            return Value::make_mpoly(
                ring, {{Exponents(static_cast<std::size_t>(ring->var_count), 0), std::move(c)}});
        }
    }
    throw InvalidRingError("unknown ring kind");
}

inline Value from_int(const Ring& ring, long long k) { return from_int(ring, Int(k)); }

inline Value add(const Value& x, const Value& y) {
    require_same_ring(x.ring(), y.ring(), "add");
    const Ring& ring = x.ring();
    switch (ring->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return Value(ring, x.as_int() + y.as_int());
        case RingKind::Rationals:
            return Value(ring, x.as_rat() + y.as_rat());
        case RingKind::Dual:
            return Value::make_dual(ring, add(x.dual_value(), y.dual_value()),
                                    add(x.dual_eps(), y.dual_eps()));
        case RingKind::Poly: {
            if (ring->var_count == 1) {
                const auto& a = x.poly_coeffs();
                const auto& b = y.poly_coeffs();
                std::vector<Value> out;
                out.reserve(std::max(a.size(), b.size()));
                for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
                    if (k < a.size() && k < b.size())
                        out.push_back(add(a[k], b[k]));
                    else
                        out.push_back(k < a.size() ? a[k] : b[k]);
                }
                return Value::make_poly(ring, std::move(out));
            }
            // Merge of two grlex-sorted term lists.
            const auto& a = x.mpoly_terms();
            const auto& b = y.mpoly_terms();
            std::vector<std::pair<Exponents, Value>> out;
            out.reserve(a.size() + b.size());
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (j == b.size() || (i < a.size() && grlex_before(a[i].first, b[j].first))) {
                    out.push_back(a[i++]);
                } else if (i == a.size() || grlex_before(b[j].first, a[i].first)) {
                    out.push_back(b[j++]);
                } else {
                    Value c = add(a[i].second, b[j].second);
                    if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
                    ++i, ++j;
                }
            }
            Value v = zero(ring);
            v.payload_ = detail::MPolyPayload{std::move(out)};
            return v;
        }
    }
    throw InvalidRingError("unknown ring kind");
}

inline Value neg(const Value& x) {
    const Ring& ring = x.ring();
    switch (ring->kind) {
        case RingKind::Integers:
            return Value(ring, -x.as_int());
        case RingKind::IntegersMod:
            return Value(ring, ring->modulus - x.as_int());
        case RingKind::Rationals:
            return Value(ring, -x.as_rat());
        case RingKind::Dual:
            return Value::make_dual(ring, neg(x.dual_value()), neg(x.dual_eps()));
        case RingKind::Poly: {
            if (ring->var_count == 1) {
                std::vector<Value> out;
                out.reserve(x.poly_coeffs().size());
                for (const Value& c : x.poly_coeffs()) out.push_back(neg(c));
                return Value::make_poly(ring, std::move(out));
            }
            std::vector<std::pair<Exponents, Value>> out;
            out.reserve(x.mpoly_terms().size());
            for (const auto& [e, c] : x.mpoly_terms()) out.emplace_back(e, neg(c));
            Value v = zero(ring);
            v.payload_ = detail::MPolyPayload{std::move(out)};
            return v;
        }
    }
    throw InvalidRingError("unknown ring kind");
}

inline Value mul(const Value& x, const Value& y) {
    require_same_ring(x.ring(), y.ring(), "mul");
    const Ring& ring = x.ring();
    switch (ring->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return Value(ring, x.as_int() * y.as_int());
        case RingKind::Rationals:
            return Value(ring, x.as_rat() * y.as_rat());
        case RingKind::Dual:
            // (a + b eps)(c + d eps) = ac + (ad + bc) eps, eps^2 = 0.
            return Value::make_dual(
                ring, mul(x.dual_value(), y.dual_value()),
                add(mul(x.dual_value(), y.dual_eps()), mul(x.dual_eps(), y.dual_value())));
        case RingKind::Poly: {
            if (ring->var_count == 1) {
                const auto& a = x.poly_coeffs();
                const auto& b = y.poly_coeffs();
                if (a.empty() || b.empty()) return zero(ring);
                std::vector<Value> out(a.size() + b.size() - 1, zero(ring->base));
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (a[i].is_zero()) continue;
                    for (std::size_t j = 0; j < b.size(); ++j) {
                        if (b[j].is_zero()) continue;
                        out[i + j] = add(out[i + j], mul(a[i], b[j]));
                    }
                }
                return Value::make_poly(ring, std::move(out));
            }
            std::map<Exponents, Value, bool (*)(const Exponents&, const Exponents&)> acc(
                &grlex_before);
            for (const auto& [ea, ca] : x.mpoly_terms()) {
                for (const auto& [eb, cb] : y.mpoly_terms()) {
                    Exponents e(ea.size());
                    for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                    Value c = mul(ca, cb);
                    auto it = acc.find(e);
                    if (it == acc.end())
                        acc.emplace(std::move(e), std::move(c));
                    else
                        it->second = add(it->second, c);
                }
            }
            std::vector<std::pair<Exponents, Value>> out;
            out.reserve(acc.size());
            for (auto& [e, c] : acc)
                if (!c.is_zero()) out.emplace_back(e, std::move(c));
            Value v = zero(ring);
            v.payload_ = detail::MPolyPayload{std::move(out)};
            return v;
        }
    }
    throw InvalidRingError("unknown ring kind");
}

inline Value sub(const Value& x, const Value& y) { return add(x, neg(y)); }

// num/den in lowest terms with a positive denominator; the sign is carried
// by the numerator.
inline Rat make_rational(Int num, Int den) {
    if (den == 0) throw MismatchError("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline Value operator+(const Value& x, const Value& y) { return add(x, y); }
inline Value operator-(const Value& x, const Value& y) { return sub(x, y); }
inline Value operator*(const Value& x, const Value& y) { return mul(x, y); }
inline Value operator-(const Value& x) { return neg(x); }

inline Value pow_value(Value base, std::uint32_t e) {
    Value result = one(base.ring());
    for (std::uint32_t k = 0; k < e; ++k) result = mul(result, base);
    return result;
}

// Rebuilds the value through the canonicalizing constructors. Values produced
// by this module are canonical already; this exists so that canonicality
// itself is a testable operation.
inline Value canonicalize(const Value& v) {
    const Ring& ring = v.ring();
    switch (ring->kind) {
        case RingKind::Integers:
        case RingKind::IntegersMod:
            return Value(ring, v.as_int());
        case RingKind::Rationals: {
            const Rat& r = v.as_rat();
            return Value(ring, Rat(numerator(r), denominator(r)));
        }
        case RingKind::Dual:
            return Value::make_dual(ring, canonicalize(v.dual_value()), canonicalize(v.dual_eps()));
        case RingKind::Poly: {
            if (ring->var_count == 1) {
                std::vector<Value> coeffs;
                coeffs.reserve(v.poly_coeffs().size());
                for (const Value& c : v.poly_coeffs()) coeffs.push_back(canonicalize(c));
                return Value::make_poly(ring, std::move(coeffs));
            }
            auto terms = v.mpoly_terms();
            for (auto& [e, c] : terms) c = canonicalize(c);
            return Value::make_mpoly(ring, std::move(terms));
        }
    }
    throw InvalidRingError("unknown ring kind");
}

// Uniform draw from [0, n) by rejection on n's bit length.
inline Int uniform_below(const Int& n, Rng& rng) {
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    for (;;) {
        Int draw = 0;
        for (unsigned got = 0; got < bits; got += 64) {
            draw <<= 64;
            draw += Int(rng.next());
        }
        draw >>= (64 - bits % 64) % 64;
        if (draw < n) return draw;
    }
}

// The fixed fuzzing distributions: small entries keep runs fast while still
// exercising negatives and zero divisors.
//   Z      uniform on [-3, 3]
//   Q      numerator uniform on [-3, 3], denominator uniform on [1, 3], reduced
//   Z/n    uniform residue
//   dual   both parts from the base distribution
//   R[X]   degree uniform on [0, 4] (univariate) or up to 5 monomials with
//          per-variable exponents in [0, 2] (multivariate), base coefficients
inline Value random_element(const Ring& ring, Rng& rng) {
    switch (ring->kind) {
        case RingKind::Integers:
            return Value(ring, Int(rng.uniform(-3, 3)));
        case RingKind::IntegersMod:
            return Value(ring, uniform_below(ring->modulus, rng));
        case RingKind::Rationals:
            return Value(ring, Rat(Int(rng.uniform(-3, 3)), Int(rng.uniform(1, 3))));
        case RingKind::Dual: {
            Value a = random_element(ring->base, rng);
            Value b = random_element(ring->base, rng);
            return Value::make_dual(ring, std::move(a), std::move(b));
        }
        case RingKind::Poly: {
            if (ring->var_count == 1) {
                const int deg = static_cast<int>(rng.uniform(0, 4));
                std::vector<Value> coeffs;
                coeffs.reserve(static_cast<std::size_t>(deg) + 1);
                for (int k = 0; k <= deg; ++k) coeffs.push_back(random_element(ring->base, rng));
                return Value::make_poly(ring, std::move(coeffs));
            }
            const int monomials = static_cast<int>(rng.uniform(0, 5));
            std::vector<std::pair<Exponents, Value>> terms;
            for (int t = 0; t < monomials; ++t) {
                Exponents e(static_cast<std::size_t>(ring->var_count));
                for (auto& x : e) x = static_cast<std::uint32_t>(rng.uniform(0, 2));
                terms.emplace_back(std::move(e), random_element(ring->base, rng));
            }
            return Value::make_mpoly(ring, std::move(terms));
        }
    }
    throw InvalidRingError("unknown ring kind");
}

}  // namespace ringalg

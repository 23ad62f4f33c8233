#pragma once

// Exterior powers Lambda^k(R^n) with coefficients indexed by strictly
// increasing k-subsets of the basis. This is the definitional route to the
// determinant and the adjugate: det(a) is the unique scalar with
// a.x1 ^ ... ^ a.xn = det(a) (x1 ^ ... ^ xn), and adj(a) the unique map with
// a.x1 ^ ... ^ a.x(n-1) ^ y = x1 ^ ... ^ x(n-1) ^ adj(a).y. Only the grades
// the identities need are ever materialized. Signs are computed by counting
// inversions, with subset keys kept sorted; basis indices are 0-based.

#include <map>
#include <utility>
#include <vector>

#include "ringalg/matrix.hpp"
#include "ringalg/rings.hpp"

namespace ringalg {

using Subset = std::vector<int>;  // strictly increasing indices in [0, dim)

class ExteriorVector {
  public:
    static ExteriorVector zero(Ring ring, int dim, int grade) {
        return ExteriorVector(std::move(ring), dim, grade);
    }

    static ExteriorVector basis(Ring ring, int dim, Subset subset) {
        ExteriorVector v(ring, dim, static_cast<int>(subset.size()));
        v.check_subset(subset);
        Value c = one(ring);
        v.terms_.emplace_back(std::move(subset), std::move(c));
        return v;
    }

    const Ring& ring() const noexcept { return ring_; }
    int dim() const noexcept { return dim_; }
    int grade() const noexcept { return grade_; }
    const std::vector<std::pair<Subset, Value>>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }

    Value coeff(const Subset& subset) const {
        check_subset(subset);
        for (const auto& [s, c] : terms_)
            if (s == subset) return c;
        return ringalg::zero(ring_);
    }

    friend bool operator==(const ExteriorVector& a, const ExteriorVector& b) {
        return same_ring(a.ring_, b.ring_) && a.dim_ == b.dim_ && a.grade_ == b.grade_ &&
               a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExteriorVector& a, const ExteriorVector& b) { return !(a == b); }

    friend ExteriorVector operator+(const ExteriorVector& a, const ExteriorVector& b) {
        require_same_ring(a.ring_, b.ring_, "exterior add");
        if (a.dim_ != b.dim_ || a.grade_ != b.grade_)
            throw MismatchError("exterior add: dimension or grade mismatch");
        std::map<Subset, Value> acc;
        for (const auto& [s, c] : a.terms_) acc.emplace(s, c);
        for (const auto& [s, c] : b.terms_) {
            auto it = acc.find(s);
            if (it == acc.end())
                acc.emplace(s, c);
            else
                it->second = add(it->second, c);
        }
        return from_map(a.ring_, a.dim_, a.grade_, acc);
    }

    friend ExteriorVector scale(const Value& c, const ExteriorVector& v) {
        require_same_ring(c.ring(), v.ring_, "exterior scale");
        std::map<Subset, Value> acc;
        for (const auto& [s, x] : v.terms_) acc.emplace(s, mul(c, x));
        return from_map(v.ring_, v.dim_, v.grade_, acc);
    }

    // Wedge on the right with a coordinate vector; raises the grade by one.
    // Inserting index i past the elements of s greater than i contributes
    // the sign of that many transpositions.
    friend ExteriorVector wedge_with(const ExteriorVector& v, const std::vector<Value>& x) {
        if (static_cast<int>(x.size()) != v.dim_) throw MismatchError("wedge: vector length mismatch");
        for (const Value& c : x) require_same_ring(c.ring(), v.ring_, "wedge");
        if (v.grade_ >= v.dim_)
            throw MismatchError("wedge: grade would exceed the module rank");
        std::map<Subset, Value> acc;
        for (const auto& [s, c] : v.terms_) {
            for (int i = 0; i < v.dim_; ++i) {
                if (x[static_cast<std::size_t>(i)].is_zero()) continue;
                if (std::find(s.begin(), s.end(), i) != s.end()) continue;  // repeated index
                Subset key = s;
                key.insert(std::upper_bound(key.begin(), key.end(), i), i);
                const int greater =
                    static_cast<int>(s.end() - std::upper_bound(s.begin(), s.end(), i));
                Value term = mul(c, x[static_cast<std::size_t>(i)]);
                if (greater & 1) term = neg(term);
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(std::move(key), std::move(term));
                else
                    it->second = add(it->second, term);
            }
        }
        return from_map(v.ring_, v.dim_, v.grade_ + 1, acc);
    }

  private:
    ExteriorVector(Ring ring, int dim, int grade) : ring_(std::move(ring)), dim_(dim), grade_(grade) {
        if (dim < 1) throw MismatchError("exterior: dimension must be at least 1");
        if (grade < 0 || grade > dim) throw MismatchError("exterior: grade out of range");
    }

    static ExteriorVector from_map(const Ring& ring, int dim, int grade,
                                   const std::map<Subset, Value>& acc) {
        ExteriorVector v(ring, dim, grade);
        for (const auto& [s, c] : acc)
            if (!c.is_zero()) v.terms_.emplace_back(s, c);
        return v;
    }

    void check_subset(const Subset& s) const {
        if (static_cast<int>(s.size()) != grade_) throw MismatchError("exterior: subset of wrong size");
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 0 || s[k] >= dim_) throw MismatchError("exterior: index out of range");
            if (k > 0 && s[k - 1] >= s[k])
                throw MismatchError("exterior: subset must be strictly increasing");
        }
    }

    Ring ring_;
    int dim_;
    int grade_;
    std::vector<std::pair<Subset, Value>> terms_;  // sorted by subset, no zeros
};

// Multilinear alternating product of 0 <= k <= n coordinate vectors.
inline ExteriorVector wedge(const Ring& ring, int dim, const std::vector<std::vector<Value>>& vectors) {
    if (static_cast<int>(vectors.size()) > dim)
        throw MismatchError("wedge: more vectors than the module rank");
    ExteriorVector acc = ExteriorVector::basis(ring, dim, {});
    for (const auto& x : vectors) acc = wedge_with(acc, x);
    return acc;
}

// Lambda^k(a): linear extension of e_S |-> a(e_s1) ^ ... ^ a(e_sk).
inline ExteriorVector induced_map(const Matrix& a, const ExteriorVector& v) {
    require_same_ring(a.ring(), v.ring(), "induced_map");
    if (a.dim() != v.dim()) throw MismatchError("induced_map: dimension mismatch");
    ExteriorVector acc = ExteriorVector::zero(a.ring(), v.dim(), v.grade());
    for (const auto& [s, c] : v.terms()) {
        std::vector<std::vector<Value>> images;
        images.reserve(s.size());
        for (int idx : s) images.push_back(a.column(idx));
        acc = acc + scale(c, wedge(a.ring(), a.dim(), images));
    }
    return acc;
}

// The unique coefficient of Lambda^n(a) on the top basis element.
inline Value det_exterior(const Matrix& a) {
    std::vector<std::vector<Value>> columns;
    columns.reserve(static_cast<std::size_t>(a.dim()));
    for (int j = 0; j < a.dim(); ++j) columns.push_back(a.column(j));
    Subset full(static_cast<std::size_t>(a.dim()));
    std::iota(full.begin(), full.end(), 0);
    return wedge(a.ring(), a.dim(), columns).coeff(full);
}

// Extraction of adj(a) from its defining identity. For y = e_j and the x's
// running over the basis with e_i omitted, the right side collapses to the
// single top-grade term carrying (adj(a) e_j)_i with sign (-1)^(n-1-i); the
// left side is computed by wedging the corresponding columns of a with e_j.
// For n = 1 the identity degenerates to y = adj(a) y, forcing the identity
// map (consistent with adj(a) a = det(a) id, since det([r]) = r).
inline Matrix adjugate_exterior(const Matrix& a) {
    const int n = a.dim();
    if (n == 1) return Matrix::identity(a.ring(), 1);
    Subset full(static_cast<std::size_t>(n));
    std::iota(full.begin(), full.end(), 0);
    Matrix out = Matrix::zero(a.ring(), n);
    for (int j = 0; j < n; ++j) {
        std::vector<Value> e_j(static_cast<std::size_t>(n), zero(a.ring()));
        e_j[static_cast<std::size_t>(j)] = one(a.ring());
        for (int i = 0; i < n; ++i) {
            std::vector<std::vector<Value>> factors;
            factors.reserve(static_cast<std::size_t>(n));
            for (int s = 0; s < n; ++s)
                if (s != i) factors.push_back(a.column(s));
            factors.push_back(e_j);
            Value c = wedge(a.ring(), n, factors).coeff(full);
            if ((n - 1 - i) & 1) c = neg(c);
            out.set(i, j, std::move(c));
        }
    }
    return out;
}

}  // namespace ringalg

#pragma once

// End-to-end theorem checkers. check_cayley_hamilton evaluates every step of
// the action-based proof chain independently and reports all intermediate
// values, so a failure localizes to the first broken equality (charpoly vs
// adjugate vs action law vs annihilation). A failing verdict always indicates
// an implementation bug, never a counterexample. check_generalized validates
// its hypotheses before claiming anything: with non-commuting arguments the
// conclusion is not even well-formed.

#include <utility>
#include <vector>

#include "ringalg/action.hpp"
#include "ringalg/matrix.hpp"
#include "ringalg/poly.hpp"
#include "ringalg/rings.hpp"
#include "ringalg/transport.hpp"

namespace ringalg {

struct CHReport {
    Ring ring;
    int dim;
    Matrix a;
    Value chi;  // det(a - X) in R[X]

    // True when adj(t) * t equals chi * I as polynomials with matrix
    // coefficients; the step that lets the chain below start.
    bool adj_product_is_chi;

    // The four values of the proof chain, all required to be zero:
    Matrix chi_at_a;       // chi(a) by right substitution
    Matrix product_act;    // (adj(t) t) . id
    Matrix nested_act;     // adj(t) . (t . id)
    Matrix act_on_zero;    // adj(t) . 0

    bool verdict;
};

inline CHReport check_cayley_hamilton(const Matrix& a) {
    const Ring& ring = a.ring();
    const int n = a.dim();
    const Matrix id = Matrix::identity(ring, n);

    const Value chi = charpoly(a);
    const MatPoly t = char_matrix(a);
    // Adjugate of a - X, computed over R[X] and transported back.
    const MatPoly t_adj = to_matpoly(adjugate_cofactor(to_polymat(t)));

    const MatPoly product = t_adj * t;
    const bool adj_product_is_chi = product == lift_scalar_poly(chi, n);

    const Matrix chi_at_a = right_subst(lift_scalar_poly(chi, n), a);
    const Matrix product_act = act(product, id, a);
    const Matrix nested_act = act(t_adj, act(t, id, a), a);
    const Matrix act_on_zero = act(t_adj, Matrix::zero(ring, n), a);

    const bool verdict = adj_product_is_chi && chi_at_a.is_zero() && product_act.is_zero() &&
                         nested_act.is_zero() && act_on_zero.is_zero();
    return CHReport{ring,     n,           a,          chi,         adj_product_is_chi,
                    chi_at_a, product_act, nested_act, act_on_zero, verdict};
}

// The matrix f_1 X_1 + ... + f_n X_n with entries in R[X_1, ..., X_n].
inline Matrix build_p(const std::vector<Matrix>& f) {
    if (f.empty()) throw MismatchError("build_p: need at least one coefficient matrix");
    const Ring& base = f.front().ring();
    const int dim = f.front().dim();
    for (const Matrix& m : f) {
        require_same_ring(base, m.ring(), "build_p");
        if (m.dim() != dim) throw MismatchError("build_p: dimension mismatch");
    }
    const int n = static_cast<int>(f.size());
    const Ring rx = poly_ring(base, n);
    Matrix out = Matrix::zero(rx, dim);
    for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) {
            Value entry = zero(rx);
            for (int i = 0; i < n; ++i) {
                const Value& c = f[static_cast<std::size_t>(i)].at(j, k);
                if (c.is_zero()) continue;
                if (n == 1) {
                    entry = add(entry, poly_monomial(rx, c, 1));
                } else {
                    Exponents e(static_cast<std::size_t>(n), 0);
                    e[static_cast<std::size_t>(i)] = 1;
                    entry = add(entry, mpoly_monomial(rx, std::move(e), c));
                }
            }
            out.set(j, k, std::move(entry));
        }
    }
    return out;
}

// P = det(f_1 X_1 + ... + f_n X_n), an n-variate polynomial of total degree
// at most dim.
inline Value general_P(const std::vector<Matrix>& f) { return det_cofactor(build_p(f)); }

struct GenInstance {
    Ring ring;
    int dim;
    int n;
    std::vector<Matrix> f;
    std::vector<Matrix> a;
};

struct GenReport {
    GenInstance instance;
    Value p;            // det of the built matrix
    Matrix evaluated;   // P(a_1, ..., a_n)
    bool verdict;
};

// Re-validates both hypotheses rather than trusting the caller: (1) the
// linear relation sum f_i a_i = 0, (2) pairwise commutation of the a_i. A
// violation raises HypothesisViolation; the conclusion is not checked in
// that case.
inline GenReport check_generalized(const GenInstance& inst) {
    if (inst.n < 1 || static_cast<int>(inst.f.size()) != inst.n ||
        static_cast<int>(inst.a.size()) != inst.n)
        throw MismatchError("check_generalized: need n matrices on each side");
    for (const Matrix& m : inst.f) {
        require_same_ring(inst.ring, m.ring(), "check_generalized");
        if (m.dim() != inst.dim) throw MismatchError("check_generalized: dimension mismatch");
    }
    for (const Matrix& m : inst.a) {
        require_same_ring(inst.ring, m.ring(), "check_generalized");
        if (m.dim() != inst.dim) throw MismatchError("check_generalized: dimension mismatch");
    }

    Matrix relation = Matrix::zero(inst.ring, inst.dim);
    for (int i = 0; i < inst.n; ++i)
        relation = relation + inst.f[static_cast<std::size_t>(i)] * inst.a[static_cast<std::size_t>(i)];
    if (!relation.is_zero()) throw HypothesisViolation(1);

    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j)
            if (!commute_check(inst.a[static_cast<std::size_t>(i)],
                               inst.a[static_cast<std::size_t>(j)]))
                throw HypothesisViolation(2, i, j);

    Value p = general_P(inst.f);
    Matrix evaluated = mpoly_eval_commuting(p, inst.a);
    const bool verdict = evaluated.is_zero();
    return GenReport{inst, std::move(p), std::move(evaluated), verdict};
}

// Evaluates a scalar polynomial at a matrix; scalar coefficients act as c*I.
inline Matrix scalar_poly_at_matrix(const Value& p, const Matrix& a) {
    return right_subst(lift_scalar_poly(p, a.dim()), a);
}

// Random instance satisfying both hypotheses by construction. Random matrix
// pairs essentially never commute, so rejection sampling would stall;
// instead the first n-1 arguments are polynomials in one random matrix
// (pairwise commuting), the last is the identity, and the last f balances
// the linear relation exactly.
inline GenInstance generate_instance(const Ring& ring, int dim, int n, Rng& rng) {
    if (n < 2) throw MismatchError("generate_instance: need n >= 2");
    const Matrix c = random_matrix(ring, dim, rng);
    const Ring rx = poly_ring(ring, 1);

    std::vector<Matrix> a;
    a.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) a.push_back(scalar_poly_at_matrix(random_poly(rx, 2, rng), c));
    a.push_back(Matrix::identity(ring, dim));

    std::vector<Matrix> f;
    f.reserve(static_cast<std::size_t>(n));
    Matrix partial = Matrix::zero(ring, dim);
    for (int i = 0; i + 1 < n; ++i) {
        f.push_back(random_matrix(ring, dim, rng));
        partial = partial + f.back() * a[static_cast<std::size_t>(i)];
    }
    f.push_back(-partial);  // f_n * id balances the relation
    return GenInstance{ring, dim, n, std::move(f), std::move(a)};
}

}  // namespace ringalg

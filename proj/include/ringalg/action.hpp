#pragma once

// The left action of polynomials with matrix coefficients on matrices that
// drives the theorem checkers: a constant f acts by f.g = fg, and X acts by
// X.g = ga, giving the closed form p.g = f_0 g + f_1 g a + ... + f_k g a^k.
// Right and left substitution are the two inequivalent ways to plug a matrix
// into p when the coefficients do not commute with it.

#include <utility>

#include "ringalg/matrix.hpp"
#include "ringalg/transport.hpp"

namespace ringalg {

namespace detail {

inline void require_action_operands(const MatPoly& p, const Matrix& g, const Matrix& a,
                                    const char* what) {
    require_same_ring(p.ring(), g.ring(), what);
    require_same_ring(p.ring(), a.ring(), what);
    if (p.dim() != g.dim() || p.dim() != a.dim())
        throw MismatchError(std::string(what) + ": dimension mismatch");
}

}  // namespace detail

// p acted on g with parameter a: sum_k f_k * g * a^k. The closed form does
// not Horner-factor (coefficients sit left of the powers), so the g*a^k
// chain is accumulated once and each term costs one extra multiplication.
inline Matrix act(const MatPoly& p, const Matrix& g, const Matrix& a) {
    detail::require_action_operands(p, g, a, "act");
    Matrix acc = Matrix::zero(p.ring(), p.dim());
    Matrix g_times_power = g;  // g * a^k
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k > 0) g_times_power = g_times_power * a;
        if (!p.coeffs()[k].is_zero()) acc = acc + p.coeffs()[k] * g_times_power;
    }
    return acc;
}

// sum_k f_k a^k, i.e. act(p, identity, a); Horner from the top coefficient
// keeps every f_k on the left.
inline Matrix right_subst(const MatPoly& p, const Matrix& a) {
    detail::require_action_operands(p, a, a, "right_subst");
    Matrix acc = Matrix::zero(p.ring(), p.dim());
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * a + p.coeffs()[k];
    return acc;
}

// sum_k a^k f_k; differs from right_subst exactly when the coefficients do
// not commute with a.
inline Matrix left_subst(const MatPoly& p, const Matrix& a) {
    detail::require_action_operands(p, a, a, "left_subst");
    Matrix acc = Matrix::zero(p.ring(), p.dim());
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = a * acc + p.coeffs()[k];
    return acc;
}

// The characteristic matrix a - X, the degree-1 element with coefficient
// sequence (a, -I).
inline MatPoly char_matrix(const Matrix& a) {
    return MatPoly::from_coeffs(a.ring(), a.dim(),
                                {a, -Matrix::identity(a.ring(), a.dim())});
}

}  // namespace ringalg

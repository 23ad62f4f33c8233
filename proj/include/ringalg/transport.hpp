#pragma once

// Two first-class representations of the same object, with the canonical
// isomorphism between them made executable: a MatPoly is a polynomial whose
// coefficients are matrices over R; a "polymat" is an ordinary Matrix whose
// entries live in R[X]. Moving back and forth is a structural transposition
// of representations, and it is a ring isomorphism. The adjugate of a
// polynomial with matrix coefficients is computed on the polymat side, where
// the division-free cofactor machinery over R[X] applies, and transported
// back.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringalg/matrix.hpp"
#include "ringalg/poly.hpp"
#include "ringalg/rings.hpp"

namespace ringalg {

// Polynomial with Matrix coefficients; X is central, the coefficients
// multiply noncommutatively.
class MatPoly {
  public:
    static MatPoly zero(Ring ring, int dim) { return MatPoly(std::move(ring), dim, {}); }

    static MatPoly constant(Matrix m) {
        Ring r = m.ring();
        const int d = m.dim();
        return MatPoly(std::move(r), d, {std::move(m)});
    }

    static MatPoly identity(Ring ring, int dim) {
        return constant(Matrix::identity(std::move(ring), dim));
    }

    static MatPoly from_coeffs(Ring ring, int dim, std::vector<Matrix> coeffs) {
        for (const Matrix& m : coeffs) {
            require_same_ring(ring, m.ring(), "MatPoly");
            if (m.dim() != dim) throw MismatchError("MatPoly: coefficient dimension mismatch");
        }
        return MatPoly(std::move(ring), dim, std::move(coeffs));
    }

    const Ring& ring() const noexcept { return ring_; }
    int dim() const noexcept { return dim_; }

    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    Matrix coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Matrix::zero(ring_, dim_);
    }

    const std::vector<Matrix>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    friend bool operator==(const MatPoly& p, const MatPoly& q) {
        return same_ring(p.ring_, q.ring_) && p.dim_ == q.dim_ && p.coeffs_ == q.coeffs_;
    }
    friend bool operator!=(const MatPoly& p, const MatPoly& q) { return !(p == q); }

    friend MatPoly operator+(const MatPoly& p, const MatPoly& q) {
        p.require_compatible(q, "matpoly_add");
        std::vector<Matrix> out;
        const std::size_t len = std::max(p.coeffs_.size(), q.coeffs_.size());
        out.reserve(len);
        for (std::size_t k = 0; k < len; ++k) out.push_back(p.coeff(k) + q.coeff(k));
        return MatPoly(p.ring_, p.dim_, std::move(out));
    }

    friend MatPoly operator-(const MatPoly& p) {
        std::vector<Matrix> out;
        out.reserve(p.coeffs_.size());
        for (const Matrix& m : p.coeffs_) out.push_back(-m);
        return MatPoly(p.ring_, p.dim_, std::move(out));
    }

    friend MatPoly operator-(const MatPoly& p, const MatPoly& q) { return p + (-q); }

    // (sum f_i X^i)(sum g_j X^j) = sum_k (sum_{i+j=k} f_i g_j) X^k.
    friend MatPoly operator*(const MatPoly& p, const MatPoly& q) {
        p.require_compatible(q, "matpoly_mul");
        if (p.is_zero() || q.is_zero()) return MatPoly::zero(p.ring_, p.dim_);
        std::vector<Matrix> out(p.coeffs_.size() + q.coeffs_.size() - 1,
                                Matrix::zero(p.ring_, p.dim_));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
        return MatPoly(p.ring_, p.dim_, std::move(out));
    }

  private:
    MatPoly(Ring ring, int dim, std::vector<Matrix> coeffs)
        : ring_(std::move(ring)), dim_(dim), coeffs_(std::move(coeffs)) {
        if (dim_ < 1) throw MismatchError("MatPoly: dimension must be at least 1");
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    void require_compatible(const MatPoly& q, const char* what) const {
        require_same_ring(ring_, q.ring_, what);
        if (dim_ != q.dim_) throw MismatchError(std::string(what) + ": dimension mismatch");
    }

    Ring ring_;   // the base ring R, not R[X]
    int dim_;
    std::vector<Matrix> coeffs_;  // index k holds the coefficient of X^k
};

// Scalar polynomial in R[X] lifted coefficientwise to c_k * I.
inline MatPoly lift_scalar_poly(const Value& p, int dim) {
    if (p.ring()->kind != RingKind::Poly || p.ring()->var_count != 1)
        throw MismatchError("lift_scalar_poly: not a univariate polynomial");
    const Ring& base = p.ring()->base;
    std::vector<Matrix> coeffs;
    coeffs.reserve(p.poly_coeffs().size());
    for (const Value& c : p.poly_coeffs())
        coeffs.push_back(scale(c, Matrix::identity(base, dim)));
    return MatPoly::from_coeffs(base, dim, std::move(coeffs));
}

// Entry (i, j) of the result is the polynomial sum_k (f_k)_{ij} X^k.
inline Matrix to_polymat(const MatPoly& p) {
    const Ring rx = poly_ring(p.ring(), 1);
    Matrix out = Matrix::zero(rx, p.dim());
    for (int i = 0; i < p.dim(); ++i) {
        for (int j = 0; j < p.dim(); ++j) {
            std::vector<Value> coeffs;
            coeffs.reserve(p.coeffs().size());
            for (const Matrix& f : p.coeffs()) coeffs.push_back(f.at(i, j));
            out.set(i, j, poly_from_coeffs(rx, std::move(coeffs)));
        }
    }
    return out;
}

// Inverse direction: collect the X^k coefficient of every entry into one
// matrix per k.
inline MatPoly to_matpoly(const Matrix& m) {
    if (m.ring()->kind != RingKind::Poly || m.ring()->var_count != 1)
        throw MismatchError("to_matpoly: entries must live in a univariate polynomial ring");
    const Ring& base = m.ring()->base;
    std::size_t len = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) len = std::max(len, m.at(i, j).poly_coeffs().size());
    std::vector<Matrix> coeffs(len, Matrix::zero(base, m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const auto& entry = m.at(i, j).poly_coeffs();
            for (std::size_t k = 0; k < entry.size(); ++k) coeffs[k].set(i, j, entry[k]);
        }
    return MatPoly::from_coeffs(base, m.dim(), std::move(coeffs));
}

inline MatPoly random_matpoly(const Ring& ring, int dim, int max_degree, Rng& rng) {
    const int deg = static_cast<int>(rng.uniform(0, max_degree));
    std::vector<Matrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) coeffs.push_back(random_matrix(ring, dim, rng));
    return MatPoly::from_coeffs(ring, dim, std::move(coeffs));
}

inline std::string render_matpoly(const MatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += render_matrix_inline(p.coeffs()[k]);
        if (k == 1) out += "*X";
        if (k > 1) out += "*X^" + std::to_string(k);
    }
    return out;
}

}  // namespace ringalg

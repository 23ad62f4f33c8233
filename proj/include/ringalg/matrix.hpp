#pragma once

// Endomorphisms of R^n as n x n matrices in the standard basis, with
// division-free determinant and adjugate algorithms that are valid over any
// commutative unital ring (including non-domains such as Z/6, where Gaussian
// elimination and Bareiss both break down). Column convention: entry (i, j)
// is the coefficient of e_i in a(e_j), so a(e_j) is column j.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ringalg/poly.hpp"
#include "ringalg/rings.hpp"
#include "ringalg/text.hpp"

namespace ringalg {

inline constexpr int kMaxDim = 16;        // dense subset expansion table cap
inline constexpr int kLeibnizDimCap = 6;  // n! oracle stays desk-scale

class Matrix {
  public:
    static Matrix zero(Ring ring, int dim) { return Matrix(std::move(ring), dim); }

    static Matrix identity(Ring ring, int dim) {
        Matrix m(std::move(ring), dim);
        for (int i = 0; i < dim; ++i) m.set(i, i, ringalg::one(m.ring()));
        return m;
    }

    static Matrix from_rows(Ring ring, std::vector<std::vector<Value>> rows) {
        Matrix m(std::move(ring), static_cast<int>(rows.size()));
        for (int i = 0; i < m.dim_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.dim_)
                throw MismatchError("from_rows: matrix must be square");
            for (int j = 0; j < m.dim_; ++j) m.set(i, j, std::move(rows[i][j]));
        }
        return m;
    }

    // Convenience for literal matrices in demos and tests.
    static Matrix from_ints(Ring ring, std::initializer_list<std::initializer_list<long long>> rows) {
        Matrix m(ring, static_cast<int>(rows.size()));
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != m.dim_)
                throw MismatchError("from_ints: matrix must be square");
            int j = 0;
            for (long long v : row) m.set(i, j++, from_int(ring, v));
            ++i;
        }
        return m;
    }

    const Ring& ring() const noexcept { return ring_; }
    int dim() const noexcept { return dim_; }

    const Value& at(int i, int j) const { return entries_[index(i, j)]; }

    void set(int i, int j, Value v) {
        require_same_ring(ring_, v.ring(), "Matrix::set");
        entries_[index(i, j)] = std::move(v);
    }

    std::vector<Value> column(int j) const {
        std::vector<Value> out;
        out.reserve(static_cast<std::size_t>(dim_));
        for (int i = 0; i < dim_; ++i) out.push_back(at(i, j));
        return out;
    }

    // Matrix-vector product a(x).
    std::vector<Value> apply(const std::vector<Value>& x) const {
        if (static_cast<int>(x.size()) != dim_) throw MismatchError("apply: vector length mismatch");
        std::vector<Value> out;
        out.reserve(static_cast<std::size_t>(dim_));
        for (int i = 0; i < dim_; ++i) {
            Value acc = ringalg::zero(ring_);
            for (int j = 0; j < dim_; ++j) acc = add(acc, mul(at(i, j), x[j]));
            out.push_back(std::move(acc));
        }
        return out;
    }

    bool is_zero() const {
        for (const Value& v : entries_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return same_ring(a.ring_, b.ring_) && a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_compatible(b, "mat_add");
        Matrix out(a.ring_, a.dim_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            out.entries_[k] = add(a.entries_[k], b.entries_[k]);
        return out;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix out(a.ring_, a.dim_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = neg(a.entries_[k]);
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.require_compatible(b, "mat_mul");
        Matrix out(a.ring_, a.dim_);
        for (int i = 0; i < a.dim_; ++i) {
            for (int j = 0; j < a.dim_; ++j) {
                Value acc = ringalg::zero(a.ring_);
                for (int k = 0; k < a.dim_; ++k) acc = add(acc, mul(a.at(i, k), b.at(k, j)));
                out.set(i, j, std::move(acc));
            }
        }
        return out;
    }

  private:
    Matrix(Ring ring, int dim)
        : ring_(std::move(ring)),
          dim_(dim),
          entries_(check_dim(dim, ring_) * static_cast<std::size_t>(dim), ringalg::zero(ring_)) {}

    static std::size_t check_dim(int dim, const Ring&) {
        if (dim < 1) throw MismatchError("matrix dimension must be at least 1");
        if (dim > kMaxDim) throw MismatchError("matrix dimension above supported cap");
        return static_cast<std::size_t>(dim);
    }

    std::size_t index(int i, int j) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw MismatchError("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(j);
    }

    void require_compatible(const Matrix& b, const char* what) const {
        require_same_ring(ring_, b.ring_, what);
        if (dim_ != b.dim_) throw MismatchError(std::string(what) + ": dimension mismatch");
    }

    Ring ring_;
    int dim_;
    std::vector<Value> entries_;
};

inline Matrix scale(const Value& c, const Matrix& a) {
    require_same_ring(c.ring(), a.ring(), "scale");
    Matrix out = Matrix::zero(a.ring(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.set(i, j, mul(c, a.at(i, j)));
    return out;
}

inline Matrix mat_pow(const Matrix& a, std::uint32_t e) {
    Matrix out = Matrix::identity(a.ring(), a.dim());
    for (std::uint32_t k = 0; k < e; ++k) out = out * a;
    return out;
}

inline bool commute_check(const Matrix& a, const Matrix& b) { return a * b == b * a; }

inline Matrix random_matrix(const Ring& ring, int dim, Rng& rng) {
    Matrix m = Matrix::zero(ring, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.set(i, j, random_element(ring, rng));
    return m;
}

namespace detail {

// Laplace expansion along rows with minors memoized by the set of still
// unused columns: O(2^n * n) ring operations instead of O(n!). The row is
// determined by how many columns remain, so the mask alone is the key.
class SubsetDet {
  public:
    explicit SubsetDet(const Matrix& a)
        : a_(a), n_(a.dim()), memo_(std::size_t{1} << a.dim()) {}

    Value run() { return minor_det((std::uint32_t{1} << n_) - 1); }

  private:
    Value minor_det(std::uint32_t mask) {
        if (mask == 0) return one(a_.ring());
        if (memo_[mask]) return *memo_[mask];
        const int row = n_ - std::popcount(mask);
        Value acc = zero(a_.ring());
        bool negate = false;
        for (int j = 0; j < n_; ++j) {
            if (!(mask & (std::uint32_t{1} << j))) continue;
            if (!a_.at(row, j).is_zero()) {
                Value term = mul(a_.at(row, j), minor_det(mask ^ (std::uint32_t{1} << j)));
                acc = add(acc, negate ? neg(term) : term);
            }
            negate = !negate;
        }
        memo_[mask] = acc;
        return acc;
    }

    const Matrix& a_;
    int n_;
    std::vector<std::optional<Value>> memo_;
};

inline bool permutation_parity_odd(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return (inversions & 1) != 0;
}

}  // namespace detail

inline Value det_cofactor(const Matrix& a) { return detail::SubsetDet(a).run(); }

// Brute-force oracle: signed sum over all n! permutations.
inline Value det_leibniz(const Matrix& a, int dim_cap = kLeibnizDimCap) {
    const int n = a.dim();
    if (n > dim_cap) throw MismatchError("det_leibniz: dimension above oracle cap");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Value acc = zero(a.ring());
    do {
        Value prod = one(a.ring());
        for (int i = 0; i < n; ++i) prod = mul(prod, a.at(i, perm[i]));
        acc = add(acc, detail::permutation_parity_odd(perm) ? neg(prod) : prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

namespace detail {

inline Matrix minor_matrix(const Matrix& a, int drop_row, int drop_col) {
    Matrix m = Matrix::zero(a.ring(), a.dim() - 1);
    int mi = 0;
    for (int i = 0; i < a.dim(); ++i) {
        if (i == drop_row) continue;
        int mj = 0;
        for (int j = 0; j < a.dim(); ++j) {
            if (j == drop_col) continue;
            m.set(mi, mj, a.at(i, j));
            ++mj;
        }
        ++mi;
    }
    return m;
}

}  // namespace detail

// Transpose of the cofactor grid. The 1x1 case is the identity, forced by
// the empty-minor convention and adj(a)*a = det(a)*I.
inline Matrix adjugate_cofactor(const Matrix& a) {
    const int n = a.dim();
    if (n == 1) return Matrix::identity(a.ring(), 1);
    Matrix out = Matrix::zero(a.ring(), n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Value c = det_cofactor(detail::minor_matrix(a, j, i));
            out.set(i, j, ((i + j) & 1) ? neg(c) : std::move(c));
        }
    }
    return out;
}

// Entrywise lift of a into matrices over R[X].
inline Matrix lift_to_poly_entries(const Matrix& a) {
    const Ring rx = poly_ring(a.ring(), 1);
    Matrix out = Matrix::zero(rx, a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.set(i, j, embed(a.at(i, j), rx));
    return out;
}

// chi_a = det(a - X), computed over R[X] with the division-free expansion.
// Sign convention is det(a - X), not det(X - a); the leading coefficient is
// (-1)^n. Faddeev-LeVerrier is unusable here: it divides by integers, which
// is invalid over Z/n.
inline Value charpoly(const Matrix& a) {
    const Ring rx = poly_ring(a.ring(), 1);
    Matrix t = lift_to_poly_entries(a);
    const Value x = poly_x(rx);
    for (int i = 0; i < a.dim(); ++i) t.set(i, i, sub(t.at(i, i), x));
    return det_cofactor(t);
}

// (-1)^n * charpoly(a) = det(X - a), monic of degree n.
inline Value monic_charpoly(const Matrix& a) {
    Value chi = charpoly(a);
    return (a.dim() % 2 == 0) ? chi : neg(chi);
}

// Substitution of pairwise-commuting matrices for the variables of a
// (multivariate) polynomial; scalar coefficients act as c*I. Commutation is
// a hard precondition: without it the result would depend on term order.
inline Matrix mpoly_eval_commuting(const Value& p, const std::vector<Matrix>& args) {
    if (p.ring()->kind != RingKind::Poly)
        throw MismatchError("mpoly_eval_commuting: not a polynomial");
    if (static_cast<int>(args.size()) != p.ring()->var_count)
        throw MismatchError("mpoly_eval_commuting: argument count does not match variable count");
    const Ring& base = p.ring()->base;
    const int dim = args.front().dim();
    for (const Matrix& m : args) {
        require_same_ring(m.ring(), base, "mpoly_eval_commuting");
        if (m.dim() != dim) throw MismatchError("mpoly_eval_commuting: dimension mismatch");
    }
    for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j)
            if (!commute_check(args[i], args[j]))
                throw NonCommutingArguments(static_cast<int>(i), static_cast<int>(j));

    // Shared power tables keep repeated exponents cheap.
    std::vector<std::vector<Matrix>> powers(args.size(), {Matrix::identity(base, dim)});
    const auto power = [&](std::size_t i, std::uint32_t e) -> const Matrix& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * args[i]);
        return powers[i][e];
    };

    Matrix acc = Matrix::zero(base, dim);
    const auto add_term = [&](const Value& c, const Exponents& e) {
        Matrix term = scale(c, Matrix::identity(base, dim));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    };
    if (p.ring()->var_count == 1) {
        for (std::size_t k = 0; k < p.poly_coeffs().size(); ++k) {
            if (p.poly_coeffs()[k].is_zero()) continue;
            add_term(p.poly_coeffs()[k], Exponents{static_cast<std::uint32_t>(k)});
        }
    } else {
        for (const auto& [e, c] : p.mpoly_terms()) add_term(c, e);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Matrix file format: line 1 ring descriptor, line 2 dimension, then n rows
// of n whitespace-separated element literals. parse(render(m)) == m.

inline std::string render_matrix_file(const Matrix& a) {
    std::string out = render_ring(a.ring(), RingStyle::Canonical) + "\n" +
                      std::to_string(a.dim()) + "\n";
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            if (j > 0) out += " ";
            out += render_element(a.at(i, j));
        }
        out += "\n";
    }
    return out;
}

inline std::string render_matrix_inline(const Matrix& a) {
    std::string out = "[";
    for (int i = 0; i < a.dim(); ++i) {
        if (i > 0) out += ", ";
        out += "[";
        for (int j = 0; j < a.dim(); ++j) {
            if (j > 0) out += ", ";
            out += render_element(a.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& a) {
    return os << render_matrix_inline(a);
}

inline Matrix parse_matrix_file(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    if (lines.empty()) throw ParseError("expected a ring descriptor", 1);
    const Ring ring = parse_ring(lines[0], 1);

    if (lines.size() < 2) throw ParseError("expected a dimension", 2);
    std::istringstream dim_line(lines[1]);
    int dim = 0;
    std::string extra;
    if (!(dim_line >> dim) || dim < 1 || (dim_line >> extra))
        throw ParseError("malformed dimension '" + lines[1] + "'", 2);
    if (dim > kMaxDim) throw ParseError("dimension above supported cap", 2);

    Matrix m = Matrix::zero(ring, dim);
    for (int i = 0; i < dim; ++i) {
        const int line_no = 3 + i;
        if (static_cast<std::size_t>(line_no - 1) >= lines.size())
            throw ParseError("expected matrix row", line_no);
        std::istringstream row(lines[static_cast<std::size_t>(line_no - 1)]);
        std::string token;
        for (int j = 0; j < dim; ++j) {
            if (!(row >> token))
                throw ParseError("expected " + std::to_string(dim) + " entries", line_no);
            m.set(i, j, parse_element(ring, token, line_no));
        }
        if (row >> token) throw ParseError("too many entries", line_no);
    }
    for (std::size_t k = static_cast<std::size_t>(dim) + 2; k < lines.size(); ++k) {
        if (lines[k].find_first_not_of(" \t") != std::string::npos)
            throw ParseError("unexpected content after matrix rows", static_cast<int>(k) + 1);
    }
    return m;
}

}  // namespace ringalg

// Small dense matrices with entries in F_{q^n}.  Shared by kernel
// computations (entries in the subfield F_q), companion-matrix products and
// Moore-determinant expansion; everything here is exact Gaussian elimination
// at desk sizes.

#ifndef MAXKER_FMAT_HPP
#define MAXKER_FMAT_HPP

#include <cstdint>
#include <vector>

#include "maxker/gf.hpp"

namespace maxker {

struct FMat {
    const Field* F = nullptr;
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    FMat() = default;
    FMat(const Field& f, std::size_t r, std::size_t c)
        : F(&f), rows(r), cols(c), a(r * c, f.zero()) {}

    Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Elem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static FMat identity(const Field& f, std::size_t n) {
        FMat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    bool operator==(const FMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    bool is_identity() const {
        if (rows != cols) return false;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (at(i, j) != (i == j ? F->one() : F->zero())) return false;
        return true;
    }
};

inline FMat fmat_mul(const FMat& x, const FMat& y) {
    require(x.F == y.F || *x.F == *y.F, errc::ctx_mismatch, "matrix field mismatch");
    require(x.cols == y.rows, errc::internal, "fmat_mul shape");
    const Field& F = *x.F;
    FMat z(F, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t t = 0; t < x.cols; ++t) {
            Elem v = x.at(i, t);
            if (F.is_zero(v)) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) = F.add(z.at(i, j), F.mul(v, y.at(t, j)));
        }
    return z;
}

// Entrywise x -> x^{q^j}.
inline FMat fmat_frobenius(const FMat& m, long j) {
    FMat out = m;
    for (auto& v : out.a) v = m.F->frobenius_q(v, j);
    return out;
}

inline std::vector<Elem> fmat_apply(const FMat& m, const std::vector<Elem>& v) {
    require(m.cols == v.size(), errc::internal, "fmat_apply shape");
    const Field& F = *m.F;
    std::vector<Elem> out(m.rows, F.zero());
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (F.is_zero(v[j])) continue;
        for (std::size_t i = 0; i < m.rows; ++i)
            out[i] = F.add(out[i], F.mul(m.at(i, j), v[j]));
    }
    return out;
}

// In-place RREF; returns pivot columns in increasing order.
inline std::vector<std::size_t> fmat_rref(FMat& m) {
    const Field& F = *m.F;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && F.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        Elem iv = F.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = F.mul(m.at(row, j), iv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            Elem c = m.at(i, col);
            if (F.is_zero(c)) continue;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t fmat_rank(FMat m) { return fmat_rref(m).size(); }

// Nullspace basis, one vector per free column in increasing column order.
// If every entry of m lies in a subfield closed under the arithmetic (e.g.
// F_q inside F_{q^n}), the basis vectors stay inside it.
inline std::vector<std::vector<Elem>> fmat_nullspace(FMat m) {
    const Field& F = *m.F;
    auto pivots = fmat_rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(m.cols, F.zero());
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Elem fmat_det(FMat m) {
    require(m.rows == m.cols, errc::internal, "fmat_det shape");
    const Field& F = *m.F;
    Elem det = F.one();
    std::size_t n = m.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && F.is_zero(m.at(sel, col))) ++sel;
        if (sel == n) return F.zero();
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = F.neg(det);
        }
        det = F.mul(det, m.at(col, col));
        Elem iv = F.inv(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            Elem c = F.mul(m.at(i, col), iv);
            if (F.is_zero(c)) continue;
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(col, j)));
        }
    }
    return det;
}

}  // namespace maxker

#endif

// Arithmetic and dense linear algebra over the prime field F_p, with scalars
// held as uint64_t residues.  This is the bottom layer: extension fields
// reduce their coordinate work (change of basis, Frobenius matrices,
// nullspaces) to these routines.

#ifndef MAXKER_FP_HPP
#define MAXKER_FP_HPP

#include <cstdint>
#include <vector>

#include "maxker/error.hpp"

namespace maxker {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// F_p viewed through the FieldOps concept shared with gf::Field (see
// polyring.hpp).  Residues are canonical: always in [0, p).
struct PrimeField {
    using value_type = std::uint64_t;

    std::uint64_t p;

    explicit PrimeField(std::uint64_t p_) : p(p_) {
        require(is_prime_u64(p), errc::not_prime, "p is not prime");
    }

    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return 1; }
    bool is_zero(std::uint64_t a) const { return a == 0; }
    bool eq(std::uint64_t a, std::uint64_t b) const { return a == b; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        require(a % p != 0, errc::internal, "inverse of zero in F_p");
        return pow(a, p - 2);
    }
};

// Row-major dense matrix over F_p.
struct FpMat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> a;  // rows*cols entries in [0, p)

    FpMat() = default;
    FpMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static FpMat identity(std::size_t n) {
        FpMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline FpMat fp_mul(const PrimeField& F, const FpMat& x, const FpMat& y) {
    require(x.cols == y.rows, errc::internal, "fp_mul shape");
    FpMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t t = 0; t < x.cols; ++t) {
            std::uint64_t v = x.at(i, t);
            if (!v) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) = F.add(z.at(i, j), F.mul(v, y.at(t, j)));
        }
    return z;
}

inline std::vector<std::uint64_t> fp_apply(const PrimeField& F, const FpMat& m,
                                           const std::vector<std::uint64_t>& v) {
    require(m.cols == v.size(), errc::internal, "fp_apply shape");
    std::vector<std::uint64_t> out(m.rows, 0);
    for (std::size_t j = 0; j < m.cols; ++j) {
        std::uint64_t c = v[j];
        if (!c) continue;
        for (std::size_t i = 0; i < m.rows; ++i)
            out[i] = F.add(out[i], F.mul(m.at(i, j), c));
    }
    return out;
}

// In-place reduced row echelon form; returns pivot column indices (increasing).
inline std::vector<std::size_t> fp_rref(const PrimeField& F, FpMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        std::uint64_t iv = F.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = F.mul(m.at(row, j), iv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            std::uint64_t c = m.at(i, col);
            if (!c) continue;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t fp_rank(const PrimeField& F, FpMat m) { return fp_rref(F, m).size(); }

// Nullspace basis, one vector per free column in increasing column order.
inline std::vector<std::vector<std::uint64_t>> fp_nullspace(const PrimeField& F, FpMat m) {
    auto pivots = fp_rref(F, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(m.cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse of a square matrix; fails with internal_error if singular.
inline FpMat fp_inverse(const PrimeField& F, const FpMat& m) {
    require(m.rows == m.cols, errc::internal, "fp_inverse shape");
    std::size_t n = m.rows;
    FpMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = fp_rref(F, aug);
    require(pivots.size() == n && pivots[n - 1] == n - 1, errc::internal,
            "fp_inverse: singular matrix");
    FpMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace maxker

#endif

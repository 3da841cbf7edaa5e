// Linearized polynomials over F_{q^n}.  Storage is always the q^1 exponent
// grid of length n (entry i = coefficient of x^{q^i}); the declared step s
// with gcd(s, n) = 1 is a view that determines the sigma-degree and the
// coefficient sequence a_0..a_k on the q^s grid.  Kernels, ranks, adjoints
// and composition are grid-free.

#ifndef MAXKER_LINPOLY_HPP
#define MAXKER_LINPOLY_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "maxker/fmat.hpp"
#include "maxker/gf.hpp"

namespace maxker {

class LinPoly {
public:
    // Coefficients a_0..a_k on the q^s grid; exponents wrap modulo n
    // (reduction modulo x^{q^n} - x), so oversized inputs fold.
    LinPoly(const Field& F, long s, const std::vector<Elem>& a) : F_(&F) {
        unsigned n = F.n();
        s_ = normalize_step(F, s);
        c_.assign(n, F.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::size_t pos = (i * s_) % n;
            c_[pos] = F.add(c_[pos], a[i]);
        }
    }

    static LinPoly from_storage(const Field& F, long s, std::vector<Elem> storage) {
        require(storage.size() == F.n(), errc::internal, "storage length != n");
        LinPoly f(F, s, {});
        f.c_ = std::move(storage);
        return f;
    }

    static unsigned normalize_step(const Field& F, long s) {
        long n = static_cast<long>(F.n());
        long sm = s % n;
        if (sm < 0) sm += n;
        require(std::gcd(sm, n) == 1, errc::bad_grid, "gcd(s, n) must be 1");
        return static_cast<unsigned>(sm);
    }

    const Field& field() const { return *F_; }
    unsigned s() const { return s_; }
    const std::vector<Elem>& storage() const { return c_; }

    bool is_zero() const {
        for (auto& v : c_)
            if (!F_->is_zero(v)) return false;
        return true;
    }

    // Largest i with a_i != 0 on the q^s grid.
    unsigned sigma_degree() const {
        require(!is_zero(), errc::zero_polynomial, "sigma-degree of zero polynomial");
        unsigned k = 0;
        for (unsigned i = 0; i < F_->n(); ++i)
            if (!F_->is_zero(coeff_s(i))) k = i;
        return k;
    }

    Elem coeff_s(unsigned i) const { return c_[(static_cast<std::size_t>(i) * s_) % F_->n()]; }

    std::vector<Elem> coeffs_s() const {
        std::vector<Elem> out(sigma_degree() + 1);
        for (unsigned i = 0; i < out.size(); ++i) out[i] = coeff_s(i);
        return out;
    }

    bool operator==(const LinPoly& o) const { return *F_ == *o.F_ && c_ == o.c_; }

private:
    const Field* F_;
    unsigned s_;            // 0 only when n = 1
    std::vector<Elem> c_;   // canonical q^1 grid, length n
};

inline Elem evaluate(const LinPoly& f, Elem z) {
    const Field& F = f.field();
    Elem acc = F.zero();
    for (unsigned i = 0; i < F.n(); ++i) {
        Elem c = f.storage()[i];
        if (!F.is_zero(c)) acc = F.add(acc, F.mul(c, F.frobenius_q(z, i)));
    }
    return acc;
}

// F_q-linearly independent tuple of field elements (a basis of the subspace
// it spans).
class SubspaceBasis {
public:
    SubspaceBasis(const Field& F, std::vector<Elem> elems) : F_(&F), elems_(std::move(elems)) {
        FMat m(F, F.n(), elems_.size());
        for (std::size_t j = 0; j < elems_.size(); ++j) {
            auto coords = F.fq_coordinates(elems_[j]);
            for (unsigned i = 0; i < F.n(); ++i) m.at(i, j) = coords[i];
        }
        require(fmat_rank(std::move(m)) == elems_.size(), errc::dependent_basis,
                "elements are F_q-linearly dependent");
    }

    const Field& field() const { return *F_; }
    const std::vector<Elem>& elems() const { return elems_; }
    std::size_t dim() const { return elems_.size(); }

private:
    const Field* F_;
    std::vector<Elem> elems_;
};

namespace detail {
// n x n matrix of z -> f(z) in F_q-coordinates w.r.t. the gamma power basis.
inline FMat linear_map_matrix(const LinPoly& f) {
    const Field& F = f.field();
    unsigned n = F.n();
    FMat m(F, n, n);
    Elem gj = F.one();
    for (unsigned j = 0; j < n; ++j) {
        auto coords = F.fq_coordinates(evaluate(f, gj));
        for (unsigned i = 0; i < n; ++i) m.at(i, j) = coords[i];
        gj = F.mul(gj, F.gamma());
    }
    return m;
}
}  // namespace detail

inline unsigned kernel_dim(const LinPoly& f) {
    const Field& F = f.field();
    return F.n() - static_cast<unsigned>(fmat_rank(detail::linear_map_matrix(f)));
}

// Deterministic kernel basis: nullspace of the F_q matrix in RREF order,
// mapped back through gamma coordinates.
inline SubspaceBasis kernel_basis(const LinPoly& f) {
    const Field& F = f.field();
    auto null_vecs = fmat_nullspace(detail::linear_map_matrix(f));
    std::vector<Elem> elems;
    elems.reserve(null_vecs.size());
    for (auto& v : null_vecs) elems.push_back(F.fq_combine(v));
    return SubspaceBasis(F, std::move(elems));
}

inline unsigned rank(const LinPoly& f) { return f.field().n() - kernel_dim(f); }

// Adjoint w.r.t. the bilinear form <x, y> = Tr(xy): coefficient at q^i moves
// to q^{n-i} and gets raised to q^{n-i}.  A q^s view maps to a q^{n-s} view.
inline LinPoly adjoint(const LinPoly& f) {
    const Field& F = f.field();
    unsigned n = F.n();
    std::vector<Elem> out(n, F.zero());
    for (unsigned i = 0; i < n; ++i) {
        unsigned j = (n - i) % n;
        out[j] = F.frobenius_q(f.storage()[i], j);
    }
    long s_hat = n == 1 ? 1 : static_cast<long>(n - f.s());
    return LinPoly::from_storage(F, s_hat, std::move(out));
}

// f(g(x)) reduced modulo x^{q^n} - x.
inline LinPoly compose_mod(const LinPoly& f, const LinPoly& g) {
    require(f.field() == g.field(), errc::ctx_mismatch, "compose: different fields");
    const Field& F = f.field();
    unsigned n = F.n();
    std::vector<Elem> out(n, F.zero());
    for (unsigned i = 0; i < n; ++i) {
        Elem fi = f.storage()[i];
        if (F.is_zero(fi)) continue;
        for (unsigned j = 0; j < n; ++j) {
            Elem gj = g.storage()[j];
            if (F.is_zero(gj)) continue;
            unsigned t = (i + j) % n;
            out[t] = F.add(out[t], F.mul(fi, F.frobenius_q(gj, i)));
        }
    }
    long s = (f.s() == g.s()) ? static_cast<long>(f.s()) : 1;
    return LinPoly::from_storage(F, n == 1 ? 1 : s, std::move(out));
}

inline LinPoly scalar_mul(Elem c, const LinPoly& f) {
    const Field& F = f.field();
    std::vector<Elem> out = f.storage();
    for (auto& v : out) v = F.mul(c, v);
    return LinPoly::from_storage(F, f.s() == 0 ? 1 : f.s(), std::move(out));
}

inline LinPoly add(const LinPoly& f, const LinPoly& g) {
    require(f.field() == g.field(), errc::ctx_mismatch, "add: different fields");
    const Field& F = f.field();
    std::vector<Elem> out = f.storage();
    for (unsigned i = 0; i < F.n(); ++i) out[i] = F.add(out[i], g.storage()[i]);
    long s = (f.s() == g.s()) ? static_cast<long>(f.s()) : 1;
    return LinPoly::from_storage(F, F.n() == 1 ? 1 : s, std::move(out));
}

// Scale so the leading q^s-grid coefficient equals -1.
inline LinPoly monic_normalize(const LinPoly& f) {
    const Field& F = f.field();
    Elem lead = f.coeff_s(f.sigma_degree());
    Elem t = F.neg(F.inv(lead));
    return scalar_mul(t, f);
}

// If a_0 = ... = a_{j-1} = 0 != a_j on the q^s grid, replace f by the
// q^{sj}-th root polynomial (coefficients shifted down and raised to
// q^{-sj}); it has the same kernel.  Returns the polynomial and j.
inline std::pair<LinPoly, unsigned> strip_power(const LinPoly& f) {
    const Field& F = f.field();
    unsigned k = f.sigma_degree();
    unsigned j = 0;
    while (j <= k && F.is_zero(f.coeff_s(j))) ++j;
    if (j == 0) return {f, 0};
    std::vector<Elem> b(k - j + 1);
    long shift = -static_cast<long>(f.s()) * static_cast<long>(j);
    for (unsigned i = 0; i + j <= k; ++i) b[i] = F.frobenius_q(f.coeff_s(i + j), shift);
    return {LinPoly(F, f.s() == 0 ? 1 : f.s(), b), j};
}

// The unique (up to scalar) q-polynomial of q-degree k = dim(U) with kernel
// exactly span(U), normalized to leading coefficient -1.  Coefficients come
// out of the Laplace expansion of the Moore matrix along its x-row: the
// coefficient of x^{q^j} is the signed k x k minor complementary to column j.
inline LinPoly annihilator(const SubspaceBasis& U) {
    const Field& F = U.field();
    std::size_t k = U.dim();
    require(k + 1 <= F.n(), errc::precondition, "annihilator: dim(U) must be at most n-1");
    std::vector<Elem> coeffs(k + 1, F.zero());
    if (k == 0) {
        coeffs[0] = F.one();
    } else {
        // conj[t][c] = u_t^{q^c}
        std::vector<std::vector<Elem>> conj(k, std::vector<Elem>(k + 1));
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t c = 0; c <= k; ++c)
                conj[t][c] = F.frobenius_q(U.elems()[t], static_cast<long>(c));
        bool neg_sign = false;
        for (std::size_t j = 0; j <= k; ++j) {
            FMat minor(F, k, k);
            for (std::size_t t = 0; t < k; ++t) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c <= k; ++c) {
                    if (c == j) continue;
                    minor.at(t, cc++) = conj[t][c];
                }
            }
            Elem d = fmat_det(std::move(minor));
            coeffs[j] = neg_sign ? F.neg(d) : d;
            neg_sign = !neg_sign;
        }
        require(!F.is_zero(coeffs[k]), errc::dependent_basis,
                "annihilator: dependent basis");
    }
    return monic_normalize(LinPoly(F, 1, coeffs));
}

}  // namespace maxker

#endif

// The ambient finite field F_{q^n}, q = p^e, realized as F_p[x]/(modulus)
// with deg(modulus) = e*n.  Elements are integer codes: base-p digits,
// little-endian, are the coefficients of the residue polynomial.  The same
// code doubles as the element's I/O encoding.
//
// F_q lives inside as the fixed field of x -> x^{p^e}; all F_q-linear
// structure (coordinates w.r.t. the power basis of gamma, subfield
// membership) reduces to F_p linear algebra computed once at construction.
// For fields with at most 2^16 elements, exp/log and Frobenius tables make
// the arithmetic table-lookup cheap; exhaustive sweeps live entirely in that
// regime.

#ifndef MAXKER_GF_HPP
#define MAXKER_GF_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "maxker/error.hpp"
#include "maxker/fp.hpp"
#include "maxker/polyring.hpp"

namespace maxker {

struct Elem {
    std::uint64_t v = 0;
    auto operator<=>(const Elem&) const = default;
};

class Field {
public:
    static constexpr std::uint64_t kTableLimit = 1u << 16;
    static constexpr std::uint64_t kAddTableLimit = 256;

    // When modulus_digits is empty the defining polynomial is the first
    // irreducible monic polynomial of degree e*n in ascending code order.
    Field(std::uint64_t p, unsigned e, unsigned n,
          std::vector<std::uint32_t> modulus_digits = {})
        : fp_(p), p_(p), e_(e), n_(n), d_(e * n) {
        require(e >= 1 && n >= 1, errc::bad_modulus, "e and n must be positive");
        q_ = checked_pow(p_, e_, "q = p^e");
        order_ = checked_pow(p_, d_, "field order p^(e*n)");
        for (unsigned i = 0; i <= d_; ++i)
            ppow_.push_back(i == 0 ? 1 : ppow_.back() * p_);

        PolyRing<PrimeField> R(fp_);
        if (!modulus_digits.empty()) {
            std::vector<std::uint64_t> f(modulus_digits.begin(), modulus_digits.end());
            R.trim(f);
            require(R.degree(f) == static_cast<int>(d_), errc::bad_modulus,
                    "modulus must have degree e*n");
            f = R.monic(std::move(f));  // unit factors do not change the quotient
            require(R.irreducible(f, p_), errc::bad_modulus,
                    "modulus is reducible over F_p");
            modulus_.assign(f.begin(), f.end());
        } else {
            modulus_ = first_irreducible(R);
        }

        build_frobenius();
        if (order_ <= kTableLimit) build_tables();
        build_fq_structure();
    }

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned n() const { return n_; }
    unsigned degree() const { return d_; }       // e*n, over F_p
    std::uint64_t q() const { return q_; }
    std::uint64_t order() const { return order_; }
    Elem gamma() const { return gamma_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    std::uint64_t modulus_code() const {
        std::uint64_t c = 0;
        for (unsigned i = 0; i <= d_; ++i) c += modulus_[i] * pp(i);
        return c;
    }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && n_ == o.n_ && modulus_ == o.modulus_;
    }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    bool is_zero(Elem a) const { return a.v == 0; }
    bool eq(Elem a, Elem b) const { return a.v == b.v; }

    Elem elem(std::uint64_t code) const {
        require(code < order_, errc::bad_element, "element code out of range");
        return Elem{code};
    }

    // Embedding of F_p residues as constant polynomials.
    Elem from_scalar(std::uint64_t r) const { return Elem{r % p_}; }

    std::vector<std::uint32_t> coeffs(Elem a) const {
        std::vector<std::uint32_t> out(d_);
        std::uint64_t c = a.v;
        for (unsigned i = 0; i < d_; ++i) {
            out[i] = static_cast<std::uint32_t>(c % p_);
            c /= p_;
        }
        return out;
    }

    Elem from_coeffs(const std::vector<std::uint32_t>& digits) const {
        require(digits.size() <= d_, errc::bad_element, "coefficient vector too long");
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            require(digits[i] < p_, errc::bad_element, "coefficient out of range");
            c += static_cast<std::uint64_t>(digits[i]) * pp(i);
        }
        return Elem{c};
    }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return Elem{a.v ^ b.v};
        if (!add_tab_.empty()) return Elem{add_tab_[a.v * order_ + b.v]};
        std::uint64_t c = 0, x = a.v, y = b.v;
        for (unsigned i = 0; i < d_; ++i) {
            std::uint64_t s = (x % p_ + y % p_) % p_;
            c += s * pp(i);
            x /= p_;
            y /= p_;
        }
        return Elem{c};
    }

    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        std::uint64_t c = 0, x = a.v;
        for (unsigned i = 0; i < d_; ++i) {
            std::uint64_t r = x % p_;
            c += (r ? p_ - r : 0) * pp(i);
            x /= p_;
        }
        return Elem{c};
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (tabled_) {
            if (a.v == 0 || b.v == 0) return Elem{0};
            std::uint64_t s = log_[a.v] + log_[b.v];
            if (s >= order_ - 1) s -= order_ - 1;
            return Elem{exp_[s]};
        }
        return slow_mul(a, b);
    }

    Elem inv(Elem a) const {
        require(a.v != 0, errc::bad_element, "inverse of zero");
        if (tabled_) {
            std::uint64_t l = log_[a.v];
            return Elem{exp_[l == 0 ? 0 : order_ - 1 - l]};
        }
        return pow(a, order_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t expn) const {
        Elem r = one();
        while (expn) {
            if (expn & 1) r = mul(r, a);
            a = mul(a, a);
            expn >>= 1;
        }
        return r;
    }

    // z^{q^j}; j is taken modulo n.
    Elem frobenius_q(Elem z, long j) const {
        long jm = j % static_cast<long>(n_);
        if (jm < 0) jm += n_;
        if (jm == 0) return z;
        if (tabled_) return Elem{frob_[static_cast<std::size_t>(jm) * order_ + z.v]};
        auto digits = coeffs_u64(z);
        auto out = fp_apply(fp_, frobq_[jm], digits);
        return encode_u64(out);
    }

    // N_{q^n/q^m}(z), m | n: product of the Galois conjugates over F_{q^m}.
    Elem norm_to(Elem z, unsigned m) const {
        require(m >= 1 && n_ % m == 0, errc::not_subfield, "norm: m does not divide n");
        Elem acc = z, w = z;
        for (unsigned i = 1; i < n_ / m; ++i) {
            w = frobenius_q(w, m);
            acc = mul(acc, w);
        }
        return acc;
    }

    // Tr_{q^n/q^m}(z), m | n.
    Elem trace_to(Elem z, unsigned m) const {
        require(m >= 1 && n_ % m == 0, errc::not_subfield, "trace: m does not divide n");
        Elem acc = z, w = z;
        for (unsigned i = 1; i < n_ / m; ++i) {
            w = frobenius_q(w, m);
            acc = add(acc, w);
        }
        return acc;
    }

    bool in_subfield(Elem z, unsigned m) const {
        require(m >= 1 && n_ % m == 0, errc::not_subfield, "m does not divide n");
        return eq(frobenius_q(z, m), z);
    }

    // F_q-coordinates of z w.r.t. the power basis 1, gamma, ..., gamma^{n-1};
    // each coordinate is returned as an element of the subfield F_q.
    std::vector<Elem> fq_coordinates(Elem z) const {
        auto y = fp_apply(fp_, fq_inv_, coeffs_u64(z));
        std::vector<Elem> out(n_);
        for (unsigned i = 0; i < n_; ++i) {
            Elem c = zero();
            for (unsigned j = 0; j < e_; ++j) {
                std::uint64_t r = y[i * e_ + j];
                if (r) c = add(c, mul(from_scalar(r), fq_basis_[j]));
            }
            out[i] = c;
        }
        return out;
    }

    Elem fq_combine(const std::vector<Elem>& coords) const {
        require(coords.size() == n_, errc::bad_element, "need n coordinates");
        Elem acc = zero();
        for (unsigned i = 0; i < n_; ++i) acc = add(acc, mul(coords[i], gpow_[i]));
        return acc;
    }

    // F_p-basis of the subfield F_q (size e).
    const std::vector<Elem>& fq_basis() const { return fq_basis_; }

    // Smallest-code generator of the multiplicative group.
    Elem multiplicative_generator() const {
        if (tabled_ && order_ > 2) return Elem{exp_[1]};
        std::vector<std::uint64_t> primes = prime_factors(order_ - 1);
        for (std::uint64_t c = 2; c < order_; ++c) {
            Elem g{c};
            bool ok = true;
            for (auto r : primes)
                if (eq(pow(g, (order_ - 1) / r), one())) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        return one();  // order 2 field
    }

private:
    std::uint64_t pp(unsigned i) const { return ppow_[i]; }

    static std::uint64_t checked_pow(std::uint64_t base, unsigned exp, const char* what) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < exp; ++i) {
            require(r <= (std::uint64_t{1} << 62) / base, errc::field_too_large,
                    std::string(what) + " exceeds 2^62");
            r *= base;
        }
        return r;
    }

    static std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t r = 2; r * r <= n; ++r)
            if (n % r == 0) {
                out.push_back(r);
                while (n % r == 0) n /= r;
            }
        if (n > 1) out.push_back(n);
        return out;
    }

    std::vector<std::uint64_t> coeffs_u64(Elem a) const {
        std::vector<std::uint64_t> out(d_);
        std::uint64_t c = a.v;
        for (unsigned i = 0; i < d_; ++i) {
            out[i] = c % p_;
            c /= p_;
        }
        return out;
    }

    Elem encode_u64(const std::vector<std::uint64_t>& digits) const {
        std::uint64_t c = 0;
        for (unsigned i = 0; i < d_; ++i) c += digits[i] * pp(i);
        return Elem{c};
    }

    std::vector<std::uint64_t> first_irreducible(PolyRing<PrimeField>& R) const {
        for (std::uint64_t c = 0; c < order_; ++c) {
            std::vector<std::uint64_t> f(d_ + 1, 0);
            std::uint64_t x = c;
            for (unsigned i = 0; i < d_; ++i) {
                f[i] = x % p_;
                x /= p_;
            }
            f[d_] = 1;
            if (R.irreducible(f, p_)) return f;
        }
        fail(errc::internal, "no irreducible polynomial found");  // unreachable
    }

    Elem slow_mul(Elem a, Elem b) const {
        auto x = coeffs_u64(a);
        auto y = coeffs_u64(b);
        std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
        for (unsigned i = 0; i < d_; ++i) {
            if (!x[i]) continue;
            for (unsigned j = 0; j < d_; ++j)
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        }
        for (unsigned i = 2 * d_ - 2; i >= d_; --i) {
            std::uint64_t c = prod[i];
            if (c) {
                prod[i] = 0;
                for (unsigned j = 0; j < d_; ++j)
                    prod[i - d_ + j] = (prod[i - d_ + j] + c * (p_ - modulus_[j])) % p_;
            }
            if (i == d_) break;
        }
        prod.resize(d_);
        return encode_u64(prod);
    }

    void build_frobenius() {
        // Matrix of x -> x^p on F_p^d, columns are (x^i)^p mod modulus.
        PolyRing<PrimeField> R(fp_);
        std::vector<std::uint64_t> mod(modulus_.begin(), modulus_.end());
        FpMat frobp(d_, d_);
        for (unsigned i = 0; i < d_; ++i) {
            std::vector<std::uint64_t> xi(i + 1, 0);
            xi[i] = 1;
            auto img = R.powmod(xi, p_, mod);
            for (std::size_t r = 0; r < img.size(); ++r) frobp.at(r, i) = img[r];
        }
        frobp_ = frobp;
        // Powers of x -> x^q = (x -> x^p)^e, one matrix per Frobenius level.
        FpMat mq = FpMat::identity(d_);
        for (unsigned i = 0; i < e_; ++i) mq = fp_mul(fp_, frobp_, mq);
        frobq_.resize(n_);
        frobq_[0] = FpMat::identity(d_);
        for (unsigned j = 1; j < n_; ++j) frobq_[j] = fp_mul(fp_, mq, frobq_[j - 1]);
        frobq1_ = mq;
    }

    void build_tables() {
        tabled_ = true;
        // Generator search needs slow arithmetic only.
        std::vector<std::uint64_t> primes = prime_factors(order_ - 1);
        std::uint64_t gcode = 1;
        for (std::uint64_t c = 2; c < order_; ++c) {
            Elem g{c};
            bool ok = true;
            for (auto r : primes) {
                Elem t = g;
                // slow pow, tables not ready yet
                Elem acc = one();
                std::uint64_t ex = (order_ - 1) / r;
                while (ex) {
                    if (ex & 1) acc = slow_mul(acc, t);
                    t = slow_mul(t, t);
                    ex >>= 1;
                }
                if (acc.v == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gcode = c;
                break;
            }
        }
        exp_.resize(order_ - 1);
        log_.assign(order_, 0);
        Elem acc = one();
        for (std::uint64_t i = 0; i + 1 < order_; ++i) {
            exp_[i] = acc.v;
            log_[acc.v] = i;
            acc = slow_mul(acc, Elem{gcode});
        }
        require(acc.v == 1, errc::internal, "generator order mismatch");
        frob_.assign(static_cast<std::size_t>(n_) * order_, 0);
        for (std::uint64_t z = 0; z < order_; ++z) frob_[z] = static_cast<std::uint32_t>(z);
        std::uint64_t qj = 1;
        for (unsigned j = 1; j < n_; ++j) {
            qj = (qj * (q_ % (order_ - 1))) % (order_ - 1);
            std::uint32_t* row = frob_.data() + static_cast<std::size_t>(j) * order_;
            row[0] = 0;
            for (std::uint64_t i = 0; i + 1 < order_; ++i)
                row[exp_[i]] = static_cast<std::uint32_t>(exp_[(i * qj) % (order_ - 1)]);
        }
        if (p_ != 2 && order_ <= kAddTableLimit) {
            add_tab_.assign(order_ * order_, 0);
            for (std::uint64_t a = 0; a < order_; ++a)
                for (std::uint64_t b = 0; b <= a; ++b) {
                    std::uint64_t c = 0, x = a, y = b;
                    for (unsigned i = 0; i < d_; ++i) {
                        c += ((x % p_ + y % p_) % p_) * pp(i);
                        x /= p_;
                        y /= p_;
                    }
                    add_tab_[a * order_ + b] = static_cast<std::uint32_t>(c);
                    add_tab_[b * order_ + a] = static_cast<std::uint32_t>(c);
                }
        }
    }

    void build_fq_structure() {
        // F_q = fixed field of x -> x^{p^e}: nullspace of (frobp^e - I).
        if (e_ == 1) {
            fq_basis_ = {one()};
        } else {
            FpMat m = FpMat::identity(d_);
            for (unsigned i = 0; i < e_; ++i) m = fp_mul(fp_, frobp_, m);
            for (unsigned i = 0; i < d_; ++i) m.at(i, i) = fp_.sub(m.at(i, i), 1);
            auto ns = fp_nullspace(fp_, m);
            require(ns.size() == e_, errc::internal, "F_q basis has wrong dimension");
            for (auto& v : ns) fq_basis_.push_back(encode_u64(v));
        }
        // gamma: first element whose powers give an F_q-basis of the field.
        for (std::uint64_t zc = 0; zc < order_; ++zc) {
            Elem z{zc};
            FpMat m(d_, d_);
            Elem zi = one();
            for (unsigned i = 0; i < n_; ++i) {
                for (unsigned j = 0; j < e_; ++j) {
                    auto col = coeffs_u64(mul(fq_basis_[j], zi));
                    for (unsigned r = 0; r < d_; ++r) m.at(r, i * e_ + j) = col[r];
                }
                zi = mul(zi, z);
            }
            if (fp_rank(fp_, m) == d_) {
                gamma_ = z;
                fq_mat_ = m;
                fq_inv_ = fp_inverse(fp_, m);
                break;
            }
        }
        gpow_.resize(n_);
        gpow_[0] = one();
        for (unsigned i = 1; i < n_; ++i) gpow_[i] = mul(gpow_[i - 1], gamma_);
    }

    PrimeField fp_;
    std::uint64_t p_;
    unsigned e_, n_, d_;
    std::uint64_t q_ = 0, order_ = 0;
    std::vector<std::uint64_t> ppow_;
    std::vector<std::uint64_t> modulus_;  // digits, ascending, monic, length d+1

    FpMat frobp_;               // x -> x^p
    FpMat frobq1_;              // x -> x^q
    std::vector<FpMat> frobq_;  // x -> x^{q^j}, j = 0..n-1

    bool tabled_ = false;
    std::vector<std::uint64_t> exp_;
    std::vector<std::uint64_t> log_;
    std::vector<std::uint32_t> frob_;     // n rows of size `order`
    std::vector<std::uint32_t> add_tab_;  // only for tiny odd-characteristic fields

    std::vector<Elem> fq_basis_;
    Elem gamma_;
    std::vector<Elem> gpow_;
    FpMat fq_mat_, fq_inv_;
};

// Convenience wrappers matching the operation names used throughout.
inline Elem frobenius_q(const Field& F, Elem z, long j) { return F.frobenius_q(z, j); }
inline Elem norm_to(const Field& F, Elem z, unsigned m) { return F.norm_to(z, m); }
inline Elem trace_to(const Field& F, Elem z, unsigned m) { return F.trace_to(z, m); }

// gf::Field through the FieldOps lens, for PolyRing over extension fields.
struct FieldView {
    using value_type = Elem;
    const Field* F;

    explicit FieldView(const Field& f) : F(&f) {}
    Elem zero() const { return F->zero(); }
    Elem one() const { return F->one(); }
    bool is_zero(Elem a) const { return F->is_zero(a); }
    bool eq(Elem a, Elem b) const { return F->eq(a, b); }
    Elem add(Elem a, Elem b) const { return F->add(a, b); }
    Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
    Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
    Elem neg(Elem a) const { return F->neg(a); }
    Elem inv(Elem a) const { return F->inv(a); }
};

}  // namespace maxker

#endif

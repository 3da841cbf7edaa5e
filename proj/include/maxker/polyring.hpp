// Dense univariate polynomial arithmetic over any coefficient field exposing
// the FieldOps interface (PrimeField, gf::Field via FieldView, ...).  Used for
// modulus selection, irreducibility testing and relative extensions; none of
// this is performance critical.

#ifndef MAXKER_POLYRING_HPP
#define MAXKER_POLYRING_HPP

#include <cstdint>
#include <vector>

#include "maxker/error.hpp"

namespace maxker {

template <class K>
concept FieldOps = requires(const K k, typename K::value_type a) {
    { k.zero() };
    { k.one() };
    { k.add(a, a) };
    { k.sub(a, a) };
    { k.mul(a, a) };
    { k.neg(a) };
    { k.inv(a) };
    { k.is_zero(a) } -> std::convertible_to<bool>;
    { k.eq(a, a) } -> std::convertible_to<bool>;
};

// Coefficients ascending; invariant: no trailing zero (zero poly == empty).
template <FieldOps K>
struct PolyRing {
    using C = typename K::value_type;
    using P = std::vector<C>;

    const K& k;

    explicit PolyRing(const K& field) : k(field) {}

    void trim(P& f) const {
        while (!f.empty() && k.is_zero(f.back())) f.pop_back();
    }
    bool is_zero(const P& f) const { return f.empty(); }
    int degree(const P& f) const { return static_cast<int>(f.size()) - 1; }

    P x() const { return P{k.zero(), k.one()}; }

    P add(P f, const P& g) const {
        if (f.size() < g.size()) f.resize(g.size(), k.zero());
        for (std::size_t i = 0; i < g.size(); ++i) f[i] = k.add(f[i], g[i]);
        trim(f);
        return f;
    }

    P sub(P f, const P& g) const {
        if (f.size() < g.size()) f.resize(g.size(), k.zero());
        for (std::size_t i = 0; i < g.size(); ++i) f[i] = k.sub(f[i], g[i]);
        trim(f);
        return f;
    }

    P mul(const P& f, const P& g) const {
        if (f.empty() || g.empty()) return {};
        P h(f.size() + g.size() - 1, k.zero());
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (k.is_zero(f[i])) continue;
            for (std::size_t j = 0; j < g.size(); ++j)
                h[i + j] = k.add(h[i + j], k.mul(f[i], g[j]));
        }
        trim(h);
        return h;
    }

    // Remainder of f modulo g (g nonzero).
    P mod(P f, const P& g) const {
        require(!g.empty(), errc::internal, "poly mod by zero");
        C lead_inv = k.inv(g.back());
        while (f.size() >= g.size()) {
            C c = k.mul(f.back(), lead_inv);
            std::size_t shift = f.size() - g.size();
            if (!k.is_zero(c))
                for (std::size_t i = 0; i < g.size(); ++i)
                    f[shift + i] = k.sub(f[shift + i], k.mul(c, g[i]));
            f.pop_back();
            trim(f);
            if (f.size() < g.size()) break;
        }
        return f;
    }

    P mulmod(const P& f, const P& g, const P& m) const { return mod(mul(f, g), m); }

    P powmod(P f, std::uint64_t e, const P& m) const {
        P r{k.one()};
        f = mod(std::move(f), m);
        while (e) {
            if (e & 1) r = mulmod(r, f, m);
            f = mulmod(f, f, m);
            e >>= 1;
        }
        return r;
    }

    P monic(P f) const {
        trim(f);
        if (f.empty()) return f;
        C iv = k.inv(f.back());
        for (auto& c : f) c = k.mul(c, iv);
        return f;
    }

    P gcd(P f, P g) const {
        trim(f);
        trim(g);
        while (!g.empty()) {
            P r = mod(f, g);
            f = std::move(g);
            g = std::move(r);
        }
        return monic(std::move(f));
    }

    // Irreducibility over a field of kq elements: f (degree d >= 1) is
    // irreducible iff x^{kq^d} == x (mod f) and gcd(x^{kq^{d/r}} - x, f) = 1
    // for every prime r | d.
    bool irreducible(const P& f, std::uint64_t kq) const {
        int d = degree(f);
        if (d < 1) return false;
        if (d == 1) return true;
        P xp = x();
        // h_i holds x^{kq^i} mod f.
        P h = xp;
        std::vector<int> prime_factors;
        int dd = d;
        for (int r = 2; r * r <= dd; ++r)
            if (dd % r == 0) {
                prime_factors.push_back(r);
                while (dd % r == 0) dd /= r;
            }
        if (dd > 1) prime_factors.push_back(dd);
        std::vector<P> checkpoints(d + 1);
        for (int i = 1; i <= d; ++i) {
            h = powmod(h, kq, f);
            checkpoints[i] = h;
        }
        if (!eq(checkpoints[d], mod(xp, f))) return false;
        for (int r : prime_factors) {
            P diff = sub(checkpoints[d / r], mod(xp, f));
            if (degree(gcd(diff, f)) != 0) return false;
        }
        return true;
    }

    bool eq(const P& f, const P& g) const {
        if (f.size() != g.size()) return false;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!k.eq(f[i], g[i])) return false;
        return true;
    }
};

}  // namespace maxker

#endif

// Generalized Gabidulin codes G_{k,s} = <x, x^{q^s}, ..., x^{q^{s(k-1)}}>
// over F_{q^n} and desk-scale MRD verification: every nonzero codeword must
// have kernel dimension at most its sigma-degree, hence at most k-1.

#ifndef MAXKER_MRD_HPP
#define MAXKER_MRD_HPP

#include <cstdint>
#include <vector>

#include "maxker/families.hpp"
#include "maxker/linpoly.hpp"

namespace maxker {

struct LinearCode {
    const Field* F = nullptr;
    unsigned s = 1;
    unsigned k = 0;
    std::vector<LinPoly> generators;
};

inline LinearCode gabidulin_code(const Field& F, unsigned k, long s) {
    require(k >= 1 && k <= F.n(), errc::precondition, "gabidulin: need 1 <= k <= n");
    unsigned sn = LinPoly::normalize_step(F, s);
    LinearCode code{&F, sn == 0 ? 1 : sn, k, {}};
    for (unsigned i = 0; i < k; ++i) {
        std::vector<Elem> a(i + 1, F.zero());
        a[i] = F.one();
        code.generators.emplace_back(F, s, a);
    }
    // F_{q^n}-independence of the generators as coefficient vectors
    FMat m(F, F.n(), k);
    for (unsigned j = 0; j < k; ++j)
        for (unsigned i = 0; i < F.n(); ++i) m.at(i, j) = code.generators[j].storage()[i];
    require(fmat_rank(std::move(m)) == k, errc::internal, "dependent generators");
    return code;
}

struct MrdReport {
    bool is_mrd = false;
    unsigned max_kernel_dim = 0;  // over nonzero codewords
    unsigned min_rank = 0;        // over nonzero codewords
    std::vector<std::uint64_t> worst_coeffs;  // combination attaining max_kernel_dim
};

// Exhaustive check over all q^{nk} codewords (the zero codeword excluded):
// dim ker f <= sigma-degree(f) for each, and the extremes attained.
inline MrdReport verify_mrd(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    const Field& F = *code.F;
    unsigned k = code.k;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) {
        require(total <= budget / F.order(), errc::budget_exceeded,
                "codeword budget exceeded");
        total *= F.order();
    }
    MrdReport report;
    report.is_mrd = true;
    report.min_rank = F.n();
    std::vector<std::uint64_t> codes(k, 0);
    while (true) {
        unsigned pos = k;
        while (pos > 0) {
            if (++codes[pos - 1] < F.order()) break;
            codes[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;  // wrapped back to the zero codeword
        std::vector<Elem> storage(F.n(), F.zero());
        for (unsigned i = 0; i < k; ++i) {
            if (codes[i] == 0) continue;
            for (unsigned t = 0; t < F.n(); ++t) {
                Elem g = code.generators[i].storage()[t];
                if (!F.is_zero(g)) storage[t] = F.add(storage[t], F.mul(Elem{codes[i]}, g));
            }
        }
        LinPoly f = LinPoly::from_storage(F, code.s, std::move(storage));
        unsigned deg = f.sigma_degree();
        unsigned dim = kernel_dim(f);
        if (dim > deg) report.is_mrd = false;
        if (dim > report.max_kernel_dim) {
            report.max_kernel_dim = dim;
            report.worst_coeffs = codes;
        }
        report.min_rank = std::min(report.min_rank, F.n() - dim);
    }
    return report;
}

}  // namespace maxker

#endif

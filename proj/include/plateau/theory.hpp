// theory.hpp -- closed-form predicted weights and weight distributions for the
// codes built from plateaued functions, evaluated mechanically so they can be
// compared against exact enumeration.
//
// Two signs enter the odd-characteristic tables: the sign of the primal Walsh
// values (eps) drives the weight formulas, and the sign of the dual's Walsh
// value at zero (eps_dual) drives the multiplicity formulas through the dual
// value counts. The two coincide for some parameters and are forced opposite
// for others, so they are kept separate here; callers feed measured values.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "code.hpp"

namespace plateau {

struct PredictedDistribution {
    int p = 0, m = 0, r = 0;
    int eps = 0;       // sign of the primal Walsh values (0 for p = 2)
    int eps_dual = 0;  // sign of the dual's Walsh value at zero
    bool g_balanced = false;
    std::string provenance;
    std::vector<std::pair<int64_t, int64_t>> rows;  // (weight, multiplicity), includes weight 0
};

namespace detail {
inline int64_t ip(int p, int e) { return static_cast<int64_t>(big_pow(p, static_cast<unsigned>(e))); }
}

/// Distribution of the binary code of a plateaued Boolean function, m+r even.
inline PredictedDistribution predict_binary(int m, int r) {
    if (m < 2 || r < 0 || r > m - 2) fail(Errc::RangeViolation, "binary prediction requires 2 <= m and 0 <= r <= m-2");
    if ((m + r) % 2 != 0) fail(Errc::ParityViolation, "binary prediction requires m+r even");
    using detail::ip;
    PredictedDistribution d{2, m, r, 0, 0, false, "binary, m+r even", {}};
    d.rows = {
        {0, 1},
        {ip(2, m - 1), ip(2, m + 1) - ip(2, m - r) - 1},
        {ip(2, m - 1) - ip(2, (m + r - 2) / 2), ip(2, m - r - 1) + ip(2, (m - r - 2) / 2)},
        {ip(2, m - 1) + ip(2, (m + r - 2) / 2), ip(2, m - r - 1) - ip(2, (m - r - 2) / 2)},
    };
    return d;
}

/// Distribution for odd p and m+r even. The weight offsets carry the sign of
/// (p*)^((m+r)/2): the Walsh values are eps sqrt(p*)^(m+r) xi^g, and for
/// p = 3 mod 4 with (m+r)/2 odd that power is the negative of p^((m+r)/2).
inline PredictedDistribution predict_odd_even(int p, int m, int r, int eps, int eps_dual, bool g_balanced) {
    if (p == 2) fail(Errc::ParityViolation, "odd-characteristic table");
    if (m < 2 || r < 0 || r > m - 2) fail(Errc::RangeViolation, "requires 2 <= m and 0 <= r <= m-2");
    if ((m + r) % 2 != 0) fail(Errc::ParityViolation, "requires m+r even");
    using detail::ip;
    PredictedDistribution d{p, m, r, eps, eps_dual, g_balanced, g_balanced ? "odd p, m+r even, balanced dual" : "odd p, m+r even, unbalanced dual", {}};
    const int64_t base = ip(p, m) - ip(p, m - 1);
    const int sgn = ((p - 1) * (m + r) / 4) % 2 == 0 ? 1 : -1;  // sign of (p*)^((m+r)/2)
    const int64_t off = static_cast<int64_t>(eps) * sgn * ip(p, (m + r - 2) / 2);
    const int64_t corr = g_balanced ? 0 : static_cast<int64_t>(eps_dual) * ip(p, (m - r - 2) / 2) * (p - 1) * (p - 1);
    d.rows = {
        {0, 1},
        {base, ip(p, m + 1) - ip(p, m - r) * (p - 1) - 1},
        {base - (p - 1) * off, ip(p, m - r - 1) * (p - 1) + corr},
        {base + off, (ip(p, m - r) - ip(p, m - r - 1)) * (p - 1) - corr},
    };
    return d;
}

/// Distribution for odd p and m+r odd.
inline PredictedDistribution predict_odd_odd(int p, int m, int r, int eps, int eps_dual, bool g_balanced) {
    if (p == 2) fail(Errc::ParityViolation, "odd-characteristic table");
    if (r < 0 || r > m - 1) fail(Errc::RangeViolation, "requires 0 <= r <= m-1");
    if ((m + r) % 2 != 1) fail(Errc::ParityViolation, "requires m+r odd");
    using detail::ip;
    PredictedDistribution d{p, m, r, eps, eps_dual, g_balanced, g_balanced ? "odd p, m+r odd, balanced dual" : "odd p, m+r odd, unbalanced dual", {}};
    const int64_t base = ip(p, m) - ip(p, m - 1);
    const int sgn = ((p - 1) * (m + r + 1) / 4) % 2 == 0 ? 1 : -1;
    const int64_t off = static_cast<int64_t>(eps) * sgn * ip(p, (m + r - 1) / 2);
    const int64_t half_sq = static_cast<int64_t>(p - 1) * (p - 1) / 2;
    const int64_t lo_mult = g_balanced ? ip(p, m - r - 1) * half_sq
                                       : (ip(p, m - r - 1) + static_cast<int64_t>(eps_dual) * ip(p, (m - r - 1) / 2)) * half_sq;
    const int64_t hi_mult = g_balanced ? ip(p, m - r - 1) * half_sq
                                       : (ip(p, m - r - 1) - static_cast<int64_t>(eps_dual) * ip(p, (m - r - 1) / 2)) * half_sq;
    d.rows = {
        {0, 1},
        {base, ip(p, m + 1) - ip(p, m - r - 1) * (p - 1) * (p - 1) - 1},
        {base - off, lo_mult},
        {base + off, hi_mult},
    };
    return d;
}

/// Dispatches on characteristic and parity, feeding the measured signs and
/// dual balancedness from a classification report. The report must describe a
/// binary plateaued or (weakly) regular function.
inline PredictedDistribution predict(const PlateauedReport& rep, int p, int m) {
    if (!rep.is_plateaued) fail(Errc::NotPlateaued, "prediction requires a plateaued function");
    if (p == 2) return predict_binary(m, rep.r);
    if (rep.regularity != Regularity::Regular && rep.regularity != Regularity::WeaklyRegular)
        fail(Errc::RangeViolation, "tables apply to (weakly) regular functions only");
    if ((m + rep.r) % 2 == 0) return predict_odd_even(p, m, rep.r, rep.epsilon, rep.epsilon_dual, rep.g_balanced);
    return predict_odd_odd(p, m, rep.r, rep.epsilon, rep.epsilon_dual, rep.g_balanced);
}

/// Per-codeword predicted weight, odd p. `g_value` is the dual value at
/// alpha^{-1} beta for pairs whose Walsh value is nonzero; nullopt means the
/// Walsh value vanishes there.
inline int64_t predicted_weight(int p, int m, int r, int eps, bool alpha_nonzero, std::optional<int> g_value) {
    if (p == 2) fail(Errc::ParityViolation, "per-codeword prediction is stated for odd p");
    using detail::ip;
    const int64_t base = ip(p, m) - ip(p, m - 1);
    if (!alpha_nonzero || !g_value) return base;
    const int g = ((*g_value) % p + p) % p;
    if ((m + r) % 2 == 1) {
        if (g == 0) return base;
        const int sgn = ((p - 1) * (m + r + 1) / 4) % 2 == 0 ? 1 : -1;
        return base - static_cast<int64_t>(eps) * sgn * ip(p, (m + r - 1) / 2) * legendre(g, p);
    }
    const int sgn = ((p - 1) * (m + r) / 4) % 2 == 0 ? 1 : -1;  // sign of (p*)^((m+r)/2)
    if (g == 0) return base - static_cast<int64_t>(eps) * sgn * (p - 1) * ip(p, (m + r - 2) / 2);
    return base + static_cast<int64_t>(eps) * sgn * ip(p, (m + r - 2) / 2);
}

/// Cardinalities of the pair sets {(alpha, beta) : W(alpha^{-1} beta) = 0} and
/// its complement, alpha ranging over the nonzero prime-field residues.
inline std::pair<int64_t, int64_t> set_cardinalities(int p, int m, int r) {
    using detail::ip;
    return {(p - 1) * (ip(p, m) - ip(p, m - r)), (p - 1) * ip(p, m - r)};
}

/// Rows with zero multiplicity dropped, equal weights merged, sorted.
inline std::vector<std::pair<int64_t, int64_t>> normalized_rows(const PredictedDistribution& d) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (auto [w, a] : d.rows) {
        if (a == 0) continue;
        bool merged = false;
        for (auto& [ww, aa] : out)
            if (ww == w) {
                aa += a;
                merged = true;
                break;
            }
        if (!merged) out.emplace_back(w, a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool matches(const PredictedDistribution& d, const WeightDistribution& wd) {
    auto pred = normalized_rows(d);
    std::vector<std::pair<int64_t, int64_t>> emp;
    for (auto [w, a] : wd.rows) emp.emplace_back(static_cast<int64_t>(w), a);
    return pred == emp;
}

}  // namespace plateau

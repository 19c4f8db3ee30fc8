// classifier.hpp -- plateau detection and, for odd p, the regular / weakly
// regular / non-weakly regular classification with sign, unit, and dual
// extraction. Everything is decided by exact comparisons in Z[xi_p]; the
// square root of p* is always realized as a quadratic Gauss sum power.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "walsh.hpp"

namespace plateau {

enum class Regularity {
    Regular,           // unit +1
    WeaklyRegular,     // constant unit != +1
    NonWeaklyRegular,  // sign varies over the support
    NotApplicable,     // p = 2, or not plateaued
};

enum class Unit { One, MinusOne, PlusI, MinusI, None };

inline const char* to_string(Regularity r) {
    switch (r) {
        case Regularity::Regular: return "regular";
        case Regularity::WeaklyRegular: return "weakly_regular";
        case Regularity::NonWeaklyRegular: return "non_weakly_regular";
        default: return "not_applicable";
    }
}

inline const char* to_string(Unit u) {
    switch (u) {
        case Unit::One: return "1";
        case Unit::MinusOne: return "-1";
        case Unit::PlusI: return "i";
        case Unit::MinusI: return "-i";
        default: return "none";
    }
}

struct PlateauedReport {
    bool is_plateaued = false;
    int r = -1;
    bool is_bent = false;  // r == 0
    Regularity regularity = Regularity::NotApplicable;

    // odd p, weakly regular (or regular) only:
    int epsilon = 0;           // sign of the Walsh values against the Gauss-sum power
    Unit unit = Unit::None;    // the unit u with W = u p^((m+r)/2) xi^g on the support
    int epsilon_dual = 0;      // measured sign of the dual's Walsh value at 0
    bool epsilon_relation_consistent = true;  // measured epsilon_dual vs the exact identity

    PAryFunction dual;                  // g, zero off-support
    std::vector<uint32_t> support;      // Walsh support, canonical order
    std::vector<int64_t> ng_counts;     // occurrences of each dual value over the support
    bool g_balanced = false;

    // per-support-point diagnostics (meaningful for non-weakly regular inputs)
    std::vector<int> eps_by_support;
    std::vector<int> g_by_support;

    // p = 2 only: counts of the Walsh values +2^((m+r)/2), 0, -2^((m+r)/2)
    int64_t count_plus = 0, count_zero = 0, count_minus = 0;
};

/// Decides whether all |W(b)|^2 lie in {0, p^(m+r)} and returns r; the support
/// size is cross-checked against p^(m-r). Returns nullopt when the spectrum is
/// not plateaued.
inline std::optional<int> detect_plateau(const WalshSpectrum& s) {
    const Field& F = *s.field;
    const int p = F.p(), m = F.m();
    std::optional<BigInt> mag;  // the unique nonzero |W|^2
    for (uint32_t b : s.support) {
        auto a2 = rational_value(abs_square(s.values[b]));
        if (!a2) return std::nullopt;
        if (!mag)
            mag = *a2;
        else if (*mag != *a2)
            return std::nullopt;
    }
    if (!mag) return std::nullopt;  // empty spectrum cannot happen for a genuine transform
    // mag must be p^(m+r) for some 0 <= r <= m
    BigInt v = *mag;
    int j = 0;
    while (v % p == 0) {
        v /= p;
        ++j;
    }
    if (v != 1 || j < m || j > 2 * m) return std::nullopt;
    const int r = j - m;
    if (static_cast<BigInt>(s.support.size()) != big_pow(p, static_cast<unsigned>(m - r))) return std::nullopt;
    return r;
}

/// Unit u from the sign epsilon: u sqrt(p)^(m+r) equals epsilon sqrt(p*)^(m+r).
inline Unit derive_unit(int epsilon, int p, int m, int r) {
    if (p == 2) fail(Errc::ParityViolation, "units are defined for odd p");
    const int mr = m + r;
    if (mr % 2 == 0) {
        const bool flip = legendre(-1, p) == -1 && (mr / 2) % 2 == 1;  // sign of (p*)^((m+r)/2)
        const int u = flip ? -epsilon : epsilon;
        return u > 0 ? Unit::One : Unit::MinusOne;
    }
    if (p % 4 == 1) return epsilon > 0 ? Unit::One : Unit::MinusOne;
    return epsilon > 0 ? Unit::PlusI : Unit::MinusI;
}

/// The dual sign forced by the exact Gauss-sum identity
///   sum_{b in Supp} xi^(g(b)) = eps (-1/p)^m G^(m-r),
/// given the sign eps of the primal Walsh values.
inline int expected_dual_sign(int epsilon, int p, int m, int r) {
    const int e = m + (m - r) / 2;
    return (legendre(-1, p) == -1 && e % 2 == 1) ? -epsilon : epsilon;
}

/// Full classification of a verified r-plateaued spectrum, odd p. Each
/// support value is matched exactly against +-G^(m+r) xi^j; a constant sign
/// yields (weak) regularity and the dual g, a varying sign is reported as
/// non-weakly regular with per-point data retained.
inline PlateauedReport classify(const WalshSpectrum& s, int r) {
    const Field& F = *s.field;
    const int p = F.p(), m = F.m();
    if (p == 2) fail(Errc::ParityViolation, "regularity classification is defined for odd p");
    if (r < 0 || r > m) fail(Errc::RangeViolation, "invalid plateau amplitude");

    PlateauedReport rep;
    rep.is_plateaued = true;
    rep.r = r;
    rep.is_bent = (r == 0);
    rep.support = s.support;
    rep.dual = PAryFunction{s.field, std::vector<uint8_t>(F.size(), 0)};

    const CycInt T = cyc_pow(gauss_sum(p), static_cast<unsigned>(m + r));
    std::map<std::vector<BigInt>, std::pair<int, int>> lut;  // canonical coeffs -> (eps, g)
    for (int j = 0; j < p; ++j) {
        const CycInt base = T * CycInt::root_power(p, j);
        lut[base.coeffs()] = {1, j};
        lut[(-base).coeffs()] = {-1, j};
    }

    for (uint32_t b : s.support) {
        auto it = lut.find(s.values[b].coeffs());
        if (it == lut.end())
            fail(Errc::NoCanonicalForm, "a support value matches no +-G^(m+r) xi^j candidate");
        rep.eps_by_support.push_back(it->second.first);
        rep.g_by_support.push_back(it->second.second);
        rep.dual.table[b] = static_cast<uint8_t>(it->second.second);
    }

    rep.ng_counts.assign(static_cast<size_t>(p), 0);
    for (int g : rep.g_by_support) rep.ng_counts[static_cast<size_t>(g)] += 1;
    rep.g_balanced = true;
    for (const auto& c : rep.ng_counts) rep.g_balanced = rep.g_balanced && c == rep.ng_counts[0];

    bool constant_sign = true;
    for (int e : rep.eps_by_support) constant_sign = constant_sign && e == rep.eps_by_support[0];
    if (!constant_sign) {
        rep.regularity = Regularity::NonWeaklyRegular;
        return rep;
    }

    rep.epsilon = rep.eps_by_support.empty() ? 1 : rep.eps_by_support[0];
    rep.unit = derive_unit(rep.epsilon, p, m, r);
    rep.regularity = rep.unit == Unit::One ? Regularity::Regular : Regularity::WeaklyRegular;

    // measured dual sign: sum_j N_g(j) xi^j must equal +-(v p^((m-r)/2)),
    // realized exactly as a Gauss-sum product
    CycInt X = CycInt::from_counts(p, rep.ng_counts);
    CycInt D = (m - r) % 2 == 0 ? CycInt::rational(p, big_pow(p, static_cast<unsigned>((m - r) / 2)))
                                : gauss_sum(p) * big_pow(p, static_cast<unsigned>((m - r - 1) / 2));
    if (X == D)
        rep.epsilon_dual = 1;
    else if (X == -D)
        rep.epsilon_dual = -1;
    else
        rep.epsilon_dual = 0;
    rep.epsilon_relation_consistent = rep.epsilon_dual == expected_dual_sign(rep.epsilon, p, m, r);
    return rep;
}

/// Plateau detection plus the appropriate per-characteristic report: odd p
/// gets the full classification, p = 2 gets the Walsh value counts.
inline PlateauedReport analyze(const WalshSpectrum& s) {
    const Field& F = *s.field;
    auto r = detect_plateau(s);
    if (!r) {
        PlateauedReport rep;
        rep.support = s.support;
        return rep;
    }
    if (F.p() != 2) return classify(s, *r);

    PlateauedReport rep;
    rep.is_plateaued = true;
    rep.r = *r;
    rep.is_bent = (*r == 0);
    rep.support = s.support;
    // binary plateaued spectra force m+r even; values are +-2^((m+r)/2)
    const BigInt amp = big_pow(2, static_cast<unsigned>((F.m() + *r) / 2));
    for (const CycInt& w : s.values) {
        const BigInt& v = w.coeffs()[0];
        if (v == 0)
            rep.count_zero += 1;
        else if (v == amp)
            rep.count_plus += 1;
        else if (v == -amp)
            rep.count_minus += 1;
        else
            fail(Errc::NoCanonicalForm, "binary Walsh value is not 0 or +-2^((m+r)/2)");
    }
    return rep;
}

struct DualCheck {
    bool ok = true;
    uint32_t mismatch_index = 0;
};

/// Exact check of the dual identity: for every x,
///   sum_{b in Supp} xi^(g(b) - Tr(bx)) = eps (-1/p)^m G^(m-r) xi^(f(-x)),
/// which is the inverse-transform statement W_g = u^{-1} p^((m-r)/2) xi^(f(-x))
/// with the unit realized as a Gauss-sum product.
inline DualCheck verify_dual_inverse(const PlateauedReport& rep, const PAryFunction& f) {
    if (rep.regularity != Regularity::Regular && rep.regularity != Regularity::WeaklyRegular)
        fail(Errc::RangeViolation, "dual identity requires a (weakly) regular report");
    const Field& F = *f.field;
    const int p = F.p(), m = F.m();
    const uint32_t q = F.size(), n = F.order();

    CycInt K = cyc_pow(gauss_sum(p), static_cast<unsigned>(m - rep.r));
    int sign = rep.epsilon;
    if (legendre(-1, p) == -1 && m % 2 == 1) sign = -sign;
    if (sign < 0) K = -K;

    std::vector<int64_t> counts(static_cast<size_t>(p));
    for (uint32_t x = 0; x < q; ++x) {
        std::fill(counts.begin(), counts.end(), 0);
        for (uint32_t b : rep.support) {
            int tr = 0;
            if (b != 0 && x != 0) tr = F.trace_of_gen_pow(static_cast<uint32_t>((static_cast<uint64_t>(b - 1) + (x - 1)) % n));
            int e = rep.dual.table[b] - tr;
            if (e < 0) e += p;
            counts[static_cast<size_t>(e)] += 1;
        }
        const CycInt lhs = CycInt::from_counts(p, counts);
        const CycInt rhs = K * CycInt::root_power(p, f.table[F.neg_idx(x)]);
        if (!(lhs == rhs)) return {false, x};
    }
    return {true, 0};
}

/// Expected counts of the binary Walsh values (+2^((m+r)/2), -2^((m+r)/2))
/// for a plateaued Boolean function vanishing at 0 (every Tr(Psi) does).
inline std::pair<int64_t, int64_t> binary_counts_expected(int m, int r) {
    if ((m + r) % 2 != 0) fail(Errc::ParityViolation, "binary plateaued spectra require m+r even");
    if (r == m) return {1, 0};  // single-point support
    const int64_t half = static_cast<int64_t>(big_pow(2, static_cast<unsigned>(m - r - 1)));
    const int64_t d = static_cast<int64_t>(big_pow(2, static_cast<unsigned>((m - r - 2) / 2)));
    return {half + d, half - d};
}

/// Closed-form dual value counts N_g(j) over the support.
inline std::vector<int64_t> ng_predicted(int p, int m, int r, int epsilon_dual, bool balanced) {
    if (p == 2) fail(Errc::ParityViolation, "dual value counts are defined for odd p");
    if (r < 0 || r > m) fail(Errc::RangeViolation, "invalid plateau amplitude");
    std::vector<int64_t> out(static_cast<size_t>(p), 0);
    if (r == m) {  // single-point support
        out[0] = 1;
        return out;
    }
    const int64_t base = static_cast<int64_t>(big_pow(p, static_cast<unsigned>(m - r - 1)));
    if (balanced) {
        for (auto& v : out) v = base;
        return out;
    }
    if ((m - r) % 2 == 0) {
        const int64_t d = static_cast<int64_t>(big_pow(p, static_cast<unsigned>((m - r - 2) / 2)));
        out[0] = base + static_cast<int64_t>(epsilon_dual) * d * (p - 1);
        for (int j = 1; j < p; ++j) out[static_cast<size_t>(j)] = base - static_cast<int64_t>(epsilon_dual) * d;
    } else {
        const int64_t d = static_cast<int64_t>(big_pow(p, static_cast<unsigned>((m - r - 1) / 2)));
        out[0] = base;
        for (int j = 1; j < p; ++j) out[static_cast<size_t>(j)] = base + static_cast<int64_t>(epsilon_dual) * d * legendre(j, p);
    }
    return out;
}

}  // namespace plateau

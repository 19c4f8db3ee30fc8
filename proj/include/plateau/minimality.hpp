// minimality.hpp -- minimal-codeword checks: the w_min/w_max sufficient
// condition, the parameter ranges under which it is guaranteed, and a
// brute-force pairwise oracle over scalar classes.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "code.hpp"

namespace plateau {

/// supp(b) contained in supp(a).
inline bool covers(std::span<const uint8_t> a, std::span<const uint8_t> b) {
    if (a.size() != b.size()) fail(Errc::LengthMismatch, "vectors of different length");
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0 && a[i] == 0) return false;
    return true;
}

/// (p-1)/p < w_min/w_max, checked in exact integer arithmetic. When true,
/// every nonzero codeword is minimal.
inline bool ashikhmin_barg(const WeightDistribution& wd, int p) {
    auto [lo, hi] = min_max_weights(wd);
    return static_cast<int64_t>(p - 1) * hi < static_cast<int64_t>(p) * lo;
}

enum class ParityCase { BinaryEven, OddEven, OddOdd };

/// The sufficient parameter ranges: m >= 4 and r <= m-4 for the even cases,
/// m >= 3 and r <= m-3 for the odd-odd case.
inline bool range_guarantee(int /*p*/, int m, int r, ParityCase pc) {
    if (r < 0) return false;
    switch (pc) {
        case ParityCase::BinaryEven:
        case ParityCase::OddEven: return m >= 4 && r <= m - 4;
        case ParityCase::OddOdd: return m >= 3 && r <= m - 3;
    }
    return false;
}

struct MinimalityResult {
    bool all_minimal = true;
    bool has_witness = false;
    // witness: the (alpha, beta) pairs of a covering codeword and a covered one
    std::pair<int, uint32_t> coverer{0, 0};
    std::pair<int, uint32_t> covered{0, 0};
};

/// Brute-force minimality oracle. Codewords are deduplicated as vectors (the
/// parameterization need not be injective for degenerate codes) and grouped
/// into scalar classes; all classes share a support with their members, so one
/// representative per class is compared pairwise. A class whose support
/// contains another class's support defeats minimality.
inline MinimalityResult all_minimal_exhaustive(const LinearCode& c, uint64_t max_codewords = 65536) {
    const Field& F = *c.field;
    const int p = c.p;
    const uint32_t q = F.size();
    const uint64_t pairs = static_cast<uint64_t>(p) * q;
    if (pairs > max_codewords) fail(Errc::BudgetExceeded, "too many codewords for pairwise comparison");

    // distinct nonzero codewords, keyed by their canonical scalar multiple
    // (the lexicographically smallest of {lambda * v})
    std::map<std::vector<uint8_t>, std::pair<int, uint32_t>> classes;
    std::vector<uint8_t> buf(c.n), scaled(c.n);
    for (uint64_t id = 1; id < pairs; ++id) {
        const int alpha = static_cast<int>(id / q);
        const uint32_t beta = static_cast<uint32_t>(id % q);
        codeword(c, alpha, beta, buf);
        bool zero = true;
        for (uint8_t v : buf) zero = zero && v == 0;
        if (zero) continue;
        std::vector<uint8_t> canon = buf;
        for (int lam = 2; lam < p; ++lam) {
            for (uint32_t j = 0; j < c.n; ++j) scaled[j] = static_cast<uint8_t>(lam * buf[j] % p);
            if (scaled < canon) canon = scaled;
        }
        classes.emplace(std::move(canon), std::make_pair(alpha, beta));
    }

    const size_t words = (c.n + 63) / 64;
    std::vector<std::vector<uint64_t>> masks;
    std::vector<int> wt;
    std::vector<std::pair<int, uint32_t>> reps;
    for (const auto& [vec, pair] : classes) {
        std::vector<uint64_t> mask(words, 0);
        int w = 0;
        for (uint32_t j = 0; j < c.n; ++j)
            if (vec[j] != 0) {
                mask[j / 64] |= 1ull << (j % 64);
                ++w;
            }
        masks.push_back(std::move(mask));
        wt.push_back(w);
        reps.push_back(pair);
    }

    for (size_t i = 0; i < reps.size(); ++i) {
        for (size_t j = 0; j < reps.size(); ++j) {
            if (i == j || wt[j] > wt[i]) continue;
            bool contained = true;
            for (size_t w = 0; w < words && contained; ++w) contained = (masks[j][w] & ~masks[i][w]) == 0;
            if (contained) return {false, true, reps[i], reps[j]};
        }
    }
    return {true, false, {0, 0}, {0, 0}};
}

}  // namespace plateau

// code.hpp -- the [p^m - 1, m+1] linear code spanned by alpha*psi(x) - Tr(beta x)
// evaluated over the nonzero field elements in generator-power order, its
// exact weight distribution by full enumeration, and the Galois-automorphism
// weight formula used to cross-check it.
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "classifier.hpp"
#include "walsh.hpp"

namespace plateau {

struct LinearCode {
    FieldPtr field;
    int p = 0;
    uint32_t n = 0;          // p^m - 1
    int k = 0;               // verified dimension (rank of the m+1 generators)
    bool degenerate = false; // k < m+1
    std::vector<uint8_t> psi_row;    // psi(zeta^i), i = 0..n-1
    std::vector<uint8_t> trace_row;  // Tr(zeta^i)
};

struct WeightDistribution {
    std::vector<std::pair<uint32_t, int64_t>> rows;  // sorted by weight, includes weight 0
    int64_t total() const {
        int64_t t = 0;
        for (const auto& [w, a] : rows) t += a;
        return t;
    }
};

namespace detail {

inline int rank_mod_p(std::vector<std::vector<int>> mat, int p) {
    const size_t rows = mat.size();
    if (rows == 0) return 0;
    const size_t cols = mat[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && mat[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(mat[rank], mat[pivot]);
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (mat[rank][c] * t % p == 1) inv = t;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == rank || mat[rr][c] == 0) continue;
            const int f = mat[rr][c] * inv % p;
            for (size_t cc = c; cc < cols; ++cc) mat[rr][cc] = ((mat[rr][cc] - f * mat[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace detail

inline LinearCode build_code(const PAryFunction& psi) {
    const Field& F = *psi.field;
    LinearCode c;
    c.field = psi.field;
    c.p = F.p();
    c.n = F.order();
    c.psi_row.resize(c.n);
    c.trace_row.resize(c.n);
    for (uint32_t i = 0; i < c.n; ++i) {
        c.psi_row[i] = psi.table[1 + i];
        c.trace_row[i] = static_cast<uint8_t>(F.trace_of_gen_pow(i));
    }
    // dimension = rank of the psi row together with the m trace rows Tr(zeta^j x)
    std::vector<std::vector<int>> gens;
    gens.emplace_back(c.psi_row.begin(), c.psi_row.end());
    for (int j = 0; j < F.m(); ++j) {
        std::vector<int> row(c.n);
        for (uint32_t i = 0; i < c.n; ++i) row[i] = c.trace_row[(j + i) % c.n];
        gens.push_back(std::move(row));
    }
    c.k = detail::rank_mod_p(std::move(gens), c.p);
    c.degenerate = c.k < F.m() + 1;
    return c;
}

inline LinearCode build_code(const FunctionSpec& spec) { return build_code(evaluate(spec)); }

/// Materializes the codeword for (alpha, beta); out must have length n.
inline void codeword(const LinearCode& c, int alpha, uint32_t beta_idx, std::span<uint8_t> out) {
    if (out.size() != c.n) fail(Errc::LengthMismatch, "codeword buffer has wrong length");
    const int p = c.p;
    if (beta_idx == 0) {
        for (uint32_t i = 0; i < c.n; ++i) out[i] = static_cast<uint8_t>(alpha * c.psi_row[i] % p);
        return;
    }
    const uint32_t b = beta_idx - 1;
    for (uint32_t i = 0; i < c.n; ++i) {
        int v = (alpha * c.psi_row[i] - c.trace_row[(b + i) % c.n]) % p;
        if (v < 0) v += p;
        out[i] = static_cast<uint8_t>(v);
    }
}

inline int hamming_weight(const LinearCode& c, int alpha, uint32_t beta_idx) {
    const int p = c.p;
    int w = 0;
    if (beta_idx == 0) {
        if (alpha == 0) return 0;
        for (uint32_t i = 0; i < c.n; ++i) w += alpha * c.psi_row[i] % p != 0;
        return w;
    }
    const uint32_t b = beta_idx - 1;
    for (uint32_t i = 0; i < c.n; ++i) w += (alpha * c.psi_row[i] - c.trace_row[(b + i) % c.n]) % p != 0;
    return w;
}

/// Exact weight distribution by enumerating all p^(m+1) pairs (alpha, beta).
/// Enumeration parallelizes over pairs with a deterministic merge.
inline WeightDistribution weight_distribution(const LinearCode& c, int threads = 1, uint64_t budget = 100'000'000) {
    const uint32_t q = c.field->size();
    const uint64_t pairs = static_cast<uint64_t>(c.p) * q;
    if (pairs * c.n > budget) fail(Errc::BudgetExceeded, "weight enumeration exceeds the operation budget");

    const int nthreads = std::max(1, threads);
    std::vector<std::vector<int64_t>> hist(static_cast<size_t>(nthreads), std::vector<int64_t>(c.n + 1, 0));
    auto work = [&](int t) {
        const uint64_t lo = pairs * t / nthreads, hi = pairs * (t + 1) / nthreads;
        auto& h = hist[static_cast<size_t>(t)];
        for (uint64_t id = lo; id < hi; ++id) {
            const int alpha = static_cast<int>(id / q);
            const uint32_t beta = static_cast<uint32_t>(id % q);
            h[static_cast<size_t>(hamming_weight(c, alpha, beta))] += 1;
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    WeightDistribution wd;
    for (uint32_t w = 0; w <= c.n; ++w) {
        int64_t a = 0;
        for (const auto& h : hist) a += h[w];
        if (a != 0) wd.rows.emplace_back(w, a);
    }
    return wd;
}

/// Weight of the (alpha, beta) codeword from the Walsh spectrum of psi:
///   wt = p^m - p^(m-1) - (1/p) sum_{w in F_p^*} sigma_w(sigma_alpha(W(alpha^{-1} beta)))
/// for alpha != 0; the Galois sum is rational by construction.
inline int64_t weight_via_walsh(const WalshSpectrum& s, int alpha, uint32_t beta_idx) {
    const Field& F = *s.field;
    const int p = F.p();
    const int64_t qm = static_cast<int64_t>(big_pow(p, static_cast<unsigned>(F.m())));
    const int64_t base = qm - qm / p;
    alpha = (alpha % p + p) % p;
    if (alpha == 0) return beta_idx == 0 ? 0 : base;

    int ainv = 1;
    for (int t = 1; t < p; ++t)
        if (alpha * t % p == 1) ainv = t;
    const uint32_t gamma = F.mul_idx(F.from_residue(ainv).idx, beta_idx);

    const CycInt inner = conjugate(s.values[gamma], alpha);
    CycInt sum(p);
    for (int w = 1; w < p; ++w) sum += conjugate(inner, w);
    auto v = rational_value(sum);
    if (!v || *v % p != 0) fail(Errc::NonRationalSum, "Galois-automorphism weight sum is not a rational multiple of p");
    return base - static_cast<int64_t>(*v / p);
}

inline std::pair<uint32_t, uint32_t> min_max_weights(const WeightDistribution& wd) {
    uint32_t lo = 0, hi = 0;
    bool seen = false;
    for (const auto& [w, a] : wd.rows) {
        if (w == 0) continue;
        if (!seen) {
            lo = hi = w;
            seen = true;
        }
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    if (!seen) fail(Errc::RangeViolation, "weight distribution has no nonzero weights");
    return {lo, hi};
}

/// "1+3y^8+59y^16+1y^24" with weights ascending.
inline std::string format_enumerator(const WeightDistribution& wd) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, a] : wd.rows) {
        if (!first) os << "+";
        if (w == 0)
            os << a;
        else
            os << a << "y^" << w;
        first = false;
    }
    return os.str();
}

}  // namespace plateau

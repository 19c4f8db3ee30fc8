// search.hpp -- enumerative search for plateaued functions over coefficient
// assignments of a fixed monomial-exponent template. Candidates are screened
// with an integer-counts plateau test before any big-integer work, so
// exhaustive desk-scale sweeps stay cheap.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "classifier.hpp"
#include "walsh.hpp"

namespace plateau {

struct SweepOptions {
    FieldPtr field;
    std::vector<uint64_t> exponents;  // the monomial template, coefficients swept
    bool exhaustive = true;
    uint64_t random_count = 0;  // number of samples in random mode
    uint64_t seed = 0;
    uint64_t budget = 10'000'000;  // candidate cap for exhaustive mode
    int threads = 1;
};

using ReportFilter = std::function<bool(const PlateauedReport&)>;
// return false to stop the sweep
using SweepSink = std::function<bool(const FunctionSpec&, const PlateauedReport&)>;

/// Exponents of the quadratic monomials x^(p^i + p^j); sums of these with
/// arbitrary coefficients are quadratic forms, a dependable source of
/// plateaued functions at every amplitude.
inline std::vector<uint64_t> quadratic_exponents(int p, int m) {
    std::vector<uint64_t> out;
    uint64_t pi = 1;
    for (int i = 0; i < m; ++i) {
        uint64_t pj = pi;
        for (int j = i; j < m; ++j) {
            if (!(p == 2 && i == j))  // x^(2^(i+1)) is linear in characteristic 2
                out.push_back(pi + pj);
            pj *= static_cast<uint64_t>(p);
        }
        pi *= static_cast<uint64_t>(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

/// Integer-only screen: true iff all |W(b)|^2 computed from the group-ring
/// counts lie in {0, p^(m+r)} for a single r.
inline bool counts_plateaued(const Field& F, const WalshScratch& ws) {
    const int p = F.p();
    const uint32_t q = F.size();
    int64_t mag = -1;
    BigInt qm = big_pow(p, static_cast<unsigned>(F.m()));
    for (uint32_t b = 0; b < q; ++b) {
        const int64_t* cnt = ws.a.data() + static_cast<size_t>(b) * p;
        bool zero = true;
        for (int j = 1; j < p && zero; ++j) zero = cnt[j] == cnt[0];
        if (zero) continue;
        // |W|^2 in group-ring coordinates: v_t = sum_j cnt_j cnt_{j-t}
        int64_t v1 = 0;
        for (int t = 1; t < p; ++t) {
            int64_t v = 0;
            for (int j = 0; j < p; ++j) v += cnt[j] * cnt[(j - t + p) % p];
            if (t == 1)
                v1 = v;
            else if (v != v1)
                return false;
        }
        int64_t v0 = 0;
        for (int j = 0; j < p; ++j) v0 += cnt[j] * cnt[j];
        const int64_t a2 = v0 - v1;
        if (a2 == 0) continue;
        if (mag < 0) {
            int64_t v = a2;
            while (v % p == 0) v /= p;
            if (v != 1 || a2 < static_cast<int64_t>(qm)) return false;
            mag = a2;
        } else if (a2 != mag) {
            return false;
        }
    }
    return mag > 0;
}

}  // namespace detail

/// Sweeps coefficient assignments of the template, classifying each candidate
/// and streaming those whose report passes the filter. Exhaustive mode emits
/// in lexicographic coefficient order; random mode is deterministic under a
/// fixed seed. Returns the number of emitted functions.
inline uint64_t sweep(const SweepOptions& opt, const ReportFilter& filter, const SweepSink& sink) {
    const Field& F = *opt.field;
    const uint32_t q = F.size(), n = F.order();
    const size_t nt = opt.exponents.size();
    if (nt == 0) fail(Errc::InvalidSpec, "sweep needs at least one template exponent");
    for (uint64_t e : opt.exponents)
        if (e == 0) fail(Errc::InvalidSpec, "template exponents must be positive");

    uint64_t total;
    if (opt.exhaustive) {
        total = 1;
        for (size_t i = 0; i < nt; ++i) {
            if (total > opt.budget / q) fail(Errc::BudgetExceeded, "exhaustive sweep too large");
            total *= q;
        }
    } else {
        total = opt.random_count;
    }

    // random tuples are drawn up front so the candidate order is fixed
    std::vector<uint32_t> random_codes;
    if (!opt.exhaustive) {
        std::mt19937_64 rng(opt.seed);
        random_codes.resize(total * nt);
        for (auto& cc : random_codes) cc = static_cast<uint32_t>(rng() % q);
    }
    auto tuple_of = [&](uint64_t id, std::vector<uint32_t>& codes) {
        codes.resize(nt);
        if (opt.exhaustive) {
            for (size_t i = nt; i-- > 0;) {
                codes[i] = static_cast<uint32_t>(id % q);
                id /= q;
            }
        } else {
            std::copy_n(random_codes.begin() + static_cast<ptrdiff_t>(id * nt), nt, codes.begin());
        }
    };

    // per-exponent stride tables: keprod[i][k] = k * e_i mod n
    std::vector<std::vector<uint32_t>> keprod(nt, std::vector<uint32_t>(n));
    for (size_t i = 0; i < nt; ++i) {
        const uint64_t e = opt.exponents[i] % n;
        for (uint32_t k = 0; k < n; ++k) keprod[i][k] = static_cast<uint32_t>(static_cast<uint64_t>(k) * e % n);
    }

    struct Hit {
        uint64_t id;
        PlateauedReport report;
    };
    auto classify_candidate = [&](uint64_t id, std::vector<uint32_t>& codes, PAryFunction& f,
                                  detail::WalshScratch& ws) -> std::optional<PlateauedReport> {
        tuple_of(id, codes);
        std::fill(f.table.begin(), f.table.end(), 0);
        for (uint32_t k = 0; k < n; ++k) {
            uint32_t acc = 0;
            for (size_t i = 0; i < nt; ++i) {
                if (codes[i] == 0) continue;
                const uint32_t pos = (codes[i] - 1 + keprod[i][k]) % n;
                acc = F.add_idx(acc, 1 + pos);
            }
            f.table[1 + k] = static_cast<uint8_t>(F.trace_of_idx(acc));
        }
        detail::walsh_counts(f, ws);
        if (!detail::counts_plateaued(F, ws)) return std::nullopt;
        PlateauedReport rep = analyze(detail::materialize(f, ws));
        if (!rep.is_plateaued || !filter(rep)) return std::nullopt;
        return rep;
    };

    const int nthreads = std::max(1, opt.threads);
    const uint64_t block = 8192;
    uint64_t emitted = 0;
    std::vector<uint32_t> codes;
    for (uint64_t lo = 0; lo < total; lo += block) {
        const uint64_t hi = std::min(total, lo + block);
        std::vector<std::vector<Hit>> hits(static_cast<size_t>(nthreads));
        auto work = [&](int t) {
            std::vector<uint32_t> tcodes;
            PAryFunction f{opt.field, std::vector<uint8_t>(q, 0)};
            detail::WalshScratch ws;
            auto& out = hits[static_cast<size_t>(t)];
            for (uint64_t id = lo + static_cast<uint64_t>(t); id < hi; id += static_cast<uint64_t>(nthreads)) {
                auto rep = classify_candidate(id, tcodes, f, ws);
                if (rep) out.push_back({id, std::move(*rep)});
            }
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        std::vector<Hit> merged;
        for (auto& h : hits)
            for (auto& x : h) merged.push_back(std::move(x));
        std::sort(merged.begin(), merged.end(), [](const Hit& a, const Hit& b) { return a.id < b.id; });
        for (auto& h : merged) {
            tuple_of(h.id, codes);
            FunctionSpec spec{opt.field, {}};
            for (size_t i = 0; i < nt; ++i)
                if (codes[i] != 0) spec.terms.push_back({codes[i], opt.exponents[i]});
            ++emitted;
            if (!sink(spec, h.report)) return emitted;
        }
    }
    return emitted;
}

}  // namespace plateau

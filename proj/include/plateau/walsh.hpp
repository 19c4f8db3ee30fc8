// walsh.hpp -- evaluation of p-ary functions from symbolic specs and exact
// Walsh spectra over Z[xi_p].
//
// Sign convention: W_f(b) = sum_x xi^(f(x) - Tr(bx)).
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "finite_field.hpp"

namespace plateau {

/// One monomial c * x^e of the polynomial Psi; the analyzed p-ary function is
/// psi(x) = Tr(Psi(x)). The coefficient is an element index (0 = zero).
struct Term {
    uint32_t coeff_idx = 0;
    uint64_t exponent = 1;
};

/// Symbolic spec of Psi over a concrete field. Psi(0) = 0 by construction:
/// constant terms are rejected.
struct FunctionSpec {
    FieldPtr field;
    std::vector<Term> terms;
};

/// A function GF(p^m) -> GF(p), tabulated in canonical element order
/// (0 first, then zeta^0, zeta^1, ...).
struct PAryFunction {
    FieldPtr field;
    std::vector<uint8_t> table;
};

struct WalshSpectrum {
    FieldPtr field;
    std::vector<CycInt> values;     // indexed by element order
    std::vector<uint32_t> support;  // indices with nonzero value
};

inline PAryFunction evaluate(const FunctionSpec& spec) {
    const Field& F = *spec.field;
    const uint32_t q = F.size(), n = F.order();
    for (const Term& t : spec.terms) {
        if (t.exponent == 0) fail(Errc::InvalidSpec, "constant terms are not allowed (Psi(0) must be 0)");
        if (t.coeff_idx >= q) fail(Errc::InvalidSpec, "coefficient index out of range");
    }
    PAryFunction f{spec.field, std::vector<uint8_t>(q, 0)};
    for (uint32_t k = 0; k < n; ++k) {  // x = zeta^k; x = 0 contributes Tr(0) = 0
        uint32_t acc = 0;               // packed coefficient accumulator, starts at zero element
        for (const Term& t : spec.terms) {
            if (t.coeff_idx == 0) continue;
            uint64_t e = t.exponent % n;
            uint32_t pos = static_cast<uint32_t>(((t.coeff_idx - 1) + static_cast<uint64_t>(k) * e) % n);
            acc = F.add_idx(acc, 1 + pos);
        }
        f.table[1 + k] = static_cast<uint8_t>(F.trace_of_idx(acc));
    }
    return f;
}

namespace detail {

/// Scratch buffers for the counts-based transform. The transform works in the
/// group ring Z[Z_p]: each Walsh value is carried as p multiplicities of
/// xi^0..xi^(p-1), so multiplying by a root of unity is a cyclic shift and no
/// reduction happens until the end.
struct WalshScratch {
    std::vector<int64_t> a, b;
    std::vector<uint32_t> dual;
};

/// Exact Walsh transform into ws.a: after the call, ws.a[b_idx*p + j] is the
/// multiplicity of xi^j in W(b), indexed by canonical element order.
inline void walsh_counts(const PAryFunction& f, WalshScratch& ws) {
    const Field& F = *f.field;
    const int p = F.p(), m = F.m();
    const uint32_t q = F.size(), n = F.order();
    const size_t pz = static_cast<size_t>(p);

    ws.a.assign(static_cast<size_t>(q) * pz, 0);
    ws.b.assign(static_cast<size_t>(q) * pz, 0);
    for (uint32_t x = 0; x < q; ++x) ws.b[static_cast<size_t>(F.pack_of_idx(x)) * pz + f.table[x]] += 1;

    // butterfly over the m-fold GF(p) structure; kernel xi^(-s*t)
    std::vector<int64_t> line(pz * pz);
    int64_t* cur = ws.b.data();
    int64_t* nxt = ws.a.data();
    uint32_t stride = 1;
    for (int d = 0; d < m; ++d) {
        const uint32_t blocks = q / (stride * p);
        for (uint32_t blk = 0; blk < blocks; ++blk) {
            for (uint32_t off = 0; off < stride; ++off) {
                const uint32_t base = blk * stride * p + off;
                for (int s = 0; s < p; ++s) {
                    const int64_t* src = cur + static_cast<size_t>(base + s * stride) * pz;
                    std::copy(src, src + pz, line.data() + static_cast<size_t>(s) * pz);
                }
                for (int t = 0; t < p; ++t) {
                    int64_t* dst = nxt + static_cast<size_t>(base + t * stride) * pz;
                    std::fill(dst, dst + pz, 0);
                    for (int s = 0; s < p; ++s) {
                        const int64_t* src = line.data() + static_cast<size_t>(s) * pz;
                        const int rot = s * t % p;  // xi^(-st): coefficient j comes from j + st
                        for (int j = 0; j < p; ++j) dst[j] += src[(j + rot) % p];
                    }
                }
            }
        }
        std::swap(cur, nxt);
        stride *= p;
    }

    // permute from dual-basis coordinates to canonical element order:
    // W(b) sits at the tuple (Tr(b*zeta^i))_i
    ws.dual.assign(q, 0);
    std::vector<uint32_t> pw(static_cast<size_t>(m));
    {
        uint32_t w = 1;
        for (int i = 0; i < m; ++i) {
            pw[static_cast<size_t>(i)] = w;
            w *= p;
        }
    }
    for (uint32_t b = 1; b < q; ++b) {
        const uint32_t k = b - 1;
        uint32_t t = 0;
        for (int i = 0; i < m; ++i) t += static_cast<uint32_t>(F.trace_of_gen_pow((k + i) % n)) * pw[static_cast<size_t>(i)];
        ws.dual[b] = t;
    }
    int64_t* out = (cur == ws.a.data()) ? ws.b.data() : ws.a.data();
    for (uint32_t b = 0; b < q; ++b) {
        const int64_t* src = cur + static_cast<size_t>(ws.dual[b]) * pz;
        std::copy(src, src + pz, out + static_cast<size_t>(b) * pz);
    }
    if (out != ws.a.data()) ws.a.swap(ws.b);
}

inline WalshSpectrum materialize(const PAryFunction& f, const WalshScratch& ws) {
    const Field& F = *f.field;
    const int p = F.p();
    const uint32_t q = F.size();
    WalshSpectrum s{f.field, {}, {}};
    s.values.reserve(q);
    for (uint32_t b = 0; b < q; ++b) {
        std::span<const int64_t> row(ws.a.data() + static_cast<size_t>(b) * p, static_cast<size_t>(p));
        s.values.push_back(CycInt::from_counts(p, row));
        if (!s.values.back().is_zero()) s.support.push_back(b);
    }
    return s;
}

}  // namespace detail

/// Naive exact transform, O(p^(2m)); kept as the oracle for walsh_fast.
inline WalshSpectrum walsh_direct(const PAryFunction& f) {
    const Field& F = *f.field;
    const int p = F.p();
    const uint32_t q = F.size(), n = F.order();
    WalshSpectrum s{f.field, {}, {}};
    s.values.reserve(q);
    std::vector<int64_t> counts(static_cast<size_t>(p));
    for (uint32_t b = 0; b < q; ++b) {
        std::fill(counts.begin(), counts.end(), 0);
        for (uint32_t x = 0; x < q; ++x) {
            int tr = 0;
            if (b != 0 && x != 0) tr = F.trace_of_gen_pow(static_cast<uint32_t>((static_cast<uint64_t>(b - 1) + (x - 1)) % n));
            int e = f.table[x] - tr;
            if (e < 0) e += p;
            counts[static_cast<size_t>(e)] += 1;
        }
        s.values.push_back(CycInt::from_counts(p, counts));
        if (!s.values.back().is_zero()) s.support.push_back(b);
    }
    return s;
}

/// Butterfly transform, O(m p^(m+1)) group-ring additions; output is
/// identical to walsh_direct.
inline WalshSpectrum walsh_fast(const PAryFunction& f) {
    detail::WalshScratch ws;
    detail::walsh_counts(f, ws);
    return detail::materialize(f, ws);
}

/// Spectral moment S_i = sum_b |W(b)|^(2i), with the convention S_0 = p^m.
/// The per-point |W(b)|^2 need not be rational, so the sum is accumulated in
/// Z[xi_p] and checked for rationality at the end.
inline BigInt moment(const WalshSpectrum& s, unsigned i) {
    const Field& F = *s.field;
    if (i == 0) return big_pow(F.p(), static_cast<unsigned>(F.m()));
    CycInt acc(F.p());
    for (const CycInt& w : s.values) {
        if (w.is_zero()) continue;
        acc += cyc_pow(abs_square(w), i);
    }
    auto v = rational_value(acc);
    if (!v) fail(Errc::NotRational, "spectral moment is not rational");
    return *v;
}

struct BalanceReport {
    std::vector<int64_t> counts;  // occurrences of each value of GF(p)
    bool balanced = false;
};

/// Value counts of f over the whole field.
inline BalanceReport balance_counts(const PAryFunction& f) {
    BalanceReport r;
    r.counts.assign(static_cast<size_t>(f.field->p()), 0);
    for (uint8_t v : f.table) r.counts[v] += 1;
    r.balanced = true;
    for (const auto& c : r.counts) r.balanced = r.balanced && c == r.counts[0];
    return r;
}

/// Value counts of f restricted to a set of element indices (e.g. a Walsh
/// support).
inline BalanceReport balance_counts_on(const PAryFunction& f, std::span<const uint32_t> domain) {
    BalanceReport r;
    r.counts.assign(static_cast<size_t>(f.field->p()), 0);
    for (uint32_t b : domain) r.counts[f.table[b]] += 1;
    r.balanced = true;
    for (const auto& c : r.counts) r.balanced = r.balanced && c == r.counts[0];
    return r;
}

}  // namespace plateau

// finite_field.hpp -- exact arithmetic in GF(p) and GF(p^m) with a primitive
// generator representation and discrete-log tables.
//
// Elements are indexed in a fixed canonical order: index 0 is the zero element
// and index 1+k is zeta^k for k in [0, p^m-2], where zeta = x mod modulus.
// All modules iterate domains in this order so reports are reproducible.
#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <vector>

#include "errors.hpp"

namespace plateau {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Legendre symbol (a/p) for an odd prime p: 0 if p | a, +1 for nonzero
/// squares, -1 otherwise. Computed as a^((p-1)/2) mod p.
inline int legendre(long long a, long long p) {
    if (p == 2 || !is_prime(p)) fail(Errc::NotPrime, "legendre: p must be an odd prime");
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long long r = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

/// A field element: canonical index plus the id of the owning field, so that
/// operations on elements of different fields are rejected.
struct Elem {
    uint32_t idx = 0;
    uint32_t fid = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
};

/// GF(p^m) under a user-supplied monic modulus. The generator zeta = x mod
/// modulus must be primitive; construction verifies this and builds log /
/// antilog tables. Instances are immutable after construction and safe to
/// share across threads.
class Field {
public:
    static constexpr uint32_t kMaxSize = 2u << 20;  // desk-scale cap

    /// Builds the field, verifying that p is prime, the modulus is monic of
    /// degree m and irreducible, and that zeta has order exactly p^m - 1.
    static std::shared_ptr<const Field> make(int p, int m, std::vector<int> modulus) {
        return std::shared_ptr<const Field>(new Field(p, m, std::move(modulus)));
    }

    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    uint32_t size() const noexcept { return q_; }   // p^m
    uint32_t order() const noexcept { return n_; }  // p^m - 1
    uint32_t id() const noexcept { return fid_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return {0, fid_}; }
    Elem one() const noexcept { return {1, fid_}; }
    Elem gen() const noexcept { return {n_ > 1 ? 2u : 1u, fid_}; }

    /// zeta^k (k reduced mod p^m - 1).
    Elem gen_pow(uint64_t k) const noexcept { return {static_cast<uint32_t>(1 + k % n_), fid_}; }
    Elem element(uint32_t idx) const {
        if (idx >= q_) fail(Errc::RangeViolation, "element index out of range");
        return {idx, fid_};
    }
    /// Element of the prime subfield with value c mod p.
    Elem from_residue(long long c) const noexcept {
        long long v = c % p_;
        if (v < 0) v += p_;
        return {pack_to_idx_[static_cast<size_t>(v)], fid_};
    }
    /// Element from coefficients over the power basis {1, zeta, ..., zeta^(m-1)},
    /// constant term first.
    Elem from_coeffs(std::span<const int> coeffs) const {
        if (coeffs.size() > static_cast<size_t>(m_))
            fail(Errc::RangeViolation, "coefficient vector longer than extension degree");
        uint32_t pk = 0, w = 1;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            int v = coeffs[i] % p_;
            if (v < 0) v += p_;
            pk += static_cast<uint32_t>(v) * w;
            w *= p_;
        }
        return {pack_to_idx_[pk], fid_};
    }
    /// Coefficient view over the power basis, constant term first.
    std::vector<int> coeffs(Elem a) const {
        check(a);
        std::vector<int> out(m_);
        uint32_t pk = idx_to_pack_[a.idx];
        for (int i = 0; i < m_; ++i) {
            out[i] = static_cast<int>(pk % p_);
            pk /= p_;
        }
        return out;
    }
    bool is_zero(Elem a) const {
        check(a);
        return a.idx == 0;
    }
    /// Discrete log of a nonzero element: the k with a = zeta^k.
    uint32_t log(Elem a) const {
        check(a);
        if (a.idx == 0) fail(Errc::DivisionByZero, "log of zero");
        return a.idx - 1;
    }

    Elem add(Elem a, Elem b) const {
        check(a);
        check(b);
        return {add_idx(a.idx, b.idx), fid_};
    }
    Elem sub(Elem a, Elem b) const {
        check(a);
        check(b);
        return {add_idx(a.idx, neg_idx(b.idx)), fid_};
    }
    Elem neg(Elem a) const {
        check(a);
        return {neg_idx(a.idx), fid_};
    }
    Elem mul(Elem a, Elem b) const {
        check(a);
        check(b);
        return {mul_idx(a.idx, b.idx), fid_};
    }
    Elem inv(Elem a) const {
        check(a);
        if (a.idx == 0) fail(Errc::DivisionByZero, "inverse of zero");
        return {inv_idx(a.idx), fid_};
    }
    Elem pow(Elem a, uint64_t e) const {
        check(a);
        return {pow_idx(a.idx, e), fid_};
    }
    /// Scalar multiple c*a with c a prime-field residue.
    Elem scale(long long c, Elem a) const {
        check(a);
        return {mul_idx(from_residue(c).idx, a.idx), fid_};
    }
    /// Absolute trace to the prime field, as a residue in [0, p).
    int trace(Elem a) const {
        check(a);
        return trace_of_[a.idx];
    }

    // Raw index-based arithmetic for inner loops. Indices follow the canonical
    // element order; no cross-field checking is performed here.
    uint32_t add_idx(uint32_t a, uint32_t b) const noexcept {
        uint32_t pa = idx_to_pack_[a], pb = idx_to_pack_[b];
        return pack_to_idx_[pack_add(pa, pb)];
    }
    uint32_t neg_idx(uint32_t a) const noexcept { return neg_of_[a]; }
    uint32_t mul_idx(uint32_t a, uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        uint64_t k = static_cast<uint64_t>(a - 1) + (b - 1);
        return static_cast<uint32_t>(1 + k % n_);
    }
    uint32_t inv_idx(uint32_t a) const noexcept { return a <= 1 ? a : static_cast<uint32_t>(1 + (n_ - (a - 1))); }
    uint32_t pow_idx(uint32_t a, uint64_t e) const noexcept {
        if (a == 0) return e == 0 ? 1 : 0;
        uint64_t k = static_cast<uint64_t>(a - 1) * (e % n_) % n_;
        return static_cast<uint32_t>(1 + k);
    }
    int trace_of_idx(uint32_t a) const noexcept { return trace_of_[a]; }
    /// Trace of zeta^k for k in [0, p^m-2]; used by cyclic-shift tricks.
    int trace_of_gen_pow(uint32_t k) const noexcept { return trace_of_[1 + k]; }
    uint32_t pack_of_idx(uint32_t a) const noexcept { return idx_to_pack_[a]; }
    uint32_t idx_of_pack(uint32_t pk) const noexcept { return pack_to_idx_[pk]; }

    void check(Elem a) const {
        if (a.fid != fid_) fail(Errc::FieldMismatch, "element belongs to a different field");
        if (a.idx >= q_) fail(Errc::RangeViolation, "corrupt element index");
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    using Poly = std::vector<int>;  // coefficients mod p, constant term first

    Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
        if (!is_prime(p_)) fail(Errc::NotPrime, "p is not prime");
        if (m_ < 1) fail(Errc::RangeViolation, "extension degree must be >= 1");
        if (modulus_.size() != static_cast<size_t>(m_) + 1)
            fail(Errc::InvalidSpec, "modulus must have degree m (m+1 coefficients, constant first)");
        for (int& c : modulus_) {
            c %= p_;
            if (c < 0) c += p_;
        }
        if (modulus_.back() != 1) fail(Errc::InvalidSpec, "modulus must be monic");

        uint64_t q = 1;
        for (int i = 0; i < m_; ++i) {
            q *= static_cast<uint64_t>(p_);
            if (q > kMaxSize) fail(Errc::RangeViolation, "field too large for desk-scale tables");
        }
        q_ = static_cast<uint32_t>(q);
        n_ = q_ - 1;

        build_tables();
    }

    void build_tables() {
        std::vector<uint32_t> antilog(n_);
        Poly cur(m_, 0);
        cur[0] = 1;  // zeta^0
        bool primitive = true;
        for (uint32_t k = 0; k < n_; ++k) {
            uint32_t pk = pack(cur);
            if (pk == 1 && k > 0) {  // returned to 1 early: order of zeta < p^m - 1
                primitive = false;
                break;
            }
            if (pk == 0) {  // zeta is a zero divisor; only possible for a reducible modulus
                primitive = false;
                break;
            }
            antilog[k] = pk;
            mul_by_x(cur);
        }
        if (primitive && pack(cur) != 1) primitive = false;  // zeta^(p^m-1) != 1
        if (!primitive) {
            if (!irreducible()) fail(Errc::Reducible, "modulus is reducible over GF(p)");
            fail(Errc::NotPrimitive, "zeta = x mod modulus is not primitive");
        }

        idx_to_pack_.assign(q_, 0);
        pack_to_idx_.assign(q_, 0);
        for (uint32_t k = 0; k < n_; ++k) {
            idx_to_pack_[1 + k] = antilog[k];
            pack_to_idx_[antilog[k]] = 1 + k;
        }

        // trace of the power basis, then extend linearly
        std::vector<int> tr_basis(m_);
        for (int i = 0; i < m_; ++i) {
            uint32_t acc = 0;
            uint64_t e = i;
            for (int j = 0; j < m_; ++j) {
                acc = pack_add(acc, antilog[e]);
                e = e * static_cast<uint64_t>(p_) % n_;
            }
            // the trace lands in the prime subfield: packed value < p
            if (acc >= static_cast<uint32_t>(p_)) fail(Errc::RangeViolation, "internal: trace not in prime field");
            tr_basis[i] = static_cast<int>(acc);
        }
        trace_of_.assign(q_, 0);
        neg_of_.assign(q_, 0);
        for (uint32_t idx = 0; idx < q_; ++idx) {
            uint32_t pk = idx_to_pack_[idx];
            int tr = 0;
            uint32_t neg_pk = 0, w = 1, v = pk;
            for (int i = 0; i < m_; ++i) {
                int d = static_cast<int>(v % p_);
                v /= p_;
                tr += d * tr_basis[i];
                neg_pk += static_cast<uint32_t>((p_ - d) % p_) * w;
                w *= p_;
            }
            trace_of_[idx] = tr % p_;
            neg_of_[idx] = pack_to_idx_[neg_pk];
        }

        static std::atomic<uint32_t> next_id{1};
        fid_ = next_id.fetch_add(1);
    }

    uint32_t pack(const Poly& c) const noexcept {
        uint32_t pk = 0, w = 1;
        for (int i = 0; i < m_; ++i) {
            pk += static_cast<uint32_t>(c[i]) * w;
            w *= p_;
        }
        return pk;
    }

    uint32_t pack_add(uint32_t a, uint32_t b) const noexcept {
        uint32_t out = 0, w = 1;
        for (int i = 0; i < m_; ++i) {
            uint32_t s = a % p_ + b % p_;
            if (s >= static_cast<uint32_t>(p_)) s -= p_;
            out += s * w;
            a /= p_;
            b /= p_;
            w *= p_;
        }
        return out;
    }

    void mul_by_x(Poly& c) const {
        int top = c[m_ - 1];
        for (int i = m_ - 1; i > 0; --i) c[i] = c[i - 1];
        c[0] = 0;
        if (top != 0)
            for (int i = 0; i < m_; ++i) c[i] = (c[i] + (p_ - top) * modulus_[i] % p_ + p_) % p_;
    }

    // ---- polynomial arithmetic over GF(p), used only by the irreducibility test ----

    static void ptrim(Poly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    Poly pmulmod(const Poly& a, const Poly& b) const {
        Poly r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
        }
        // reduce by the monic modulus
        for (size_t i = r.size(); i-- > static_cast<size_t>(m_);) {
            int c = r[i];
            if (c == 0) continue;
            r[i] = 0;
            for (int j = 0; j <= m_; ++j) {
                size_t k = i - m_ + j;
                r[k] = ((r[k] - c * modulus_[j]) % p_ + p_) % p_;
            }
        }
        r.resize(m_);
        return r;
    }
    Poly ppow(Poly base, uint64_t e) const {
        Poly r(m_, 0);
        r[0] = 1;
        while (e > 0) {
            if (e & 1) r = pmulmod(r, base);
            base = pmulmod(base, base);
            e >>= 1;
        }
        return r;
    }
    static Poly pgcd(Poly a, Poly b, int p) {
        ptrim(a);
        ptrim(b);
        while (!b.empty()) {
            // a mod b, b monic-ized on the fly
            int lead = b.back();
            int lead_inv = 1;
            for (int t = 1; t < p; ++t)
                if (lead * t % p == 1) lead_inv = t;
            while (a.size() >= b.size() && !a.empty()) {
                int c = a.back() * lead_inv % p;
                size_t shift = a.size() - b.size();
                for (size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
                ptrim(a);
            }
            std::swap(a, b);
        }
        return a;
    }

    // Rabin test: x^(p^m) == x mod modulus, and gcd(x^(p^(m/q)) - x, modulus) = 1
    // for every prime divisor q of m.
    bool irreducible() const {
        if (m_ == 1) return true;
        Poly x(m_, 0);
        if (m_ >= 2) x[1] = 1;
        std::vector<Poly> frob(m_ + 1);  // frob[i] = x^(p^i) mod modulus
        frob[0] = x;
        for (int i = 1; i <= m_; ++i) frob[i] = ppow(frob[i - 1], static_cast<uint64_t>(p_));
        if (frob[m_] != x) return false;
        int mm = m_;
        for (int d = 2; d * d <= mm; ++d) {
            if (mm % d) continue;
            while (mm % d == 0) mm /= d;
            if (!coprime_with_modulus(frob[m_ / d], x)) return false;
        }
        if (mm > 1 && !coprime_with_modulus(frob[m_ / mm], x)) return false;
        return true;
    }
    bool coprime_with_modulus(const Poly& h, const Poly& x) const {
        Poly diff(m_, 0);
        for (int i = 0; i < m_; ++i) diff[i] = ((h[i] - x[i]) % p_ + p_) % p_;
        Poly g = pgcd(diff, modulus_, p_);
        return g.size() <= 1;  // constant gcd
    }

    int p_;
    int m_;
    std::vector<int> modulus_;
    uint32_t q_ = 0;
    uint32_t n_ = 0;
    uint32_t fid_ = 0;
    std::vector<uint32_t> idx_to_pack_;
    std::vector<uint32_t> pack_to_idx_;
    std::vector<uint32_t> neg_of_;
    std::vector<int> trace_of_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(int p, int m, std::vector<int> modulus) { return Field::make(p, m, std::move(modulus)); }

}  // namespace plateau

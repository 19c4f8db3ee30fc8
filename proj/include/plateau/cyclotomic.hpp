// cyclotomic.hpp -- exact arithmetic in Z[xi_p], xi_p a primitive p-th root of
// unity, over the integral basis {1, xi, ..., xi^(p-2)}. Values are kept in
// canonical reduced coordinates, so equality is coefficient-wise. For p = 2
// the type degenerates to a single integer (xi_2 = -1).
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "finite_field.hpp"

namespace plateau {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(long long base, unsigned e) {
    BigInt r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

class CycInt {
public:
    explicit CycInt(int p) : p_(validated(p)), c_(static_cast<size_t>(p - 1)) {}

    static CycInt rational(int p, BigInt v) {
        CycInt z(p);
        z.c_[0] = std::move(v);
        return z;
    }
    /// xi^k, k taken mod p.
    static CycInt root_power(int p, long long k) {
        CycInt z(p);
        long long e = k % p;
        if (e < 0) e += p;
        if (e == static_cast<long long>(p) - 1) {
            // xi^(p-1) = -(1 + xi + ... + xi^(p-2))
            for (auto& a : z.c_) a = -1;
        } else {
            z.c_[static_cast<size_t>(e)] = 1;
        }
        return z;
    }
    /// Reduces a length-p vector of xi-power multiplicities to canonical form.
    static CycInt from_counts(int p, std::span<const int64_t> counts) {
        if (counts.size() != static_cast<size_t>(p)) fail(Errc::LengthMismatch, "expected p counts");
        CycInt z(p);
        for (int j = 0; j + 1 < p; ++j) z.c_[static_cast<size_t>(j)] = counts[static_cast<size_t>(j)] - counts[static_cast<size_t>(p) - 1];
        return z;
    }
    /// Same reduction for exponent-indexed big-integer accumulators.
    static CycInt reduce(int p, const std::vector<BigInt>& t) {
        CycInt z(p);
        for (int j = 0; j + 1 < p; ++j) z.c_[static_cast<size_t>(j)] = t[static_cast<size_t>(j)] - t[static_cast<size_t>(p) - 1];
        return z;
    }

    int order() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept {
        for (const auto& a : c_)
            if (a != 0) return false;
        return true;
    }

    CycInt& operator+=(const CycInt& o) {
        match(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycInt& operator-=(const CycInt& o) {
        match(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator-(const CycInt& a) {
        CycInt z(a.p_);
        for (size_t i = 0; i < a.c_.size(); ++i) z.c_[i] = -a.c_[i];
        return z;
    }
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.match(b);
        const int p = a.p_;
        std::vector<BigInt> t(static_cast<size_t>(p));
        for (int i = 0; i + 1 < p; ++i) {
            if (a.c_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j + 1 < p; ++j) {
                if (b.c_[static_cast<size_t>(j)] == 0) continue;
                t[static_cast<size_t>((i + j) % p)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
            }
        }
        return reduce(p, t);
    }
    friend CycInt operator*(CycInt a, const BigInt& s) {
        for (auto& v : a.c_) v *= s;
        return a;
    }
    friend CycInt operator*(const BigInt& s, CycInt a) { return std::move(a) * s; }

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
    static int validated(int p) {
        if (p < 2) fail(Errc::RangeViolation, "root-of-unity order must be >= 2");
        return p;
    }
    void match(const CycInt& o) const {
        if (p_ != o.p_) fail(Errc::OrderMismatch, "cyclotomic values of different order");
    }

    int p_;
    std::vector<BigInt> c_;
};

/// Galois automorphism xi -> xi^t for t coprime to p; fixes the rationals.
inline CycInt conjugate(const CycInt& a, long long t) {
    const int p = a.order();
    long long tm = t % p;
    if (tm < 0) tm += p;
    if (tm == 0) fail(Errc::InvalidAutomorphism, "automorphism index must be nonzero mod p");
    std::vector<BigInt> tv(static_cast<size_t>(p));
    for (int i = 0; i + 1 < p; ++i) tv[static_cast<size_t>(i * tm % p)] += a.coeffs()[static_cast<size_t>(i)];
    return CycInt::reduce(p, tv);
}

/// |a|^2 realized algebraically as a * sigma_{-1}(a); rational for values with
/// all conjugates of equal magnitude, and in the real subfield in general.
inline CycInt abs_square(const CycInt& a) {
    if (a.order() == 2) return a * a;  // xi_2 = -1 is real
    return a * conjugate(a, a.order() - 1);
}

/// Quadratic Gauss sum G = sum_j (j/p) xi^j for odd prime p; G^2 = (-1/p) p.
inline CycInt gauss_sum(int p) {
    if (!is_prime(p)) fail(Errc::NotPrime, "gauss_sum: p must be prime");
    if (p == 2) fail(Errc::ParityViolation, "gauss_sum: p must be odd");
    CycInt z(p);
    for (int j = 1; j < p; ++j) {
        if (legendre(j, p) > 0)
            z += CycInt::root_power(p, j);
        else
            z -= CycInt::root_power(p, j);
    }
    return z;
}

/// The constant coordinate iff all other coordinates vanish.
inline std::optional<BigInt> rational_value(const CycInt& a) {
    const auto& c = a.coeffs();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c[0];
}

inline CycInt cyc_pow(const CycInt& a, unsigned e) {
    CycInt r = CycInt::rational(a.order(), 1);
    CycInt b = a;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

}  // namespace plateau

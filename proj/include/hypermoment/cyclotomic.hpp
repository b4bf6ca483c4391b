#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "hypermoment/common.hpp"

namespace hypermoment {

namespace detail {

/// Coefficients of the N-th cyclotomic polynomial, computed by dividing
/// X^N - 1 by the cyclotomic polynomials of the proper divisors of N.
inline std::vector<i64> cyclotomic_poly_uncached(int n) {
    // poly = X^n - 1
    std::vector<i64> poly(static_cast<size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<i64> phi_d = cyclotomic_poly_uncached(d);
        // exact division poly /= phi_d (both monic)
        std::vector<i64> q(poly.size() - phi_d.size() + 1, 0);
        std::vector<i64> r = poly;
        for (size_t i = q.size(); i-- > 0;) {
            i64 c = r[i + phi_d.size() - 1];
            q[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < phi_d.size(); ++j) r[i + j] -= c * phi_d[j];
        }
        poly = q;
    }
    return poly;
}

inline const std::vector<i64>& cyclotomic_poly(int n) {
    static std::map<int, std::vector<i64>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, cyclotomic_poly_uncached(n)).first;
    return it->second;
}

}  // namespace detail

/// An exact element of Z[zeta_N], stored as an integer coefficient vector on
/// the exponents 0..N-1 (the relation zeta^N = 1 is applied eagerly, the
/// cyclotomic relation only when deciding equality or extracting integers).
class CyclotomicInt {
  public:
    CyclotomicInt() : n_(1), c_(1, 0) {}
    explicit CyclotomicInt(int n) : n_(n), c_(static_cast<size_t>(n), 0) {}
    CyclotomicInt(int n, i64 constant) : n_(n), c_(static_cast<size_t>(n), 0) { c_[0] = constant; }

    static CyclotomicInt zeta_power(int n, i64 e) {
        CyclotomicInt z(n);
        z.c_[static_cast<size_t>(mod_reduce(e, n))] = 1;
        return z;
    }

    int conductor() const { return n_; }
    const std::vector<i64>& coeffs() const { return c_; }
    i64& coeff(i64 e) { return c_[static_cast<size_t>(mod_reduce(e, n_))]; }

    /// Re-express in Z[zeta_m] for n_ | m.
    CyclotomicInt lifted(int m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw Error("conductor lift must be to a multiple");
        CyclotomicInt out(m);
        for (int j = 0; j < n_; ++j) out.c_[static_cast<size_t>(j * (m / n_))] = c_[static_cast<size_t>(j)];
        return out;
    }

    CyclotomicInt operator+(const CyclotomicInt& o) const {
        auto [a, b] = aligned(*this, o);
        for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
        return a;
    }
    CyclotomicInt operator-(const CyclotomicInt& o) const {
        auto [a, b] = aligned(*this, o);
        for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] -= b.c_[j];
        return a;
    }
    CyclotomicInt operator*(const CyclotomicInt& o) const {
        auto [a, b] = aligned(*this, o);
        CyclotomicInt out(a.n_);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                size_t k = i + j;
                if (k >= static_cast<size_t>(a.n_)) k -= static_cast<size_t>(a.n_);
                out.c_[k] += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }
    CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }
    CyclotomicInt& operator-=(const CyclotomicInt& o) { return *this = *this - o; }
    CyclotomicInt& operator*=(const CyclotomicInt& o) { return *this = *this * o; }

    CyclotomicInt operator*(i64 s) const {
        CyclotomicInt out = *this;
        for (auto& v : out.c_) v *= s;
        return out;
    }

    CyclotomicInt pow(i64 e) const {
        if (e < 0) throw Error("negative cyclotomic power");
        CyclotomicInt r(n_, 1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Complex conjugate (zeta -> zeta^{-1}).
    CyclotomicInt conj() const {
        CyclotomicInt out(n_);
        for (int j = 0; j < n_; ++j)
            out.c_[static_cast<size_t>(mod_reduce(-j, n_))] = c_[static_cast<size_t>(j)];
        return out;
    }

    /// Canonical residue mod Phi_N: degree < phi(N) coefficient vector.
    std::vector<i64> reduced() const {
        const std::vector<i64>& phi = detail::cyclotomic_poly(n_);
        std::vector<i64> r = c_;
        size_t deg = phi.size() - 1;  // = phi(N)
        for (size_t i = r.size(); i-- > deg;) {
            i64 v = r[i];
            if (v == 0) continue;
            for (size_t j = 0; j < phi.size(); ++j) r[i - deg + j] -= v * phi[j];
        }
        r.resize(deg);
        return r;
    }

    bool operator==(const CyclotomicInt& o) const {
        auto [a, b] = aligned(*this, o);
        return (a - b).is_zero();
    }

    bool is_zero() const {
        for (i64 v : reduced())
            if (v != 0) return false;
        return true;
    }

    bool is_integer() const {
        std::vector<i64> r = reduced();
        for (size_t j = 1; j < r.size(); ++j)
            if (r[j] != 0) return false;
        return true;
    }

    /// Value as a rational integer; NonRealDelta if it is not one.
    i64 to_integer() const {
        std::vector<i64> r = reduced();
        for (size_t j = 1; j < r.size(); ++j)
            if (r[j] != 0) throw NonRealDelta("nonzero coefficient on zeta^" + std::to_string(j));
        return r.empty() ? 0 : r[0];
    }

    std::complex<double> embed() const {
        std::complex<double> s(0.0);
        for (int j = 0; j < n_; ++j) {
            if (c_[static_cast<size_t>(j)] == 0) continue;
            double ang = 2.0 * std::numbers::pi * j / n_;
            s += static_cast<double>(c_[static_cast<size_t>(j)]) *
                 std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return s;
    }

  private:
    static std::pair<CyclotomicInt, CyclotomicInt> aligned(const CyclotomicInt& a,
                                                           const CyclotomicInt& b) {
        if (a.n_ == b.n_) return {a, b};
        int m = static_cast<int>(std::lcm(a.n_, b.n_));
        return {a.lifted(m), b.lifted(m)};
    }

    int n_;
    std::vector<i64> c_;
};

}  // namespace hypermoment

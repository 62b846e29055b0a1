#pragma once

/**
 * @file exactnum.hpp
 * @brief Arbitrary-precision rationals and elements of cyclotomic fields Q(zeta_n).
 *
 * A CycNum of order n is a residue modulo the n-th cyclotomic polynomial,
 * stored densely in the basis 1, z, ..., z^(phi(n)-1) with z = exp(2 pi i / n).
 * Operands of different orders are embedded into Q(zeta_lcm) first.
 * Order 1 is the rational subfield and takes a fast path everywhere.
 */

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "alia/upoly.hpp"

namespace alia {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long p, long q = 1)
{
    if (q == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

template <>
inline bool field_is_zero<Rat>(const Rat& r)
{
    return sgn(r) == 0;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s)
{
    Rat r(s);
    r.canonicalize();
    return r;
}

inline long euler_phi(long n)
{
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Integer coefficients c_0..c_phi of the n-th cyclotomic polynomial.
inline std::vector<long long> cyclotomic_polynomial(int n)
{
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        auto den = cyclotomic_polynomial(d);
        int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
        std::vector<long long> q(dn - dd + 1, 0);
        for (int i = dn; i >= dd; --i) {
            long long t = num[i];
            q[i - dd] = t;
            if (t == 0) continue;
            for (int j = 0; j <= dd; ++j) num[i - dd + j] -= t * den[j];
        }
        num = std::move(q);
    }
    return num;
}

/// Reduction data for Q(zeta_n): powers of zeta expressed in the power basis.
struct CycContext {
    int n = 1;
    int phi = 1;
    std::vector<long long> poly;
    /// pw[e] = zeta^e in the basis, for 0 <= e < max(n, 2 phi - 1).
    std::vector<std::vector<long long>> pw;
};

inline const CycContext& cyc_context(int n)
{
    if (n < 1) throw std::domain_error("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    auto ctx = std::make_unique<CycContext>();
    ctx->n = n;
    ctx->poly = cyclotomic_polynomial(n);
    ctx->phi = static_cast<int>(ctx->poly.size()) - 1;
    const int phi = ctx->phi;
    const int len = std::max(n, 2 * phi - 1);
    ctx->pw.assign(len, std::vector<long long>(phi, 0));
    ctx->pw[0][0] = 1;
    for (int e = 1; e < len; ++e) {
        const auto& prev = ctx->pw[e - 1];
        auto& cur = ctx->pw[e];
        long long top = prev[phi - 1];
        for (int j = phi - 1; j > 0; --j) cur[j] = prev[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (int j = 0; j < phi; ++j) cur[j] -= top * ctx->poly[j];
    }
    const CycContext& ref = *ctx;
    cache.emplace(n, std::move(ctx));
    return ref;
}

class CycNum {
public:
    CycNum() : ctx_(&cyc_context(1)), c_(1, Rat(0)) {}
    CycNum(long v) : ctx_(&cyc_context(1)), c_(1, Rat(v)) {}
    CycNum(int v) : CycNum(static_cast<long>(v)) {}
    CycNum(const Rat& r) : ctx_(&cyc_context(1)), c_(1, r) {}

    /// Element sum_j coeffs[j] z^j of Q(zeta_n); longer inputs are reduced.
    CycNum(int n, const std::vector<Rat>& coeffs) : ctx_(&cyc_context(n)), c_(ctx_->phi, Rat(0))
    {
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
            if (sgn(coeffs[e]) == 0) continue;
            add_power(static_cast<long>(e), coeffs[e]);
        }
    }

    static CycNum root_of_unity(int n, long k)
    {
        CycNum r;
        r.ctx_ = &cyc_context(n);
        r.c_.assign(r.ctx_->phi, Rat(0));
        r.add_power(k, Rat(1));
        return r;
    }

    int order() const { return ctx_->n; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }
    bool is_rational() const
    {
        for (std::size_t j = 1; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) return false;
        return true;
    }
    Rat rational_value() const
    {
        if (!is_rational()) throw std::domain_error("CycNum is not rational");
        return c_[0];
    }
    bool is_one() const { return is_rational() && c_[0] == 1; }

    /// Image in Q(zeta_n); n must be a multiple of order().
    CycNum embed(int n) const
    {
        if (n % order() != 0) throw std::domain_error("CycNum::embed: order does not divide target");
        if (n == order()) return *this;
        CycNum r;
        r.ctx_ = &cyc_context(n);
        r.c_.assign(r.ctx_->phi, Rat(0));
        const long step = n / order();
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) r.add_power(static_cast<long>(j) * step, c_[j]);
        return r;
    }

    /// Complex conjugate, z -> z^-1.
    CycNum conj() const
    {
        CycNum r;
        r.ctx_ = ctx_;
        r.c_.assign(ctx_->phi, Rat(0));
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (sgn(c_[j]) != 0) r.add_power(-static_cast<long>(j), c_[j]);
        return r;
    }

    CycNum inverse() const
    {
        if (is_zero()) throw std::domain_error("CycNum: division by zero");
        if (is_rational()) {
            CycNum r = *this;
            r.c_[0] = 1 / c_[0];
            return r;
        }
        std::vector<Rat> m;
        for (long long v : ctx_->poly) m.emplace_back(static_cast<long>(v));
        UPoly<Rat> s = inverse_mod(UPoly<Rat>(c_), UPoly<Rat>(m));
        return CycNum(order(), s.coeffs());
    }

    CycNum pow(long e) const
    {
        if (e < 0) return inverse().pow(-e);
        CycNum base = *this, acc(1);
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) { return combine(a, b, 1); }
    friend CycNum operator-(const CycNum& a, const CycNum& b) { return combine(a, b, -1); }
    friend CycNum operator-(const CycNum& a)
    {
        CycNum r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend CycNum operator*(const CycNum& a, const CycNum& b)
    {
        if (a.order() == 1) return b.scaled(a.c_[0]);
        if (b.order() == 1) return a.scaled(b.c_[0]);
        if (a.order() != b.order()) {
            int n = std::lcm(a.order(), b.order());
            return a.embed(n) * b.embed(n);
        }
        const CycContext& ctx = *a.ctx_;
        const int phi = ctx.phi;
        std::vector<Rat> prod(2 * phi - 1, Rat(0));
        Rat t;
        for (int i = 0; i < phi; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (int j = 0; j < phi; ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
                prod[i + j] += t;
            }
        }
        CycNum r;
        r.ctx_ = a.ctx_;
        r.c_.assign(prod.begin(), prod.begin() + phi);
        for (int e = phi; e < 2 * phi - 1; ++e) {
            if (sgn(prod[e]) == 0) continue;
            const auto& row = ctx.pw[e];
            for (int j = 0; j < phi; ++j)
                if (row[j] != 0) r.c_[j] += prod[e] * static_cast<long>(row[j]);
        }
        return r;
    }
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

    friend bool operator==(const CycNum& a, const CycNum& b)
    {
        if (a.order() == b.order()) return a.c_ == b.c_;
        if (a.order() == 1 || b.order() == 1) {
            const CycNum& r = a.order() == 1 ? a : b;
            const CycNum& o = a.order() == 1 ? b : a;
            return o.is_rational() && o.c_[0] == r.c_[0];
        }
        int n = std::lcm(a.order(), b.order());
        return a.embed(n).c_ == b.embed(n).c_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Canonical text "c0 + c1*z + c2*z^2 ..." with z = zeta_order; unit coefficients omitted.
    std::string to_string() const
    {
        std::string out;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            const Rat& x = c_[j];
            if (sgn(x) == 0) continue;
            Rat ax = abs(x);
            std::string mag;
            if (j == 0) mag = ax.get_str();
            else {
                std::string zpow = j == 1 ? "z" : "z^" + std::to_string(j);
                mag = ax == 1 ? zpow : ax.get_str() + "*" + zpow;
            }
            if (out.empty()) out = (sgn(x) < 0 ? "-" : "") + mag;
            else out += (sgn(x) < 0 ? " - " : " + ") + mag;
        }
        return out.empty() ? "0" : out;
    }

private:
    static CycNum combine(const CycNum& a, const CycNum& b, int sign)
    {
        if (a.order() == b.order()) {
            CycNum r = a;
            for (std::size_t j = 0; j < r.c_.size(); ++j) {
                if (sign > 0) r.c_[j] += b.c_[j];
                else r.c_[j] -= b.c_[j];
            }
            return r;
        }
        if (b.order() == 1) {
            CycNum r = a;
            if (sign > 0) r.c_[0] += b.c_[0];
            else r.c_[0] -= b.c_[0];
            return r;
        }
        if (a.order() == 1) {
            CycNum r = sign > 0 ? b : -b;
            r.c_[0] += a.c_[0];
            return r;
        }
        int n = std::lcm(a.order(), b.order());
        return combine(a.embed(n), b.embed(n), sign);
    }

    CycNum scaled(const Rat& s) const
    {
        CycNum r = *this;
        if (sgn(s) == 0) {
            for (auto& x : r.c_) x = 0;
            return r;
        }
        for (auto& x : r.c_)
            if (sgn(x) != 0) x *= s;
        return r;
    }

    void add_power(long e, const Rat& v)
    {
        const long n = ctx_->n;
        long r = ((e % n) + n) % n;
        const auto& row = ctx_->pw[r];
        for (int j = 0; j < ctx_->phi; ++j)
            if (row[j] != 0) c_[j] += v * static_cast<long>(row[j]);
    }

    const CycContext* ctx_;
    std::vector<Rat> c_;
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline std::string to_string(const CycNum& x) { return x.to_string(); }

/// zeta_n^k reduced modulo Phi_n.
inline CycNum cyc_root_of_unity(int n, long k) { return CycNum::root_of_unity(n, k); }

enum class ArithOp { add, sub, mul, div };

inline CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw std::logic_error("cyc_arith: unknown op");
}

}  // namespace alia

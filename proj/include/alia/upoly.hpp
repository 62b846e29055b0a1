#pragma once

/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * The coefficient type F must provide +, -, *, / and a free function
 * is_zero(const F&). Used for cyclotomic inverses, exact division of
 * dehomogenized forms and Hermite reduction over Q[t].
 */

#include <stdexcept>
#include <utility>
#include <vector>

namespace alia {

/// Zero test used by UPoly; found by ADL or specialised for foreign field types.
template <class F>
bool field_is_zero(const F& x)
{
    return is_zero(x);
}

template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }
    static UPoly constant(const F& v) { return UPoly(std::vector<F>{v}); }
    static UPoly monomial(const F& v, int deg)
    {
        std::vector<F> c(deg + 1, F(0));
        c[deg] = v;
        return UPoly(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : F(0); }
    const F& lead() const { return c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b)
    {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a)
    {
        std::vector<F> r;
        r.reserve(a.c_.size());
        for (const auto& x : a.c_) r.push_back(F(0) - x);
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (field_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!field_is_zero(b.c_[j])) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const F& s, const UPoly& a)
    {
        std::vector<F> r;
        r.reserve(a.c_.size());
        for (const auto& x : a.c_) r.push_back(s * x);
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b)
    {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Quotient and remainder; throws std::domain_error on division by zero.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
    {
        if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
        if (a.degree() < b.degree()) return {UPoly{}, a};
        std::vector<F> r = a.c_;
        std::vector<F> q(a.c_.size() - b.c_.size() + 1, F(0));
        const F inv = F(1) / b.lead();
        const int db = b.degree();
        for (int i = a.degree(); i >= db; --i) {
            if (field_is_zero(r[i])) continue;
            F t = r[i] * inv;
            q[i - db] = t;
            for (int j = 0; j <= db; ++j)
                if (!field_is_zero(b.c_[j])) r[i - db + j] = r[i - db + j] - t * b.c_[j];
        }
        r.resize(db);
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    UPoly monic() const
    {
        if (is_zero()) return *this;
        return (F(1) / lead()) * *this;
    }

    UPoly derivative() const
    {
        std::vector<F> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(F(static_cast<long>(i)) * c_[i]);
        return UPoly(std::move(r));
    }

private:
    void trim()
    {
        while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

/// Monic gcd.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns s with s*a = g (mod m), where g = gcd(a, m) made monic.
template <class F>
UPoly<F> inverse_mod(const UPoly<F>& a, const UPoly<F>& m)
{
    UPoly<F> r0 = m, r1 = a;
    UPoly<F> s0, s1 = UPoly<F>::constant(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly<F> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::domain_error("inverse_mod: not invertible");
    return (F(1) / r0.lead()) * s0;
}

}  // namespace alia

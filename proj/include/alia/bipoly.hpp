#pragma once

/**
 * @file bipoly.hpp
 * @brief Bivariate forms in X, Y over CycNum and their localization at a fixed form P.
 *
 * A LocElem is numerator / (P^m X^a Y^b). Elements of C[X,Y,P^-1] have a = b = 0;
 * the monomial part only appears in intermediate factors such as exp((X/Y) E).
 * Reduction cancels monomials and then divides by P while the division is exact.
 * No polynomial gcd is used; equality is decided by cross-multiplication.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alia/exactnum.hpp"
#include "alia/matrix.hpp"
#include "alia/upoly.hpp"

namespace alia {

using CycMatrix = Matrix<CycNum>;

enum class Var { X, Y };

class BiForm {
public:
    struct Term {
        int x = 0;
        int y = 0;
        CycNum c;
    };

    BiForm() = default;
    BiForm(const CycNum& c)
    {
        if (!c.is_zero()) t_.push_back({0, 0, c});
    }
    BiForm(long c) : BiForm(CycNum(c)) {}
    BiForm(int c) : BiForm(CycNum(c)) {}

    static BiForm monomial(int x, int y, const CycNum& c = CycNum(1))
    {
        if (x < 0 || y < 0) throw std::domain_error("BiForm: negative exponent");
        BiForm f;
        if (!c.is_zero()) f.t_.push_back({x, y, c});
        return f;
    }
    static BiForm X() { return monomial(1, 0); }
    static BiForm Y() { return monomial(0, 1); }

    /// Builds from arbitrary (x, y, c) triples; duplicates are summed.
    static BiForm from_terms(const std::vector<Term>& terms)
    {
        std::map<std::pair<int, int>, CycNum, KeyLess> acc;
        for (const auto& t : terms) {
            auto [it, fresh] = acc.try_emplace({t.x, t.y}, t.c);
            if (!fresh) it->second += t.c;
        }
        BiForm f;
        for (auto& [k, c] : acc)
            if (!c.is_zero()) f.t_.push_back({k.first, k.second, std::move(c)});
        return f;
    }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    /// The zero form counts as homogeneous.
    bool is_homogeneous() const
    {
        for (const auto& t : t_)
            if (t.x + t.y != t_.front().x + t_.front().y) return false;
        return true;
    }
    /// Degree of a nonzero homogeneous form; nullopt otherwise.
    std::optional<int> degree() const
    {
        if (t_.empty() || !is_homogeneous()) return std::nullopt;
        return t_.front().x + t_.front().y;
    }
    int total_degree() const { return t_.empty() ? -1 : t_.front().x + t_.front().y; }

    CycNum coeff(int x, int y) const
    {
        for (const auto& t : t_)
            if (t.x == x && t.y == y) return t.c;
        return CycNum(0);
    }
    int min_x() const
    {
        int m = t_.empty() ? 0 : t_.front().x;
        for (const auto& t : t_) m = std::min(m, t.x);
        return m;
    }
    int min_y() const
    {
        int m = t_.empty() ? 0 : t_.front().y;
        for (const auto& t : t_) m = std::min(m, t.y);
        return m;
    }
    bool all_rational() const
    {
        for (const auto& t : t_)
            if (!t.c.is_rational()) return false;
        return true;
    }

    friend BiForm operator+(const BiForm& a, const BiForm& b) { return merge(a, b, false); }
    friend BiForm operator-(const BiForm& a, const BiForm& b) { return merge(a, b, true); }
    friend BiForm operator-(const BiForm& a)
    {
        BiForm r = a;
        for (auto& t : r.t_) t.c = -t.c;
        return r;
    }
    friend BiForm operator*(const CycNum& s, const BiForm& a)
    {
        if (s.is_zero()) return {};
        BiForm r = a;
        for (auto& t : r.t_) t.c = s * t.c;
        return r;
    }
    friend BiForm operator*(const BiForm& a, const BiForm& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        auto da = a.degree(), db = b.degree();
        if (da && db) {
            // Homogeneous product: dense accumulation indexed by the X exponent.
            const int d = *da + *db;
            std::vector<CycNum> acc(d + 1);
            std::vector<char> used(d + 1, 0);
            for (const auto& s : a.t_)
                for (const auto& t : b.t_) {
                    int x = s.x + t.x;
                    if (used[x]) acc[x] += s.c * t.c;
                    else {
                        acc[x] = s.c * t.c;
                        used[x] = 1;
                    }
                }
            BiForm r;
            for (int x = d; x >= 0; --x)
                if (used[x] && !acc[x].is_zero()) r.t_.push_back({x, d - x, std::move(acc[x])});
            return r;
        }
        std::vector<Term> prod;
        prod.reserve(a.t_.size() * b.t_.size());
        for (const auto& s : a.t_)
            for (const auto& t : b.t_) prod.push_back({s.x + t.x, s.y + t.y, s.c * t.c});
        return from_terms(prod);
    }
    BiForm& operator+=(const BiForm& b) { return *this = *this + b; }
    BiForm& operator*=(const BiForm& b) { return *this = *this * b; }

    BiForm pow(int e) const
    {
        if (e < 0) throw std::domain_error("BiForm::pow: negative exponent");
        BiForm acc(1), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    /// Multiplies by X^a Y^b.
    BiForm shifted(int a, int b) const
    {
        BiForm r = *this;
        for (auto& t : r.t_) {
            t.x += a;
            t.y += b;
        }
        return r;
    }

    friend bool operator==(const BiForm& a, const BiForm& b)
    {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].x != b.t_[i].x || a.t_[i].y != b.t_[i].y || a.t_[i].c != b.t_[i].c) return false;
        return true;
    }
    friend bool operator!=(const BiForm& a, const BiForm& b) { return !(a == b); }

    /// LaTeX-style text, e.g. "X^{11} Y - 11 X^{6} Y^{6} - X Y^{11}".
    std::string to_string() const
    {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& t : t_) {
            std::string mono;
            if (t.x) mono += t.x == 1 ? "X" : "X^{" + std::to_string(t.x) + "}";
            if (t.y) mono += std::string(mono.empty() ? "" : " ") + (t.y == 1 ? "Y" : "Y^{" + std::to_string(t.y) + "}");
            bool neg = false;
            std::string coef;
            if (t.c.is_rational()) {
                Rat v = t.c.rational_value();
                neg = sgn(v) < 0;
                Rat a = abs(v);
                if (a != 1 || mono.empty()) coef = a.get_str();
            } else {
                coef = "(" + t.c.to_string() + ")";
            }
            std::string body = coef.empty() ? mono : (mono.empty() ? coef : coef + " " + mono);
            if (out.empty()) out = (neg ? "-" : "") + body;
            else out += (neg ? " - " : " + ") + body;
        }
        return out;
    }

private:
    // Total degree descending, then X exponent descending.
    struct KeyLess {
        bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const
        {
            int da = a.first + a.second, db = b.first + b.second;
            if (da != db) return da > db;
            return a.first > b.first;
        }
    };
    static bool term_before(const Term& a, const Term& b) { return KeyLess{}({a.x, a.y}, {b.x, b.y}); }

    static BiForm merge(const BiForm& a, const BiForm& b, bool subtract)
    {
        BiForm r;
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && term_before(a.t_[i], b.t_[j]))) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || term_before(b.t_[j], a.t_[i])) {
                Term t = b.t_[j++];
                if (subtract) t.c = -t.c;
                r.t_.push_back(std::move(t));
            } else {
                CycNum c = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
                if (!c.is_zero()) r.t_.push_back({a.t_[i].x, a.t_[i].y, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> t_;
};

enum class FormOp { add, mul };

inline BiForm form_arith(const BiForm& f, const BiForm& g, FormOp op) { return op == FormOp::add ? f + g : f * g; }

inline bool is_zero(const BiForm& f) { return f.is_zero(); }

/// f(aX + bY, cX + dY) for g = [[a, b], [c, d]].
inline BiForm substitute_linear(const BiForm& f, const CycMatrix& g)
{
    if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("substitute_linear: 2x2 matrix required");
    if (f.is_zero()) return f;
    if (g(0, 1).is_zero() && g(1, 0).is_zero()) {
        std::vector<BiForm::Term> out;
        for (const auto& t : f.terms()) out.push_back({t.x, t.y, t.c * g(0, 0).pow(t.x) * g(1, 1).pow(t.y)});
        return BiForm::from_terms(out);
    }
    if (f.is_homogeneous()) {
        // Horner in L1 = aX + bY over dense coefficient vectors indexed by the X exponent.
        const int D = f.total_degree();
        std::vector<CycNum> c(D + 1);
        for (const auto& t : f.terms()) c[t.x] = t.c;
        std::vector<std::vector<CycNum>> l2pow{{CycNum(1)}};
        for (int j = 1; j <= D; ++j) {
            const auto& prev = l2pow.back();
            std::vector<CycNum> next(j + 1);
            for (int i = 0; i < j; ++i) {
                if (prev[i].is_zero()) continue;
                next[i + 1] += g(1, 0) * prev[i];
                next[i] += g(1, 1) * prev[i];
            }
            l2pow.push_back(std::move(next));
        }
        std::vector<CycNum> acc{c[D]};
        for (int j = 1; j <= D; ++j) {
            std::vector<CycNum> next(j + 1);
            for (int i = 0; i < j; ++i) {
                if (acc[i].is_zero()) continue;
                next[i + 1] += g(0, 0) * acc[i];
                next[i] += g(0, 1) * acc[i];
            }
            const CycNum& ci = c[D - j];
            if (!ci.is_zero())
                for (int i = 0; i <= j; ++i)
                    if (!l2pow[j][i].is_zero()) next[i] += ci * l2pow[j][i];
            acc = std::move(next);
        }
        std::vector<BiForm::Term> out;
        for (int i = D; i >= 0; --i)
            if (!acc[i].is_zero()) out.push_back({i, D - i, acc[i]});
        return BiForm::from_terms(out);
    }
    const BiForm l1 = BiForm::monomial(1, 0, g(0, 0)) + BiForm::monomial(0, 1, g(0, 1));
    const BiForm l2 = BiForm::monomial(1, 0, g(1, 0)) + BiForm::monomial(0, 1, g(1, 1));
    int mx = 0, my = 0;
    for (const auto& t : f.terms()) {
        mx = std::max(mx, t.x);
        my = std::max(my, t.y);
    }
    std::vector<BiForm> p1{BiForm(1)}, p2{BiForm(1)};
    for (int i = 1; i <= mx; ++i) p1.push_back(p1.back() * l1);
    for (int i = 1; i <= my; ++i) p2.push_back(p2.back() * l2);
    BiForm out;
    for (const auto& t : f.terms()) out += t.c * (p1[t.x] * p2[t.y]);
    return out;
}

inline BiForm partial_derivative(const BiForm& f, Var v)
{
    std::vector<BiForm::Term> out;
    for (const auto& t : f.terms()) {
        int e = v == Var::X ? t.x : t.y;
        if (e == 0) continue;
        out.push_back({v == Var::X ? t.x - 1 : t.x, v == Var::Y ? t.y - 1 : t.y, CycNum(static_cast<long>(e)) * t.c});
    }
    return BiForm::from_terms(out);
}

namespace detail {

/// Coefficients of f / (X^min_x Y^min_y) as a polynomial in x = X/Y (homogeneous f).
inline UPoly<CycNum> dehomogenize(const BiForm& f, int ax)
{
    int top = 0;
    for (const auto& t : f.terms()) top = std::max(top, t.x - ax);
    std::vector<CycNum> c(top + 1);
    for (const auto& t : f.terms()) c[t.x - ax] = t.c;
    return UPoly<CycNum>(std::move(c));
}

inline std::optional<BiForm> divide_generic(BiForm f, const BiForm& g)
{
    const auto& lt = g.terms().front();
    const CycNum inv = lt.c.inverse();
    std::vector<BiForm::Term> q;
    while (!f.is_zero()) {
        const auto& h = f.terms().front();
        if (h.x < lt.x || h.y < lt.y) return std::nullopt;
        BiForm::Term t{h.x - lt.x, h.y - lt.y, h.c * inv};
        q.push_back(t);
        f = f - BiForm::monomial(t.x, t.y, t.c) * g;
    }
    return BiForm::from_terms(q);
}

}  // namespace detail

/// Exact quotient f / g, or nullopt when g does not divide f.
inline std::optional<BiForm> divide_exact(const BiForm& f, const BiForm& g)
{
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero form");
    if (f.is_zero()) return BiForm{};
    auto df = f.degree(), dg = g.degree();
    if (!df || !dg) return detail::divide_generic(f, g);
    if (*dg > *df) return std::nullopt;
    // Strip monomial factors, divide the dehomogenized cores at Y = 1, re-homogenize.
    const int a = f.min_x(), b = f.min_y(), c = g.min_x(), e = g.min_y();
    if (c > a || e > b) return std::nullopt;
    UPoly<CycNum> pf = detail::dehomogenize(f, a), pg = detail::dehomogenize(g, c);
    const int core_f = *df - a - b, core_g = *dg - c - e;
    if (pf.degree() != core_f || pg.degree() != core_g) throw std::logic_error("divide_exact: inconsistent core degree");
    auto [q, r] = divmod(pf, pg);
    if (!r.is_zero()) return std::nullopt;
    const int dq = core_f - core_g;
    std::vector<BiForm::Term> out;
    for (int i = 0; i <= q.degree(); ++i)
        if (!q.coeff(i).is_zero()) out.push_back({i + a - c, dq - i + b - e, q.coeff(i)});
    return BiForm::from_terms(out);
}

/// True when a nonzero homogeneous form has no repeated linear factor.
inline bool is_squarefree(const BiForm& f)
{
    if (f.is_zero() || !f.degree()) return false;
    const int a = f.min_x(), b = f.min_y();
    if (a > 1 || b > 1) return false;
    UPoly<CycNum> p = detail::dehomogenize(f, a);
    if (p.degree() < 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

class LocElem {
public:
    using PolePtr = std::shared_ptr<const BiForm>;

    LocElem() = default;
    LocElem(long c) : num_(c) {}
    LocElem(int c) : num_(c) {}
    LocElem(const CycNum& c) : num_(c) {}
    LocElem(BiForm num, PolePtr pole, int m = 0, int dx = 0, int dy = 0)
        : num_(std::move(num)), pole_(std::move(pole)), m_(m), dx_(dx), dy_(dy)
    {
        if (m_ < 0 || dx_ < 0 || dy_ < 0) throw std::domain_error("LocElem: negative denominator power");
        if (m_ > 0 && !pole_) throw std::domain_error("LocElem: pole power without pole form");
        reduce();
    }
    static PolePtr make_pole(const BiForm& p)
    {
        if (p.is_zero() || !p.degree()) throw std::domain_error("LocElem: pole form must be nonzero homogeneous");
        return std::make_shared<const BiForm>(p);
    }

    const BiForm& numerator() const { return num_; }
    const PolePtr& pole() const { return pole_; }
    int pole_power() const { return m_; }
    int x_power() const { return dx_; }
    int y_power() const { return dy_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial_in_pole() const { return dx_ == 0 && dy_ == 0; }

    std::optional<int> degree() const
    {
        auto d = num_.degree();
        if (!d) return std::nullopt;
        int pd = pole_ ? *pole_->degree() : 0;
        return *d - m_ * pd - dx_ - dy_;
    }

    friend LocElem operator+(const LocElem& a, const LocElem& b) { return add(a, b, false); }
    friend LocElem operator-(const LocElem& a, const LocElem& b) { return add(a, b, true); }
    friend LocElem operator-(const LocElem& a)
    {
        LocElem r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend LocElem operator*(const LocElem& a, const LocElem& b)
    {
        if (a.is_zero() || b.is_zero()) return LocElem(0);
        return LocElem(a.num_ * b.num_, common_pole(a, b), a.m_ + b.m_, a.dx_ + b.dx_, a.dy_ + b.dy_);
    }
    LocElem& operator+=(const LocElem& b) { return *this = *this + b; }

    /// Divides by P^k X^a Y^b.
    LocElem divided(int k, int a = 0, int b = 0) const
    {
        return LocElem(num_, pole_, m_ + k, dx_ + a, dy_ + b);
    }

    friend bool operator==(const LocElem& a, const LocElem& b)
    {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        PolePtr p = common_pole(a, b);
        const int m = std::min(a.m_, b.m_), x = std::min(a.dx_, b.dx_), y = std::min(a.dy_, b.dy_);
        BiForm lhs = a.num_, rhs = b.num_;
        if (b.m_ > m) lhs = lhs * p->pow(b.m_ - m);
        if (a.m_ > m) rhs = rhs * p->pow(a.m_ - m);
        lhs = lhs.shifted(b.dx_ - x, b.dy_ - y);
        rhs = rhs.shifted(a.dx_ - x, a.dy_ - y);
        return lhs == rhs;
    }
    friend bool operator!=(const LocElem& a, const LocElem& b) { return !(a == b); }

    /// Rewrites monomial denominators through P when X or Y divides P; nullopt if impossible.
    std::optional<LocElem> in_localization() const
    {
        if (is_polynomial_in_pole()) return *this;
        if (!pole_) return std::nullopt;
        const int px = pole_->min_x(), py = pole_->min_y();
        if ((dx_ > 0 && px == 0) || (dy_ > 0 && py == 0)) return std::nullopt;
        // With P = X^px Y^py R: 1/(X^dx Y^dy) = X^(s px - dx) Y^(s py - dy) R^s / P^s.
        int s = 0;
        if (dx_ > 0) s = std::max(s, (dx_ + px - 1) / px);
        if (dy_ > 0) s = std::max(s, (dy_ + py - 1) / py);
        BiForm rest = *divide_exact(*pole_, BiForm::monomial(px, py));
        BiForm num = (num_ * rest.pow(s)).shifted(s * px - dx_, s * py - dy_);
        return LocElem(std::move(num), pole_, m_ + s);
    }

    std::string to_string() const
    {
        std::string den;
        if (m_ > 0) den += "(" + pole_->to_string() + ")" + (m_ > 1 ? "^" + std::to_string(m_) : "");
        if (dx_ > 0) den += std::string(den.empty() ? "" : " ") + (dx_ > 1 ? "X^{" + std::to_string(dx_) + "}" : "X");
        if (dy_ > 0) den += std::string(den.empty() ? "" : " ") + (dy_ > 1 ? "Y^{" + std::to_string(dy_) + "}" : "Y");
        if (den.empty()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den + ")";
    }

private:
    static PolePtr common_pole(const LocElem& a, const LocElem& b)
    {
        if (!a.pole_) return b.pole_;
        if (!b.pole_) return a.pole_;
        if (a.pole_ != b.pole_ && *a.pole_ != *b.pole_) throw std::logic_error("LocElem: mismatched pole forms");
        return a.pole_;
    }

    static LocElem add(const LocElem& a, const LocElem& b, bool subtract)
    {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        PolePtr p = common_pole(a, b);
        const int m = std::max(a.m_, b.m_), x = std::max(a.dx_, b.dx_), y = std::max(a.dy_, b.dy_);
        BiForm na = a.num_, nb = b.num_;
        if (m > a.m_) na = na * p->pow(m - a.m_);
        if (m > b.m_) nb = nb * p->pow(m - b.m_);
        na = na.shifted(x - a.dx_, y - a.dy_);
        nb = nb.shifted(x - b.dx_, y - b.dy_);
        return LocElem(subtract ? na - nb : na + nb, p, m, x, y);
    }

    void reduce()
    {
        if (num_.is_zero()) {
            m_ = dx_ = dy_ = 0;
            return;
        }
        int cx = std::min(dx_, num_.min_x()), cy = std::min(dy_, num_.min_y());
        if (cx || cy) {
            num_ = num_.shifted(-cx, -cy);
            dx_ -= cx;
            dy_ -= cy;
        }
        while (m_ > 0) {
            auto q = divide_exact(num_, *pole_);
            if (!q) break;
            num_ = std::move(*q);
            --m_;
        }
    }

    BiForm num_;
    PolePtr pole_;
    int m_ = 0, dx_ = 0, dy_ = 0;
};

inline bool is_zero(const LocElem& u) { return u.is_zero(); }

enum class LocOp { add, mul };

inline LocElem loc_arith(const LocElem& u, const LocElem& v, LocOp op) { return op == LocOp::add ? u + v : u * v; }

using RfMatrix = Matrix<LocElem>;

/// Scalar c with substitute_linear(f, g) = c f, or nullopt when f is not relatively invariant under g.
inline std::optional<CycNum> relative_character(const BiForm& f, const CycMatrix& g)
{
    if (f.is_zero()) return std::nullopt;
    BiForm h = substitute_linear(f, g);
    const auto& lead = f.terms().front();
    CycNum c = h.coeff(lead.x, lead.y) / lead.c;
    if (h != c * f) return std::nullopt;
    return c;
}

/// Substitution X, Y -> g(X, Y) on numerator / P^m; P must be relatively invariant under g.
inline LocElem substitute_linear(const LocElem& u, const CycMatrix& g)
{
    if (!u.is_polynomial_in_pole()) throw std::domain_error("substitute_linear: monomial denominators not supported");
    BiForm num = substitute_linear(u.numerator(), g);
    if (u.pole_power() == 0) return LocElem(num, u.pole());
    auto c = relative_character(*u.pole(), g);
    if (!c) throw std::domain_error("substitute_linear: pole form not relatively invariant");
    return LocElem(c->pow(-u.pole_power()) * num, u.pole(), u.pole_power());
}

}  // namespace alia

#pragma once

/**
 * @file intertwiner.hpp
 * @brief The 2x2 intertwiner built from a relative invariant form, symmetric powers, the adjoint
 * representation on sl(n), explicit equivariant matrix generators and their cross-validation
 * against the structure tables.
 */

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "alia/bipoly.hpp"
#include "alia/polyhedral.hpp"
#include "alia/rootsystem.hpp"
#include "alia/structure.hpp"

namespace alia {

namespace detail {

template <class T>
T from_rat(const Rat& r);
template <>
inline Rat from_rat<Rat>(const Rat& r) { return r; }
template <>
inline CycNum from_rat<CycNum>(const Rat& r) { return CycNum(r); }
template <>
inline LocElem from_rat<LocElem>(const Rat& r) { return LocElem(CycNum(r)); }

template <class T>
Matrix<T> lift(const Matrix<Rat>& a)
{
    return a.map([](const Rat& r) { return from_rat<T>(r); });
}

inline RfMatrix lift_cyc(const CycMatrix& a)
{
    return a.map([](const CycNum& c) { return LocElem(c); });
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) { return a * b - b * a; }

template <class T>
bool all_zero(const Matrix<T>& a)
{
    for (const auto& x : a.entries())
        if (!is_zero(x)) return false;
    return true;
}

/// Inverse of a 2x2 matrix of determinant one.
template <class T>
Matrix<T> inverse_unimodular(const Matrix<T>& g)
{
    return Matrix<T>(2, 2, {g(1, 1), -g(0, 1), -g(1, 0), g(0, 0)});
}

}  // namespace detail

/// The intertwiner [[∂_Y P/(dP), X], [-∂_X P/(dP), Y]] and its inverse.
struct Intertwiner2 {
    BiForm form;
    LocElem::PolePtr pole;
    int degree = 0;
    RfMatrix matrix;
    RfMatrix inverse;
};

namespace detail {

/// X^a Y^b as a localized element, possibly with monomial denominators (negative exponents).
inline LocElem monomial_loc(int a, int b, const LocElem::PolePtr& pole)
{
    return LocElem(BiForm::monomial(std::max(a, 0), std::max(b, 0)), pole, 0, std::max(-a, 0), std::max(-b, 0));
}

/// Logarithmic derivative term ∂_v P / (d P).
inline LocElem log_derivative(const Intertwiner2& w, Var v)
{
    return LocElem(make_rat(1, w.degree) * partial_derivative(w.form, v), w.pole, 1);
}

inline bool is_identity(const RfMatrix& a)
{
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != LocElem(i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace detail

/// Properties (i), (ii), (iv) and the factorisation M = exp((X/Y)e) exp(-Y f_X f) diag(1/Y, Y).
inline void verify_modaut(const Intertwiner2& w)
{
    const RfMatrix& M = w.matrix;
    if (det(M) != LocElem(1)) throw std::logic_error("modaut: determinant is not 1");
    if (!detail::is_identity(M * w.inverse)) throw std::logic_error("modaut: inverse mismatch");
    for (const auto& e : M.entries())
        if (!e.is_polynomial_in_pole()) throw std::logic_error("modaut: entry outside C[X,Y,1/P]");
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (M(i, j).is_zero()) continue;
            auto d = M(i, j).degree();
            if (!d || *d != (j == 0 ? -1 : 1)) throw std::logic_error("modaut: column degree mismatch");
        }
    }
    const LocElem zero(0), one(1);
    RfMatrix U(2, 2, {one, detail::monomial_loc(1, -1, w.pole), zero, one});
    RfMatrix L(2, 2, {one, zero, -(detail::monomial_loc(0, 1, w.pole) * detail::log_derivative(w, Var::X)), one});
    RfMatrix D(2, 2, {detail::monomial_loc(0, -1, w.pole), zero, zero, detail::monomial_loc(0, 1, w.pole)});
    if (U * L * D != M) throw std::logic_error("modaut: factorisation identity fails");
}

/// Builds the intertwiner of a squarefree homogeneous form P; pole may be shared with other elements.
inline Intertwiner2 build_modaut(const BiForm& P, LocElem::PolePtr pole = nullptr)
{
    auto d = P.degree();
    if (P.is_zero() || !d || *d < 1) throw std::invalid_argument("build_modaut: P must be a nonzero homogeneous form");
    if (!is_squarefree(P)) throw std::invalid_argument("build_modaut: P has repeated linear factors");
    if (!pole) pole = LocElem::make_pole(P);
    else if (*pole != P) throw std::invalid_argument("build_modaut: pole handle does not match P");
    Intertwiner2 w;
    w.form = P;
    w.pole = pole;
    w.degree = *d;
    const LocElem fx = detail::log_derivative(w, Var::X), fy = detail::log_derivative(w, Var::Y);
    const LocElem X(BiForm::monomial(1, 0), pole), Y(BiForm::monomial(0, 1), pole);
    w.matrix = RfMatrix(2, 2, {fy, X, -fx, Y});
    w.inverse = RfMatrix(2, 2, {Y, -X, fx, fy});
    verify_modaut(w);
    return w;
}

/// Property (iii): M(g(X,Y)) = g M(X,Y) for each g.
inline bool modaut_equivariant(const Intertwiner2& w, const std::vector<CycMatrix>& gens)
{
    for (const auto& g : gens) {
        RfMatrix lhs = w.matrix.map([&](const LocElem& u) { return substitute_linear(u, g); });
        if (lhs != detail::lift_cyc(g) * w.matrix) return false;
    }
    return true;
}

/// The m-th symmetric power on the basis X^m, X^{m-1}Y, ..., Y^m: column j holds the
/// coefficients of (aX + cY)^{m-j} (bX + dY)^j.
class SymPower {
public:
    explicit SymPower(int m) : m_(m)
    {
        if (m < 1) throw std::invalid_argument("sym_power: m must be positive");
    }

    int power() const { return m_; }
    int dim() const { return m_ + 1; }

    template <class T>
    Matrix<T> operator()(const Matrix<T>& g) const
    {
        if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("sym_power: 2x2 input required");
        const T zero = detail::from_rat<T>(Rat(0)), one = detail::from_rat<T>(Rat(1));
        auto powers = [&](const T& x, const T& y) {
            std::vector<std::vector<T>> p{{one}};
            for (int e = 1; e <= m_; ++e) {
                std::vector<T> q(e + 1, zero);
                for (int i = 0; i < e; ++i) {
                    q[i] = q[i] + p.back()[i] * x;
                    q[i + 1] = q[i + 1] + p.back()[i] * y;
                }
                p.push_back(std::move(q));
            }
            return p;
        };
        const auto left = powers(g(0, 0), g(1, 0)), right = powers(g(0, 1), g(1, 1));
        Matrix<T> out(dim(), dim(), zero);
        for (int j = 0; j <= m_; ++j) {
            const auto& a = left[m_ - j];
            const auto& b = right[j];
            for (std::size_t u = 0; u < a.size(); ++u) {
                if (is_zero(a[u])) continue;
                for (std::size_t v = 0; v < b.size(); ++v) {
                    T& slot = out(static_cast<int>(u + v), j);
                    slot = slot + a[u] * b[v];
                }
            }
        }
        return out;
    }

    /// Differentials of e = [[0,1],[0,0]], f = [[0,0],[1,0]] and h = diag(1,-1).
    Matrix<Rat> E() const
    {
        Matrix<Rat> e(dim(), dim(), Rat(0));
        for (int j = 1; j <= m_; ++j) e(j - 1, j) = j;
        return e;
    }
    Matrix<Rat> F() const
    {
        Matrix<Rat> f(dim(), dim(), Rat(0));
        for (int j = 0; j < m_; ++j) f(j + 1, j) = m_ - j;
        return f;
    }
    Matrix<Rat> H() const
    {
        Matrix<Rat> h(dim(), dim(), Rat(0));
        for (int i = 0; i <= m_; ++i) h(i, i) = m_ - 2 * i;
        return h;
    }

private:
    int m_;
};

inline SymPower sym_power(int m) { return SymPower(m); }

/// Chevalley-style basis of sl(n): H_i = E_ii - E_{i+1,i+1}, then E_ij in the root order of A_{n-1}.
class SlBasis {
public:
    explicit SlBasis(int n) : n_(n), rs_(LieType{'A', n - 1})
    {
        if (n < 2) throw std::invalid_argument("sl basis: n must be at least 2");
        for (int i = 0; i + 1 < n; ++i) {
            Matrix<Rat> h(n, n, Rat(0));
            h(i, i) = 1;
            h(i + 1, i + 1) = -1;
            elems_.push_back(std::move(h));
        }
        for (int a = 0; a < rs_.size(); ++a) {
            const RootVec& v = rs_.root(a);
            int first = -1, last = -1;
            for (int j = 0; j < n - 1; ++j)
                if (v[j] != 0) {
                    if (first < 0) first = j;
                    last = j;
                }
            const int i = first, j = last + 1;
            Matrix<Rat> e(n, n, Rat(0));
            if (rs_.is_positive(a)) e(i, j) = 1;
            else e(j, i) = 1;
            pos_.push_back(rs_.is_positive(a) ? std::make_pair(i, j) : std::make_pair(j, i));
            elems_.push_back(std::move(e));
        }
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(elems_.size()); }
    int rank() const { return n_ - 1; }
    const RootSystem& system() const { return rs_; }
    const Matrix<Rat>& operator[](int x) const { return elems_[x]; }
    /// Matrix position (row, column) of the root vector of root a.
    std::pair<int, int> position(int a) const { return pos_[a]; }

    std::string label(int x) const
    {
        if (x < rank()) return "H" + std::to_string(x + 1);
        auto [i, j] = pos_[x - rank()];
        return "E" + std::to_string(i + 1) + std::to_string(j + 1);
    }

    /// Coordinates of a traceless matrix in this basis.
    template <class T>
    std::vector<T> coordinates(const Matrix<T>& y) const
    {
        std::vector<T> c;
        T acc = y(0, 0);
        c.push_back(acc);
        for (int l = 1; l + 1 < n_; ++l) {
            acc = acc + y(l, l);
            c.push_back(acc);
        }
        for (const auto& [i, j] : pos_) c.push_back(y(i, j));
        return c;
    }

private:
    int n_;
    RootSystem rs_;
    std::vector<Matrix<Rat>> elems_;
    std::vector<std::pair<int, int>> pos_;
};

/// Ad∘ρ on sl(dim ρ): column x holds the coordinates of ρ(g) x ρ(g)^{-1}; g must have determinant 1.
class AdjointRep {
public:
    explicit AdjointRep(SymPower rep) : rep_(rep), basis_(rep.dim()) {}

    int dim() const { return basis_.size(); }
    const SlBasis& basis() const { return basis_; }

    template <class T>
    Matrix<T> operator()(const Matrix<T>& g) const
    {
        const Matrix<T> R = rep_(g), Ri = rep_(detail::inverse_unimodular(g));
        const T zero = detail::from_rat<T>(Rat(0));
        Matrix<T> out(dim(), dim(), zero);
        for (int x = 0; x < dim(); ++x) {
            auto c = basis_.coordinates(R * detail::lift<T>(basis_[x]) * Ri);
            for (int y = 0; y < dim(); ++y) out(y, x) = c[y];
        }
        return out;
    }

    /// Matrix of ad(z) for a traceless z of size dim ρ.
    Matrix<Rat> ad(const Matrix<Rat>& z) const
    {
        Matrix<Rat> out(dim(), dim(), Rat(0));
        for (int x = 0; x < dim(); ++x) {
            auto c = basis_.coordinates(detail::commutator(z, basis_[x]));
            for (int y = 0; y < dim(); ++y) out(y, x) = c[y];
        }
        return out;
    }

private:
    SymPower rep_;
    SlBasis basis_;
};

inline AdjointRep adjoint_of(const SymPower& rep) { return AdjointRep(rep); }

/// Matrix generators a_x for x in the basis of sl(m+1), both construction routes, and ā_x = P_k a_x.
struct ExplicitGenerators {
    int m = 0;
    int pole_orbit = 0;
    Intertwiner2 modaut;
    std::vector<std::string> labels;
    /// H-eigenvalue of each basis element.
    std::vector<int> k;
    /// Sym^m(M) x Sym^m(M)^{-1}.
    std::vector<RfMatrix> a;
    /// exp(ad (X/Y)E) exp(ad(-Y f_X F)) Y^{-k} x, evaluated as finite sums.
    std::vector<RfMatrix> a_factored;
    std::vector<RfMatrix> abar;
    bool routes_agree = false;
};

namespace detail {

/// exp(ad A)(y) for nilpotent A.
inline RfMatrix exp_ad(const RfMatrix& A, const RfMatrix& y)
{
    RfMatrix acc = y, term = y;
    for (int n = 1;; ++n) {
        term = LocElem(CycNum(make_rat(1, n))) * commutator(A, term);
        if (all_zero(term)) break;
        acc = acc + term;
        if (n > 4 * A.rows()) throw std::logic_error("exp_ad: operator is not nilpotent");
    }
    return acc;
}

}  // namespace detail

inline ExplicitGenerators explicit_generators(const GroupModel& model, int pole_orbit, int m)
{
    if (m < 1 || m > 4) throw std::invalid_argument("explicit_generators: Sym power must be in [1, 4]");
    if (pole_orbit < 0 || pole_orbit >= model.orbit_count()) throw std::invalid_argument("pole orbit out of range");
    ExplicitGenerators out;
    out.m = m;
    out.pole_orbit = pole_orbit;
    const auto pole = pole_of(model, pole_orbit);
    out.modaut = build_modaut(ground_form(model, pole_orbit), pole);
    const SymPower rho(m);
    const SlBasis basis(m + 1);
    const RfMatrix S = rho(out.modaut.matrix), Si = rho(out.modaut.inverse);
    const RfMatrix E = detail::lift<LocElem>(rho.E()), F = detail::lift<LocElem>(rho.F());
    const LocElem t = detail::monomial_loc(1, -1, pole);
    const LocElem u = -(detail::monomial_loc(0, 1, pole) * detail::log_derivative(out.modaut, Var::X));
    const RfMatrix tE = t * E, uF = u * F;

    const int n = basis.size();
    out.labels.resize(n);
    out.k.resize(n);
    out.a.resize(n);
    out.a_factored.resize(n);
    out.abar.resize(n);
    std::vector<int> ok(n, 0);
    for (int x = 0; x < n; ++x) {
        out.labels[x] = basis.label(x);
        if (x < basis.rank()) out.k[x] = 0;
        else {
            auto [i, j] = basis.position(x - basis.rank());
            out.k[x] = 2 * (j - i);
        }
    }
    parallel_for(n, [&](int x) {
        const RfMatrix X = detail::lift<LocElem>(basis[x]);
        out.a[x] = S * X * Si;
        const RfMatrix y0 = detail::monomial_loc(0, -out.k[x], pole) * X;
        RfMatrix y = detail::exp_ad(tE, detail::exp_ad(uF, y0));
        y = y.map([](const LocElem& e) {
            auto r = e.in_localization();
            if (!r) throw std::logic_error("explicit_generators: entry outside the localization");
            return *r;
        });
        out.a_factored[x] = std::move(y);
        ok[x] = out.a_factored[x] == out.a[x];
        out.abar[x] = p_k(model, pole_orbit, out.k[x], pole) * out.a[x];
    });
    out.routes_agree = std::all_of(ok.begin(), ok.end(), [](int v) { return v != 0; });
    return out;
}

/// Checks M(g(X,Y)) = ρ(g) M ρ(g)^{-1} for every group generator g.
inline bool generator_equivariant(const RfMatrix& a, const GroupModel& model, const SymPower& rho)
{
    for (const auto& g : model.generators) {
        const RfMatrix R = detail::lift_cyc(rho(g)), Ri = detail::lift_cyc(rho(inverse_sl2(g)));
        RfMatrix lhs = a.map([&](const LocElem& e) { return substitute_linear(e, g); });
        if (lhs != R * a * Ri) return false;
    }
    return true;
}

struct CrossReport {
    bool ok = false;
    bool routes_agree = false;
    int pairs = 0;
    /// Signs s_α on positive roots aligning the matrix root vectors with the table constants.
    std::vector<int> gauge;
    std::vector<std::string> mismatches;
};

/// Compares matrix brackets of the explicit generators with the structure table, each
/// Hauptmodul monomial evaluated as a rational function.
inline CrossReport cross_validate(AliaSpec spec)
{
    if (!spec.lie_type.is_type_a() || spec.lie_type.rank > 3)
        throw std::invalid_argument("cross_validate: type A_m with m <= 3 required");
    if (spec.grading != principal_grading(spec.lie_type.rank))
        throw std::invalid_argument("cross_validate: principal grading required");
    spec.convention = ResidueConvention::Invariant;
    const BracketTable table(spec);
    const GroupModel& model = table.model();
    const RootSystem& rs = table.system();
    const int m = spec.lie_type.rank;
    const SlBasis basis(m + 1);
    CrossReport rep;

    std::vector<std::tuple<int, int, bool>> constraints;
    for (int a = 0; a < rs.size(); ++a)
        for (int b = 0; b < rs.size(); ++b) {
            const int s = rs.sum(a, b);
            if (s < 0) continue;
            auto c = basis.coordinates(detail::commutator(basis[m + a], basis[m + b]));
            if (c[m + s] != Rat(table.epsilon().eps(a, b)) && c[m + s] != Rat(-table.epsilon().eps(a, b)))
                throw std::logic_error("cross_validate: matrix constants differ beyond sign");
            constraints.emplace_back(a, b, c[m + s] != Rat(table.epsilon().eps(a, b)));
        }
    auto gauge = find_sign_gauge(rs, constraints);
    if (!gauge) {
        rep.mismatches.push_back("no sign gauge aligns the matrix basis with the Chevalley constants");
        return rep;
    }
    rep.gauge = *gauge;

    const ExplicitGenerators gens = explicit_generators(model, spec.pole_orbit, m);
    rep.routes_agree = gens.routes_agree;
    const auto pole = gens.modaut.pole;
    std::vector<LocElem> haupt;
    for (int o = 0; o < model.orbit_count(); ++o) haupt.push_back(hauptmodul(model, o, spec.pole_orbit, pole));

    std::vector<RfMatrix> elem(table.size());
    for (int x = 0; x < table.size(); ++x) {
        const BasisElem& b = table.basis()[x];
        if (b.kind == BasisElem::Kind::Cartan) elem[x] = gens.a[b.index];
        else {
            const int s = (*gauge)[rs.is_positive(b.index) ? b.index : rs.negative(b.index)];
            elem[x] = LocElem(s) * gens.abar[m + b.index];
        }
    }
    auto mono_value = [&](const HalfVec& mono) {
        LocElem v(1);
        for (int o = 0; o < model.orbit_count(); ++o) {
            if (mono[o] % 2) throw std::logic_error("cross_validate: half-integral exponent");
            for (int e = 0; e < mono[o] / 2; ++e) v = v * haupt[o];
        }
        return v;
    };

    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < table.size(); ++x)
        for (int y = x + 1; y < table.size(); ++y) pairs.emplace_back(x, y);
    rep.pairs = static_cast<int>(pairs.size());
    std::mutex mu;
    parallel_for(rep.pairs, [&](int p) {
        const auto [x, y] = pairs[p];
        const RfMatrix lhs = detail::commutator(elem[x], elem[y]);
        RfMatrix rhs(m + 1, m + 1, LocElem(0));
        for (const Term& t : table.bracket(x, y))
            rhs = rhs + (LocElem(static_cast<long>(t.coeff)) * mono_value(t.mono)) * elem[t.basis];
        if (lhs != rhs) {
            std::lock_guard<std::mutex> lock(mu);
            rep.mismatches.push_back("[" + table.basis_label(x) + ", " + table.basis_label(y) + "]");
        }
    });
    rep.ok = rep.mismatches.empty() && rep.routes_agree;
    return rep;
}

}  // namespace alia

#pragma once

/**
 * @file rootsystem.hpp
 * @brief Simple root systems, Chevalley structure constants, Dynkin gradings and root-system cocycles.
 *
 * Roots are integer coordinate vectors in the simple-root basis with Bourbaki numbering.
 * Squared lengths are normalised so short roots have |α|² = 2. Positive roots are ordered
 * by height, then by coordinates in decreasing lexicographic order; the full root list is
 * the positive roots followed by their negatives in the same order.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alia/polyhedral.hpp"

namespace alia {

using RootVec = std::vector<int>;

struct LieType {
    char family = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    static LieType parse(const std::string& s)
    {
        if (s.size() < 2) throw std::invalid_argument("bad Lie type: " + s);
        LieType t{static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))), 0};
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad Lie type: " + s);
        t.rank = std::stoi(s.substr(1));
        t.validate();
        return t;
    }

    void validate() const
    {
        const int n = rank;
        bool ok = false;
        switch (family) {
        case 'A': ok = n >= 1 && n <= 8; break;
        case 'B': ok = n >= 2 && n <= 8; break;
        case 'C': ok = n >= 2 && n <= 8; break;
        case 'D': ok = n >= 4 && n <= 8; break;
        case 'E': ok = n >= 6 && n <= 8; break;
        case 'F': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        default: ok = false;
        }
        if (!ok) throw std::domain_error("unsupported Lie type " + name());
    }

    bool is_type_a() const { return family == 'A'; }
    friend bool operator==(const LieType& a, const LieType& b) { return a.family == b.family && a.rank == b.rank; }
};

namespace detail {

/// Symmetric Gram matrix (α_i, α_j) of the simple roots.
inline std::vector<std::vector<int>> gram_matrix(const LieType& t)
{
    t.validate();
    const int n = t.rank;
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
    switch (t.family) {
    case 'A':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'B':
        for (int i = 0; i < n - 1; ++i) g[i][i] = 4;
        g[n - 1][n - 1] = 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
    case 'C':
        for (int i = 0; i < n - 1; ++i) g[i][i] = 2;
        g[n - 1][n - 1] = 4;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
    case 'D':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case 'E':
        for (int i = 0; i < n; ++i) g[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'F':
        g[0][0] = g[1][1] = 4;
        g[2][2] = g[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case 'G':
        g[0][0] = 2;
        g[1][1] = 6;
        link(0, 1, -3);
        break;
    }
    return g;
}

}  // namespace detail

class RootSystem {
public:
    explicit RootSystem(const LieType& t) : type_(t), gram_(detail::gram_matrix(t)) { build(); }

    const LieType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int size() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return npos_; }
    const std::vector<RootVec>& roots() const { return roots_; }
    const RootVec& root(int i) const { return roots_[i]; }
    const std::vector<std::vector<int>>& gram() const { return gram_; }
    int norm2(int i) const { return norm2_[i]; }
    int simple_norm2(int j) const { return gram_[j][j]; }
    bool is_positive(int i) const { return i < npos_; }
    int negative(int i) const { return i < npos_ ? i + npos_ : i - npos_; }
    int simple(int j) const { return simple_idx_[j]; }
    int highest_root() const { return npos_ - 1; }
    int dim() const { return rank() + size(); }

    int height(int i) const
    {
        int h = 0;
        for (int c : roots_[i]) h += c;
        return h;
    }

    /// Index of a root, or -1.
    int find(const RootVec& v) const
    {
        auto it = index_.find(v);
        return it == index_.end() ? -1 : it->second;
    }

    /// Index of roots[i] + roots[j], or -1 when the sum is not a root (including zero).
    int sum(int i, int j) const { return sum_[static_cast<std::size_t>(i) * size() + j]; }

    int inner(const RootVec& a, const RootVec& b) const
    {
        int s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
        }
        return s;
    }

    /// Cartan integer <α_i, α_j^∨> = 2(α_i, α_j)/(α_j, α_j).
    int cartan(int i, int j) const { return 2 * gram_[i][j] / gram_[j][j]; }

    /// α(H_j) = <α, α_j^∨> for the root with index i.
    int pairing(int i, int j) const
    {
        int s = 0;
        for (int l = 0; l < rank(); ++l) s += roots_[i][l] * cartan(l, j);
        return s;
    }

    /// Coordinates of the coroot H_α in the basis of simple coroots H_j.
    std::vector<int> coroot(int i) const
    {
        std::vector<int> h(rank());
        for (int j = 0; j < rank(); ++j) {
            const int num = roots_[i][j] * gram_[j][j];
            if (num % norm2_[i]) throw std::logic_error("non-integral coroot coordinate");
            h[j] = num / norm2_[i];
        }
        return h;
    }

    /// Largest p with roots[j] - p roots[i] a root.
    int string_p(int i, int j) const
    {
        RootVec v = roots_[j];
        int p = 0;
        for (;;) {
            for (int l = 0; l < rank(); ++l) v[l] -= roots_[i][l];
            if (find(v) < 0) return p;
            ++p;
        }
    }

    std::string root_string(int i, const std::string& sep = " ") const
    {
        std::string s;
        for (int l = 0; l < rank(); ++l) {
            if (l) s += sep;
            s += std::to_string(roots_[i][l]);
        }
        return s;
    }

private:
    void build()
    {
        const int n = rank();
        std::vector<RootVec> pos;
        std::map<RootVec, int> seen;
        for (int j = 0; j < n; ++j) {
            RootVec v(n, 0);
            v[j] = 1;
            seen[v] = 1;
            pos.push_back(v);
        }
        // Extend by simple roots using α-strings: β + α_j is a root iff q = p - <β, α_j^∨> > 0.
        for (std::size_t head = 0; head < pos.size(); ++head) {
            const RootVec beta = pos[head];
            for (int j = 0; j < n; ++j) {
                int p = 0;
                RootVec down = beta;
                for (;;) {
                    down[j] -= 1;
                    if (!seen.count(down)) break;
                    ++p;
                }
                int pair = 0;
                for (int l = 0; l < n; ++l) pair += beta[l] * cartan(l, j);
                if (p - pair > 0) {
                    RootVec up = beta;
                    up[j] += 1;
                    if (!seen.count(up)) {
                        seen[up] = 1;
                        pos.push_back(up);
                    }
                }
            }
        }
        auto ht = [](const RootVec& v) {
            int h = 0;
            for (int c : v) h += c;
            return h;
        };
        std::sort(pos.begin(), pos.end(), [&](const RootVec& a, const RootVec& b) {
            int ha = ht(a), hb = ht(b);
            if (ha != hb) return ha < hb;
            return a > b;
        });
        npos_ = static_cast<int>(pos.size());
        roots_ = pos;
        for (const auto& v : pos) {
            RootVec m = v;
            for (int& c : m) c = -c;
            roots_.push_back(m);
        }
        for (int i = 0; i < size(); ++i) index_[roots_[i]] = i;
        for (int i = 0; i < size(); ++i) norm2_.push_back(inner(roots_[i], roots_[i]));
        simple_idx_.assign(n, -1);
        for (int j = 0; j < n; ++j) {
            RootVec v(n, 0);
            v[j] = 1;
            simple_idx_[j] = find(v);
        }
        const int R = size();
        sum_.assign(static_cast<std::size_t>(R) * R, -1);
        RootVec v(n);
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < R; ++j) {
                for (int l = 0; l < n; ++l) v[l] = roots_[i][l] + roots_[j][l];
                sum_[static_cast<std::size_t>(i) * R + j] = find(v);
            }
    }

    LieType type_;
    std::vector<std::vector<int>> gram_;
    std::vector<RootVec> roots_;
    std::vector<int> norm2_;
    std::vector<int> simple_idx_;
    std::map<RootVec, int> index_;
    std::vector<int> sum_;
    int npos_ = 0;
};

inline RootSystem build_root_system(const LieType& t) { return RootSystem(t); }

/// Expected root counts per type, used as a construction check.
inline int expected_root_count(const LieType& t)
{
    const int n = t.rank;
    switch (t.family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    }
    return 0;
}

/// Structure constants N_{α,β} of a Chevalley basis, [e_α, e_β] = N_{α,β} e_{α+β}.
class ChevalleyConstants {
public:
    explicit ChevalleyConstants(const RootSystem& rs) : rs_(&rs)
    {
        const int R = rs.size();
        memo_.assign(static_cast<std::size_t>(R) * R, kUnset);
        extraspecial_.assign(rs.num_positive(), -1);
        // Extraspecial pair of ξ: the smallest α with ξ - α a positive root.
        for (int x = 0; x < rs.num_positive(); ++x)
            for (int a = 0; a < x; ++a) {
                RootVec d = rs.root(x);
                for (int l = 0; l < rs.rank(); ++l) d[l] -= rs.root(a)[l];
                int b = rs.find(d);
                if (b >= 0 && rs.is_positive(b)) {
                    extraspecial_[x] = a;
                    break;
                }
            }
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < R; ++j)
                if (rs.sum(i, j) >= 0) eps(i, j);
    }

    /// ε(α, β); zero when α + β is not a root.
    int eps(int i, int j) const
    {
        const RootSystem& rs = *rs_;
        const int s = rs.sum(i, j);
        if (s < 0) return 0;
        int& slot = memo_[static_cast<std::size_t>(i) * rs.size() + j];
        if (slot != kUnset) return slot;
        slot = compute(i, j, s);
        return slot;
    }

    /// First element of the extraspecial pair of a non-simple positive root, or -1.
    int extraspecial(int x) const { return extraspecial_[x]; }
    const RootSystem& system() const { return *rs_; }

private:
    static constexpr int kUnset = 1 << 30;

    int exact_div(long num, long den) const
    {
        if (den == 0 || num % den) throw std::logic_error("Chevalley constant not integral");
        return static_cast<int>(num / den);
    }

    int compute(int r, int s, int x) const
    {
        const RootSystem& rs = *rs_;
        const bool pr = rs.is_positive(r), ps = rs.is_positive(s);
        if (!pr && !ps) return -eps(rs.negative(r), rs.negative(s));
        if (pr != ps) {
            // r + s + t = 0: N_{r,s}/|t|² = N_{s,t}/|r|² = N_{t,r}/|s|².
            const int t = rs.negative(x);
            // Rotate to the pair of equal sign inside the triple.
            if (rs.is_positive(t) == pr) return exact_div(static_cast<long>(rs.norm2(t)) * eps(t, r), rs.norm2(s));
            return exact_div(static_cast<long>(rs.norm2(t)) * eps(s, t), rs.norm2(r));
        }
        const int a = extraspecial_[x];
        const int b = rs.sum(x, rs.negative(a));
        if (r == a && s == b) return rs.string_p(r, s) + 1;
        if (r == b && s == a) return -eps(a, b);
        if (r > s) return -eps(s, r);
        // Four-root relation for r + s - α - β = 0.
        const int na = rs.negative(a), nb = rs.negative(b);
        Rat acc = 0;
        const int sa = rs.sum(s, na);
        if (sa >= 0 && rs.sum(r, nb) >= 0) acc += make_rat(eps(s, na) * eps(r, nb), rs.norm2(sa));
        const int ra = rs.sum(r, na);
        if (ra >= 0 && rs.sum(s, nb) >= 0) acc += make_rat(eps(na, r) * eps(s, nb), rs.norm2(ra));
        acc *= make_rat(rs.norm2(x), eps(a, b));
        acc.canonicalize();
        if (acc.get_den() != 1) throw std::logic_error("Chevalley constant not integral");
        return static_cast<int>(acc.get_num().get_si());
    }

    const RootSystem* rs_;
    mutable std::vector<int> memo_;
    std::vector<int> extraspecial_;
};

inline ChevalleyConstants chevalley_epsilon(const RootSystem& rs) { return ChevalleyConstants(rs); }

using DynkinGrading = std::vector<int>;

inline void validate_grading(const RootSystem& rs, const DynkinGrading& g)
{
    if (static_cast<int>(g.size()) != rs.rank())
        throw std::invalid_argument("grading needs " + std::to_string(rs.rank()) + " labels");
    for (int v : g)
        if (v < 0 || v > 2) throw std::invalid_argument("grading labels must lie in {0,1,2}");
}

inline DynkinGrading principal_grading(int rank) { return DynkinGrading(rank, 2); }

inline int grading_k(const RootSystem& rs, const DynkinGrading& g, int i)
{
    int k = 0;
    for (int l = 0; l < rs.rank(); ++l) k += rs.root(i)[l] * g[l];
    return k;
}

inline bool grading_is_even(const RootSystem& rs, const DynkinGrading& g)
{
    for (int i = 0; i < rs.size(); ++i)
        if (grading_k(rs, g, i) % 2) return false;
    return true;
}

/// Built-in gradings: principal, the even rank-2 gradings, and the A-type gradings used for fixed-point counts.
inline std::vector<DynkinGrading> grading_library(const LieType& t)
{
    std::vector<DynkinGrading> out{principal_grading(t.rank)};
    const std::string n = t.name();
    if (n == "B2") out.push_back({2, 0});
    if (n == "C2") out.push_back({0, 2});
    if (n == "G2") out.push_back({0, 2});
    if (n == "A3") out.insert(out.end(), {{2, 0, 2}, {0, 2, 0}});
    if (n == "A4") out.push_back({2, 0, 0, 2});
    if (n == "A5")
        out.insert(out.end(), {{2, 2, 0, 2, 2}, {2, 0, 2, 0, 2}, {0, 2, 0, 2, 0}, {2, 0, 0, 0, 2}, {0, 0, 2, 0, 0}});
    return out;
}

enum class ResidueConvention {
    /// The tabulated map n(k): Cyclic(2m) uses residues mod m and half-integer cocycle values.
    Table,
    /// (k/2) mod ν_i in every case; matches the exponents of P_k.
    Invariant,
};

/// Exponent vector in half-units: value v stands for v/2.
using HalfVec = std::vector<int>;

/// Symmetric 2-cocycle ω² = d(n∘k/ν) on the even part of the root system.
class Cocycle2 {
public:
    Cocycle2(const RootSystem& rs, const DynkinGrading& g, const GroupModel& m,
             ResidueConvention conv = ResidueConvention::Table)
        : rs_(&rs), orbits_(m.orbit_count()), nu_(m.nu), conv_(conv),
          half_(conv == ResidueConvention::Table && m.kind.is_even_cyclic())
    {
        validate_grading(rs, g);
        k_.resize(rs.size());
        theta_num_.resize(rs.size());
        for (int i = 0; i < rs.size(); ++i) {
            k_[i] = grading_k(rs, g, i);
            if (k_[i] % 2) continue;
            NVec n = conv == ResidueConvention::Table ? n_map(m, k_[i]) : invariant_residues(m, k_[i]);
            theta_num_[i] = n.residues;
        }
    }

    int orbit_count() const { return orbits_; }
    const std::vector<int>& nu() const { return nu_; }
    ResidueConvention convention() const { return conv_; }
    int k(int i) const { return k_[i]; }
    bool even(int i) const { return k_[i] % 2 == 0; }

    /// θ(α) = n(k(α))/ν as rationals.
    std::vector<Rat> theta(int i) const
    {
        std::vector<Rat> t;
        for (int o = 0; o < orbits_; ++o) t.push_back(make_rat(theta_num_[i][o], nu_[o]));
        return t;
    }

    /// ω²(α, β) in half-units; β = -α allowed (θ(0) = 0). Throws for pairs outside the domain.
    HalfVec value(int i, int j) const
    {
        const RootSystem& rs = *rs_;
        const bool opposite = rs.negative(i) == j;
        const int s = opposite ? -1 : rs.sum(i, j);
        if (!opposite && s < 0) throw std::domain_error("cocycle: α + β is not a root or zero");
        if (!even(i) || !even(j)) throw std::domain_error("cocycle: odd degree root");
        HalfVec out(orbits_);
        for (int o = 0; o < orbits_; ++o) {
            long num = 2L * (theta_num_[i][o] + theta_num_[j][o] - (opposite ? 0 : theta_num_[s][o]));
            if (num % nu_[o]) throw std::logic_error("cocycle value not a half-integer");
            out[o] = static_cast<int>(num / nu_[o]);
            const int hi = half_ ? 1 : 2;
            if (out[o] != 0 && out[o] != hi) throw std::logic_error("cocycle value outside the allowed set");
        }
        return out;
    }

    /// Whether values live in {0, 1/2} instead of {0, 1}.
    bool half_values() const { return half_; }

    const RootSystem& system() const { return *rs_; }

private:
    const RootSystem* rs_;
    int orbits_;
    std::vector<int> nu_;
    ResidueConvention conv_;
    bool half_;
    std::vector<int> k_;
    std::vector<std::vector<int>> theta_num_;
};

inline Cocycle2 cocycle_omega2(const RootSystem& rs, const DynkinGrading& g, const GroupModel& m,
                               ResidueConvention conv = ResidueConvention::Table)
{
    return Cocycle2(rs, g, m, conv);
}

/// Formats a half-unit vector as "(a,b,c)" with fractions where needed.
inline std::string half_vec_string(const HalfVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i] % 2 ? std::to_string(v[i]) + "/2" : std::to_string(v[i] / 2);
    }
    return s + ")";
}

struct OrbitRow {
    int gamma = 0;
    int delta = 0;
    Rat eps;
    HalfVec omega;
};

struct OrbitTable {
    std::vector<OrbitRow> rows;
    /// Whether table-formula values agree with direct evaluation on every row.
    bool consistent = true;
};

inline HalfVec half_sub(const HalfVec& a, const HalfVec& b)
{
    HalfVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

/// The six pairs on the orbit of (α, β) ↦ (α+β, -α), from the tabulated transformation rules.
inline OrbitTable orbit_table(const RootSystem& rs, const ChevalleyConstants& eps, const Cocycle2& w, int a, int b)
{
    const int ab = rs.sum(a, b);
    if (ab < 0) throw std::domain_error("orbit_table: α + β is not a root");
    const int na = rs.negative(a), nb = rs.negative(b), nab = rs.negative(ab);
    const Rat e = eps.eps(a, b);
    const Rat rb = make_rat(rs.norm2(b), rs.norm2(ab)), ra = make_rat(rs.norm2(a), rs.norm2(ab));
    OrbitTable t;
    const HalfVec w0 = w.value(a, b);
    const HalfVec w1 = half_sub(w.value(a, na), w0);
    const HalfVec w2 = half_sub(w.value(ab, nab), w1);
    const HalfVec w3 = half_sub(w.value(b, nb), w2);
    const HalfVec w4 = half_sub(w.value(a, na), w3);
    const HalfVec w5 = half_sub(w.value(ab, nab), w4);
    t.rows = {{a, b, e, w0},           {ab, na, -rb * e, w1}, {b, nab, ra * e, w2},
              {na, nb, -e, w3},        {nab, a, rb * e, w4},  {nb, ab, -ra * e, w5}};
    for (auto& r : t.rows) {
        r.eps.canonicalize();
        if (r.eps != Rat(eps.eps(r.gamma, r.delta)) || r.omega != w.value(r.gamma, r.delta)) t.consistent = false;
    }
    return t;
}

/// Normal-form integral ω¹ with dω¹ = ω², values in half-units.
struct OneForm {
    std::vector<HalfVec> values;  // per root index
    int candidates = 0;           // valid simple-root assignments found, summed over orbit components
    std::vector<int> candidates_per_orbit;
    const HalfVec& operator()(int i) const { return values[i]; }
};

/// Exhaustive search over simple-root values; each orbit component is independent.
inline OneForm normal_form_integral(const Cocycle2& w)
{
    const RootSystem& rs = w.system();
    for (int i = 0; i < rs.size(); ++i)
        if (!w.even(i)) throw std::domain_error("normal_form_integral: grading must be even");
    const int n = rs.rank();
    const int unit = w.half_values() ? 1 : 2;  // half-units per step of the allowed set
    std::vector<int> allowed = rs.type().is_type_a() ? std::vector<int>{0, unit} : std::vector<int>{-unit, 0, unit};
    OneForm out;
    out.values.assign(rs.size(), HalfVec(w.orbit_count(), 0));
    for (int o = 0; o < w.orbit_count(); ++o) {
        // θ in half-units as rationals.
        std::vector<Rat> theta(rs.size());
        for (int i = 0; i < rs.size(); ++i) theta[i] = 2 * w.theta(i)[o];
        std::vector<int> pick(n, 0);
        std::optional<std::vector<int>> best;
        std::vector<int> best_vals;
        int count = 0;
        const int A = static_cast<int>(allowed.size());
        long total = 1;
        for (int j = 0; j < n; ++j) total *= A;
        for (long code = 0; code < total; ++code) {
            long c = code;
            std::vector<int> v(n);
            // Most significant digit first so codes enumerate in lexicographic order.
            for (int j = n - 1; j >= 0; --j) {
                v[j] = allowed[c % A];
                c /= A;
            }
            std::vector<Rat> L(n);
            for (int j = 0; j < n; ++j) L[j] = Rat(v[j]) - theta[rs.simple(j)];
            bool ok = true;
            std::vector<int> vals(rs.size());
            for (int i = 0; i < rs.size() && ok; ++i) {
                Rat x = theta[i];
                for (int j = 0; j < n; ++j)
                    if (rs.root(i)[j]) x += rs.root(i)[j] * L[j];
                x.canonicalize();
                if (x.get_den() != 1) {
                    ok = false;
                    break;
                }
                const int xv = static_cast<int>(x.get_num().get_si());
                if (std::find(allowed.begin(), allowed.end(), xv) == allowed.end()) ok = false;
                vals[i] = xv;
            }
            if (!ok) continue;
            ++count;
            if (!best || v < *best) {
                best = v;
                best_vals = vals;
            }
        }
        if (!best) throw std::logic_error("normal_form_integral: no integral in normal form exists");
        for (int i = 0; i < rs.size(); ++i) out.values[i][o] = best_vals[i];
        out.candidates += count;
        out.candidates_per_orbit.push_back(count);
    }
    return out;
}

/// Checks dω¹ = ω² on every pair in the domain.
inline bool is_integral_of(const OneForm& w1, const Cocycle2& w)
{
    const RootSystem& rs = w.system();
    for (int i = 0; i < rs.size(); ++i)
        for (int j = 0; j < rs.size(); ++j) {
            const bool opp = rs.negative(i) == j;
            const int s = rs.sum(i, j);
            if (!opp && s < 0) continue;
            HalfVec d(w.orbit_count());
            for (int o = 0; o < w.orbit_count(); ++o) d[o] = w1(i)[o] + w1(j)[o] - (opp ? 0 : w1(s)[o]);
            if (d != w.value(i, j)) return false;
        }
    return true;
}

}  // namespace alia

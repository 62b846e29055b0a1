#pragma once

/**
 * @file structure.hpp
 * @brief Structure tables of automorphic Lie algebras in Chevalley normal form and derived invariants.
 *
 * Basis: Cartan elements h_1..h_N, then ā_α for every root with even k(α), in root order.
 * Coefficients are integers times monomials in the Hauptmoduln; exponents are kept for every
 * orbit (the pole orbit included) in half-units, and MonoCoeff offers the reduced view with
 * the pole component dropped.
 */

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "alia/rootsystem.hpp"
#include "alia/upoly.hpp"

namespace alia {

struct AliaSpec {
    GroupKind group;
    int pole_orbit = 0;
    LieType lie_type;
    DynkinGrading grading;
    ResidueConvention convention = ResidueConvention::Table;
};

struct BasisElem {
    enum class Kind { Cartan, Root };
    Kind kind = Kind::Cartan;
    /// Simple-coroot index for Cartan elements, root index otherwise.
    int index = 0;
    friend bool operator==(const BasisElem& a, const BasisElem& b) { return a.kind == b.kind && a.index == b.index; }
};

/// Scalar times Hauptmodul monomial, with the pole orbit omitted.
struct MonoCoeff {
    Rat scalar;
    std::vector<Rat> exponents;
};

struct Term {
    int basis = 0;
    std::int64_t coeff = 0;
    HalfVec mono;
};

/// Number of worker threads: ALIA_THREADS if set to a positive integer, else hardware concurrency.
inline unsigned worker_threads()
{
    if (const char* env = std::getenv("ALIA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// Runs f(i) for i in [0, n) on up to worker_threads() threads.
template <class F>
void parallel_for(int n, F f)
{
    const unsigned T = std::min<unsigned>(worker_threads(), static_cast<unsigned>(std::max(n, 1)));
    if (T <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned t = 0; t < T; ++t)
        pool.emplace_back([&] {
            try {
                for (int i = next++; i < n; i = next++) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

class BracketTable {
public:
    explicit BracketTable(const AliaSpec& spec)
        : spec_(spec),
          model_(build_group(spec.group)),
          rs_(spec.lie_type),
          eps_(rs_),
          w2_(rs_, spec.grading, model_, spec.convention)
    {
        if (spec.pole_orbit < 0 || spec.pole_orbit >= model_.orbit_count())
            throw std::invalid_argument("pole orbit out of range");
        for (int i = 0; i < rs_.rank(); ++i) basis_.push_back({BasisElem::Kind::Cartan, i});
        root_basis_.assign(rs_.size(), -1);
        for (int a = 0; a < rs_.size(); ++a) {
            if (!w2_.even(a)) {
                odd_ = true;
                continue;
            }
            root_basis_[a] = static_cast<int>(basis_.size());
            basis_.push_back({BasisElem::Kind::Root, a});
        }
    }

    BracketTable(const BracketTable&) = delete;
    BracketTable& operator=(const BracketTable&) = delete;

    const AliaSpec& spec() const { return spec_; }
    const GroupModel& model() const { return model_; }
    const RootSystem& system() const { return rs_; }
    const ChevalleyConstants& epsilon() const { return eps_; }
    const Cocycle2& cocycle() const { return w2_; }
    const std::vector<BasisElem>& basis() const { return basis_; }
    int size() const { return static_cast<int>(basis_.size()); }
    /// Basis position of ā_α, or -1 when k(α) is odd.
    int root_basis(int a) const { return root_basis_[a]; }
    /// Set when some root has odd degree and its basis element was omitted.
    bool has_odd_roots() const { return odd_; }
    bool half_exponents() const { return w2_.half_values(); }

    HalfVec zero_mono() const { return HalfVec(model_.orbit_count(), 0); }

    /// [basis x, basis y] as a list of terms.
    std::vector<Term> bracket(int x, int y) const
    {
        const BasisElem& bx = basis_[x];
        const BasisElem& by = basis_[y];
        using K = BasisElem::Kind;
        std::vector<Term> out;
        if (bx.kind == K::Cartan && by.kind == K::Cartan) return out;
        if (bx.kind == K::Cartan) {
            const int v = rs_.pairing(by.index, bx.index);
            if (v) out.push_back({y, v, zero_mono()});
            return out;
        }
        if (by.kind == K::Cartan) {
            const int v = rs_.pairing(bx.index, by.index);
            if (v) out.push_back({x, -v, zero_mono()});
            return out;
        }
        const int a = bx.index, b = by.index;
        if (rs_.negative(a) == b) {
            const HalfVec m = w2_.value(a, b);
            const auto h = rs_.coroot(a);
            for (int j = 0; j < rs_.rank(); ++j)
                if (h[j]) out.push_back({j, h[j], m});
            return out;
        }
        const int s = rs_.sum(a, b);
        if (s < 0) return out;
        out.push_back({root_basis_[s], eps_.eps(a, b), w2_.value(a, b)});
        return out;
    }

    /// Reduced coefficient view: integer scalar and exponents without the pole orbit.
    MonoCoeff reduced(const Term& t) const
    {
        MonoCoeff c;
        c.scalar = Rat(static_cast<long>(t.coeff));
        for (int o = 0; o < model_.orbit_count(); ++o)
            if (o != spec_.pole_orbit) c.exponents.push_back(make_rat(t.mono[o], 2));
        return c;
    }

    std::string basis_label(int x) const
    {
        const BasisElem& b = basis_[x];
        if (b.kind == BasisElem::Kind::Cartan) return "h" + std::to_string(b.index + 1);
        return "a(" + rs_.root_string(b.index, ",") + ")";
    }

private:
    AliaSpec spec_;
    GroupModel model_;
    RootSystem rs_;
    ChevalleyConstants eps_;
    Cocycle2 w2_;
    std::vector<BasisElem> basis_;
    std::vector<int> root_basis_;
    bool odd_ = false;
};

inline BracketTable build_bracket_table(const AliaSpec& spec) { return BracketTable(spec); }

inline AliaSpec make_spec(const GroupKind& g, int pole, const LieType& t, const DynkinGrading& labels,
                          ResidueConvention conv = ResidueConvention::Table)
{
    return AliaSpec{g, pole, t, labels, conv};
}

struct JacobiReport {
    long triples = 0;
    long violations = 0;
    std::vector<std::string> examples;
    bool ok() const { return violations == 0; }
};

namespace detail {

using ElemKey = std::pair<int, HalfVec>;

}  // namespace detail

/// Exact Jacobi identity on all triples x < y < z, in the free commutative ring on the Hauptmoduln.
inline JacobiReport jacobi_check(const BracketTable& t)
{
    const int B = t.size();
    // Cache brackets of basis pairs.
    std::vector<std::vector<Term>> cache(static_cast<std::size_t>(B) * B);
    for (int x = 0; x < B; ++x)
        for (int y = 0; y < B; ++y) cache[static_cast<std::size_t>(x) * B + y] = t.bracket(x, y);
    auto br = [&](int x, int y) -> const std::vector<Term>& { return cache[static_cast<std::size_t>(x) * B + y]; };
    std::atomic<long> triples{0}, bad{0};
    std::mutex mu;
    JacobiReport rep;
    parallel_for(B, [&](int x) {
        long local_triples = 0, local_bad = 0;
        std::map<detail::ElemKey, std::int64_t> acc;
        for (int y = x + 1; y < B; ++y)
            for (int z = y + 1; z < B; ++z) {
                ++local_triples;
                acc.clear();
                auto add = [&](int p, int q, int r) {
                    for (const auto& u : br(q, r))
                        for (const auto& v : br(p, u.basis)) {
                            HalfVec m = u.mono;
                            for (std::size_t o = 0; o < m.size(); ++o) m[o] += v.mono[o];
                            acc[{v.basis, std::move(m)}] += u.coeff * v.coeff;
                        }
                };
                add(x, y, z);
                add(y, z, x);
                add(z, x, y);
                for (const auto& [k, c] : acc)
                    if (c != 0) {
                        ++local_bad;
                        std::lock_guard<std::mutex> lock(mu);
                        if (rep.examples.size() < 5)
                            rep.examples.push_back(t.basis_label(x) + ", " + t.basis_label(y) + ", " + t.basis_label(z));
                        break;
                    }
            }
        triples += local_triples;
        bad += local_bad;
    });
    rep.triples = triples;
    rep.violations = bad;
    return rep;
}

/// Dimension of the span of integer vectors, by exact elimination over Q.
inline int rational_rank(std::vector<std::vector<Rat>> rows)
{
    int rank = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (sgn(rows[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || sgn(rows[r][c]) == 0) continue;
            const Rat f = rows[r][c] / rows[rank][c];
            for (int l = c; l < cols; ++l) rows[r][l] -= f * rows[rank][l];
        }
        ++rank;
    }
    return rank;
}

/// Residue vector used by the derived invariants, following the table's residue convention.
inline NVec residues_for(const AliaSpec& spec, const GroupModel& m, long k)
{
    return spec.convention == ResidueConvention::Table ? n_map(m, k) : invariant_residues(m, k);
}

/// |Ω*|·rank − Σ_{i∈Ω*} rank span{α : n_i(k(α)) = 0}, with Ω* the non-pole orbits.
inline int abelianisation_dim(const AliaSpec& spec)
{
    const GroupModel m = build_group(spec.group);
    const RootSystem rs(spec.lie_type);
    validate_grading(rs, spec.grading);
    int total = 0;
    for (int o = 0; o < m.orbit_count(); ++o) {
        if (o == spec.pole_orbit) continue;
        std::vector<std::vector<Rat>> rows;
        for (int a = 0; a < rs.size(); ++a) {
            const int k = grading_k(rs, spec.grading, a);
            if (k % 2) continue;
            if (residues_for(spec, m, k).residues[o] == 0) {
                std::vector<Rat> v;
                for (int c : rs.root(a)) v.emplace_back(c);
                rows.push_back(v);
            }
        }
        total += rs.rank() - rational_rank(rows);
    }
    return total;
}

namespace detail {

using QPoly = UPoly<Rat>;

/// Monomial of the table as a polynomial: non-pole Hauptmoduln become t and t - 1 (or squares of s).
inline QPoly mono_poly(const BracketTable& t, const HalfVec& mono)
{
    const bool half = t.half_exponents();
    QPoly r = QPoly::constant(Rat(1));
    int slot = 0;
    for (int o = 0; o < t.model().orbit_count(); ++o) {
        if (o == t.spec().pole_orbit) continue;
        const QPoly base = slot == 0 ? QPoly(std::vector<Rat>{0, 1}) : QPoly(std::vector<Rat>{-1, 1});
        ++slot;
        if (slot > 2) throw std::logic_error("more than two non-pole orbits");
        const int e = half ? mono[o] : mono[o] / 2;
        for (int i = 0; i < e; ++i) r = r * base;
    }
    return r;
}

}  // namespace detail

/// dim_C A/[A,A] from the bracket table, via a Hermite reduction of the bracket span over Q[t].
/// Returns nullopt when the quotient is infinite-dimensional.
inline std::optional<int> abelianisation_bruteforce(const BracketTable& t)
{
    using detail::QPoly;
    const int B = t.size();
    std::vector<std::vector<QPoly>> rows;
    for (int x = 0; x < B; ++x)
        for (int y = x + 1; y < B; ++y) {
            auto terms = t.bracket(x, y);
            if (terms.empty()) continue;
            std::vector<QPoly> v(B);
            for (const auto& u : terms)
                v[u.basis] = v[u.basis] + Rat(static_cast<long>(u.coeff)) * detail::mono_poly(t, u.mono);
            rows.push_back(std::move(v));
        }
    int dim = 0;
    std::size_t top = 0;
    for (int c = 0; c < B; ++c) {
        // Euclid on column c among rows top.. until a single nonzero entry remains.
        for (;;) {
            int piv = -1;
            for (std::size_t r = top; r < rows.size(); ++r)
                if (!rows[r][c].is_zero() && (piv < 0 || rows[r][c].degree() < rows[piv][c].degree()))
                    piv = static_cast<int>(r);
            if (piv < 0) return std::nullopt;
            std::swap(rows[top], rows[piv]);
            bool reduced_all = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][c].is_zero()) continue;
                const QPoly q = divmod(rows[r][c], rows[top][c]).first;
                for (int l = c; l < B; ++l)
                    if (!rows[top][l].is_zero()) rows[r][l] = rows[r][l] - q * rows[top][l];
                if (!rows[r][c].is_zero()) reduced_all = false;
            }
            if (reduced_all) break;
        }
        dim += rows[top][c].degree();
        ++top;
    }
    return dim;
}

/// Sorted multiset {min(ν_i, k(α̃)/2 + 1) : i ∈ Ω*}.
inline std::vector<int> isomorphism_key(const AliaSpec& spec)
{
    const GroupModel m = build_group(spec.group);
    const RootSystem rs(spec.lie_type);
    const int cap = grading_k(rs, spec.grading, rs.highest_root()) / 2 + 1;
    std::vector<int> key;
    if (m.order_gamma == 1) return key;
    for (int o = 0; o < m.orbit_count(); ++o)
        if (o != spec.pole_orbit) key.push_back(std::min(m.nu[o], cap));
    std::sort(key.begin(), key.end());
    return key;
}

struct FixedPointDims {
    std::vector<int> per_generator;
    int sum = 0;
    int dim_g = 0;
    int dim_invariant = 0;
};

/// dim g^{<γ_i>} = rank + |{α : n_i(k(α)) = 0}| and dim g^Γ = (Σ − (|Ω| − 2) dim g)/2.
inline FixedPointDims fixed_point_dims(const GroupModel& m, const LieType& type, const DynkinGrading& g)
{
    const RootSystem rs(type);
    validate_grading(rs, g);
    FixedPointDims f;
    f.dim_g = rs.dim();
    for (int o = 0; o < m.orbit_count(); ++o) {
        int d = rs.rank();
        for (int a = 0; a < rs.size(); ++a)
            if (invariant_residues(m, grading_k(rs, g, a)).residues[o] == 0) ++d;
        f.per_generator.push_back(d);
        f.sum += d;
    }
    const int num = f.sum - (m.orbit_count() - 2) * f.dim_g;
    if (num < 0 || num % 2) throw std::logic_error("fixed_point_dims: inconsistent input");
    f.dim_invariant = num / 2;
    return f;
}

struct Graph {
    std::vector<std::pair<int, int>> edges;
    bool too_large = false;
};

/// Edges {α, β} with α + β ∈ Φ ∪ {0} and ω²_i(α, β) ≠ 0.
inline Graph rank2_graph(const BracketTable& t, int orbit)
{
    const RootSystem& rs = t.system();
    Graph gph;
    gph.too_large = rs.rank() > 2;
    for (int a = 0; a < rs.size(); ++a)
        for (int b = a + 1; b < rs.size(); ++b) {
            if (!t.cocycle().even(a) || !t.cocycle().even(b)) continue;
            if (rs.negative(a) != b && rs.sum(a, b) < 0) continue;
            if (t.cocycle().value(a, b)[orbit] != 0) gph.edges.push_back({a, b});
        }
    return gph;
}

/// Solves s_α s_β s_{α+β} = target over {±1} with s_{-α} = s_α, by elimination over GF(2).
/// Each constraint is (α, β, flip) with flip set when the signs must differ. Returns s per positive root.
inline std::optional<std::vector<int>> find_sign_gauge(const RootSystem& rs,
                                                      const std::vector<std::tuple<int, int, bool>>& constraints)
{
    const int P = rs.num_positive();
    auto pos = [&](int a) { return rs.is_positive(a) ? a : rs.negative(a); };
    std::vector<std::vector<std::uint8_t>> rows;
    for (const auto& [a, b, flip] : constraints) {
        std::vector<std::uint8_t> r(P + 1, 0);
        r[pos(a)] ^= 1;
        r[pos(b)] ^= 1;
        const int s = rs.sum(a, b);
        if (s < 0) throw std::invalid_argument("find_sign_gauge: α + β is not a root");
        r[pos(s)] ^= 1;
        r[P] = flip ? 1 : 0;
        rows.push_back(std::move(r));
    }
    std::vector<int> pivcol;
    std::size_t rank = 0;
    for (int c = 0; c < P; ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && !rows[piv][c]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (int l = 0; l <= P; ++l) rows[r][l] ^= rows[rank][l];
        pivcol.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][P]) return std::nullopt;
    std::vector<int> s(P, 1);
    for (std::size_t r = 0; r < rank; ++r)
        if (rows[r][P]) s[pivcol[r]] = -1;
    return s;
}

}  // namespace alia

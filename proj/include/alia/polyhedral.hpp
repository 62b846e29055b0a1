#pragma once

/**
 * @file polyhedral.hpp
 * @brief Binary polyhedral groups in SU(2), their ground forms, characters and invariants.
 *
 * Orbits are indexed in the order ν_i is listed for each family, which is also
 * the order of increasing orbit size. The localized form is P = P_j^{ν_j}; the
 * LocElem values use the squarefree ground form P_j as pole, which spans the same ring.
 */

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alia/bipoly.hpp"

namespace alia {

struct GroupKind {
    enum class Family { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };
    Family family = Family::Cyclic;
    int n = 1;

    static GroupKind cyclic(int n) { return {Family::Cyclic, n}; }
    static GroupKind dihedral(int n) { return {Family::Dihedral, n}; }
    static GroupKind tetrahedral() { return {Family::Tetrahedral, 0}; }
    static GroupKind octahedral() { return {Family::Octahedral, 0}; }
    static GroupKind icosahedral() { return {Family::Icosahedral, 0}; }

    std::string name() const
    {
        switch (family) {
        case Family::Cyclic: return "C" + std::to_string(n);
        case Family::Dihedral: return "D" + std::to_string(n);
        case Family::Tetrahedral: return "T";
        case Family::Octahedral: return "O";
        case Family::Icosahedral: return "Y";
        }
        return "?";
    }

    /// Accepts "C<n>", "D<n>", "T", "O", "Y".
    static GroupKind parse(const std::string& s)
    {
        if (s == "T") return tetrahedral();
        if (s == "O") return octahedral();
        if (s == "Y") return icosahedral();
        if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'D')) {
            for (std::size_t i = 1; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad group: " + s);
            int n = std::stoi(s.substr(1));
            GroupKind g = s[0] == 'C' ? cyclic(n) : dihedral(n);
            g.validate();
            return g;
        }
        throw std::invalid_argument("bad group: " + s);
    }

    void validate() const
    {
        if (family == Family::Cyclic && n < 1) throw std::invalid_argument("Cyclic(n) requires n >= 1");
        if (family == Family::Dihedral && n < 2) throw std::invalid_argument("Dihedral(n) requires n >= 2");
    }

    bool is_even_cyclic() const { return family == Family::Cyclic && n % 2 == 0; }
    friend bool operator==(const GroupKind& a, const GroupKind& b) { return a.family == b.family && a.n == b.n; }
};

struct GroundForm {
    int orbit = 0;
    BiForm form;
    /// Character values on the generators, in generator order.
    std::vector<CycNum> character;
};

struct GroupModel {
    GroupKind kind;
    std::vector<int> nu;
    std::vector<int> d;
    int order_gamma = 1;
    int gcd_d = 1;
    int lcm_nu = 1;
    int working_order = 1;
    std::vector<std::string> generator_names;
    std::vector<CycMatrix> generators;
    std::vector<CycMatrix> elements;
    std::vector<GroundForm> forms;

    int orbit_count() const { return static_cast<int>(nu.size()); }
    CycNum zeta(long k) const { return cyc_root_of_unity(working_order, k); }

    /// Glyph letter (I, J, K, ...) of an orbit, assigned by increasing orbit size.
    char glyph(int orbit) const
    {
        std::vector<int> idx(nu.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
        for (std::size_t r = 0; r < idx.size(); ++r)
            if (idx[r] == orbit) return static_cast<char>('I' + r);
        return '?';
    }
    int smallest_orbit() const { return static_cast<int>(std::min_element(d.begin(), d.end()) - d.begin()); }
    int largest_orbit() const { return static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin()); }
};

inline CycMatrix mat2(const CycNum& a, const CycNum& b, const CycNum& c, const CycNum& d)
{
    return CycMatrix(2, 2, std::vector<CycNum>{a, b, c, d});
}

inline CycMatrix identity2() { return mat2(1, 0, 0, 1); }

/// Inverse of a determinant-one 2x2 matrix.
inline CycMatrix inverse_sl2(const CycMatrix& g) { return mat2(g(1, 1), -g(0, 1), -g(1, 0), g(0, 0)); }

namespace detail {

inline BiForm mono(int x, int y, const CycNum& c = CycNum(1)) { return BiForm::monomial(x, y, c); }

/// Element c0 + c1 z + ... of Q(zeta_n) from rational coefficient pairs.
inline CycNum cyc(int n, std::initializer_list<std::pair<long, long>> coeffs)
{
    std::vector<Rat> v;
    for (auto [p, q] : coeffs) v.push_back(make_rat(p, q));
    return CycNum(n, v);
}

inline void fill_table1(GroupModel& m)
{
    using F = GroupKind::Family;
    const int n = m.kind.n;
    switch (m.kind.family) {
    case F::Cyclic:
        m.nu = {n, n};
        m.d = {1, 1};
        m.order_gamma = n;
        m.gcd_d = 1;
        m.lcm_nu = n;
        m.working_order = 4 * n;
        break;
    case F::Dihedral:
        m.nu = {n, 2, 2};
        m.d = {2, n, n};
        m.order_gamma = 2 * n;
        m.gcd_d = n % 2 ? 1 : 2;
        m.lcm_nu = n % 2 ? 2 * n : n;
        m.working_order = 4 * n;
        break;
    case F::Tetrahedral:
        m.nu = {3, 3, 2};
        m.d = {4, 4, 6};
        m.order_gamma = 12;
        m.gcd_d = 2;
        m.lcm_nu = 6;
        m.working_order = 12;
        break;
    case F::Octahedral:
        m.nu = {4, 3, 2};
        m.d = {6, 8, 12};
        m.order_gamma = 24;
        m.gcd_d = 2;
        m.lcm_nu = 12;
        m.working_order = 24;
        break;
    case F::Icosahedral:
        m.nu = {5, 3, 2};
        m.d = {12, 20, 30};
        m.order_gamma = 60;
        m.gcd_d = 2;
        m.lcm_nu = 30;
        m.working_order = 20;
        break;
    }
}

inline void fill_generators_and_forms(GroupModel& m, bool tabulated = false)
{
    using F = GroupKind::Family;
    const int N = m.working_order;
    auto z = [&](long k) { return cyc_root_of_unity(N, k); };
    const BiForm X = BiForm::X(), Y = BiForm::Y();
    const CycNum half = make_rat(1, 2);
    switch (m.kind.family) {
    case F::Cyclic: {
        const int n = m.kind.n;
        // zeta_{2n} = zeta_N^2 with N = 4n.
        m.generator_names = {"a"};
        m.generators = {mat2(z(2), 0, 0, z(-2))};
        m.forms = {{0, X, {z(2)}}, {1, Y, {z(-2)}}};
        (void)n;
        break;
    }
    case F::Dihedral: {
        const int n = m.kind.n;
        const CycNum i = z(n);  // zeta_4 = zeta_{4n}^n
        m.generator_names = {"a", "b"};
        m.generators = {mat2(z(2), 0, 0, z(-2)), mat2(0, i * z(-2), i * z(2), 0)};
        const CycNum i_n = i.pow(n);
        m.forms = {{0, X * Y, {1, -1}},
                   {1, mono(n, 0) + mono(0, n), {-1, -i_n}},
                   {2, mono(n, 0) - mono(0, n), {-1, i_n}}};
        break;
    }
    case F::Tetrahedral: {
        const CycNum h = z(3);                                        // i = zeta_12^3
        const CycNum i_sqrt3 = CycNum(2) * z(2) - CycNum(1);          // i sqrt(3)
        const CycNum z3 = z(4), z3sq = z(8);
        m.generator_names = {"a", "b"};
        m.generators = {mat2(half * h + half, half * h + half, half * h - half, -half * h + half),
                        mat2(half * h + half, half * h - half, half * h + half, -half * h + half)};
        m.forms = {{0, mono(4, 0) + mono(2, 2, CycNum(2) * i_sqrt3) + mono(0, 4), {z3, z3sq}},
                   {1, mono(4, 0) - mono(2, 2, CycNum(2) * i_sqrt3) + mono(0, 4), {z3sq, z3}},
                   {2, (mono(4, 0) - mono(0, 4)) * X * Y, {1, 1}}};
        break;
    }
    case F::Octahedral: {
        const CycNum z6 = z(6);
        m.generator_names = {"a", "b"};
        m.generators = {mat2(z(3), 0, 0, -z(5) + z(1)),
                        mat2(half * z6 + half, half * z6 - half, half * z6 + half, -half * z6 + half)};
        const BiForm s4 = mono(4, 0) + mono(0, 4);
        m.forms = {{0, (mono(4, 0) - mono(0, 4)) * X * Y, {-1, 1}},
                   {1, mono(8, 0) + mono(4, 4, 14) + mono(0, 8), {1, 1}},
                   {2, -((mono(4, 4, 36) - s4 * s4) * s4), {-1, 1}}};
        break;
    }
    case F::Icosahedral: {
        m.generator_names = {"a", "b"};
        const CycNum a11 = z(2), a22 = -z(6) + z(4) - z(2) + CycNum(1);
        const CycNum b11 = cyc(20, {{2, 5}, {0, 1}, {1, 5}, {0, 1}, {1, 5}, {0, 1}, {2, 5}});
        const CycNum b12 = cyc(20, {{-1, 5}, {0, 1}, {2, 5}, {0, 1}, {2, 5}, {0, 1}, {-1, 5}});
        const CycNum b21 = cyc(20, {{-1, 5}, {0, 1}, {2, 5}, {0, 1}, {-3, 5}, {0, 1}, {4, 5}});
        const CycNum b22 = cyc(20, {{3, 5}, {0, 1}, {-1, 5}, {0, 1}, {-1, 5}, {0, 1}, {-2, 5}});
        m.generators = {mat2(a11, 0, 0, a22), mat2(b11, b12, b21, b22)};
        m.forms = {{0, mono(11, 1) - mono(6, 6, 11) - mono(1, 11), {1, 1}},
                   {1, -mono(20, 0) + mono(15, 5, 228) - mono(10, 10, 494) - mono(5, 15, 228) - mono(0, 20), {1, 1}},
                   {2, mono(30, 0) + mono(25, 5, 522) - mono(20, 10, 10005) - mono(10, 20, 10005) - mono(5, 25, 522) +
                           mono(0, 30),
                    {1, 1}}};
        if (!tabulated) {
            // The listed degree-20 and degree-30 forms are invariant under the conjugate group
            // diag(1,-1) BY diag(1,-1); Y -> -Y gives the forms invariant under a and b.
            const CycMatrix flip = mat2(1, 0, 0, -1);
            for (int o = 1; o < 3; ++o) m.forms[o].form = substitute_linear(m.forms[o].form, flip);
        }
        break;
    }
    }
}

inline std::vector<CycMatrix> close_group(const std::vector<CycMatrix>& gens, std::size_t limit)
{
    std::vector<CycMatrix> elems{identity2()};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            CycMatrix h = elems[head] * g;
            if (std::find(elems.begin(), elems.end(), h) == elems.end()) {
                elems.push_back(std::move(h));
                if (elems.size() > limit) throw std::logic_error("group closure exceeds expected order");
            }
        }
    }
    return elems;
}

}  // namespace detail

/// Verifies the tabulated characters of the ground forms by substitution.
inline void verify_ground_forms(const GroupModel& m)
{
    for (const auto& gf : m.forms) {
        if (*gf.form.degree() != m.d[gf.orbit])
            throw std::logic_error("ground form degree mismatch on orbit " + std::to_string(gf.orbit));
        for (std::size_t g = 0; g < m.generators.size(); ++g) {
            if (substitute_linear(gf.form, m.generators[g]) != gf.character[g] * gf.form)
                throw std::logic_error("ground form of orbit " + std::to_string(gf.orbit) +
                                       " has wrong character on generator " + m.generator_names[g]);
        }
    }
}

inline GroupModel build_group(const GroupKind& kind)
{
    kind.validate();
    GroupModel m;
    m.kind = kind;
    detail::fill_table1(m);
    detail::fill_generators_and_forms(m);
    for (const auto& g : m.generators)
        if (!det(g).is_one()) throw std::logic_error("generator not in SL(2)");
    const std::size_t expected = 2 * static_cast<std::size_t>(m.order_gamma);
    m.elements = detail::close_group(m.generators, expected);
    if (m.elements.size() != expected) throw std::logic_error("group closure did not reach 2|Gamma| elements");
    verify_ground_forms(m);
    return m;
}

inline const std::vector<GroundForm>& ground_forms(const GroupModel& m) { return m.forms; }

/// Ground forms exactly as listed in the reference tables, before any convention fix.
inline std::vector<GroundForm> tabulated_ground_forms(const GroupKind& kind)
{
    kind.validate();
    GroupModel m;
    m.kind = kind;
    detail::fill_table1(m);
    detail::fill_generators_and_forms(m, true);
    return m.forms;
}

/// Orbits whose tabulated form differs from the one used by the model.
inline std::vector<int> corrected_orbits(const GroupModel& m)
{
    std::vector<int> out;
    auto tab = tabulated_ground_forms(m.kind);
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (tab[i].form != m.forms[i].form) out.push_back(static_cast<int>(i));
    return out;
}

/// Whether a form is relatively invariant with the given character on every generator.
inline bool has_character(const GroupModel& m, const BiForm& f, const std::vector<CycNum>& character)
{
    for (std::size_t g = 0; g < m.generators.size(); ++g)
        if (substitute_linear(f, m.generators[g]) != character[g] * f) return false;
    return true;
}

/// Checks a^{ν1} = b^{ν2} = c^{ν3} with c = (ab)^{-1} a^{ν1}; cyclic groups only check a^{ν1} = -Id·(...).
inline bool relation_check(const GroupModel& m)
{
    if (m.generators.size() < 2) {
        // Cyclic: a has order 2n, a^n = -Id.
        return mat_pow(m.generators[0], m.nu[0]) == mat2(-1, 0, 0, -1);
    }
    const CycMatrix& a = m.generators[0];
    const CycMatrix& b = m.generators[1];
    CycMatrix z = mat_pow(a, m.nu[0]);
    CycMatrix c = inverse_sl2(a * b) * z;
    return mat_pow(b, m.nu[1]) == z && mat_pow(c, m.nu[2]) == z;
}

struct NVec {
    std::vector<int> residues;
    /// Set for Cyclic(2m), where the residues are taken mod m and the cocycle has half-integer values.
    bool half = false;
};

inline int floor_mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

inline void require_even(long k)
{
    if (k % 2 != 0) throw std::domain_error("odd degree " + std::to_string(k) + ": there are no invariants of odd degree");
}

/// The periodic map n(k): (k/2) mod ν_i, except Cyclic(2m) where both components are (k/2) mod m.
inline NVec n_map(const GroupModel& m, long k)
{
    require_even(k);
    NVec v;
    if (m.kind.is_even_cyclic()) {
        const int half = m.kind.n / 2;
        v.half = true;
        v.residues = {floor_mod(k / 2, half), floor_mod(k / 2, half)};
        return v;
    }
    for (int nu : m.nu) v.residues.push_back(floor_mod(k / 2, nu));
    return v;
}

/// (k/2) mod ν_i in every component; agrees with n_map except for Cyclic(2m).
inline NVec invariant_residues(const GroupModel& m, long k)
{
    require_even(k);
    NVec v;
    for (int nu : m.nu) v.residues.push_back(floor_mod(k / 2, nu));
    return v;
}

/// Squarefree ground form of an orbit.
inline const BiForm& ground_form(const GroupModel& m, int orbit) { return m.forms.at(orbit).form; }

/// Shared pole handle for the orbit; equal orbits share the pointer within one model.
inline LocElem::PolePtr pole_of(const GroupModel& m, int orbit)
{
    return LocElem::make_pole(ground_form(m, orbit));
}

/// P_k = P^ℓ Π P_i^{n_i} with P = P_j^{ν_j}; ℓ = (k - Σ n_i d_i) / |Γ|.
inline LocElem p_k(const GroupModel& m, int pole_orbit, long k, const LocElem::PolePtr& pole)
{
    NVec n = invariant_residues(m, k);
    long s = k;
    for (int i = 0; i < m.orbit_count(); ++i) s -= static_cast<long>(n.residues[i]) * m.d[i];
    if (s % m.order_gamma != 0) throw std::logic_error("p_k: non-integral exponent of P");
    const long ell = s / m.order_gamma;
    BiForm num(1);
    for (int i = 0; i < m.orbit_count(); ++i)
        if (i != pole_orbit && n.residues[i] > 0) num = num * ground_form(m, i).pow(n.residues[i]);
    const long pole_exp = n.residues[pole_orbit] + ell * m.nu[pole_orbit];
    if (pole_exp >= 0) return LocElem(num * ground_form(m, pole_orbit).pow(static_cast<int>(pole_exp)), pole);
    return LocElem(num, pole, static_cast<int>(-pole_exp));
}

inline LocElem p_k(const GroupModel& m, int pole_orbit, long k) { return p_k(m, pole_orbit, k, pole_of(m, pole_orbit)); }

/// Invariance under every generator, using the relative character of the pole form.
inline bool is_invariant(const GroupModel& m, const LocElem& u)
{
    for (const auto& g : m.generators)
        if (substitute_linear(u, g) != u) return false;
    return true;
}

/// Hauptmodul I_i = P_i^{ν_i} / P_j^{ν_j} as an element of the localization.
inline LocElem hauptmodul(const GroupModel& m, int orbit, int pole_orbit, const LocElem::PolePtr& pole)
{
    if (orbit == pole_orbit) return LocElem(1);
    return LocElem(ground_form(m, orbit).pow(m.nu[orbit]), pole, m.nu[pole_orbit]);
}

namespace detail {

/// Modulus M such that every eigenvalue of every element is an M-th root of unity.
inline int eigen_modulus(const GroupModel& m)
{
    int M = 1;
    for (int nu : m.nu) M = std::lcm(M, 2 * nu);
    return M;
}

/// Exponent e in [0, M) with eigenvalues zeta_M^{±e} of g, from its trace.
inline int eigen_exponent(int M, const CycMatrix& g)
{
    const CycNum t = g(0, 0) + g(1, 1);
    for (int e = 0; e < M; ++e)
        if (cyc_root_of_unity(M, e) + cyc_root_of_unity(M, -e) == t) return e;
    throw std::logic_error("eigenvalue order does not divide the eigen modulus");
}

}  // namespace detail

/// Molien series coefficients dim C[X,Y]_k^{BΓ} for 0 <= k <= kmax.
inline std::vector<long> molien_series(const GroupModel& m, int kmax)
{
    const int N = detail::eigen_modulus(m);
    std::vector<long> class_count(N, 0);
    for (const auto& g : m.elements) ++class_count[detail::eigen_exponent(N, g)];
    std::vector<long> out;
    const long order = static_cast<long>(m.elements.size());
    for (int k = 0; k <= kmax; ++k) {
        // Σ_g Σ_{j=0..k} λ_g^{k-2j}, gathered as multiplicities of zeta_N powers.
        std::vector<long> mult(N, 0);
        for (int e = 0; e < N; ++e) {
            if (!class_count[e]) continue;
            for (int j = 0; j <= k; ++j) mult[floor_mod(static_cast<long>(e) * (k - 2 * j), N)] += class_count[e];
        }
        std::vector<Rat> coeffs(mult.begin(), mult.end());
        CycNum total(N, coeffs);
        if (!total.is_rational()) throw std::logic_error("Molien coefficient not rational");
        Rat v = total.rational_value() / order;
        if (v.get_den() != 1 || sgn(v) < 0) throw std::logic_error("Molien coefficient not a natural number");
        out.push_back(v.get_num().get_si());
    }
    return out;
}

inline long invariant_dimension(const GroupModel& m, int k)
{
    if (k < 0) return 0;
    return molien_series(m, k).back();
}

using CharacterValues = std::vector<CycNum>;

struct CharacterReport {
    bool ok = true;
    std::vector<std::string> failures;
    CharacterValues chi;
    int chi_order = 0;
    int generated_order = 0;
    int expected_order = 0;
};

inline CharacterValues char_mul(const CharacterValues& a, const CharacterValues& b)
{
    CharacterValues r;
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] * b[i]);
    return r;
}

inline CharacterValues char_pow(const CharacterValues& a, int e)
{
    CharacterValues r;
    for (const auto& x : a) r.push_back(x.pow(e));
    return r;
}

inline bool char_trivial(const CharacterValues& a)
{
    for (const auto& x : a)
        if (!x.is_one()) return false;
    return true;
}

inline CharacterReport character_group_checks(const GroupModel& m)
{
    CharacterReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.failures.push_back(s);
    };
    const int w = m.orbit_count();
    std::vector<CharacterValues> chis;
    for (const auto& f : m.forms) chis.push_back(f.character);
    rep.chi = char_pow(chis[0], m.nu[0]);
    for (int i = 1; i < w; ++i)
        if (char_pow(chis[i], m.nu[i]) != rep.chi) fail("chi_" + std::to_string(i + 1) + "^nu differs from chi");
    CharacterValues prod = chis[0];
    for (int i = 1; i < w; ++i) prod = char_mul(prod, chis[i]);
    if (prod != char_pow(rep.chi, w - 2)) fail("product of chi_i differs from chi^(|Omega|-2)");
    rep.chi_order = 1;
    while (!char_trivial(char_pow(rep.chi, rep.chi_order))) ++rep.chi_order;
    if (rep.chi_order != 2 / m.gcd_d) fail("order of chi is not 2/d");
    // Subgroup of Hom(BΓ, C*) generated by the chi_i, enumerated on generators.
    std::vector<CharacterValues> group{CharacterValues(m.generators.size(), CycNum(1))};
    for (std::size_t head = 0; head < group.size(); ++head)
        for (const auto& c : chis) {
            CharacterValues h = char_mul(group[head], c);
            if (std::find(group.begin(), group.end(), h) == group.end()) group.push_back(h);
        }
    rep.generated_order = static_cast<int>(group.size());
    long nu_prod = 1;
    for (int nu : m.nu) nu_prod *= nu;
    rep.expected_order = static_cast<int>((2 / m.gcd_d) * nu_prod / m.lcm_nu);
    if (rep.generated_order != rep.expected_order) fail("characters generate a group of unexpected order");
    std::vector<CharacterValues> chi_powers;
    for (int r = 0; r < rep.chi_order; ++r) chi_powers.push_back(char_pow(rep.chi, r));
    for (long k = -2L * m.order_gamma; k <= 2L * m.order_gamma; k += 2) {
        NVec n = n_map(m, k);
        CharacterValues c(m.generators.size(), CycNum(1));
        for (int i = 0; i < w; ++i) c = char_mul(c, char_pow(chis[i], n.residues[i]));
        if (std::find(chi_powers.begin(), chi_powers.end(), c) == chi_powers.end())
            fail("n(" + std::to_string(k) + ") not in the character kernel");
    }
    return rep;
}

}  // namespace alia

/**
 * @file test_polyhedral.cpp
 * @brief Binary polyhedral groups: orbit data, generators, ground forms, the periodic map,
 * the invariant generators P_k and the Molien series.
 */

#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"

using namespace alia;
using namespace alia::testing;

namespace {

std::size_t commutator_subgroup_order(const GroupModel& m)
{
    std::vector<CycMatrix> comms;
    for (const auto& g : m.elements)
        for (const auto& h : m.elements) {
            CycMatrix c = g * h * inverse_sl2(g) * inverse_sl2(h);
            if (std::find(comms.begin(), comms.end(), c) == comms.end()) comms.push_back(c);
        }
    std::vector<CycMatrix> closed{identity2()};
    for (std::size_t head = 0; head < closed.size(); ++head)
        for (const auto& c : comms) {
            CycMatrix x = closed[head] * c;
            if (std::find(closed.begin(), closed.end(), x) == closed.end()) closed.push_back(x);
        }
    return closed.size();
}

}  // namespace

TEST(GroupData, TableValuesForAllFamilies)
{
    for (const auto& kind : grid_groups(12)) {
        const GroupModel m = build_group(kind);
        const Table1Row e = table1_row(kind);
        EXPECT_EQ(m.nu, e.nu) << kind.name();
        EXPECT_EQ(m.d, e.d) << kind.name();
        EXPECT_EQ(m.lcm_nu, e.lcm) << kind.name();
        EXPECT_EQ(m.gcd_d, e.gcd) << kind.name();
        EXPECT_EQ(m.order_gamma, e.order) << kind.name();
        int lcm = 1, gcd = 0;
        for (int v : m.nu) lcm = std::lcm(lcm, v);
        for (int v : m.d) gcd = std::gcd(gcd, v);
        EXPECT_EQ(m.lcm_nu, lcm) << kind.name();
        EXPECT_EQ(m.gcd_d, gcd) << kind.name();
        EXPECT_EQ(m.gcd_d * m.lcm_nu, m.order_gamma) << kind.name();
        for (int i = 0; i < m.orbit_count(); ++i) EXPECT_EQ(m.d[i] * m.nu[i], m.order_gamma) << kind.name();
        const int sum_d = std::accumulate(m.d.begin(), m.d.end(), 0);
        EXPECT_EQ(sum_d, (m.orbit_count() - 2) * m.order_gamma + 2) << kind.name();
        EXPECT_EQ(m.elements.size(), 2u * static_cast<std::size_t>(m.order_gamma)) << kind.name();
    }
}

TEST(GroupData, ElementsFormAGroupInSL2)
{
    for (const auto& kind : grid_groups(6)) {
        const GroupModel m = build_group(kind);
        for (const auto& g : m.elements) {
            EXPECT_TRUE(det(g).is_one());
            EXPECT_NE(std::find(m.elements.begin(), m.elements.end(), inverse_sl2(g)), m.elements.end());
        }
        for (std::size_t i = 0; i < m.elements.size(); i += 3)
            for (std::size_t j = 0; j < m.elements.size(); j += 5)
                EXPECT_NE(std::find(m.elements.begin(), m.elements.end(), m.elements[i] * m.elements[j]), m.elements.end());
        EXPECT_NE(std::find(m.elements.begin(), m.elements.end(), mat2(-1, 0, 0, -1)), m.elements.end());
    }
}

TEST(GroupData, AbelianisationOfBinaryGroup)
{
    for (const auto& kind : {GroupKind::cyclic(1), GroupKind::cyclic(5), GroupKind::dihedral(3), GroupKind::dihedral(4),
                             GroupKind::tetrahedral(), GroupKind::octahedral(), GroupKind::icosahedral()}) {
        const GroupModel m = build_group(kind);
        EXPECT_EQ(m.elements.size() / commutator_subgroup_order(m), static_cast<std::size_t>(table1_row(kind).ab_binary))
            << kind.name();
    }
}

TEST(GroupData, Examples)
{
    const GroupModel Y = build_group(GroupKind::icosahedral());
    EXPECT_EQ(Y.nu, (std::vector<int>{5, 3, 2}));
    EXPECT_EQ(Y.d, (std::vector<int>{12, 20, 30}));
    EXPECT_EQ(Y.order_gamma, 60);
    EXPECT_EQ(Y.elements.size(), 120u);
    const GroupModel C1 = build_group(GroupKind::cyclic(1));
    EXPECT_EQ(C1.nu, (std::vector<int>{1, 1}));
    EXPECT_EQ(C1.d, (std::vector<int>{1, 1}));
    EXPECT_EQ(C1.order_gamma, 1);
}

TEST(GroupData, DefiningRelations)
{
    for (const auto& kind : grid_groups(8)) EXPECT_TRUE(relation_check(build_group(kind))) << kind.name();
    const GroupModel T = build_group(GroupKind::tetrahedral());
    const CycMatrix &a = T.generators[0], &b = T.generators[1];
    const CycMatrix minus = mat2(-1, 0, 0, -1);
    EXPECT_EQ(mat_pow(a, 3), mat_pow(b, 3));
    EXPECT_EQ(mat_pow(a * b, 2), minus);
    const GroupModel Y = build_group(GroupKind::icosahedral());
    EXPECT_EQ(mat_pow(Y.generators[0], 5), minus);
    EXPECT_EQ(mat_pow(Y.generators[1], 3), minus);
}

TEST(GroupKindParse, AcceptsAndRejects)
{
    EXPECT_EQ(GroupKind::parse("D7"), GroupKind::dihedral(7));
    EXPECT_EQ(GroupKind::parse("Y"), GroupKind::icosahedral());
    EXPECT_THROW(GroupKind::parse("Q7"), std::invalid_argument);
    EXPECT_THROW(GroupKind::parse("C0"), std::invalid_argument);
    EXPECT_THROW(GroupKind::parse("D1"), std::invalid_argument);
    EXPECT_THROW(GroupKind::parse("Cx"), std::invalid_argument);
}

TEST(GroundForms, Examples)
{
    const GroupModel Y = build_group(GroupKind::icosahedral());
    EXPECT_EQ(ground_form(Y, 0), form({{1, 11, 1}, {-11, 6, 6}, {-1, 1, 11}}));
    for (int n : {1, 2, 3, 7}) {
        const GroupModel C = build_group(GroupKind::cyclic(n));
        EXPECT_EQ(ground_form(C, 0), BiForm::X());
        EXPECT_EQ(C.forms[0].character[0], cyc_root_of_unity(2 * n, 1));
    }
    const GroupModel O = build_group(GroupKind::octahedral());
    EXPECT_EQ(ground_form(O, 1), form({{1, 8, 0}, {14, 4, 4}, {1, 0, 8}}));
    EXPECT_TRUE(O.forms[1].character[0].is_one());
    EXPECT_TRUE(O.forms[1].character[1].is_one());
}

TEST(GroundForms, RelativeInvarianceWithStoredCharacters)
{
    for (const auto& kind : grid_groups(12)) {
        const GroupModel m = build_group(kind);
        for (const auto& gf : ground_forms(m)) {
            EXPECT_EQ(gf.form.degree(), m.d[gf.orbit]) << kind.name();
            EXPECT_TRUE(is_squarefree(gf.form)) << kind.name();
            EXPECT_TRUE(has_character(m, gf.form, gf.character)) << kind.name();
            // Relative invariance under every element, not only the generators.
            for (const auto& g : m.elements) EXPECT_TRUE(relative_character(gf.form, g).has_value()) << kind.name();
        }
    }
}

TEST(GroundForms, TabulatedIcosahedralFormsUseConjugateGenerators)
{
    const GroupModel Y = build_group(GroupKind::icosahedral());
    const auto tab = tabulated_ground_forms(Y.kind);
    EXPECT_EQ(corrected_orbits(Y), (std::vector<int>{1, 2}));
    EXPECT_TRUE(has_character(Y, tab[0].form, tab[0].character));
    const CycMatrix flip = mat2(1, 0, 0, -1);
    for (int o : {1, 2}) {
        EXPECT_FALSE(has_character(Y, tab[o].form, tab[o].character));
        EXPECT_EQ(substitute_linear(tab[o].form, flip), Y.forms[o].form);
        // Invariant under the conjugated generators.
        for (const auto& g : Y.generators)
            EXPECT_EQ(substitute_linear(tab[o].form, flip * g * flip), tab[o].form);
    }
    for (const auto& kind : {GroupKind::cyclic(4), GroupKind::dihedral(5), GroupKind::tetrahedral(), GroupKind::octahedral()})
        EXPECT_TRUE(corrected_orbits(build_group(kind)).empty()) << kind.name();
}

TEST(NMap, Examples)
{
    const GroupModel Y = build_group(GroupKind::icosahedral());
    EXPECT_EQ(n_map(Y, 4).residues, (std::vector<int>{2, 2, 0}));
    EXPECT_EQ(n_map(Y, 0).residues, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(n_map(Y, -2).residues, (std::vector<int>{4, 2, 1}));
    EXPECT_THROW(n_map(Y, 3), std::domain_error);
}

TEST(NMap, ReferenceTable)
{
    for (const auto& row : reference_n_table(12)) {
        const GroupModel m = build_group(row.group);
        EXPECT_EQ(n_map(m, row.k).residues, row.n) << row.group.name() << " k=" << row.k;
    }
}

TEST(NMap, DegreeIdentityAndPeriodicity)
{
    for (const auto& kind : grid_groups(12)) {
        const GroupModel m = build_group(kind);
        for (long k = -4L * m.order_gamma; k <= 4L * m.order_gamma; k += 2) {
            const NVec v = invariant_residues(m, k);
            long s = -k;
            for (int i = 0; i < m.orbit_count(); ++i) {
                EXPECT_GE(v.residues[i], 0);
                EXPECT_LT(v.residues[i], m.nu[i]);
                s += static_cast<long>(v.residues[i]) * m.d[i];
            }
            EXPECT_EQ(s % m.order_gamma, 0) << kind.name() << " k=" << k;
            EXPECT_EQ(n_map(m, k).residues, n_map(m, k + 2L * m.lcm_nu).residues);
            if (!kind.is_even_cyclic()) EXPECT_EQ(n_map(m, k).residues, v.residues);
        }
    }
}

TEST(Characters, GroupChecks)
{
    for (const auto& kind : grid_groups(12)) {
        const CharacterReport r = character_group_checks(build_group(kind));
        EXPECT_TRUE(r.ok) << kind.name() << ": " << (r.failures.empty() ? "" : r.failures.front());
    }
    const GroupModel Y = build_group(GroupKind::icosahedral());
    for (const auto& gf : Y.forms)
        for (const auto& c : gf.character) EXPECT_TRUE(c.is_one());
    const GroupModel T = build_group(GroupKind::tetrahedral());
    EXPECT_TRUE(char_trivial(character_group_checks(T).chi));
    EXPECT_TRUE(char_trivial(char_mul(char_mul(T.forms[0].character, T.forms[1].character), T.forms[2].character)));
    const CharacterReport d6 = character_group_checks(build_group(GroupKind::dihedral(6)));
    EXPECT_TRUE(char_trivial(d6.chi));
    EXPECT_EQ(d6.chi_order, 1);
    const CharacterReport d5 = character_group_checks(build_group(GroupKind::dihedral(5)));
    EXPECT_EQ(d5.chi_order, 2);
}

TEST(InvariantGenerator, Examples)
{
    const GroupModel Y = build_group(GroupKind::icosahedral());
    EXPECT_EQ(p_k(Y, 0, 0), LocElem(1));
    const LocElem p2 = p_k(Y, 0, 2);
    EXPECT_EQ(p2.degree(), 2);
    EXPECT_EQ(p2.numerator(), ground_form(Y, 1) * ground_form(Y, 2));
    EXPECT_EQ(p2.pole_power(), 4);
    for (int n = 1; n <= 8; ++n) {
        const GroupModel C = build_group(GroupKind::cyclic(n));
        for (int pole = 0; pole < 2; ++pole) {
            const LocElem p = p_k(C, pole, 2);
            EXPECT_TRUE(is_invariant(C, p)) << n;
            EXPECT_EQ(p.degree(), 2);
        }
    }
    const GroupModel C3 = build_group(GroupKind::cyclic(3));
    EXPECT_EQ(p_k(C3, 0, 2).numerator(), BiForm::monomial(1, 1));
    EXPECT_EQ(p_k(C3, 0, 2).pole_power(), 0);
    EXPECT_THROW(p_k(Y, 0, 5), std::domain_error);
}

TEST(InvariantGenerator, InvariantHomogeneousMinimal)
{
    for (const auto& kind : grid_groups(6)) {
        const GroupModel m = build_group(kind);
        for (int pole = 0; pole < m.orbit_count(); ++pole) {
            const long K = 2L * m.lcm_nu;
            for (long k = -K; k <= K; k += 2) {
                const LocElem p = p_k(m, pole, k);
                ASSERT_FALSE(p.is_zero());
                EXPECT_TRUE(p.numerator().is_homogeneous());
                EXPECT_EQ(p.degree(), k) << kind.name() << " k=" << k;
                EXPECT_TRUE(is_invariant(m, p)) << kind.name() << " pole=" << pole << " k=" << k;
                if (p.pole_power() > 0) EXPECT_FALSE(divide_exact(p.numerator(), ground_form(m, pole)).has_value());
            }
        }
    }
}

TEST(InvariantGenerator, PolynomialInvariantsCountedByMultiplesOfHauptmodul)
{
    // Polynomial invariants of degree k are g(I) P_k with deg g <= ℓ when the pole exponent
    // ℓ ν_j + n_j is non-negative: ℓ + 1 of them.
    for (const auto& kind : grid_groups(5)) {
        const GroupModel m = build_group(kind);
        const int kmax = 2 * m.order_gamma;
        const auto series = molien_series(m, kmax);
        for (int k = 0; k <= kmax; k += 2) {
            const NVec n = invariant_residues(m, k);
            long s = k;
            for (int i = 0; i < m.orbit_count(); ++i) s -= static_cast<long>(n.residues[i]) * m.d[i];
            const long ell = s / m.order_gamma;
            EXPECT_EQ(series[k], std::max(0L, ell + 1)) << kind.name() << " k=" << k;
        }
    }
}

TEST(Molien, Examples)
{
    for (const auto& kind : grid_groups(5)) EXPECT_EQ(invariant_dimension(build_group(kind), 0), 1);
    const GroupModel T = build_group(GroupKind::tetrahedral());
    EXPECT_EQ(invariant_dimension(T, 6), 1);
    EXPECT_EQ(invariant_dimension(T, 8), 1);
    EXPECT_EQ(invariant_dimension(T, 2), 0);
    EXPECT_EQ(invariant_dimension(build_group(GroupKind::icosahedral()), 12), 1);
    EXPECT_EQ(invariant_dimension(T, -2), 0);
}

TEST(Molien, OddDegreesVanish)
{
    for (const auto& kind : grid_groups(6)) {
        const auto s = molien_series(build_group(kind), 40);
        for (int k = 1; k <= 40; k += 2) EXPECT_EQ(s[k], 0) << kind.name();
    }
}

TEST(Molien, AgreesWithMcKayParameters)
{
    const int kmax = 120;
    for (const auto& kind : grid_groups(12)) {
        const GroupModel m = build_group(kind);
        const auto molien = molien_series(m, kmax);
        const auto p = kostant_params(kind);
        EXPECT_EQ(molien, kostant_series(p.a, p.b, p.h, kmax)) << kind.name();
        EXPECT_EQ(m.order_gamma * 4, p.a * p.b) << kind.name();
        const auto num = tabulated_numerator_exponents(kind);
        if (!num.empty()) EXPECT_EQ(molien, numerator_series(num, m.order_gamma, kmax)) << kind.name();
    }
}

TEST(Hauptmodul, DegreeZeroInvariants)
{
    for (const auto& kind : {GroupKind::dihedral(3), GroupKind::tetrahedral(), GroupKind::octahedral()}) {
        const GroupModel m = build_group(kind);
        const auto pole = pole_of(m, 0);
        for (int o = 0; o < m.orbit_count(); ++o) {
            const LocElem h = hauptmodul(m, o, 0, pole);
            EXPECT_EQ(h.degree(), 0);
            EXPECT_TRUE(is_invariant(m, h)) << kind.name() << " orbit " << o;
        }
    }
}

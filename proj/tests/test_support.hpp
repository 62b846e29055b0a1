#pragma once

/**
 * @file test_support.hpp
 * @brief Shared helpers for the test suites: reference table fixtures, gauge comparison,
 * form builders and the series oracles.
 */

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "alia/alia.hpp"

namespace alia::testing {

#ifndef ALIA_TEST_DATA
#define ALIA_TEST_DATA "tests/data"
#endif

inline std::string data_path(const std::string& name) { return std::string(ALIA_TEST_DATA) + "/" + name; }

/// Sum of integer-coefficient monomials c X^x Y^y.
inline BiForm form(std::initializer_list<std::tuple<long, int, int>> terms)
{
    BiForm f;
    for (const auto& [c, x, y] : terms) f = f + BiForm::monomial(x, y, CycNum(c));
    return f;
}

/// One line of a reference structure table.
struct FixtureLine {
    bool diag = false;
    RootVec row;
    RootVec col;
    long coeff = 0;
    std::string mono;
};

struct Fixture {
    int rank = 0;
    int columns = 0;
    std::vector<FixtureLine> lines;
};

inline RootVec parse_root(const std::string& s)
{
    std::istringstream is(s);
    RootVec v;
    int x;
    while (is >> x) v.push_back(x);
    return v;
}

inline Fixture load_fixture(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    Fixture f;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream is(line.substr(1));
            std::string w;
            is >> w >> f.rank >> w >> f.columns;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, '\t')) cells.push_back(c);
        if (cells.size() != 4) throw std::runtime_error("bad fixture line: " + line);
        FixtureLine l;
        l.diag = cells[0] == "diag";
        l.row = parse_root(l.diag ? cells[1] : cells[0]);
        if (!l.diag) l.col = parse_root(cells[1]);
        l.coeff = std::stol(cells[2]);
        l.mono = cells[3];
        f.lines.push_back(std::move(l));
    }
    return f;
}

/// Outcome of comparing a generated table with a reference fixture.
struct FixtureComparison {
    long entries = 0;
    long mono_mismatches = 0;
    long magnitude_mismatches = 0;
    long missing = 0;
    long sign_flips = 0;
    bool gauge_found = false;
    bool identity_gauge = false;
    std::vector<std::string> notes;
    bool ok() const { return mono_mismatches == 0 && magnitude_mismatches == 0 && missing == 0 && gauge_found; }
};

inline std::string mono_text(const BracketTable& t, const HalfVec& m)
{
    const std::string s = monomial_string(t.model(), m, GlyphStyle::Ascii);
    return s.empty() ? "1" : s;
}

/// Compares monomials and coefficient magnitudes exactly, then searches a sign gauge
/// s_α = s_{-α} ∈ {±1} reconciling the remaining signs.
inline FixtureComparison compare_fixture(const BracketTable& t, const Fixture& fx, bool positive_only)
{
    const RootSystem& rs = t.system();
    const Cocycle2& w = t.cocycle();
    FixtureComparison r;
    std::vector<std::tuple<int, int, bool>> constraints;
    auto note = [&](const std::string& s) {
        if (r.notes.size() < 20) r.notes.push_back(s);
    };
    for (const auto& l : fx.lines) {
        ++r.entries;
        const int a = rs.find(l.row);
        if (a < 0) {
            ++r.missing;
            note("unknown root in fixture");
            continue;
        }
        if (l.diag) {
            if (mono_text(t, w.value(a, rs.negative(a))) != l.mono) {
                ++r.mono_mismatches;
                note("diag " + rs.root_string(a) + ": " + mono_text(t, w.value(a, rs.negative(a))) + " vs " + l.mono);
            }
            if (l.coeff != 1) ++r.magnitude_mismatches;
            continue;
        }
        const int b = rs.find(l.col);
        if (b < 0) {
            ++r.missing;
            continue;
        }
        if (rs.negative(a) == b) {
            const long expect = rs.is_positive(a) ? 1 : -1;
            if (l.coeff != expect) ++r.magnitude_mismatches;
            if (mono_text(t, w.value(a, b)) != l.mono) ++r.mono_mismatches;
            continue;
        }
        if (rs.sum(a, b) < 0) {
            ++r.missing;
            note("fixture entry at a non-root sum: " + rs.root_string(a) + " | " + rs.root_string(b));
            continue;
        }
        const long e = t.epsilon().eps(a, b);
        if (std::labs(e) != std::labs(l.coeff)) {
            ++r.magnitude_mismatches;
            note("|eps| " + rs.root_string(a) + " | " + rs.root_string(b));
        }
        if (mono_text(t, w.value(a, b)) != l.mono) {
            ++r.mono_mismatches;
            note("mono " + rs.root_string(a) + " | " + rs.root_string(b) + ": " + mono_text(t, w.value(a, b)) +
                 " vs " + l.mono);
        }
        const bool flip = (e > 0) != (l.coeff > 0);
        if (flip) ++r.sign_flips;
        constraints.emplace_back(a, b, flip);
    }
    // Every generated nonzero cell must be present in the fixture.
    const long generated = static_cast<long>(structure_entries(t, positive_only).size());
    if (generated != r.entries) {
        r.missing += std::labs(generated - r.entries);
        note("entry count " + std::to_string(generated) + " vs fixture " + std::to_string(r.entries));
    }
    r.identity_gauge = r.sign_flips == 0;
    r.gauge_found = find_sign_gauge(rs, constraints).has_value();
    return r;
}

/// Power series coefficients of num(t) / Π (1 - t^{e}) up to t^kmax.
inline std::vector<long> rational_series(const std::vector<long>& num, const std::vector<int>& den_exponents, int kmax)
{
    std::vector<long> s(kmax + 1, 0);
    for (std::size_t i = 0; i < num.size() && static_cast<int>(i) <= kmax; ++i) s[i] = num[i];
    for (int e : den_exponents)
        for (int k = e; k <= kmax; ++k) s[k] += s[k - e];
    return s;
}

/// (1 + t^h) / ((1 - t^a)(1 - t^b)) from the McKay parameters (a, b, h).
inline std::vector<long> kostant_series(int a, int b, int h, int kmax)
{
    std::vector<long> num(h + 1, 0);
    num[0] = 1;
    num[h] += 1;
    return rational_series(num, {a, b}, kmax);
}

/// Orbit data of the five families as tabulated.
struct Table1Row {
    std::vector<int> nu, d;
    int lcm, gcd, order;
    int ab_binary;  // |BΓ / [BΓ, BΓ]|
};

inline Table1Row table1_row(const GroupKind& g)
{
    using F = GroupKind::Family;
    const int n = g.n;
    switch (g.family) {
    case F::Cyclic: return {{n, n}, {1, 1}, n, 1, n, 2 * n};
    case F::Dihedral: return n % 2 ? Table1Row{{n, 2, 2}, {2, n, n}, 2 * n, 1, 2 * n, 4} : Table1Row{{n, 2, 2}, {2, n, n}, n, 2, 2 * n, 4};
    case F::Tetrahedral: return {{3, 3, 2}, {4, 4, 6}, 6, 2, 12, 3};
    case F::Octahedral: return {{4, 3, 2}, {6, 8, 12}, 12, 2, 24, 2};
    case F::Icosahedral: return {{5, 3, 2}, {12, 20, 30}, 30, 2, 60, 1};
    }
    return {};
}

struct KostantParams {
    int a, b, h;
};

inline KostantParams kostant_params(const GroupKind& g)
{
    using F = GroupKind::Family;
    switch (g.family) {
    case F::Cyclic: return {2, 2 * g.n, 2 * g.n};
    case F::Dihedral: return {4, 2 * g.n, 2 * g.n + 2};
    case F::Tetrahedral: return {6, 8, 12};
    case F::Octahedral: return {8, 12, 18};
    case F::Icosahedral: return {12, 20, 30};
    }
    return {0, 0, 0};
}

/// Numerators over (1 - t^{|Γ|})^2 as listed for T, O, Y, as exponent lists.
inline std::vector<int> tabulated_numerator_exponents(const GroupKind& g)
{
    using F = GroupKind::Family;
    switch (g.family) {
    case F::Tetrahedral: return {22, 16, 14, 8, 6, 0};
    case F::Octahedral: return {46, 38, 34, 30, 28, 26, 20, 18, 16, 12, 8, 0};
    case F::Icosahedral:
        return {118, 106, 98, 94, 88, 86, 82, 78, 76, 74, 70, 68, 66, 64, 62,
                56,  54,  52, 50, 48, 44, 42, 40, 36, 32, 30, 24, 20, 12, 0};
    default: break;
    }
    if (g.family == F::Dihedral && g.n % 2 == 0) {
        // (1 + t^{2n+2})(1 + t^4 + ... + t^{2n-4})
        std::vector<int> out;
        for (int j = 0; 4 * j <= 2 * g.n - 4; ++j) {
            out.push_back(4 * j);
            out.push_back(4 * j + 2 * g.n + 2);
        }
        return out;
    }
    return {};
}

inline std::vector<long> numerator_series(const std::vector<int>& exps, int order, int kmax)
{
    std::vector<long> num(kmax + 1, 0);
    for (int e : exps)
        if (e <= kmax) num[e] += 1;
    return rational_series(num, {order, order}, kmax);
}

struct NRow {
    GroupKind group;
    long k;
    std::vector<int> n;
};

/// Reference values of the periodic map n(k): explicit T, O, Y columns and the
/// parametric cyclic and dihedral columns instantiated for 3 <= n <= nmax.
inline std::vector<NRow> reference_n_table(int nmax)
{
    std::vector<NRow> rows;
    const GroupKind T = GroupKind::tetrahedral(), O = GroupKind::octahedral(), Y = GroupKind::icosahedral();
    const std::vector<std::pair<long, std::vector<int>>> ycol{
        {30, {0, 0, 1}},  {28, {4, 2, 0}},  {26, {3, 1, 1}},  {24, {2, 0, 0}},  {22, {1, 2, 1}},  {20, {0, 1, 0}},
        {18, {4, 0, 1}},  {16, {3, 2, 0}},  {14, {2, 1, 1}},  {12, {1, 0, 0}},  {10, {0, 2, 1}},  {8, {4, 1, 0}},
        {6, {3, 0, 1}},   {4, {2, 2, 0}},   {2, {1, 1, 1}},   {0, {0, 0, 0}},   {-2, {4, 2, 1}},  {-4, {3, 1, 0}},
        {-6, {2, 0, 1}},  {-8, {1, 2, 0}},  {-10, {0, 1, 1}}, {-12, {4, 0, 0}}, {-14, {3, 2, 1}}, {-16, {2, 1, 0}},
        {-18, {1, 0, 1}}, {-20, {0, 2, 0}}, {-22, {4, 1, 1}}, {-24, {3, 0, 0}}, {-26, {2, 2, 1}}, {-28, {1, 1, 0}},
        {-30, {0, 0, 1}}};
    const std::vector<std::pair<long, std::vector<int>>> ocol{
        {12, {2, 0, 0}}, {10, {1, 2, 1}}, {8, {0, 1, 0}},  {6, {3, 0, 1}},    {4, {2, 2, 0}},    {2, {1, 1, 1}},  {0, {0, 0, 0}},
        {-2, {3, 2, 1}}, {-4, {2, 1, 0}}, {-6, {1, 0, 1}}, {-8, {0, 2, 0}}, {-10, {3, 1, 1}}, {-12, {2, 0, 0}}};
    const std::vector<std::pair<long, std::vector<int>>> tcol{{6, {0, 0, 1}},  {4, {2, 2, 0}},  {2, {1, 1, 1}}, {0, {0, 0, 0}},
                                                              {-2, {2, 2, 1}}, {-4, {1, 1, 0}}, {-6, {0, 0, 1}}};
    for (const auto& [k, n] : ycol) rows.push_back({Y, k, n});
    for (const auto& [k, n] : ocol) rows.push_back({O, k, n});
    for (const auto& [k, n] : tcol) rows.push_back({T, k, n});
    for (int n = 3; n <= nmax; ++n) {
        const GroupKind C = GroupKind::cyclic(n), D = GroupKind::dihedral(n);
        rows.push_back({D, 4, {2, 0, 0}});
        rows.push_back({D, 2, {1, 1, 1}});
        rows.push_back({D, 0, {0, 0, 0}});
        rows.push_back({D, -2, {n - 1, 1, 1}});
        rows.push_back({D, -4, {n - 2, 0, 0}});
        if (n % 2) {
            rows.push_back({C, 4, {2, 2}});
            rows.push_back({C, 2, {1, 1}});
            rows.push_back({C, 0, {0, 0}});
            rows.push_back({C, -2, {n - 1, n - 1}});
            rows.push_back({C, -4, {n - 2, n - 2}});
        } else if (n >= 6) {
            const int m = n / 2;
            rows.push_back({C, 4, {2, 2}});
            rows.push_back({C, 2, {1, 1}});
            rows.push_back({C, 0, {0, 0}});
            rows.push_back({C, -2, {m - 1, m - 1}});
            rows.push_back({C, -4, {m - 2, m - 2}});
        }
    }
    return rows;
}

/// Groups used by the grid checks.
inline std::vector<GroupKind> grid_groups(int nmax)
{
    std::vector<GroupKind> out;
    for (int n = 1; n <= nmax; ++n) out.push_back(GroupKind::cyclic(n));
    for (int n = 2; n <= nmax; ++n) out.push_back(GroupKind::dihedral(n));
    out.push_back(GroupKind::tetrahedral());
    out.push_back(GroupKind::octahedral());
    out.push_back(GroupKind::icosahedral());
    return out;
}

}  // namespace alia::testing

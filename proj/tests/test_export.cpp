/**
 * @file test_export.cpp
 * @brief Text, CSV, JSON, LaTeX and DOT renderings of structure tables and normal forms.
 */

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

using namespace alia;
using namespace alia::testing;

namespace {

AliaSpec y_spec(const LieType& t)
{
    const GroupModel Y = build_group(GroupKind::icosahedral());
    return make_spec(GroupKind::icosahedral(), Y.smallest_orbit(), t, principal_grading(t.rank));
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST(Glyphs, Strings)
{
    const GroupModel Y = build_group(GroupKind::icosahedral());
    std::string all;
    for (int o = 0; o < 3; ++o) all += glyph_string(Y, o, GlyphStyle::Ascii);
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, "IJK");
    EXPECT_EQ(glyph_string(Y, Y.smallest_orbit(), GlyphStyle::Ascii), "I");
    EXPECT_EQ(glyph_string(Y, Y.largest_orbit(), GlyphStyle::Latex), "\\mathbb{K}");
    EXPECT_EQ(monomial_string(Y, {0, 0, 0}, GlyphStyle::Ascii), "");
    EXPECT_EQ(monomial_string(Y, {2, 2, 2}, GlyphStyle::Ascii), "IJK");
    EXPECT_EQ(monomial_string(Y, {2, 2, 2}, GlyphStyle::Latex), "\\mathbb{I} \\mathbb{J} \\mathbb{K}");
    HalfVec k(3, 0);
    k[Y.largest_orbit()] = 2;
    EXPECT_EQ(term_string(Y, -1, k, GlyphStyle::Ascii), "-K");
    EXPECT_EQ(term_string(Y, 3, k, GlyphStyle::Ascii), "3 K");
    EXPECT_EQ(term_string(Y, -2, k, GlyphStyle::Latex), "-2 \\, \\mathbb{K}");
    EXPECT_EQ(term_string(Y, -1, {0, 0, 0}, GlyphStyle::Ascii), "-1");
    EXPECT_EQ(term_string(Y, 0, k, GlyphStyle::Ascii), "0");
    const GroupModel C4 = build_group(GroupKind::cyclic(4));
    EXPECT_EQ(monomial_string(C4, {1, 0}, GlyphStyle::Ascii), std::string(1, C4.glyph(0)) + "^(1/2)");
}

TEST(StructureText, G2Layout)
{
    const BracketTable t(y_spec({'G', 2}));
    const auto ls = lines(structure_text(t, false));
    ASSERT_FALSE(ls.empty());
    EXPECT_EQ(ls[0], "# rank 2 columns 12");
    EXPECT_EQ(ls.size(), structure_entries(t, false).size() + 1);
    const Fixture fx = load_fixture(data_path("structure_g2.tsv"));
    EXPECT_EQ(fx.lines.size(), ls.size() - 1);
}

TEST(StructureText, PositiveOnlyHasDiagonalRows)
{
    const BracketTable t(y_spec({'F', 4}));
    const auto ls = lines(structure_text(t, true));
    EXPECT_EQ(ls[0], "# rank 4 columns 24");
    int diag = 0;
    for (const auto& l : ls)
        if (l.rfind("diag\t", 0) == 0) ++diag;
    EXPECT_EQ(diag, 24);
    EXPECT_EQ(ls[1], "diag\t1 0 0 0\t1\tIJK");
}

TEST(StructureCsv, HeaderAndRows)
{
    const BracketTable t(y_spec({'A', 2}));
    const auto ls = lines(structure_csv(t, false));
    ASSERT_FALSE(ls.empty());
    EXPECT_EQ(ls[0], "row_root,col_root,coeff,monomial");
    EXPECT_EQ(ls.size(), structure_entries(t, false).size() + 1);
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_EQ(std::count(ls[i].begin(), ls[i].end(), ','), 3);
    EXPECT_NE(std::find(ls.begin(), ls.end(), "1 0,0 1,1,K"), ls.end());
}

TEST(StructureJson, RoundTripIsByteIdentical)
{
    for (const auto& lt : {LieType{'A', 2}, LieType{'G', 2}, LieType{'B', 2}}) {
        const BracketTable t(y_spec(lt));
        const std::string s = structure_json(t, false).dump(2);
        EXPECT_EQ(nlohmann::json::parse(s).dump(2), s);
        const auto j = nlohmann::json::parse(s);
        EXPECT_EQ(j["entries"].size(), structure_entries(t, false).size());
        EXPECT_EQ(j["lie_type"], lt.name());
        EXPECT_EQ(j["orbits"].size(), 3u);
    }
}

TEST(StructureJson, EntriesMatchTable)
{
    const BracketTable t(y_spec({'A', 2}));
    const auto j = structure_json(t, false);
    const auto entries = structure_entries(t, false);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        EXPECT_EQ(j["entries"][i]["coeff"].get<long>(), entries[i].coeff);
        EXPECT_EQ(j["entries"][i]["exponents_half_units"].get<HalfVec>(), entries[i].mono);
        EXPECT_EQ(j["entries"][i]["row"].get<RootVec>(), t.system().root(entries[i].row));
    }
}

TEST(StructureLatex, Shape)
{
    const BracketTable t(y_spec({'G', 2}));
    const std::string s = structure_latex(t, false);
    EXPECT_EQ(s.rfind("\\begin{array}{rr|rrrrrrrrrrrr}", 0), 0u);
    EXPECT_NE(s.find("\\end{array}"), std::string::npos);
    EXPECT_NE(s.find("\\mathbb{K}"), std::string::npos);
    // Two coordinate header rows, a rule, then one row per root.
    const auto ls = lines(s);
    EXPECT_EQ(ls.size(), 1u + 2u + 1u + 12u + 1u);
    const std::string p = structure_latex(BracketTable(y_spec({'F', 4})), true);
    EXPECT_EQ(std::count(p.begin(), p.end(), '\n'), 1 + 4 + 1 + 2 + 24 + 1);
}

TEST(GraphDot, IcosahedralA2)
{
    const BracketTable t(y_spec({'A', 2}));
    const Graph g = rank2_graph(t, 0);
    const std::string s = graph_dot(t, g, 0);
    EXPECT_EQ(s.rfind("graph omega_", 0), 0u);
    EXPECT_EQ(static_cast<std::size_t>(std::count(s.begin(), s.end(), '-')) / 2 >= g.edges.size(), true);
    EXPECT_NE(s.find("label=\"(1,0)\""), std::string::npos);
    EXPECT_EQ(s.back(), '\n');
}

TEST(NormalFormText, A2AndRejectsOtherTypes)
{
    const GroupModel Y = build_group(GroupKind::icosahedral());
    const RootSystem a2({'A', 2});
    const OneForm w1 = normal_form_integral(Cocycle2(a2, {2, 2}, Y));
    const auto mat = normal_form_matrix(a2, Y, w1, GlyphStyle::Latex);
    EXPECT_EQ(mat[0][0], "\\ast");
    EXPECT_EQ(mat[1][0], "\\mathbb{I} \\mathbb{J} \\mathbb{K}");
    EXPECT_EQ(lines(one_form_text(a2, Y, w1)).size(), 6u);
    const RootSystem b2({'B', 2});
    EXPECT_THROW(normal_form_matrix(b2, Y, normal_form_integral(Cocycle2(b2, {2, 2}, Y)), GlyphStyle::Ascii),
                 std::invalid_argument);
}

TEST(MatrixExport, TextAndJson)
{
    const Intertwiner2 w = build_modaut(BiForm::monomial(1, 1));
    const auto j = matrix_json(w.matrix);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0][1].get<std::string>(), w.matrix(0, 1).to_string());
    EXPECT_EQ(lines(matrix_text(w.matrix)).size(), 2u);
}

TEST(Determinism, RepeatedExportsAgree)
{
    const std::string a = structure_json(BracketTable(y_spec({'F', 4})), true).dump();
    const std::string b = structure_json(BracketTable(y_spec({'F', 4})), true).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(structure_csv(BracketTable(y_spec({'G', 2})), false), structure_csv(BracketTable(y_spec({'G', 2})), false));
}

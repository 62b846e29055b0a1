#pragma once

/**
 * @file export.hpp
 * @brief Text, CSV, JSON, LaTeX and DOT renderings of structure tables, normal forms,
 * graphs and matrices.
 *
 * Hauptmoduln are written I, J, K, ... (LaTeX: \mathbb{I}, ...) by increasing orbit size.
 * Monomials keep every orbit, the pole orbit included.
 */

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "alia/intertwiner.hpp"
#include "alia/structure.hpp"

namespace alia {

enum class GlyphStyle { Ascii, Latex };

inline std::string glyph_string(const GroupModel& m, int orbit, GlyphStyle st)
{
    const std::string g(1, m.glyph(orbit));
    return st == GlyphStyle::Latex ? "\\mathbb{" + g + "}" : g;
}

/// Monomial in the Hauptmoduln from half-unit exponents; empty for the trivial monomial.
inline std::string monomial_string(const GroupModel& m, const HalfVec& mono, GlyphStyle st)
{
    std::vector<int> order(mono.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return m.glyph(a) < m.glyph(b); });
    std::string s;
    for (int o : order) {
        const int e = mono[o];
        if (e == 0) continue;
        if (!s.empty() && st == GlyphStyle::Latex) s += " ";
        s += glyph_string(m, o, st);
        if (e == 2) continue;
        const std::string ex = e % 2 ? std::to_string(e) + "/2" : std::to_string(e / 2);
        s += st == GlyphStyle::Latex ? "^{" + ex + "}" : "^(" + ex + ")";
    }
    return s;
}

/// Coefficient times monomial, e.g. "-2 J", "K", "-1"; LaTeX uses "\," as separator.
inline std::string term_string(const GroupModel& m, long coeff, const HalfVec& mono, GlyphStyle st)
{
    if (coeff == 0) return "0";
    const std::string mo = monomial_string(m, mono, st);
    if (mo.empty()) return std::to_string(coeff);
    std::string s = coeff < 0 ? "-" : "";
    const long a = coeff < 0 ? -coeff : coeff;
    if (a != 1) s += std::to_string(a) + (st == GlyphStyle::Latex ? " \\, " : " ");
    return s + mo;
}

/// One cell of the root-by-root presentation of a structure table.
struct TableEntry {
    int row = 0;
    int col = 0;
    long coeff = 0;
    HalfVec mono;
    /// Set for (α, -α): the cell holds the Cartan coefficient ω²(α, -α).
    bool opposite = false;
};

/// Nonzero cells in row-major root order. In positive-only mode the rows and columns are
/// positive roots and each opposite pair contributes one entry with coefficient 1.
inline std::vector<TableEntry> structure_entries(const BracketTable& t, bool positive_only)
{
    const RootSystem& rs = t.system();
    const Cocycle2& w = t.cocycle();
    const int R = positive_only ? rs.num_positive() : rs.size();
    std::vector<TableEntry> out;
    for (int a = 0; a < R; ++a) {
        if (!w.even(a)) continue;
        if (positive_only) out.push_back({a, rs.negative(a), 1, w.value(a, rs.negative(a)), true});
        for (int b = 0; b < R; ++b) {
            if (!w.even(b)) continue;
            if (rs.negative(a) == b) {
                out.push_back({a, b, rs.is_positive(a) ? 1L : -1L, w.value(a, b), true});
                continue;
            }
            if (rs.sum(a, b) < 0) continue;
            out.push_back({a, b, static_cast<long>(t.epsilon().eps(a, b)), w.value(a, b), false});
        }
    }
    return out;
}

/// Tab-separated listing: "row\tcol\tcoeff\tmonomial", with "diag\troot\t1\tmonomial" for
/// opposite pairs in positive-only mode.
inline std::string structure_text(const BracketTable& t, bool positive_only)
{
    const RootSystem& rs = t.system();
    std::ostringstream os;
    os << "# rank " << rs.rank() << " columns " << (positive_only ? rs.num_positive() : rs.size()) << "\n";
    for (const auto& e : structure_entries(t, positive_only)) {
        std::string mo = monomial_string(t.model(), e.mono, GlyphStyle::Ascii);
        if (mo.empty()) mo = "1";
        if (positive_only && e.opposite) os << "diag\t" << rs.root_string(e.row) << "\t1\t" << mo << "\n";
        else os << rs.root_string(e.row) << "\t" << rs.root_string(e.col) << "\t" << e.coeff << "\t" << mo << "\n";
    }
    return os.str();
}

/// CSV with columns row_root, col_root, coeff, monomial; roots as space-separated coordinates.
inline std::string structure_csv(const BracketTable& t, bool positive_only)
{
    const RootSystem& rs = t.system();
    std::ostringstream os;
    os << "row_root,col_root,coeff,monomial\n";
    for (const auto& e : structure_entries(t, positive_only)) {
        std::string mo = monomial_string(t.model(), e.mono, GlyphStyle::Ascii);
        if (mo.empty()) mo = "1";
        os << rs.root_string(e.row) << "," << rs.root_string(e.col) << "," << e.coeff << "," << mo << "\n";
    }
    return os.str();
}

inline nlohmann::json root_json(const RootSystem& rs, int a)
{
    return nlohmann::json(rs.root(a));
}

inline std::string convention_name(ResidueConvention c)
{
    return c == ResidueConvention::Table ? "table" : "invariant";
}

inline nlohmann::json structure_json(const BracketTable& t, bool positive_only)
{
    const RootSystem& rs = t.system();
    const GroupModel& m = t.model();
    nlohmann::json j;
    j["group"] = m.kind.name();
    j["pole_orbit"] = t.spec().pole_orbit;
    j["lie_type"] = rs.type().name();
    j["grading"] = t.spec().grading;
    j["convention"] = convention_name(t.spec().convention);
    j["positive_only"] = positive_only;
    nlohmann::json glyphs = nlohmann::json::array();
    for (int o = 0; o < m.orbit_count(); ++o)
        glyphs.push_back({{"orbit", o}, {"glyph", std::string(1, m.glyph(o))}, {"size", m.d[o]}, {"nu", m.nu[o]}});
    j["orbits"] = glyphs;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : structure_entries(t, positive_only)) {
        nlohmann::json x;
        x["row"] = root_json(rs, e.row);
        x["col"] = root_json(rs, e.col);
        x["coeff"] = e.coeff;
        x["opposite"] = e.opposite;
        x["exponents_half_units"] = e.mono;
        std::string mo = monomial_string(m, e.mono, GlyphStyle::Ascii);
        x["monomial"] = mo.empty() ? "1" : mo;
        entries.push_back(std::move(x));
    }
    j["entries"] = entries;
    return j;
}

/// LaTeX array with root coordinates as header rows and columns; positive-only mode adds a
/// row with the values at opposite roots.
inline std::string structure_latex(const BracketTable& t, bool positive_only)
{
    const RootSystem& rs = t.system();
    const GroupModel& m = t.model();
    const Cocycle2& w = t.cocycle();
    std::vector<int> roots;
    for (int a = 0; a < (positive_only ? rs.num_positive() : rs.size()); ++a)
        if (w.even(a)) roots.push_back(a);
    const int r = rs.rank();
    std::ostringstream os;
    os << "\\begin{array}{" << std::string(r, 'r') << "|" << std::string(roots.size(), 'r') << "}\n";
    const std::string lead = [&] {
        std::string s;
        for (int i = 0; i < r; ++i) s += " & ";
        return s.substr(1);
    }();
    for (int l = 0; l < r; ++l) {
        os << lead;
        for (int b : roots) os << " & " << rs.root(b)[l];
        os << " \\\\\n";
    }
    os << "\\hline\n";
    if (positive_only) {
        os << lead;
        for (int b : roots) {
            const std::string mo = monomial_string(m, w.value(b, rs.negative(b)), GlyphStyle::Latex);
            os << " & " << (mo.empty() ? "1" : mo);
        }
        os << " \\\\\n\\hline\n";
    }
    std::vector<std::vector<std::string>> cells(roots.size(), std::vector<std::string>(roots.size(), "0"));
    std::vector<int> pos(rs.size(), -1);
    for (std::size_t i = 0; i < roots.size(); ++i) pos[roots[i]] = static_cast<int>(i);
    for (const auto& e : structure_entries(t, positive_only)) {
        if (positive_only && e.opposite) continue;
        cells[pos[e.row]][pos[e.col]] = term_string(m, e.coeff, e.mono, GlyphStyle::Latex);
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (int l = 0; l < r; ++l) os << (l ? " & " : "") << rs.root(roots[i])[l];
        for (const auto& c : cells[i]) os << " & " << c;
        os << (i + 1 < roots.size() ? " \\\\\n" : "\n");
    }
    os << "\\end{array}\n";
    return os.str();
}

/// DOT rendering of a rank-2 graph; vertices are labelled by root coordinates.
inline std::string graph_dot(const BracketTable& t, const Graph& g, int orbit)
{
    const RootSystem& rs = t.system();
    std::ostringstream os;
    os << "graph omega_" << t.model().glyph(orbit) << " {\n";
    for (int a = 0; a < rs.size(); ++a)
        if (t.cocycle().even(a)) os << "  r" << a << " [label=\"(" << rs.root_string(a, ",") << ")\"];\n";
    for (const auto& [a, b] : g.edges) os << "  r" << a << " -- r" << b << ";\n";
    os << "}\n";
    return os.str();
}

/// Type-A normal form ω¹ as a matrix: entry (r, c) is ω¹(e_r - e_c), with * on the diagonal.
inline std::vector<std::vector<std::string>> normal_form_matrix(const RootSystem& rs, const GroupModel& m,
                                                                const OneForm& w1, GlyphStyle st)
{
    if (!rs.type().is_type_a()) throw std::invalid_argument("normal_form_matrix: type A required");
    const int N = rs.rank();
    std::vector<std::vector<std::string>> out(N + 1, std::vector<std::string>(N + 1));
    for (int r = 0; r <= N; ++r)
        for (int c = 0; c <= N; ++c) {
            if (r == c) {
                out[r][c] = st == GlyphStyle::Latex ? "\\ast" : "*";
                continue;
            }
            RootVec v(N, 0);
            for (int l = std::min(r, c); l < std::max(r, c); ++l) v[l] = r < c ? 1 : -1;
            const std::string mo = monomial_string(m, w1(rs.find(v)), st);
            out[r][c] = mo.empty() ? "1" : mo;
        }
    return out;
}

/// Per-root listing of a 1-form: "root\tmonomial" lines.
inline std::string one_form_text(const RootSystem& rs, const GroupModel& m, const OneForm& w1)
{
    std::ostringstream os;
    for (int a = 0; a < rs.size(); ++a) {
        const std::string mo = monomial_string(m, w1(a), GlyphStyle::Ascii);
        os << rs.root_string(a) << "\t" << half_vec_string(w1(a)) << "\t" << (mo.empty() ? "1" : mo) << "\n";
    }
    return os.str();
}

inline std::string matrix_text(const RfMatrix& a)
{
    std::ostringstream os;
    for (int i = 0; i < a.rows(); ++i) {
        os << "[";
        for (int j = 0; j < a.cols(); ++j) os << (j ? ", " : " ") << a(i, j).to_string();
        os << " ]\n";
    }
    return os.str();
}

inline nlohmann::json matrix_json(const RfMatrix& a)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace alia

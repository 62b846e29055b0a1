/**
 * @file alia_cli.cpp
 * @brief Command-line front end: group data, invariant forms, intertwiners, structure tables,
 * normal forms, graphs, verification and derived dimensions.
 *
 * Exit status: 0 on success, 1 when a verification fails, 2 on argument errors.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alia/alia.hpp"

namespace {

using namespace alia;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string group = "Y";
    std::string orbit = "smallest";
    std::string type = "A1";
    std::string labels;
    std::string k_range = "0..0";
    std::string format = "text";
    std::string output;
    std::string convention = "table";
    std::string hauptmodul;
    int sym = 2;
    int kmax = 60;
    bool tabulated = false;
    bool positive_only = false;
    bool all_roots = false;
};

GroupKind parse_group(const std::string& s)
{
    try {
        return GroupKind::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

LieType parse_type(const std::string& s)
{
    try {
        return LieType::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// "smallest", "largest", a glyph letter, or a 0-based index.
int parse_orbit(const GroupModel& m, const std::string& s)
{
    if (s == "smallest") return m.smallest_orbit();
    if (s == "largest") return m.largest_orbit();
    if (s.size() == 1 && std::isupper(static_cast<unsigned char>(s[0]))) {
        for (int o = 0; o < m.orbit_count(); ++o)
            if (m.glyph(o) == s[0]) return o;
        throw UsageError("no orbit with glyph " + s);
    }
    try {
        std::size_t pos = 0;
        int o = std::stoi(s, &pos);
        if (pos == s.size() && o >= 0 && o < m.orbit_count()) return o;
    } catch (const std::exception&) {
    }
    throw UsageError("bad orbit: " + s);
}

DynkinGrading parse_labels(const std::string& s, const LieType& t)
{
    if (s.empty()) return principal_grading(t.rank);
    DynkinGrading g;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            g.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw UsageError("bad labels: " + s);
        } catch (const std::logic_error&) {
            throw UsageError("bad labels: " + s);
        }
    }
    try {
        validate_grading(RootSystem(t), g);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return g;
}

std::pair<long, long> parse_range(const std::string& s)
{
    const auto p = s.find("..");
    try {
        if (p == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        long a = std::stol(s.substr(0, p)), b = std::stol(s.substr(p + 2));
        if (a > b) throw UsageError("empty k range: " + s);
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("bad k range: " + s);
    }
}

ResidueConvention parse_convention(const std::string& s)
{
    if (s == "table") return ResidueConvention::Table;
    if (s == "invariant") return ResidueConvention::Invariant;
    throw UsageError("bad convention: " + s);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (o.format == f) return;
    throw UsageError("format " + o.format + " is not available for this command");
}

void emit(const Options& o, const std::string& text)
{
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + o.output);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string vec_string(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int run_groups(const Options& o, const std::vector<std::string>& groups)
{
    require_format(o, {"text", "json"});
    std::vector<std::string> names = groups;
    if (names.empty()) names = {"C1", "C2", "C3", "C4", "C5", "C6", "D2", "D3", "D4", "D5", "T", "O", "Y"};
    json arr = json::array();
    std::ostringstream os;
    os << "group\t|G|\tnu\td\t|BG|\tsum_d_identity\n";
    for (const auto& n : names) {
        const GroupModel m = build_group(parse_group(n));
        long sd = 0;
        for (int d : m.d) sd += d;
        const bool ident = sd == static_cast<long>(m.orbit_count() - 2) * m.order_gamma + 2;
        os << m.kind.name() << "\t" << m.order_gamma << "\t" << vec_string(m.nu) << "\t" << vec_string(m.d) << "\t"
           << m.elements.size() << "\t" << (ident ? "ok" : "FAIL") << "\n";
        arr.push_back({{"group", m.kind.name()},
                       {"order", m.order_gamma},
                       {"nu", m.nu},
                       {"d", m.d},
                       {"binary_order", m.elements.size()},
                       {"sum_d_identity", ident}});
    }
    emit(o, o.format == "json" ? dump(arr) : os.str());
    return 0;
}

int run_nmap(const Options& o)
{
    require_format(o, {"text", "csv", "json"});
    const GroupModel m = build_group(parse_group(o.group));
    const auto [a, b] = parse_range(o.k_range);
    const ResidueConvention conv = parse_convention(o.convention);
    json arr = json::array();
    std::ostringstream os;
    if (o.format == "csv") os << "k,n\n";
    for (long k = a; k <= b; ++k) {
        if (k % 2) continue;
        const NVec n = conv == ResidueConvention::Table ? n_map(m, k) : invariant_residues(m, k);
        if (o.format == "csv") {
            os << k << ",\"" << vec_string(n.residues) << "\"\n";
        } else {
            os << k << "\t" << vec_string(n.residues) << "\n";
        }
        arr.push_back({{"k", k}, {"n", n.residues}, {"half", n.half}});
    }
    emit(o, o.format == "json" ? dump(arr) : os.str());
    return 0;
}

std::string character_string(const std::vector<CycNum>& c)
{
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].to_string();
    return s;
}

int run_groundforms(const Options& o)
{
    require_format(o, {"text", "json"});
    const GroupKind kind = parse_group(o.group);
    const GroupModel m = build_group(kind);
    const auto forms = o.tabulated ? tabulated_ground_forms(kind) : ground_forms(m);
    json arr = json::array();
    std::ostringstream os;
    bool ok = true;
    for (const auto& f : forms) {
        const bool good = has_character(m, f.form, f.character);
        ok = ok && good;
        os << m.glyph(f.orbit) << "\tdeg " << *f.form.degree() << "\t" << f.form.to_string() << "\tchi = ("
           << character_string(f.character) << ")\t" << (good ? "ok" : "FAIL") << "\n";
        arr.push_back({{"orbit", f.orbit},
                       {"glyph", std::string(1, m.glyph(f.orbit))},
                       {"degree", *f.form.degree()},
                       {"form", f.form.to_string()},
                       {"character", character_string(f.character)},
                       {"verified", good}});
    }
    emit(o, o.format == "json" ? dump(arr) : os.str());
    if (!ok) throw VerificationFailure("a ground form does not have its listed character");
    return 0;
}

int run_pk(const Options& o)
{
    require_format(o, {"text", "json"});
    const GroupModel m = build_group(parse_group(o.group));
    const int pole = parse_orbit(m, o.orbit);
    const auto [a, b] = parse_range(o.k_range);
    json arr = json::array();
    std::ostringstream os;
    bool ok = true;
    for (long k = a; k <= b; ++k) {
        if (k % 2) continue;
        const LocElem p = p_k(m, pole, k);
        const bool inv = is_invariant(m, p);
        const bool deg = p.degree() && *p.degree() == k;
        ok = ok && inv && deg;
        os << k << "\t" << p.to_string() << "\t" << (inv && deg ? "ok" : "FAIL") << "\n";
        arr.push_back({{"k", k}, {"p_k", p.to_string()}, {"invariant", inv}, {"degree_ok", deg}});
    }
    emit(o, o.format == "json" ? dump(arr) : os.str());
    if (!ok) throw VerificationFailure("p_k failed invariance or degree");
    return 0;
}

int run_molien(const Options& o)
{
    require_format(o, {"text", "csv", "json"});
    const GroupModel m = build_group(parse_group(o.group));
    if (o.kmax < 0) throw UsageError("kmax must be non-negative");
    const auto series = molien_series(m, o.kmax);
    std::ostringstream os;
    if (o.format == "csv") os << "k,dim\n";
    for (std::size_t k = 0; k < series.size(); ++k) os << k << (o.format == "csv" ? "," : "\t") << series[k] << "\n";
    emit(o, o.format == "json" ? dump(json(series)) : os.str());
    return 0;
}

int run_intertwine(const Options& o)
{
    require_format(o, {"text", "json"});
    const GroupModel m = build_group(parse_group(o.group));
    const int pole = parse_orbit(m, o.orbit);
    if (o.sym < 1 || o.sym > 4) throw UsageError("--sym must be in 1..4");
    const ExplicitGenerators g = explicit_generators(m, pole, o.sym);
    const bool eq = modaut_equivariant(g.modaut, m.generators);
    json j;
    j["group"] = m.kind.name();
    j["pole_form"] = g.modaut.form.to_string();
    j["modaut"] = matrix_json(g.modaut.matrix);
    j["modaut_equivariant"] = eq;
    j["routes_agree"] = g.routes_agree;
    json gens = json::array();
    std::ostringstream os;
    os << "P = " << g.modaut.form.to_string() << "\nmodaut =\n" << matrix_text(g.modaut.matrix);
    os << "equivariant: " << (eq ? "yes" : "no") << "\nroutes agree: " << (g.routes_agree ? "yes" : "no") << "\n";
    for (std::size_t x = 0; x < g.a.size(); ++x) {
        os << "\na(" << g.labels[x] << "), k = " << g.k[x] << ":\n" << matrix_text(g.a[x]);
        gens.push_back({{"basis", g.labels[x]}, {"k", g.k[x]}, {"a", matrix_json(g.a[x])}, {"abar", matrix_json(g.abar[x])}});
    }
    j["generators"] = gens;
    emit(o, o.format == "json" ? dump(j) : os.str());
    if (!eq || !g.routes_agree) throw VerificationFailure("intertwiner checks failed");
    return 0;
}

AliaSpec spec_from(const Options& o)
{
    const GroupKind kind = parse_group(o.group);
    const GroupModel m = build_group(kind);
    const LieType t = parse_type(o.type);
    return make_spec(kind, parse_orbit(m, o.orbit), t, parse_labels(o.labels, t), parse_convention(o.convention));
}

int run_structure(const Options& o)
{
    require_format(o, {"text", "csv", "json", "latex"});
    const AliaSpec spec = spec_from(o);
    if (o.positive_only && o.all_roots) throw UsageError("--positive-only and --all-roots are exclusive");
    const bool large = spec.lie_type.family == 'E' || spec.lie_type.family == 'F';
    const bool positive = o.positive_only || (large && !o.all_roots);
    const BracketTable t(spec);
    if (t.has_odd_roots()) std::cerr << "note: roots of odd degree are omitted from the table\n";
    if (o.format == "csv") emit(o, structure_csv(t, positive));
    else if (o.format == "json") emit(o, dump(structure_json(t, positive)));
    else if (o.format == "latex") emit(o, structure_latex(t, positive));
    else emit(o, structure_text(t, positive));
    return 0;
}

int run_normalform(const Options& o)
{
    require_format(o, {"text", "latex", "json"});
    const AliaSpec spec = spec_from(o);
    const BracketTable t(spec);
    const OneForm w1 = normal_form_integral(t.cocycle());
    if (!is_integral_of(w1, t.cocycle())) throw VerificationFailure("normal form is not an integral");
    const RootSystem& rs = t.system();
    if (o.format == "json") {
        json j;
        json vals = json::array();
        for (int a = 0; a < rs.size(); ++a) vals.push_back({{"root", rs.root(a)}, {"half_units", w1(a)}});
        j["values"] = vals;
        j["candidates_per_orbit"] = w1.candidates_per_orbit;
        emit(o, dump(j));
        return 0;
    }
    if (!rs.type().is_type_a()) {
        if (o.format == "latex") throw UsageError("matrix notation requires type A");
        emit(o, one_form_text(rs, t.model(), w1));
        return 0;
    }
    const bool latex = o.format == "latex";
    const auto mat = normal_form_matrix(rs, t.model(), w1, latex ? GlyphStyle::Latex : GlyphStyle::Ascii);
    std::ostringstream os;
    if (latex) os << "\\begin{bmatrix}\n";
    for (std::size_t r = 0; r < mat.size(); ++r) {
        for (std::size_t c = 0; c < mat[r].size(); ++c) os << (c ? (latex ? " & " : "\t") : "") << mat[r][c];
        os << (latex ? (r + 1 < mat.size() ? " \\\\\n" : "\n") : "\n");
    }
    if (latex) os << "\\end{bmatrix}\n";
    emit(o, os.str());
    return 0;
}

int run_graph(const Options& o)
{
    require_format(o, {"dot", "text"});
    const AliaSpec spec = spec_from(o);
    const BracketTable t(spec);
    const int h = o.hauptmodul.empty() ? 0 : parse_orbit(t.model(), o.hauptmodul);
    const Graph g = rank2_graph(t, h);
    if (g.too_large) std::cerr << "note: graph of a rank > 2 system\n";
    if (o.format == "dot") {
        emit(o, graph_dot(t, g, h));
        return 0;
    }
    std::ostringstream os;
    for (const auto& [a, b] : g.edges)
        os << "(" << t.system().root_string(a, ",") << ") -- (" << t.system().root_string(b, ",") << ")\n";
    emit(o, os.str());
    return 0;
}

int run_verify(const Options& o)
{
    require_format(o, {"text", "json"});
    const AliaSpec spec = spec_from(o);
    const GroupModel m = build_group(spec.group);
    json j;
    bool ok = true;
    auto record = [&](const std::string& name, bool pass) {
        j[name] = pass;
        ok = ok && pass;
    };
    record("relations", relation_check(m));
    record("characters", character_group_checks(m).ok);
    bool forms = true;
    for (const auto& f : m.forms) forms = forms && has_character(m, f.form, f.character);
    record("ground_forms", forms);
    bool pk = true;
    for (long k = -2; k <= 2L * std::min(m.order_gamma, 12); k += 2) {
        const LocElem p = p_k(m, spec.pole_orbit, k);
        pk = pk && is_invariant(m, p) && p.degree() && *p.degree() == k;
    }
    record("p_k", pk);
    if (m.order_gamma > 1 || m.kind.family != GroupKind::Family::Cyclic) {
        const auto w = build_modaut(ground_form(m, spec.pole_orbit), pole_of(m, spec.pole_orbit));
        record("modaut_equivariant", modaut_equivariant(w, m.generators));
    }
    const BracketTable t(spec);
    const JacobiReport jr = jacobi_check(t);
    record("jacobi", jr.ok());
    j["jacobi_triples"] = jr.triples;
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) os << it.key() << "\t" << it.value().dump() << "\n";
    emit(o, o.format == "json" ? dump(j) : os.str());
    if (!ok) throw VerificationFailure("verification failed");
    return 0;
}

int run_dims(const Options& o)
{
    require_format(o, {"text", "json"});
    const AliaSpec spec = spec_from(o);
    const GroupModel m = build_group(spec.group);
    const FixedPointDims f = fixed_point_dims(m, spec.lie_type, spec.grading);
    const int ab = abelianisation_dim(spec);
    const BracketTable t(spec);
    const auto brute = abelianisation_bruteforce(t);
    const auto key = isomorphism_key(spec);
    json j;
    j["fixed_point_dims"] = f.per_generator;
    j["fixed_point_sum"] = f.sum;
    j["dim_g"] = f.dim_g;
    j["dim_invariant"] = f.dim_invariant;
    j["abelianisation"] = ab;
    j["abelianisation_bruteforce"] = brute ? json(*brute) : json(nullptr);
    j["isomorphism_key"] = key;
    std::ostringstream os;
    os << "fixed-point dims\t" << vec_string(f.per_generator) << " sum " << f.sum << "\n";
    os << "dim g\t" << f.dim_g << "\ndim invariants\t" << f.dim_invariant << "\n";
    os << "abelianisation\t" << ab << " (table: " << (brute ? std::to_string(*brute) : "infinite") << ")\n";
    os << "isomorphism key\t" << vec_string(key) << "\n";
    emit(o, o.format == "json" ? dump(j) : os.str());
    if (!brute || *brute != ab) throw VerificationFailure("abelianisation formula disagrees with the table");
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"alia: structure tables and invariants of automorphic Lie algebras"};
    app.require_subcommand(1);
    Options o;
    std::vector<std::string> groups;

    auto add_group = [&](CLI::App* s) { s->add_option("--group", o.group, "C<n>, D<n>, T, O or Y"); };
    auto add_orbit = [&](CLI::App* s) {
        s->add_option("--orbit", o.orbit, "pole orbit: smallest, largest, glyph letter or index");
    };
    auto add_output = [&](CLI::App* s) { s->add_option("--output,-o", o.output, "output file"); };
    auto add_alg = [&](CLI::App* s) {
        add_group(s);
        add_orbit(s);
        s->add_option("--type", o.type, "Lie type, e.g. A2, G2, E8");
        s->add_option("--labels", o.labels, "Dynkin labels, comma separated (default principal)");
        s->add_option("--convention", o.convention, "residue convention: table or invariant");
        add_output(s);
    };

    auto* s_groups = app.add_subcommand("groups", "group data");
    s_groups->add_option("--group", groups, "groups to list (default: a representative set)");
    add_output(s_groups);
    auto* s_nmap = app.add_subcommand("nmap", "values of the periodic map n(k)");
    add_group(s_nmap);
    s_nmap->add_option("--k", o.k_range, "range a..b");
    s_nmap->add_option("--convention", o.convention, "table or invariant");
    add_output(s_nmap);
    auto* s_forms = app.add_subcommand("groundforms", "ground forms and characters");
    add_group(s_forms);
    s_forms->add_flag("--tabulated", o.tabulated, "use the tabulated forms verbatim");
    add_output(s_forms);
    auto* s_pk = app.add_subcommand("pk", "invariant forms P_k");
    add_group(s_pk);
    add_orbit(s_pk);
    s_pk->add_option("--k", o.k_range, "range a..b");
    add_output(s_pk);
    auto* s_mol = app.add_subcommand("molien", "dimensions of invariant forms");
    add_group(s_mol);
    s_mol->add_option("--kmax", o.kmax, "largest degree");
    add_output(s_mol);
    auto* s_int = app.add_subcommand("intertwine", "intertwiner and explicit generators");
    add_group(s_int);
    add_orbit(s_int);
    s_int->add_option("--sym", o.sym, "symmetric power m (sl(m+1))");
    add_output(s_int);
    auto* s_struct = app.add_subcommand("structure", "structure table");
    add_alg(s_struct);
    s_struct->add_flag("--positive-only", o.positive_only, "positive roots only (default for F and E types)");
    s_struct->add_flag("--all-roots", o.all_roots, "all roots");
    auto* s_nf = app.add_subcommand("normalform", "normal-form integral");
    add_alg(s_nf);
    auto* s_graph = app.add_subcommand("graph", "graph of a cocycle component");
    add_alg(s_graph);
    s_graph->add_option("--hauptmodul", o.hauptmodul, "orbit of the component (glyph or index)");
    auto* s_verify = app.add_subcommand("verify", "verification suite");
    add_alg(s_verify);
    auto* s_dims = app.add_subcommand("dims", "fixed-point dimensions, abelianisation, isomorphism key");
    add_alg(s_dims);

    for (auto* s : {s_groups, s_nmap, s_forms, s_pk, s_mol, s_int, s_struct, s_nf, s_graph, s_verify, s_dims})
        s->add_option("--format", o.format, "output format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (s_graph->parsed() && s_graph->count("--format") == 0) o.format = "dot";
    try {
        if (s_groups->parsed()) return run_groups(o, groups);
        if (s_nmap->parsed()) return run_nmap(o);
        if (s_forms->parsed()) return run_groundforms(o);
        if (s_pk->parsed()) return run_pk(o);
        if (s_mol->parsed()) return run_molien(o);
        if (s_int->parsed()) return run_intertwine(o);
        if (s_struct->parsed()) return run_structure(o);
        if (s_nf->parsed()) return run_normalform(o);
        if (s_graph->parsed()) return run_graph(o);
        if (s_verify->parsed()) return run_verify(o);
        if (s_dims->parsed()) return run_dims(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

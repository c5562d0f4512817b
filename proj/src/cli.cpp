#include "g2ido/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace g2ido::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string display_id(const std::string &id) { return id.empty() ? "0" : id; }

std::string json_doc(const Json &j) { return j.dump(2) + "\n"; }

Json rational_json(const Rational &r) { return r.str(); }

Json parameters_json(const Rational &m1, const Rational &m2) {
    return Json{{"m1", m1.str()}, {"m2", m2.str()}};
}

[[noreturn]] void unsupported(Format format, std::string_view command) {
    const char *name = format == Format::Dot ? "dot" : format == Format::Json ? "json" : "table";
    throw UsageError("--format " + std::string(name) + " is not supported by '" + std::string(command) + "'");
}

/// "α1∨+2α2∨"
std::string coroot_expansion(const CorootCoords &c) {
    std::string out;
    auto term = [&out](const Rational &k, const char *basis) {
        if (k.is_zero())
            return;
        if (!out.empty() && k > 0)
            out += "+";
        if (k == Rational(-1))
            out += "-";
        else if (k != Rational(1))
            out += k.str();
        out += basis;
    };
    term(c.c1, "α1∨");
    term(c.c2, "α2∨");
    return out.empty() ? "0" : out;
}

/// beta^vee as a multiple of beta: beta itself when short, beta/3 when long.
std::string coroot_as_root(const Root &beta, const RootSystem &rs) {
    const Rational scale = Rational(2) / rs.inner(beta, beta);
    if (scale == Rational(1))
        return beta.expansion();
    const std::string body = beta.is_simple() ? beta.expansion() : "(" + beta.expansion() + ")";
    if (scale.num() == 1)
        return body + "/" + std::to_string(scale.den());
    return scale.str() + "·" + body;
}

std::string eps_text(const std::array<int, 3> &e) {
    return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
}

std::string matrix_text(const Mat2 &m) {
    return "[[" + std::to_string(m[0][0]) + "," + std::to_string(m[0][1]) + "],[" + std::to_string(m[1][0]) + "," +
           std::to_string(m[1][1]) + "]]";
}

Json matrix_json(const Mat2 &m) { return Json::array({{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}); }

std::string root_list(const std::vector<int> &indices) {
    std::string out = "{";
    for (std::size_t i = 0; i < indices.size(); ++i)
        out += (i ? "," : "") + g2().root(indices[i]).name();
    return out + "}";
}

Json root_names(const std::vector<int> &indices) {
    Json out = Json::array();
    for (int i : indices)
        out.push_back(g2().root(i).name());
    return out;
}

Json edge_json(const Edge &e) {
    Json j{{"from", e.from}, {"to", e.to}, {"kind", std::string(to_string(e.kind))}};
    if (e.is_differential()) {
        j["root"] = e.root;
        j["degree"] = e.degree;
        j["family"] = e.family;
    } else {
        j["root"] = nullptr;
        j["degree"] = nullptr;
        j["family"] = nullptr;
    }
    j["m_compact"] = e.m_compact;
    j["retained"] = e.retained;
    j["reduced"] = e.reduced;
    return j;
}

std::string multiplet_json(const MultipletGraph &g) {
    Json nodes = Json::array();
    for (const auto &n : g.nodes)
        nodes.push_back({{"id", n.id},
                         {"n1", n.labels.n1.str()},
                         {"n2", n.labels.n2.str()},
                         {"c", n.signature.c.str()},
                         {"d", conformal_weight(n.signature.c).str()},
                         {"aliases", n.aliases}});
    Json edges = Json::array();
    for (const auto &e : g.edges)
        edges.push_back(edge_json(e));
    Json components = Json::array();
    for (const auto &c : g.components)
        components.push_back({{"tag", c.tag}, {"nodes", c.nodes}});
    Json specials = Json::array();
    for (const auto &s : g.specials)
        specials.push_back({{"node", s.node},
                            {"kind", std::string(to_string(s.kind))},
                            {"d", s.d.str()},
                            {"dim", s.dim ? rational_json(*s.dim) : Json(nullptr)}});
    Json doc{{"parameters", parameters_json(g.m1, g.m2)},
             {"parabolic", std::string(to_string(g.parabolic))},
             {"case", g.case_label.name()},
             {"nodes", std::move(nodes)},
             {"edges", std::move(edges)},
             {"components", std::move(components)},
             {"specials", std::move(specials)}};
    return json_doc(doc);
}

std::string multiplet_table(const MultipletGraph &g) {
    std::ostringstream os;
    os << "parameters: m1=" << g.m1 << " m2=" << g.m2 << "\n";
    os << "parabolic: " << to_string(g.parabolic) << "\n";
    os << "case: " << g.case_label.name() << "\n";
    os << "nodes:\n";
    os << "id | n1 | n2 | c | d | aliases\n";
    for (const auto &n : g.nodes) {
        os << display_id(n.id) << " | " << n.labels.n1 << " | " << n.labels.n2 << " | " << n.signature.c << " | "
           << conformal_weight(n.signature.c) << " |";
        for (const auto &a : n.aliases)
            os << " " << a;
        os << "\n";
    }
    os << "edges:\n";
    os << "from | to | kind | root | degree | family | m_compact | retained | reduced\n";
    for (const auto &e : g.edges) {
        os << display_id(e.from) << " | " << display_id(e.to) << " | " << to_string(e.kind) << " | ";
        if (e.is_differential())
            os << g2().root(e.root).name() << " | " << e.degree << " | " << g2().root(e.family).name();
        else
            os << "- | - | -";
        os << " | " << (e.m_compact ? "yes" : "no") << " | " << (e.retained ? "yes" : "no") << " | "
           << (e.reduced ? "yes" : "no") << "\n";
    }
    os << "components:\n";
    for (const auto &c : g.components) {
        os << c.tag << " |";
        for (const auto &id : c.nodes)
            os << " " << display_id(id);
        os << "\n";
    }
    os << "specials:\n";
    for (const auto &s : g.specials) {
        os << to_string(s.kind) << " | " << display_id(s.node) << " | d=" << s.d;
        if (s.dim)
            os << " | dim=" << *s.dim;
        os << "\n";
    }
    return os.str();
}

std::string dot_node(const std::string &id) { return "n_" + display_id(id); }

std::string multiplet_dot(const MultipletGraph &g) {
    std::ostringstream os;
    os << "digraph multiplet {\n";
    os << "  label=\"m1=" << g.m1 << " m2=" << g.m2 << " " << to_string(g.parabolic) << " "
       << g.case_label.name() << "\";\n";
    os << "  node [shape=box];\n";
    for (const auto &n : g.nodes)
        os << "  " << dot_node(n.id) << " [label=\"χ_{" << display_id(n.id) << "} {" << n.labels.n1 << ","
           << n.labels.n2 << "; " << n.signature.c << "}\"];\n";

    std::vector<const Edge *> shown;
    for (const auto &e : g.edges)
        if (!e.is_differential() || (e.retained && e.reduced))
            shown.push_back(&e);
    // a drawn degeneration takes the place of its Knapp-Stein arrow
    auto degenerated = [&](const Edge &ks) {
        return std::any_of(shown.begin(), shown.end(), [&](const Edge *d) {
            return d->kind == EdgeKind::DegeneratedKS &&
                   ((d->from == ks.from && d->to == ks.to) || (d->from == ks.to && d->to == ks.from));
        });
    };
    for (const Edge *e : shown) {
        const std::string arrow = "  " + dot_node(e->from) + " -> " + dot_node(e->to);
        switch (e->kind) {
        case EdgeKind::DiffOp:
            os << arrow << " [label=\"" << g2().root(e->root).name() << " ^ " << e->degree << "\"];\n";
            break;
        case EdgeKind::DegeneratedKS:
            os << arrow << " [label=\"" << g2().root(e->root).name() << " ^ " << e->degree
               << "\", style=bold];\n";
            break;
        case EdgeKind::KnappStein:
            if (!degenerated(*e))
                os << arrow << " [style=dashed, dir=both];\n";
            break;
        }
    }
    os << "}\n";
    return os.str();
}

Rational parse_rational_flag(const std::string &flag, const std::string &text) {
    if (auto r = Rational::parse(text))
        return *r;
    throw UsageError("invalid value for " + flag + ": '" + text + "' (expected p or p/q with q > 0)");
}

ParabolicName parse_parabolic_flag(const std::string &text) {
    if (auto p = parse_parabolic(text))
        return *p;
    throw UsageError("invalid value for --parabolic: '" + text + "' (expected P0, P1 or P2)");
}

struct Options {
    std::string format = "table";
    std::string out;
    std::string m1;
    std::string m2;
    std::string parabolic = "P0";
};

void add_output_flags(CLI::App &cmd, Options &opt) {
    cmd.add_option("--format", opt.format, "table, json or dot")->capture_default_str();
    cmd.add_option("--out", opt.out, "write the document to this file instead of stdout");
}

void add_parameter_flags(CLI::App &cmd, Options &opt, bool with_parabolic) {
    cmd.add_option("--m1", opt.m1, "first Dynkin label of Lambda+rho (p or p/q)")->required();
    cmd.add_option("--m2", opt.m2, "second Dynkin label of Lambda+rho (p or p/q)")->required();
    if (with_parabolic)
        cmd.add_option("--parabolic", opt.parabolic, "P0, P1 or P2")->capture_default_str();
}

void emit(const std::string &doc, const Options &opt, std::ostream &out) {
    if (opt.out.empty()) {
        out << doc;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
    if (!file || !(file << doc) || !file.flush())
        throw UsageError("cannot write --out file '" + opt.out + "'");
}

} // namespace

Format parse_format(std::string_view text) {
    if (text == "table")
        return Format::Table;
    if (text == "json")
        return Format::Json;
    if (text == "dot")
        return Format::Dot;
    throw UsageError("invalid value for --format: '" + std::string(text) + "' (expected table, json or dot)");
}

std::string render_roots(Format format, const RootSystem &rs) {
    if (format == Format::Dot)
        unsupported(format, "roots");
    if (format == Format::Json) {
        Json roots = Json::array();
        for (const auto &r : rs.positive_roots()) {
            const auto c = r.simple_coords();
            const CorootCoords cv = rs.coroot(r);
            roots.push_back({{"index", r.index()},
                             {"name", r.name()},
                             {"simple", {c.a, c.b}},
                             {"expansion", r.expansion()},
                             {"eps", r.eps_coords()},
                             {"length", std::string(to_string(r.length()))},
                             {"norm", rs.inner(r, r).str()},
                             {"coroot", coroot_as_root(r, rs)},
                             {"coroot_coords", {cv.c1.str(), cv.c2.str()}}});
        }
        return json_doc(Json{{"roots", std::move(roots)}});
    }
    std::ostringstream os;
    os << "root | expansion | eps | length | coroot | coroot basis\n";
    for (const auto &r : rs.positive_roots())
        os << r.name() << " | " << r.expansion() << " | " << eps_text(r.eps_coords()) << " | "
           << to_string(r.length()) << " | " << coroot_as_root(r, rs) << " | " << coroot_expansion(rs.coroot(r))
           << "\n";
    return os.str();
}

std::string render_weyl(Format format) {
    if (format == Format::Dot)
        unsupported(format, "weyl");
    const auto &w = weyl_group();
    if (format == Format::Json) {
        Json elements = Json::array();
        for (const auto &e : w.elements())
            elements.push_back({{"word", e.word},
                                {"length", e.length()},
                                {"label_matrix", matrix_json(e.label_matrix)},
                                {"root_matrix", matrix_json(e.root_matrix)},
                                {"det", determinant(e.label_matrix)}});
        return json_doc(Json{{"order", w.elements().size()}, {"elements", std::move(elements)}});
    }
    std::ostringstream os;
    os << "word | length | label matrix | root matrix | det\n";
    for (const auto &e : w.elements())
        os << (e.word.empty() ? "e" : e.word) << " | " << e.length() << " | " << matrix_text(e.label_matrix)
           << " | " << matrix_text(e.root_matrix) << " | " << determinant(e.label_matrix) << "\n";
    os << "order " << w.elements().size() << "\n";
    return os.str();
}

std::string render_parabolics(Format format) {
    if (format == Format::Dot)
        unsupported(format, "parabolics");
    const auto &cat = catalog();
    if (format == Format::Json) {
        Json list = Json::array();
        for (const auto &p : cat.parabolics) {
            const NilradicalReport n = nilradical(p);
            list.push_back({{"name", std::string(to_string(p.name))},
                            {"levi", p.levi_description},
                            {"dim_a", p.dim_a},
                            {"dim_n", p.dim_n},
                            {"m_compact_roots", root_names(p.m_compact_roots)},
                            {"nilradical",
                             {{"roots", root_names(n.roots)},
                              {"derived", root_names(n.derived_roots)},
                              {"center", root_names(n.center_roots)},
                              {"step", n.nilpotency_step}}}});
        }
        return json_doc(Json{{"parabolics", std::move(list)},
                             {"dim_n_tilde0", cat.dim_n_tilde0},
                             {"dim_m0", cat.dim_m0},
                             {"discrete_series_count", cat.discrete_series_count}});
    }
    std::ostringstream os;
    os << "name | levi | dim a | dim n | m-compact | n | [n,n] | center | step\n";
    for (const auto &p : cat.parabolics) {
        const NilradicalReport n = nilradical(p);
        os << to_string(p.name) << " | " << p.levi_description << " | " << p.dim_a << " | " << p.dim_n << " | "
           << root_list(p.m_compact_roots) << " | " << root_list(n.roots) << " | " << root_list(n.derived_roots)
           << " | " << root_list(n.center_roots) << " | " << n.nilpotency_step << "\n";
    }
    os << "dim ñ0 = " << cat.dim_n_tilde0 << ", m0 = " << cat.dim_m0 << "\n";
    os << "discrete series families = " << cat.discrete_series_count << "\n";
    return os.str();
}

std::string render_multiplet(const MultipletGraph &graph, Format format) {
    switch (format) {
    case Format::Table:
        return multiplet_table(graph);
    case Format::Json:
        return multiplet_json(graph);
    case Format::Dot:
        return multiplet_dot(graph);
    }
    return {};
}

std::string render_classify(const Rational &m1, const Rational &m2, ParabolicName p, Format format) {
    if (format == Format::Dot)
        unsupported(format, "classify");
    const CaseLabel label = classify(m1, m2, p);
    if (format == Format::Json)
        return json_doc(Json{{"parameters", parameters_json(m1, m2)},
                             {"parabolic", std::string(to_string(p))},
                             {"case", label.name()}});
    return label.name() + "\n";
}

std::string render_dim(const Rational &m1, const Rational &m2, Format format) {
    if (format == Format::Dot)
        unsupported(format, "dim");
    if (!m1.is_natural())
        throw UsageError("invalid value for --m1: '" + m1.str() + "' (expected a positive integer)");
    if (!m2.is_natural())
        throw UsageError("invalid value for --m2: '" + m2.str() + "' (expected a positive integer)");
    const Rational dim = weyl_dim({m1, m2});
    if (format == Format::Json)
        return json_doc(Json{{"parameters", parameters_json(m1, m2)}, {"dim", dim.str()}});
    return dim.str() + "\n";
}

std::string render_verify(const std::vector<FixtureResult> &results, Format format) {
    if (format == Format::Dot)
        unsupported(format, "verify");
    if (format == Format::Json) {
        Json list = Json::array();
        for (const auto &r : results)
            list.push_back({{"name", r.name},
                            {"status", r.passed ? "pass" : "fail"},
                            {"expected", r.expected},
                            {"actual", r.actual}});
        return json_doc(list);
    }
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto &r : results) {
        if (r.passed) {
            ++passed;
            os << "PASS " << r.name << "\n";
        } else {
            os << "FAIL " << r.name << "\n  expected: " << r.expected << "\n  actual:   " << r.actual << "\n";
        }
    }
    os << passed << "/" << results.size() << " fixtures passed\n";
    os << (passed == results.size() ? "all fixtures passed" : "some fixtures failed") << "\n";
    return os.str();
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Elementary-representation multiplets and invariant differential operators for G2(2)", "g2ido"};
    app.require_subcommand(1);
    Options opt;

    auto *roots = app.add_subcommand("roots", "positive roots, eps coordinates and coroots");
    auto *weyl = app.add_subcommand("weyl", "the twelve Weyl group elements");
    auto *multiplet = app.add_subcommand("multiplet", "build the multiplet of (m1, m2) induced from a parabolic");
    auto *classify_cmd = app.add_subcommand("classify", "print the case label of (m1, m2)");
    auto *parabolics = app.add_subcommand("parabolics", "parabolic catalog with nilradical structure");
    auto *dim = app.add_subcommand("dim", "dimension of the finite-dimensional irrep with labels (m1, m2)");
    auto *verify = app.add_subcommand("verify", "run the built-in fixture suite");

    for (auto *cmd : {roots, weyl, multiplet, classify_cmd, parabolics, dim, verify})
        add_output_flags(*cmd, opt);
    add_parameter_flags(*multiplet, opt, true);
    add_parameter_flags(*classify_cmd, opt, true);
    add_parameter_flags(*dim, opt, false);

    if (!args.empty() && !args.front().starts_with("-") && !app.get_subcommand_no_throw(args.front())) {
        err << "error: unknown subcommand '" << args.front() << "'; run with --help for the list\n";
        return kExitUsage;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Format format = parse_format(opt.format);
        if (*roots) {
            emit(render_roots(format), opt, out);
        } else if (*weyl) {
            emit(render_weyl(format), opt, out);
        } else if (*parabolics) {
            emit(render_parabolics(format), opt, out);
        } else if (*multiplet) {
            const Rational m1 = parse_rational_flag("--m1", opt.m1);
            const Rational m2 = parse_rational_flag("--m2", opt.m2);
            emit(render_multiplet(build(m1, m2, parse_parabolic_flag(opt.parabolic)), format), opt, out);
        } else if (*classify_cmd) {
            const Rational m1 = parse_rational_flag("--m1", opt.m1);
            const Rational m2 = parse_rational_flag("--m2", opt.m2);
            emit(render_classify(m1, m2, parse_parabolic_flag(opt.parabolic), format), opt, out);
        } else if (*dim) {
            const Rational m1 = parse_rational_flag("--m1", opt.m1);
            const Rational m2 = parse_rational_flag("--m2", opt.m2);
            emit(render_dim(m1, m2, format), opt, out);
        } else if (*verify) {
            const auto results = verify_fixtures();
            emit(render_verify(results, format), opt, out);
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.passed; });
            return ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OverflowError &e) {
        err << "error: arithmetic overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const std::exception &e) {
        // an engine invariant broke; reported like a failed self-check
        err << "error: internal: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

} // namespace g2ido::cli

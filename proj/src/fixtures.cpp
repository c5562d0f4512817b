#include "g2ido/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "g2ido/multiplets.hpp"

namespace g2ido {

namespace {

/// a*m1 + b*m2
struct Linear {
    int a, b;
    Rational at(const Rational &m1, const Rational &m2) const { return Rational(a) * m1 + Rational(b) * m2; }
};

/// Signature table entry: labels are linear in (m1, m2), c is half a linear form.
struct SignatureRow {
    const char *id;
    Linear n1, n2, twice_c;
};

// Main multiplet, minimal parabolic.
constexpr SignatureRow kMainTable[] = {
    {"", {1, 0}, {0, 1}, {-1, -2}},          {"2", {1, 3}, {0, -1}, {-1, -1}},
    {"1", {-1, 0}, {1, 1}, {-1, -2}},        {"21", {2, 3}, {-1, -1}, {0, -1}},
    {"12", {-1, -3}, {1, 2}, {-1, -1}},      {"212", {2, 3}, {-1, -2}, {0, 1}},
    {"121", {-2, -3}, {1, 2}, {0, -1}},      {"2121", {1, 3}, {-1, -2}, {1, 1}},
    {"1212", {-2, -3}, {1, 1}, {0, 1}},      {"21212", {1, 0}, {-1, -1}, {1, 2}},
    {"12121", {-1, -3}, {0, 1}, {1, 1}},     {"121212", {-1, 0}, {0, -1}, {1, 2}},
};

struct Relation {
    const char *from, *to;
    int root;
    Linear degree;
};

constexpr Relation kMainRelations[] = {
    {"", "2", 2, {0, 1}},       {"", "1", 1, {1, 0}},        {"2", "21", 3, {1, 0}},
    {"1", "12", 5, {0, 1}},     {"", "212", 3, {1, 3}},      {"", "121", 5, {1, 1}},
    {"212", "2121", 4, {1, 0}}, {"121", "1212", 6, {0, 1}},  {"", "21212", 6, {1, 2}},
    {"", "12121", 4, {2, 3}},
};

constexpr std::pair<const char *, const char *> kKsIdentifications[] = {
    {"", "121212"}, {"1", "21212"}, {"2", "12121"}, {"12", "2121"}, {"21", "1212"}, {"121", "212"},
};

const std::pair<int, int> kMainSamples[] = {{1, 1}, {2, 3}, {5, 2}};

template <class Range, class F> std::string join(const Range &r, F f, std::string_view sep = " ") {
    std::string out;
    bool first = true;
    for (const auto &x : r) {
        if (!first)
            out += sep;
        first = false;
        out += f(x);
    }
    return out;
}

std::string edge_str(const Edge &e) {
    return "(" + (e.from.empty() ? std::string("0") : e.from) + "->" + (e.to.empty() ? std::string("0") : e.to) +
           " a" + std::to_string(e.root) + "^" + std::to_string(e.degree) + ")";
}

std::vector<Edge> diagram_edges(const MultipletGraph &g, bool reduced_only) {
    std::vector<Edge> out;
    for (const auto &e : g.edges)
        if (e.is_differential() && e.retained && (!reduced_only || e.reduced))
            out.push_back(e);
    return out;
}

/// Differential roots of a component, sorted and deduplicated.
std::string component_roots(const MultipletGraph &g, const Component &c) {
    std::vector<int> roots;
    for (const auto &e : diagram_edges(g, false))
        if (std::find(c.nodes.begin(), c.nodes.end(), e.from) != c.nodes.end())
            roots.push_back(e.root);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return join(roots, [](int r) { return "a" + std::to_string(r); }, ",");
}

std::string components_str(const MultipletGraph &g) {
    return join(g.components, [&](const Component &c) {
        return c.tag + ":" + std::to_string(c.nodes.size()) + "[" + component_roots(g, c) + "]";
    });
}

std::string eps_str(const std::array<int, 3> &e) {
    return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
}

using FixtureFn = std::function<std::pair<std::string, std::string>()>;

struct Fixture {
    const char *name;
    FixtureFn run;
};

std::vector<Fixture> make_fixtures(const RootSystem &rs) {
    std::vector<Fixture> f;

    f.push_back({"root_eps_coordinates", [&rs] {
                     const std::array<std::array<int, 3>, 6> table{{
                         {1, -1, 0}, {-1, 2, -1}, {0, 1, -1}, {1, 0, -1}, {2, -1, -1}, {1, 1, -2},
                     }};
                     std::string expected, actual;
                     for (const auto &r : rs.positive_roots()) {
                         expected += eps_str(table[r.index() - 1]);
                         actual += eps_str(r.eps_coords());
                     }
                     // the form must agree with the orthonormal picture
                     for (const auto &x : rs.positive_roots())
                         for (const auto &y : rs.positive_roots()) {
                             const auto ex = x.eps_coords(), ey = y.eps_coords();
                             const int dot = ex[0] * ey[0] + ex[1] * ey[1] + ex[2] * ey[2];
                             if (rs.inner(x, y) != Rational(dot))
                                 actual += " form(" + x.name() + "," + y.name() + ")=" + rs.inner(x, y).str();
                         }
                     return std::pair{expected, actual};
                 }});

    f.push_back({"root_inner_products", [&rs] {
                     const Root &a1 = rs.root(1), &a2 = rs.root(2);
                     return std::pair{std::string("2 6 -3"),
                                      rs.inner(a1, a1).str() + " " + rs.inner(a2, a2).str() + " " +
                                          rs.inner(a1, a2).str()};
                 }});

    f.push_back({"coroot_expansions", [&rs] {
                     const std::pair<int, int> table[] = {{1, 0}, {0, 1}, {1, 3}, {2, 3}, {1, 1}, {1, 2}};
                     std::string expected, actual;
                     for (const auto &r : rs.positive_roots()) {
                         const auto [c1, c2] = table[r.index() - 1];
                         expected += "(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
                         const CorootCoords cv = rs.coroot(r);
                         actual += "(" + cv.c1.str() + "," + cv.c2.str() + ")";
                     }
                     return std::pair{expected, actual};
                 }});

    f.push_back({"weyl_group", [] {
                     const auto &w = weyl_group();
                     const WeylElement &s1s2 = w.compose(w.simple(1), w.simple(2));
                     const WeylElement *power = &w.identity();
                     for (int i = 0; i < 6; ++i)
                         power = &w.compose(*power, s1s2);
                     const bool w0_negates = w.longest().label_matrix == Mat2{{{-1, 0}, {0, -1}}};
                     const bool dets = std::all_of(w.elements().begin(), w.elements().end(), [](const WeylElement &e) {
                         return std::abs(determinant(e.label_matrix)) == 1;
                     });
                     return std::pair{std::string("order=12 (s1s2)^6=e w0=-1 det=+-1"),
                                      "order=" + std::to_string(w.elements().size()) +
                                          " (s1s2)^6=" + (power->word.empty() ? "e" : power->word) +
                                          " w0=" + (w0_negates ? "-1" : w.longest().word) +
                                          " det=" + (dets ? "+-1" : "other")};
                 }});

    f.push_back({"main_multiplet_labels", [] {
                     std::string expected, actual;
                     for (const auto &[a, b] : kMainSamples) {
                         const Rational m1(a), m2(b);
                         const MultipletGraph g = build(m1, m2, ParabolicName::P0);
                         actual += std::to_string(g.nodes.size()) + ":";
                         expected += "12:";
                         for (const auto &row : kMainTable) {
                             expected += WeightLabels{row.n1.at(m1, m2), row.n2.at(m1, m2)}.str();
                             const MultipletNode *n = find_node(g.nodes, row.id);
                             actual += n ? n->labels.str() : std::string("missing");
                         }
                         expected += ";";
                         actual += ";";
                     }
                     return std::pair{expected, actual};
                 }});

    f.push_back({"main_multiplet_c_entries", [] {
                     std::string expected, actual;
                     for (const auto &[a, b] : kMainSamples) {
                         const Rational m1(a), m2(b);
                         const MultipletGraph g = build(m1, m2, ParabolicName::P0);
                         for (const auto &row : kMainTable) {
                             expected += (row.twice_c.at(m1, m2) / Rational(2)).str() + " ";
                             const MultipletNode *n = find_node(g.nodes, row.id);
                             actual += (n ? n->signature.c.str() : std::string("missing")) + " ";
                         }
                     }
                     return std::pair{expected, actual};
                 }});

    f.push_back({"main_multiplet_relations", [] {
                     std::string expected, actual;
                     for (const auto &[a, b] : kMainSamples) {
                         const Rational m1(a), m2(b);
                         const MultipletGraph g = build(m1, m2, ParabolicName::P0);
                         for (const auto &rel : kMainRelations) {
                             const Rational k = rel.degree.at(m1, m2);
                             expected += std::string(rel.from) + ">" + rel.to + " ";
                             const auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const Edge &e) {
                                 return e.is_differential() && e.from == rel.from && e.to == rel.to &&
                                        e.root == rel.root && Rational(e.degree) == k;
                             });
                             const bool shift_ok =
                                 subtract_root_multiple(g.node(rel.from).labels, k, g2().root(rel.root)) ==
                                 g.node(rel.to).labels;
                             actual += std::string(rel.from) + (it != g.edges.end() && shift_ok ? ">" : "!") +
                                       rel.to + " ";
                         }
                         const auto &w = weyl_group();
                         const bool longest = shifted_action(w.from_word("121212"), {m1, m2}) ==
                                                  shifted_action(w.from_word("212121"), {m1, m2}) &&
                                              shifted_action(w.from_word("121212"), {m1, m2}) ==
                                                  g.node("121212").labels;
                         expected += "w0 ";
                         actual += longest ? "w0 " : "w0! ";
                     }
                     return std::pair{expected, actual};
                 }});

    f.push_back({"ks_identifications", [] {
                     std::string expected, actual;
                     for (const auto &[a, b] : kMainSamples) {
                         const MultipletGraph g = build(Rational(a), Rational(b), ParabolicName::P0);
                         for (const auto &[x, y] : kKsIdentifications) {
                             expected += std::string(x) + "~" + y + " ";
                             actual += std::string(x) + "~" + ks_partner_id(g.nodes, x) + " ";
                         }
                     }
                     return std::pair{expected, actual};
                 }});

    f.push_back({"reduced_m1_signatures", [] {
                     // {0, -+m2; +-m2}, {-+3m2, +-m2; +-m2/2}, {+-3m2, -+2m2; +-m2/2} at m2 = 2
                     const std::string expected =
                         "{0, 2; -2}{0, -2; 2}{6, -2; -1}{-6, 2; 1}{-6, 4; -1}{6, -4; 1}";
                     const MultipletGraph g = build(0, 2, ParabolicName::P0);
                     std::vector<std::string> sigs;
                     for (const auto &n : g.nodes)
                         sigs.push_back(n.signature.str());
                     std::vector<std::string> want = {"{0, 2; -2}", "{0, -2; 2}", "{6, -2; -1}",
                                                      "{-6, 2; 1}", "{-6, 4; -1}", "{6, -4; 1}"};
                     std::sort(sigs.begin(), sigs.end());
                     std::sort(want.begin(), want.end());
                     return std::pair{join(want, [](auto &s) { return s; }, ""), join(sigs, [](auto &s) { return s; }, "")};
                 }});

    f.push_back({"reduced_m2_signatures", [] {
                     // {-+m1, 0; +-m1/2}, {+-m1, -+m1; +-m1/2}, {-+2m1, +-m1; 0} at m1 = 3
                     std::vector<std::string> want = {"{3, 0; -3/2}", "{-3, 0; 3/2}", "{-3, 3; -3/2}",
                                                      "{3, -3; 3/2}", "{6, -3; 0}", "{-6, 3; 0}"};
                     const MultipletGraph g = build(3, 0, ParabolicName::P0);
                     std::vector<std::string> sigs;
                     for (const auto &n : g.nodes)
                         sigs.push_back(n.signature.str());
                     std::sort(sigs.begin(), sigs.end());
                     std::sort(want.begin(), want.end());
                     return std::pair{join(want, [](auto &s) { return s; }, ""), join(sigs, [](auto &s) { return s; }, "")};
                 }});

    f.push_back({"reduced_m1_chain", [] {
                     const MultipletGraph g = build(0, 2, ParabolicName::P0);
                     std::string actual = std::to_string(g.nodes.size()) + " ";
                     for (const auto &e : diagram_edges(g, true))
                         actual += "a" + std::to_string(e.root) + "^" + std::to_string(e.degree) +
                                   (e.kind == EdgeKind::DegeneratedKS ? "*" : "") + " ";
                     return std::pair{std::string("6 a2^2 a1^6 a2^4* a1^6 a2^2 "), actual};
                 }});

    f.push_back({"reduced_m2_chain", [] {
                     const MultipletGraph g = build(3, 0, ParabolicName::P0);
                     std::string actual = std::to_string(g.nodes.size()) + " ";
                     for (const auto &e : diagram_edges(g, true))
                         actual += "a" + std::to_string(e.root) + "^" + std::to_string(e.degree) +
                                   (e.kind == EdgeKind::DegeneratedKS ? "*" : "") + " ";
                     return std::pair{std::string("6 a1^3 a2^3 a1^6* a2^3 a1^3 "), actual};
                 }});

    f.push_back({"p1_generic_components", [] {
                     const MultipletGraph g = build(Rational(1, 3), 2, ParabolicName::P1);
                     return std::pair{std::string("A1:4[a2] B1:4[a5] C1:4[a6]"), components_str(g)};
                 }});

    f.push_back({"p1_half_relaxed_c1", [] {
                     const MultipletGraph g = build(Rational(7, 2), 1, ParabolicName::P1);
                     std::string actual = g.case_label.name() + " reducible:";
                     for (const auto &p : reducibility_points({Rational(7, 2), 1}))
                         actual += " " + p.root.name() + "^" + std::to_string(p.degree);
                     actual += " C1 family-a4:";
                     const Component &c1 = g.component_of("21");
                     for (const auto &e : diagram_edges(g, false))
                         if (e.family == 4 && std::find(c1.nodes.begin(), c1.nodes.end(), e.from) != c1.nodes.end())
                             actual += " " + edge_str(e);
                     actual += " | " + components_str(g);
                     return std::pair{std::string("P1MainHalfRelaxed reducible: α2^1 α4^10 C1 family-a4: "
                                                  "(21->121 a1^10) (212->1212 a1^10) | A1:4[a2] B1:4[a5] C1:4[a1,a6]"),
                                      actual};
                 }});

    f.push_back({"p2_generic_components", [] {
                     const MultipletGraph g = build(2, Rational(1, 5), ParabolicName::P2);
                     return std::pair{std::string("A2:4[a1] B2:4[a3] C2:4[a4]"), components_str(g)};
                 }});

    f.push_back({"p2_third_relaxed_merge", [] {
                     const MultipletGraph g = build(1, Rational(2, 3), ParabolicName::P2);
                     return std::pair{std::string("P2MainThirdRelaxed A2:4[a1] B2:8[a1,a3,a4]"),
                                      g.case_label.name() + " " + components_str(g)};
                 }});

    f.push_back({"m21_quartet", [] {
                     const MultipletGraph g = build(0, Rational(2, 3), ParabolicName::P2);
                     const Component &q = g.component_of("2");
                     std::string actual = g.case_label.name() + " " + q.tag + ":" + std::to_string(q.nodes.size());
                     for (const auto &e : diagram_edges(g, false))
                         if (std::find(q.nodes.begin(), q.nodes.end(), e.from) != q.nodes.end())
                             actual += " " + edge_str(e);
                     return std::pair{std::string("M21ThirdQuartet quartet:4 (2->12 a1^2) (212->1212 a1^2)"), actual};
                 }});

    f.push_back({"m12_half_degeneration", [] {
                     const MultipletGraph g = build(Rational(7, 2), 0, ParabolicName::P1);
                     std::string actual = g.case_label.name();
                     for (const auto &e : diagram_edges(g, false))
                         actual += " " + edge_str(e) + (e.kind == EdgeKind::DegeneratedKS ? "*" : "");
                     return std::pair{std::string("M12HalfRelaxed (21->121 a1^7)*"), actual};
                 }});

    f.push_back({"m21_half_degeneration", [] {
                     const MultipletGraph g = build(0, Rational(1, 2), ParabolicName::P2);
                     std::string actual = g.case_label.name();
                     for (const auto &e : diagram_edges(g, false))
                         actual += " " + edge_str(e) + (e.kind == EdgeKind::DegeneratedKS ? "*" : "");
                     return std::pair{std::string("M21HalfRelaxed (12->212 a2^1)*"), actual};
                 }});

    f.push_back({"weyl_dimension", [] {
                     return std::pair{std::string("1 7 14"), weyl_dim({1, 1}).str() + " " + weyl_dim({2, 1}).str() +
                                                                 " " + weyl_dim({1, 2}).str()};
                 }});

    f.push_back({"parabolic_catalog", [] {
                     const auto &cat = catalog();
                     std::string actual;
                     for (const auto &p : cat.parabolics)
                         actual += std::string(to_string(p.name)) + "(" + std::to_string(p.dim_a) + "," +
                                   std::to_string(p.dim_n) + ",{" +
                                   join(p.m_compact_roots, [](int r) { return std::to_string(r); }, ",") + "}) ";
                     actual += "n~0=" + std::to_string(cat.dim_n_tilde0) + " m0=" + std::to_string(cat.dim_m0);
                     return std::pair{std::string("P0(2,6,{}) P1(1,5,{1}) P2(1,5,{2}) n~0=6 m0=0"), actual};
                 }});

    f.push_back({"nilradicals", [] {
                     std::string actual;
                     for (const auto &p : catalog().parabolics) {
                         const NilradicalReport r = nilradical(p);
                         auto ids = [](const std::vector<int> &v) {
                             return join(v, [](int x) { return std::to_string(x); }, ",");
                         };
                         actual += std::string(to_string(p.name)) + ":" + ids(r.roots) + "/" + ids(r.derived_roots) +
                                   "/" + ids(r.center_roots) + "/" + std::to_string(r.nilpotency_step) + " ";
                     }
                     return std::pair{std::string("P0:1,2,3,4,5,6/3,4,5,6/6/5 P1:2,3,4,5,6/6/6/2 "
                                                  "P2:1,3,4,5,6/4,5,6/5,6/3 "),
                                      actual};
                 }});

    f.push_back({"discrete_series", [] {
                     std::string actual = std::to_string(discrete_series_count_from_roots()) + "/" +
                                          std::to_string(catalog().discrete_series_count);
                     const std::tuple<int, int, SpecialKind> probes[] = {
                         {1, 1, SpecialKind::DiscreteSeriesD0},
                         {0, 1, SpecialKind::DiscreteSeriesD1},
                         {1, 0, SpecialKind::DiscreteSeriesD2},
                     };
                     for (const auto &[a, b, kind] : probes) {
                         const MultipletGraph g = build(a, b, ParabolicName::P0);
                         for (const auto &s : g.specials)
                             if (s.kind == kind)
                                 actual += " " + std::string(to_string(kind)) + "@" + s.node + "=" + s.d.str();
                     }
                     return std::pair{std::string("3/3 DiscreteSeriesD0@121212=3 DiscreteSeriesD1@21212=5/2 "
                                                  "DiscreteSeriesD2@12121=2"),
                                      actual};
                 }});

    f.push_back({"finite_dimensional_subspace", [] {
                     const MultipletGraph g = build(1, 1, ParabolicName::P0);
                     std::string actual;
                     for (const auto &s : g.specials)
                         if (s.kind == SpecialKind::FiniteDim)
                             actual += "node=" + (s.node.empty() ? std::string("0") : s.node) + " dim=" +
                                       s.dim->str() + " d=" + s.d.str();
                     return std::pair{std::string("node=0 dim=1 d=0"), actual};
                 }});

    f.push_back({"case_labels", [] {
                     const std::tuple<Rational, Rational, ParabolicName> probes[] = {
                         {1, 1, ParabolicName::P0},
                         {Rational(7, 2), 1, ParabolicName::P1},
                         {1, Rational(2, 3), ParabolicName::P2},
                         {0, Rational(2, 3), ParabolicName::P2},
                         {Rational(5, 7), Rational(3, 7), ParabolicName::P0},
                         {Rational(1, 7), Rational(1, 7), ParabolicName::P0},
                     };
                     std::string actual;
                     for (const auto &[a, b, p] : probes)
                         actual += classify(a, b, p).name() + " ";
                     return std::pair{std::string("MainMinimal P1MainHalfRelaxed P2MainThirdRelaxed "
                                                  "M21ThirdQuartet RemarkDoublet(3) Unlisted "),
                                      actual};
                 }});

    return f;
}

} // namespace

std::vector<FixtureResult> verify_fixtures(const RootSystem &rs) {
    std::vector<FixtureResult> results;
    for (const auto &fx : make_fixtures(rs)) {
        FixtureResult r;
        r.name = fx.name;
        try {
            auto [expected, actual] = fx.run();
            r.passed = expected == actual;
            r.expected = std::move(expected);
            r.actual = std::move(actual);
        } catch (const std::exception &e) {
            r.passed = false;
            r.actual = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace g2ido

#include "g2ido/parabolic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g2ido {

std::string_view to_string(ParabolicName name) {
    switch (name) {
    case ParabolicName::P0:
        return "P0";
    case ParabolicName::P1:
        return "P1";
    case ParabolicName::P2:
        return "P2";
    }
    return "?";
}

std::optional<ParabolicName> parse_parabolic(std::string_view text) {
    if (text == "P0")
        return ParabolicName::P0;
    if (text == "P1")
        return ParabolicName::P1;
    if (text == "P2")
        return ParabolicName::P2;
    return std::nullopt;
}

const ParabolicCatalog &catalog() {
    static const ParabolicCatalog cat{{{
        {ParabolicName::P0, {}, 2, 6, "m0 = 0", 0, 0},
        {ParabolicName::P1, {1}, 1, 5, "m1 = sl(2,R)", 2, 3},
        {ParabolicName::P2, {2}, 1, 5, "m2 = sl(2,R)", 1, 5},
    }}};
    return cat;
}

int discrete_series_count_from_roots() {
    const auto &rs = g2();
    // positive roots of k^C: a1+a2 = (0,1,-1) and a2+3a1 = (2,-1,-1)
    std::vector<Mat2> gens;
    for (int index : {3, 5}) {
        const Root &beta = rs.root(index);
        const SimpleCoords c1 = rs.reflect(beta, {1, 0});
        const SimpleCoords c2 = rs.reflect(beta, {0, 1});
        gens.push_back(Mat2{{{c1.a, c2.a}, {c1.b, c2.b}}});
    }
    std::set<Mat2> group{Mat2{{{1, 0}, {0, 1}}}};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto &g : std::set<Mat2>(group))
            for (const auto &s : gens)
                grew |= group.insert(multiply(s, g)).second;
    }
    return static_cast<int>(weyl_group().elements().size() / group.size());
}

NilradicalReport nilradical(const ParabolicDesc &p) {
    const auto &rs = g2();
    NilradicalReport report;
    for (const auto &r : rs.positive_roots()) {
        const auto &c = r.simple_coords();
        const bool in_n = p.name == ParabolicName::P0 || (p.name == ParabolicName::P1 && c.b > 0) ||
                          (p.name == ParabolicName::P2 && c.a > 0);
        if (in_n)
            report.roots.push_back(r.index());
    }

    auto bracket = [&](const std::vector<int> &x, const std::vector<int> &y) {
        std::set<int> out;
        for (int i : x)
            for (int j : y)
                if (auto s = rs.root_sum(rs.root(i), rs.root(j));
                    s && std::find(report.roots.begin(), report.roots.end(), s->index()) != report.roots.end())
                    out.insert(s->index());
        return std::vector<int>(out.begin(), out.end());
    };

    report.derived_roots = bracket(report.roots, report.roots);
    for (int r : report.roots)
        if (bracket({r}, report.roots).empty())
            report.center_roots.push_back(r);

    std::vector<int> term = report.roots;
    while (!term.empty()) {
        ++report.nilpotency_step;
        term = bracket(report.roots, term);
    }
    return report;
}

std::vector<Edge> classify_edges(std::span<const Edge> edges, const ParabolicDesc &p) {
    std::vector<Edge> out(edges.begin(), edges.end());
    for (auto &e : out) {
        if (!e.is_differential())
            continue;
        e.m_compact = std::find(p.m_compact_roots.begin(), p.m_compact_roots.end(), e.root) !=
                      p.m_compact_roots.end();
        e.retained = p.name == ParabolicName::P0 || e.family == p.split_root || e.root <= 2;
    }
    return out;
}

std::string ks_partner_id(std::span<const MultipletNode> nodes, std::string_view id) {
    const MultipletNode *n = find_node(nodes, id);
    if (!n)
        throw std::invalid_argument("unknown node id '" + std::string(id) + "'");
    const Signature partner = ks_partner(n->signature);
    const MultipletNode *m = find_node(nodes, partner.labels);
    if (!m || m->signature != partner)
        throw std::logic_error("node '" + n->id + "' has no Knapp-Stein partner in the orbit");
    return m->id;
}

std::vector<Edge> ks_pairs(std::span<const MultipletNode> nodes) {
    std::vector<Edge> out;
    for (const auto &n : nodes) {
        const std::string partner = ks_partner_id(nodes, n.id);
        if (node_order(partner, n.id))
            continue; // emitted from the other side
        Edge e;
        e.from = n.id;
        e.to = partner;
        e.kind = EdgeKind::KnappStein;
        e.reduced = true;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Edge> ks_degenerations(std::span<const MultipletNode> nodes, std::span<const Edge> ks) {
    const auto &rs = g2();
    std::vector<Edge> out;
    for (const auto &pair : ks) {
        const MultipletNode *a = find_node(nodes, pair.from);
        const MultipletNode *b = find_node(nodes, pair.to);
        if (!a || !b || a == b)
            continue;
        for (const auto &[hi, lo] : {std::pair{a, b}, std::pair{b, a}}) {
            const Rational d1 = hi->labels.n1 - lo->labels.n1;
            const Rational d2 = hi->labels.n2 - lo->labels.n2;
            for (const auto &beta : rs.positive_roots()) {
                const auto row = rs.pairing_row(beta);
                // hi - lo = k * row(beta), k in N
                const Rational k = row[0] != 0 ? d1 / Rational(row[0]) : d2 / Rational(row[1]);
                if (!k.is_natural() || k * Rational(row[0]) != d1 || k * Rational(row[1]) != d2)
                    continue;
                Edge e;
                e.from = hi->id;
                e.to = lo->id;
                e.kind = EdgeKind::DegeneratedKS;
                e.root = beta.index();
                e.degree = k.num();
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

} // namespace g2ido

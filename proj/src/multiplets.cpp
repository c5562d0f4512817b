#include "g2ido/multiplets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace g2ido {

namespace {

bool in_n(const Rational &m) { return m.is_natural(); }
bool in_half(const Rational &m) { return m.in_natural_lattice(2); }
bool in_third(const Rational &m) { return m.in_natural_lattice(3); }

CaseLabel classify_p0(const Rational &m1, const Rational &m2) {
    if (m1.is_zero() && in_n(m2))
        return {CaseKind::ReducedM1};
    if (m2.is_zero() && in_n(m1))
        return {CaseKind::ReducedM2};
    if (in_n(m1) && in_n(m2))
        return {CaseKind::MainMinimal};
    const HCParams hc = hc_params({m1, m2});
    int integral = 0, which = 0;
    for (int k = 1; k <= kPositiveRootCount; ++k)
        if (in_n(hc[k])) {
            ++integral;
            which = k;
        }
    if (integral == 1)
        return {CaseKind::RemarkDoublet, which};
    return {};
}

CaseLabel classify_p1(const Rational &m1, const Rational &m2) {
    if (m1.is_zero() && in_n(m2))
        return {CaseKind::M11};
    if (m2.is_zero() && m1 > 0 && !in_n(m1))
        return {in_half(m1) ? CaseKind::M12HalfRelaxed : CaseKind::M12Generic};
    if (in_n(m2) && m1 > 0 && !in_n(m1))
        return {in_half(m1) ? CaseKind::P1MainHalfRelaxed : CaseKind::P1MainGeneric};
    return {};
}

CaseLabel classify_p2(const Rational &m1, const Rational &m2) {
    if (m1.is_zero() && m2 > 0 && !in_n(m2)) {
        if (in_half(m2))
            return {CaseKind::M21HalfRelaxed};
        if (in_third(m2))
            return {CaseKind::M21ThirdQuartet};
        return {CaseKind::M21Generic};
    }
    if (m2.is_zero() && in_n(m1))
        return {CaseKind::M22};
    if (in_n(m1) && m2 > 0 && !in_n(m2)) {
        if (in_half(m2))
            return {CaseKind::P2MainHalfRelaxed};
        if (in_third(m2))
            return {CaseKind::P2MainThirdRelaxed};
        return {CaseKind::P2MainGeneric};
    }
    return {};
}

std::vector<Component> find_components(const std::vector<MultipletNode> &nodes, const std::vector<Edge> &edges) {
    std::map<std::string, std::string> parent;
    for (const auto &n : nodes)
        parent[n.id] = n.id;
    auto root_of = [&](std::string x) {
        while (parent[x] != x)
            x = parent[x];
        return x;
    };
    for (const auto &e : edges) {
        if (e.is_differential() && !e.retained)
            continue;
        auto a = root_of(e.from), b = root_of(e.to);
        if (a == b)
            continue;
        // keep the canonically smaller id as representative
        if (node_order(b, a))
            std::swap(a, b);
        parent[b] = a;
    }
    std::vector<Component> out;
    std::map<std::string, std::size_t> slot;
    for (const auto &n : nodes) {
        const std::string r = root_of(n.id);
        auto [it, fresh] = slot.try_emplace(r, out.size());
        if (fresh)
            out.push_back({"none", {}});
        out[it->second].nodes.push_back(n.id);
    }
    return out;
}

bool contains(const Component &c, std::string_view id) {
    return std::find(c.nodes.begin(), c.nodes.end(), id) != c.nodes.end();
}

void tag_components(std::vector<Component> &components, ParabolicName p, const CaseLabel &label) {
    switch (label.kind) {
    case CaseKind::ReducedM1:
    case CaseKind::ReducedM2:
    case CaseKind::M11:
    case CaseKind::M22:
        for (auto &c : components)
            c.tag = "chain";
        return;
    default:
        break;
    }
    if (p == ParabolicName::P0)
        return;
    const std::string digit = p == ParabolicName::P1 ? "1" : "2";
    const std::string b_seed = p == ParabolicName::P1 ? "1" : "2";
    for (auto &c : components) {
        if (label.kind == CaseKind::M21ThirdQuartet && c.nodes.size() == 4)
            c.tag = "quartet";
        else if (contains(c, ""))
            c.tag = "A" + digit;
        else if (contains(c, b_seed))
            c.tag = "B" + digit;
        else
            c.tag = "C" + digit;
    }
}

} // namespace

std::string CaseLabel::name() const {
    switch (kind) {
    case CaseKind::MainMinimal:
        return "MainMinimal";
    case CaseKind::ReducedM1:
        return "ReducedM1";
    case CaseKind::ReducedM2:
        return "ReducedM2";
    case CaseKind::RemarkDoublet:
        return "RemarkDoublet(" + std::to_string(k) + ")";
    case CaseKind::P1MainGeneric:
        return "P1MainGeneric";
    case CaseKind::P1MainHalfRelaxed:
        return "P1MainHalfRelaxed";
    case CaseKind::P2MainGeneric:
        return "P2MainGeneric";
    case CaseKind::P2MainHalfRelaxed:
        return "P2MainHalfRelaxed";
    case CaseKind::P2MainThirdRelaxed:
        return "P2MainThirdRelaxed";
    case CaseKind::M11:
        return "M11";
    case CaseKind::M12Generic:
        return "M12Generic";
    case CaseKind::M12HalfRelaxed:
        return "M12HalfRelaxed";
    case CaseKind::M21Generic:
        return "M21Generic";
    case CaseKind::M21HalfRelaxed:
        return "M21HalfRelaxed";
    case CaseKind::M21ThirdQuartet:
        return "M21ThirdQuartet";
    case CaseKind::M22:
        return "M22";
    case CaseKind::Unlisted:
        return "Unlisted";
    }
    return "Unlisted";
}

CaseLabel classify(const Rational &m1, const Rational &m2, ParabolicName p) {
    if (m1 < 0 || m2 < 0)
        return {};
    switch (p) {
    case ParabolicName::P0:
        return classify_p0(m1, m2);
    case ParabolicName::P1:
        return classify_p1(m1, m2);
    case ParabolicName::P2:
        return classify_p2(m1, m2);
    }
    return {};
}

std::string_view to_string(SpecialKind kind) {
    switch (kind) {
    case SpecialKind::FiniteDim:
        return "FiniteDim";
    case SpecialKind::DiscreteSeriesD0:
        return "DiscreteSeriesD0";
    case SpecialKind::DiscreteSeriesD1:
        return "DiscreteSeriesD1";
    case SpecialKind::DiscreteSeriesD2:
        return "DiscreteSeriesD2";
    case SpecialKind::SubrepDPrime0:
        return "SubrepDPrime0";
    case SpecialKind::SubrepDPrime1:
        return "SubrepDPrime1";
    }
    return "?";
}

const MultipletNode &MultipletGraph::node(std::string_view id) const {
    const MultipletNode *n = find_node(nodes, id);
    if (!n)
        throw std::out_of_range("no node '" + std::string(id) + "' in multiplet");
    return *n;
}

const Component &MultipletGraph::component_of(std::string_view id) const {
    for (const auto &c : components)
        if (contains(c, id))
            return c;
    throw std::out_of_range("no node '" + std::string(id) + "' in multiplet");
}

std::vector<SpecialSubspace> special_subspaces(const MultipletGraph &graph) {
    std::vector<SpecialSubspace> out;
    const MultipletNode &start = graph.node("");
    const MultipletNode &conj = graph.node(ks_partner_id(graph.nodes, ""));
    const Rational d_conj = conformal_weight(conj.signature.c);

    std::optional<SpecialKind> kind;
    switch (graph.case_label.kind) {
    case CaseKind::MainMinimal:
        out.push_back({start.id, SpecialKind::FiniteDim, conformal_weight(start.signature.c),
                       weyl_dim(start.labels)});
        kind = SpecialKind::DiscreteSeriesD0;
        break;
    case CaseKind::ReducedM1:
    case CaseKind::M11:
        kind = SpecialKind::DiscreteSeriesD1;
        break;
    case CaseKind::ReducedM2:
    case CaseKind::M22:
        kind = SpecialKind::DiscreteSeriesD2;
        break;
    case CaseKind::P2MainHalfRelaxed:
        kind = SpecialKind::SubrepDPrime0;
        break;
    case CaseKind::M21HalfRelaxed:
        kind = SpecialKind::SubrepDPrime1;
        break;
    default:
        break;
    }
    if (kind)
        out.push_back({conj.id, *kind, d_conj, std::nullopt});
    return out;
}

MultipletGraph build(const Rational &m1, const Rational &m2, ParabolicName p) {
    MultipletGraph g;
    g.m1 = m1;
    g.m2 = m2;
    g.parabolic = p;
    g.nodes = orbit({m1, m2});

    std::vector<Edge> diff = classify_edges(embedding_graph(g.nodes), catalog()[p]);
    const std::vector<Edge> ks = ks_pairs(g.nodes);
    for (const auto &deg : ks_degenerations(g.nodes, ks)) {
        for (auto &e : diff)
            if (e.from == deg.from && e.to == deg.to && e.root == deg.root && e.degree == deg.degree)
                e.kind = EdgeKind::DegeneratedKS;
    }

    std::vector<Edge> kept;
    std::copy_if(diff.begin(), diff.end(), std::back_inserter(kept), [](const Edge &e) { return e.retained; });
    for (const auto &r : transitive_reduction(kept))
        for (auto &e : diff)
            if (e.from == r.from && e.to == r.to && e.root == r.root)
                e.reduced = true;

    g.edges = std::move(diff);
    g.edges.insert(g.edges.end(), ks.begin(), ks.end());

    g.case_label = classify(m1, m2, p);
    g.components = find_components(g.nodes, g.edges);
    tag_components(g.components, p, g.case_label);
    g.specials = special_subspaces(g);
    return g;
}

} // namespace g2ido

#include "g2ido/bgg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace g2ido {

std::vector<ReduciblePoint> reducibility_points(const WeightLabels &labels) {
    std::vector<ReduciblePoint> points;
    for (const auto &beta : g2().positive_roots()) {
        const Rational m = hc_param(labels, beta);
        if (m.is_natural())
            points.push_back({beta, m.num()});
    }
    return points;
}

bool node_order(std::string_view a, std::string_view b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
    case EdgeKind::DiffOp:
        return "DiffOp";
    case EdgeKind::KnappStein:
        return "KnappStein";
    case EdgeKind::DegeneratedKS:
        return "DegeneratedKS";
    }
    return "?";
}

std::vector<MultipletNode> orbit(const WeightLabels &start) {
    std::vector<MultipletNode> nodes;
    // elements() is already in (length, word) order, so the first word to
    // reach a label pair is its canonical id.
    for (const auto &w : weyl_group().elements()) {
        const WeightLabels labels = shifted_action(w, start);
        auto it = std::find_if(nodes.begin(), nodes.end(),
                               [&](const MultipletNode &n) { return n.labels == labels; });
        if (it == nodes.end())
            nodes.push_back({w.word, labels, signature_of(labels), {}});
        else
            it->aliases.push_back(w.word);
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const MultipletNode &x, const MultipletNode &y) { return node_order(x.id, y.id); });
    return nodes;
}

const MultipletNode *find_node(std::span<const MultipletNode> nodes, std::string_view id) {
    for (const auto &n : nodes)
        if (n.id == id)
            return &n;
    return nullptr;
}

const MultipletNode *find_node(std::span<const MultipletNode> nodes, const WeightLabels &labels) {
    for (const auto &n : nodes)
        if (n.labels == labels)
            return &n;
    return nullptr;
}

std::vector<Edge> embedding_graph(std::span<const MultipletNode> nodes) {
    const auto &group = weyl_group();
    std::vector<Edge> edges;
    for (const auto &u : nodes) {
        const WeylElement &w_inv = group.inverse(group.from_word(u.id));
        for (const auto &beta : g2().positive_roots()) {
            const Rational m = hc_param(u.labels, beta);
            if (!m.is_natural())
                continue;
            const WeightLabels target = subtract_root_multiple(u.labels, m, beta);
            const MultipletNode *v = find_node(nodes, target);
            if (!v)
                continue;
            const auto fam = g2().find(group.act(w_inv, beta.simple_coords()));
            Edge e;
            e.from = u.id;
            e.to = v->id;
            e.kind = EdgeKind::DiffOp;
            e.root = beta.index();
            e.degree = m.num();
            e.family = fam ? fam->index() : 0;
            edges.push_back(std::move(e));
        }
    }
    return edges;
}

std::vector<Edge> transitive_reduction(std::span<const Edge> edges) {
    std::map<std::string, std::set<std::string>> succ;
    std::set<std::string> vertices;
    for (const auto &e : edges) {
        if (!e.is_differential())
            continue;
        succ[e.from].insert(e.to);
        vertices.insert(e.from);
        vertices.insert(e.to);
    }

    // Kahn's algorithm, only to reject cycles.
    std::map<std::string, int> indegree;
    for (const auto &v : vertices)
        indegree[v] = 0;
    for (const auto &[from, targets] : succ)
        for (const auto &t : targets)
            ++indegree[t];
    std::vector<std::string> queue;
    for (const auto &[v, d] : indegree)
        if (d == 0)
            queue.push_back(v);
    std::size_t visited = 0;
    while (!queue.empty()) {
        const std::string v = queue.back();
        queue.pop_back();
        ++visited;
        for (const auto &t : succ[v])
            if (--indegree[t] == 0)
                queue.push_back(t);
    }
    if (visited != vertices.size())
        throw CycleError("differential edges contain a cycle");

    auto reachable_avoiding_direct = [&](const std::string &from, const std::string &to) {
        // is `to` reachable from `from` through some intermediate vertex?
        std::vector<std::string> stack;
        std::set<std::string> seen;
        for (const auto &mid : succ[from])
            if (mid != to)
                stack.push_back(mid);
        while (!stack.empty()) {
            const std::string v = stack.back();
            stack.pop_back();
            if (v == to)
                return true;
            if (!seen.insert(v).second)
                continue;
            for (const auto &t : succ[v])
                stack.push_back(t);
        }
        return false;
    };

    std::vector<Edge> out;
    for (const auto &e : edges) {
        if (e.is_differential() && reachable_avoiding_direct(e.from, e.to))
            continue;
        out.push_back(e);
    }
    return out;
}

} // namespace g2ido

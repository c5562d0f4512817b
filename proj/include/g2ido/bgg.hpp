#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g2ido/rootsys.hpp"
#include "g2ido/weights.hpp"

namespace g2ido {

/// Positive root beta with (Lambda + rho, beta^vee) = degree in N.
struct ReduciblePoint {
    Root root;
    std::int64_t degree;
};

std::vector<ReduciblePoint> reducibility_points(const WeightLabels &labels);

/// One ER / GVM of a multiplet. The id is the canonical Weyl word w with
/// labels = w . Lambda_0; other words reaching the same labels are aliases.
struct MultipletNode {
    std::string id;
    WeightLabels labels;
    Signature signature;
    std::vector<std::string> aliases;

    /// Number of Weyl elements fixing the start labels.
    std::size_t stabilizer_size() const noexcept { return 1 + aliases.size(); }
};

/// Canonical node order: by word length, then lexicographically.
bool node_order(std::string_view a, std::string_view b);

enum class EdgeKind { DiffOp, KnappStein, DegeneratedKS };

std::string_view to_string(EdgeKind kind);

struct Edge {
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::DiffOp;
    /// Positive root index 1..6 for DiffOp / DegeneratedKS, 0 for KnappStein.
    int root = 0;
    std::int64_t degree = 0;

    /// Root gamma of the starting weight with |m_gamma(Lambda_0)| = degree,
    /// read off as w^{-1} beta for the source word w.
    int family = 0;
    /// beta lies in the M-compact root set of the inducing parabolic.
    bool m_compact = false;
    /// Present in the intertwining diagram for the inducing parabolic.
    bool retained = true;
    /// Survives transitive reduction (always true for KnappStein).
    bool reduced = false;

    bool is_differential() const noexcept { return kind != EdgeKind::KnappStein; }
    friend bool operator==(const Edge &, const Edge &) = default;
};

class CycleError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// All Weyl images of the start labels, merged where they coincide, sorted
/// canonically.
std::vector<MultipletNode> orbit(const WeightLabels &start);

const MultipletNode *find_node(std::span<const MultipletNode> nodes, std::string_view id);
const MultipletNode *find_node(std::span<const MultipletNode> nodes, const WeightLabels &labels);

/// Every BGG embedding u -> u - m beta between orbit members with
/// m = m_beta(u) in N.
std::vector<Edge> embedding_graph(std::span<const MultipletNode> nodes);

/// Drops each differential edge u -> v for which another directed path from
/// u to v exists. Throws CycleError if the differential edges are cyclic.
/// Knapp-Stein edges are passed through untouched.
std::vector<Edge> transitive_reduction(std::span<const Edge> edges);

} // namespace g2ido

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2ido/bgg.hpp"

namespace g2ido {

enum class ParabolicName { P0, P1, P2 };

std::string_view to_string(ParabolicName name);
std::optional<ParabolicName> parse_parabolic(std::string_view text);

struct ParabolicDesc {
    ParabolicName name;
    /// Roots of g^C that are compact for the Levi factor m (by index).
    std::vector<int> m_compact_roots;
    int dim_a;
    int dim_n;
    std::string levi_description;
    /// Simple root whose parameter is integral for every main multiplet
    /// induced from this parabolic (a2 for P1, a1 for P2; 0 for P0).
    int split_root;
    /// m_k-compact root when t_k is taken inside the compact Cartan of k
    /// (a1+a2 for P1, a2+3a1 for P2). Informational only.
    int compact_cartan_root;
};

struct ParabolicCatalog {
    std::array<ParabolicDesc, 3> parabolics;
    int dim_n_tilde0 = 6;
    int dim_m0 = 0;
    /// |W(g)| / |W(k)|
    int discrete_series_count = 3;

    const ParabolicDesc &operator[](ParabolicName name) const {
        return parabolics[static_cast<int>(name)];
    }
};

const ParabolicCatalog &catalog();

/// |W(g)| / |W(k)| recomputed from the two orthogonal K-compact roots.
int discrete_series_count_from_roots();

struct NilradicalReport {
    std::vector<int> roots;
    std::vector<int> derived_roots;
    std::vector<int> center_roots;
    int nilpotency_step = 0;
};

/// Root content of n for the parabolic, with [n, n], the center and the
/// length of the lower central series all obtained from root addition.
NilradicalReport nilradical(const ParabolicDesc &p);

/// Sets m_compact and retained on every differential edge.
///
/// P0 keeps every BGG embedding. For P1 and P2 an edge is kept when its
/// degree comes from the split root's parameter, or when it runs along a
/// simple root (so the node's own Dynkin label is integral); embeddings that
/// come from other integral parameters along non-simple roots are not part
/// of the GVM diagram.
std::vector<Edge> classify_edges(std::span<const Edge> edges, const ParabolicDesc &p);

/// Id of the node whose signature is the negation of `id`'s.
std::string ks_partner_id(std::span<const MultipletNode> nodes, std::string_view id);

/// One KnappStein edge per partner pair, oriented from the canonically
/// earlier node. Throws std::logic_error if some node has no partner.
std::vector<Edge> ks_pairs(std::span<const MultipletNode> nodes);

/// For each pair whose label difference is k beta (k in N, beta > 0), a
/// DegeneratedKS edge from the higher weight to the lower one.
std::vector<Edge> ks_degenerations(std::span<const MultipletNode> nodes, std::span<const Edge> ks);

} // namespace g2ido

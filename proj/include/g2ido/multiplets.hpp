#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2ido/bgg.hpp"
#include "g2ido/parabolic.hpp"

namespace g2ido {

enum class CaseKind {
    MainMinimal,
    ReducedM1,
    ReducedM2,
    RemarkDoublet,
    P1MainGeneric,
    P1MainHalfRelaxed,
    P2MainGeneric,
    P2MainHalfRelaxed,
    P2MainThirdRelaxed,
    M11,
    M12Generic,
    M12HalfRelaxed,
    M21Generic,
    M21HalfRelaxed,
    M21ThirdQuartet,
    M22,
    Unlisted,
};

struct CaseLabel {
    CaseKind kind = CaseKind::Unlisted;
    /// Root index for RemarkDoublet, 0 otherwise.
    int k = 0;

    /// "MainMinimal", "RemarkDoublet(5)", ...
    std::string name() const;
    friend bool operator==(const CaseLabel &, const CaseLabel &) = default;
};

/// Which tabulated family (m1, m2) falls into when inducing from p.
///
/// Reduced cases (a zero parameter) are tested first, then membership in N,
/// then N/2 \ N, then N/3 \ (N u N/2). Negative parameters never match.
CaseLabel classify(const Rational &m1, const Rational &m2, ParabolicName p);

enum class SpecialKind {
    FiniteDim,
    DiscreteSeriesD0,
    DiscreteSeriesD1,
    DiscreteSeriesD2,
    SubrepDPrime0,
    SubrepDPrime1,
};

std::string_view to_string(SpecialKind kind);

struct SpecialSubspace {
    std::string node;
    SpecialKind kind;
    Rational d;
    /// Only for FiniteDim.
    std::optional<Rational> dim;
};

struct Component {
    /// A1/B1/C1, A2/B2/C2, chain, quartet or none.
    std::string tag;
    std::vector<std::string> nodes;
};

struct MultipletGraph {
    Rational m1;
    Rational m2;
    ParabolicName parabolic = ParabolicName::P0;
    std::vector<MultipletNode> nodes;
    /// Differential edges in node order, then Knapp-Stein edges.
    std::vector<Edge> edges;
    CaseLabel case_label;
    std::vector<Component> components;
    std::vector<SpecialSubspace> specials;

    const MultipletNode &node(std::string_view id) const;
    /// Component containing the node; throws if the id is unknown.
    const Component &component_of(std::string_view id) const;
};

/// orbit -> embeddings -> parabolic filtering -> Knapp-Stein pairs ->
/// degenerations -> components -> special subspaces -> case label.
MultipletGraph build(const Rational &m1, const Rational &m2, ParabolicName p);

std::vector<SpecialSubspace> special_subspaces(const MultipletGraph &graph);

} // namespace g2ido

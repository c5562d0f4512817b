#pragma once

#include <array>
#include <compare>
#include <string>

#include "g2ido/rational.hpp"
#include "g2ido/rootsys.hpp"

namespace g2ido {

/// Dynkin labels of Lambda + rho: n_i = (Lambda + rho, alpha_i^vee). This is
/// the only weight coordinate used in the library; rho never appears alone.
struct WeightLabels {
    Rational n1;
    Rational n2;

    friend bool operator==(const WeightLabels &, const WeightLabels &) = default;
    friend auto operator<=>(const WeightLabels &, const WeightLabels &) = default;
    WeightLabels operator-() const { return {-n1, -n2}; }
    std::string str() const { return "{" + n1.str() + ", " + n2.str() + "}"; }
};

/// Harish-Chandra parameters m_beta = (Lambda + rho, beta^vee), indexed by
/// positive root number.
struct HCParams {
    std::array<Rational, kPositiveRootCount> values;

    const Rational &operator[](int root_index) const { return values.at(root_index - 1); }
    friend bool operator==(const HCParams &, const HCParams &) = default;
};

struct Signature {
    WeightLabels labels;
    Rational c;

    friend bool operator==(const Signature &, const Signature &) = default;
    std::string str() const { return "{" + labels.n1.str() + ", " + labels.n2.str() + "; " + c.str() + "}"; }
};

/// d = 3/2 + c; the trivial representation sits at d = 0.
inline const Rational kConformalOffset{3, 2};

Rational hc_param(const WeightLabels &labels, const Root &beta);
HCParams hc_params(const WeightLabels &labels);

/// w . Lambda, which is linear on Lambda + rho.
WeightLabels shifted_action(const WeylElement &w, const WeightLabels &labels);

/// Labels of Lambda - k beta.
WeightLabels subtract_root_multiple(const WeightLabels &labels, const Rational &k, const Root &beta);

/// c = -(2 n2 + n1) / 2, i.e. minus half the parameter of the highest root.
Rational c_param(const WeightLabels &labels);
Rational conformal_weight(const Rational &c);

Signature signature_of(const WeightLabels &labels);
/// Knapp-Stein partner [n1, n2; c] -> [-n1, -n2; -c].
Signature ks_partner(const Signature &sig);

/// Weyl dimension formula: product of the six parameters over 120.
Rational weyl_dim(const WeightLabels &labels);

} // namespace g2ido

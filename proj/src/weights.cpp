#include "g2ido/weights.hpp"

namespace g2ido {

Rational hc_param(const WeightLabels &labels, const Root &beta) {
    const CorootCoords cv = g2().coroot(beta);
    return cv.c1 * labels.n1 + cv.c2 * labels.n2;
}

HCParams hc_params(const WeightLabels &labels) {
    HCParams p;
    for (const auto &beta : g2().positive_roots())
        p.values[beta.index() - 1] = hc_param(labels, beta);
    return p;
}

WeightLabels shifted_action(const WeylElement &w, const WeightLabels &labels) {
    const auto &m = w.label_matrix;
    return {Rational(m[0][0]) * labels.n1 + Rational(m[0][1]) * labels.n2,
            Rational(m[1][0]) * labels.n1 + Rational(m[1][1]) * labels.n2};
}

WeightLabels subtract_root_multiple(const WeightLabels &labels, const Rational &k, const Root &beta) {
    const auto row = g2().pairing_row(beta);
    return {labels.n1 - k * Rational(row[0]), labels.n2 - k * Rational(row[1])};
}

Rational c_param(const WeightLabels &labels) {
    return -(Rational(2) * labels.n2 + labels.n1) / Rational(2);
}

Rational conformal_weight(const Rational &c) { return kConformalOffset + c; }

Signature signature_of(const WeightLabels &labels) { return {labels, c_param(labels)}; }

Signature ks_partner(const Signature &sig) { return {-sig.labels, -sig.c}; }

Rational weyl_dim(const WeightLabels &labels) {
    Rational product(1);
    for (const auto &m : hc_params(labels).values)
        product *= m;
    return product / Rational(120);
}

} // namespace g2ido

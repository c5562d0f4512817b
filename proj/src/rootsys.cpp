#include "g2ido/rootsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g2ido {

namespace {

constexpr std::array<SimpleCoords, kPositiveRootCount> kPositiveCoords{{
    {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2},
}};

// alpha1 = e1 - e2, alpha2 = -e1 + 2e2 - e3
constexpr std::array<int, 3> kEpsAlpha1{1, -1, 0};
constexpr std::array<int, 3> kEpsAlpha2{-1, 2, -1};

std::string coefficient_term(int c, std::string_view symbol) {
    if (c == 1)
        return std::string(symbol);
    if (c == -1)
        return "-" + std::string(symbol);
    return std::to_string(c) + std::string(symbol);
}

} // namespace

std::string_view to_string(RootLength length) {
    return length == RootLength::Short ? "short" : "long";
}

std::array<int, 3> Root::eps_coords() const {
    std::array<int, 3> e{};
    for (int i = 0; i < 3; ++i)
        e[i] = coords_.a * kEpsAlpha1[i] + coords_.b * kEpsAlpha2[i];
    return e;
}

std::string Root::name() const {
    return (positive_ ? "α" : "-α") + std::to_string(index_);
}

std::string Root::expansion() const {
    std::string out;
    if (coords_.a != 0)
        out += coefficient_term(coords_.a, "α1");
    if (coords_.b != 0) {
        if (!out.empty() && coords_.b > 0)
            out += "+";
        out += coefficient_term(coords_.b, "α2");
    }
    return out.empty() ? "0" : out;
}

RootSystem::RootSystem(const Gram &gram)
    : gram_(gram),
      roots_{Root({1, 0}, 1, true, RootLength::Short), Root({0, 1}, 2, true, RootLength::Short),
             Root({1, 1}, 3, true, RootLength::Short), Root({2, 1}, 4, true, RootLength::Short),
             Root({3, 1}, 5, true, RootLength::Short), Root({3, 2}, 6, true, RootLength::Short)} {
    if (gram[0][1] != gram[1][0])
        throw std::invalid_argument("gram matrix must be symmetric");
    Rational shortest = inner(kPositiveCoords[0], kPositiveCoords[0]);
    for (const auto &c : kPositiveCoords)
        shortest = std::min(shortest, inner(c, c));
    for (int i = 0; i < kPositiveRootCount; ++i) {
        const auto &c = kPositiveCoords[i];
        const RootLength len = inner(c, c) == shortest ? RootLength::Short : RootLength::Long;
        roots_[i] = Root(c, i + 1, true, len);
    }
}

const Root &RootSystem::root(int index) const {
    if (index < 1 || index > kPositiveRootCount)
        throw std::out_of_range("positive root index must be in 1..6");
    return roots_[index - 1];
}

Rational RootSystem::inner(SimpleCoords x, SimpleCoords y) const {
    const std::int64_t v = x.a * (gram_[0][0] * y.a + gram_[0][1] * y.b) +
                           x.b * (gram_[1][0] * y.a + gram_[1][1] * y.b);
    return Rational(v);
}

Rational RootSystem::pairing(SimpleCoords v, const Root &beta) const {
    const Rational norm = inner(beta, beta);
    return Rational(2) * inner(v, beta.simple_coords()) / norm;
}

CorootCoords RootSystem::coroot(const Root &beta) const {
    // beta^vee = 2 beta / (beta, beta), and alpha_i = (alpha_i, alpha_i)/2 * alpha_i^vee
    const Rational norm = inner(beta, beta);
    const auto &c = beta.simple_coords();
    return {Rational(c.a) * inner(kPositiveCoords[0], kPositiveCoords[0]) / norm,
            Rational(c.b) * inner(kPositiveCoords[1], kPositiveCoords[1]) / norm};
}

std::array<int, 2> RootSystem::pairing_row(const Root &beta) const {
    std::array<int, 2> row{};
    for (int i = 0; i < 2; ++i) {
        const Rational p = pairing(beta.simple_coords(), roots_[i]);
        if (!p.is_integer())
            throw std::domain_error("non-integral pairing for " + beta.name());
        row[i] = static_cast<int>(p.num());
    }
    return row;
}

Mat2 RootSystem::cartan_matrix() const {
    Mat2 a{};
    for (int i = 0; i < 2; ++i) {
        const auto row = pairing_row(roots_[i]);
        // row[j] = (alpha_i, alpha_j^vee) = a_ji
        for (int j = 0; j < 2; ++j)
            a[j][i] = row[j];
    }
    return a;
}

SimpleCoords RootSystem::reflect(const Root &beta, SimpleCoords v) const {
    const Rational k = pairing(v, beta);
    if (!k.is_integer())
        throw std::domain_error("reflection leaves the root lattice");
    const auto n = static_cast<int>(k.num());
    return {v.a - n * beta.simple_coords().a, v.b - n * beta.simple_coords().b};
}

std::optional<Root> RootSystem::find(SimpleCoords coords) const {
    for (const auto &r : roots_) {
        if (r.simple_coords() == coords)
            return r;
        if (r.simple_coords() == -coords)
            return r.negated();
    }
    return std::nullopt;
}

std::optional<Root> RootSystem::root_sum(const Root &beta, const Root &gamma) const {
    auto r = find(beta.simple_coords() + gamma.simple_coords());
    if (r && r->positive())
        return r;
    return std::nullopt;
}

const RootSystem &g2() {
    static const RootSystem system;
    return system;
}

RootSystem build_g2() { return RootSystem(); }

Mat2 multiply(const Mat2 &x, const Mat2 &y) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

int determinant(const Mat2 &m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

WeylGroup::WeylGroup(const RootSystem &rs) {
    const Mat2 a = rs.cartan_matrix();
    for (int i = 0; i < 2; ++i) {
        // labels: n_j -> n_j - n_i (alpha_i, alpha_j^vee) = n_j - n_i a_ji
        Mat2 lab{{{1, 0}, {0, 1}}};
        for (int j = 0; j < 2; ++j)
            lab[j][i] -= a[j][i];
        simple_labels_[i] = lab;
        // roots: v -> v - (v, alpha_i^vee) alpha_i, with (alpha_k, alpha_i^vee) = a_ik
        Mat2 rt{{{1, 0}, {0, 1}}};
        for (int k = 0; k < 2; ++k)
            rt[i][k] -= a[i][k];
        simple_roots_[i] = rt;
    }

    // Breadth-first over words in (length, lex) order; the first word reaching
    // a matrix is its canonical name. Words longer than 7 add nothing for any
    // finite rank-2 group with these relations, and we require exactly 12.
    std::vector<std::string> frontier{""};
    std::map<Mat2, int> seen;
    const Mat2 id{{{1, 0}, {0, 1}}};
    elements_.push_back({"", id, id});
    seen[id] = 0;
    for (int len = 1; len <= 7; ++len) {
        std::vector<std::string> next;
        for (const auto &w : frontier)
            for (char letter : {'1', '2'})
                next.push_back(w + letter);
        std::sort(next.begin(), next.end());
        std::vector<std::string> kept;
        for (const auto &w : next) {
            Mat2 lab = id, rt = id;
            for (char ch : w) {
                lab = multiply(lab, simple_labels_[ch - '1']);
                rt = multiply(rt, simple_roots_[ch - '1']);
            }
            if (seen.contains(lab))
                continue;
            seen[lab] = static_cast<int>(elements_.size());
            elements_.push_back({w, lab, rt});
            kept.push_back(w);
        }
        frontier = std::move(kept);
        if (frontier.empty())
            break;
    }
    if (elements_.size() != static_cast<std::size_t>(kWeylOrder))
        throw std::logic_error("Weyl group generation did not close at order 12");
}

const WeylElement &WeylGroup::simple(int i) const {
    if (i != 1 && i != 2)
        throw std::out_of_range("simple reflection index must be 1 or 2");
    return *find(simple_labels_[i - 1]);
}

const WeylElement *WeylGroup::find(const Mat2 &label_matrix) const {
    for (const auto &w : elements_)
        if (w.label_matrix == label_matrix)
            return &w;
    return nullptr;
}

const WeylElement &WeylGroup::compose(const WeylElement &a, const WeylElement &b) const {
    const WeylElement *r = find(multiply(a.label_matrix, b.label_matrix));
    if (!r)
        throw std::logic_error("Weyl group not closed under composition");
    return *r;
}

const WeylElement &WeylGroup::inverse(const WeylElement &w) const {
    for (const auto &u : elements_)
        if (compose(u, w).word.empty())
            return u;
    throw std::logic_error("Weyl element without inverse");
}

const WeylElement &WeylGroup::from_word(std::string_view word) const {
    Mat2 lab{{{1, 0}, {0, 1}}};
    for (char ch : word) {
        if (ch != '1' && ch != '2')
            throw std::invalid_argument("Weyl word letters must be 1 or 2");
        lab = multiply(lab, simple_labels_[ch - '1']);
    }
    return *find(lab);
}

SimpleCoords WeylGroup::act(const WeylElement &w, SimpleCoords v) const {
    const auto &m = w.root_matrix;
    return {m[0][0] * v.a + m[0][1] * v.b, m[1][0] * v.a + m[1][1] * v.b};
}

const WeylGroup &weyl_group() {
    static const WeylGroup group(g2());
    return group;
}

} // namespace g2ido

#pragma once

// Root system of G2 in simple-root coordinates, with alpha1 short and alpha2
// long. Positive roots are numbered
//   a1 = a1, a2 = a2, a3 = a1+a2, a4 = 2a1+a2, a5 = 3a1+a2, a6 = 3a1+2a2.

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2ido/rational.hpp"

namespace g2ido {

inline constexpr int kPositiveRootCount = 6;
inline constexpr int kWeylOrder = 12;

/// Coefficients (a, b) of a*alpha1 + b*alpha2.
struct SimpleCoords {
    int a = 0;
    int b = 0;

    friend bool operator==(const SimpleCoords &, const SimpleCoords &) = default;
    friend auto operator<=>(const SimpleCoords &, const SimpleCoords &) = default;
    SimpleCoords operator-() const { return {-a, -b}; }
    friend SimpleCoords operator+(SimpleCoords x, SimpleCoords y) { return {x.a + y.a, x.b + y.b}; }
};

enum class RootLength { Short, Long };

std::string_view to_string(RootLength length);

class Root {
  public:
    Root(SimpleCoords coords, int index, bool positive, RootLength length)
        : coords_(coords), index_(index), positive_(positive), length_(length) {}

    const SimpleCoords &simple_coords() const noexcept { return coords_; }
    /// 1..6, shared by a positive root and its negative.
    int index() const noexcept { return index_; }
    bool positive() const noexcept { return positive_; }
    RootLength length() const noexcept { return length_; }
    bool is_simple() const noexcept { return index_ <= 2; }

    /// Orthonormal-basis view; derived from the simple coordinates.
    std::array<int, 3> eps_coords() const;
    Root negated() const { return Root(-coords_, index_, !positive_, length_); }

    /// "α4", or "-α4" for a negative root.
    std::string name() const;
    /// "2α1+α2"
    std::string expansion() const;

    friend bool operator==(const Root &x, const Root &y) noexcept {
        return x.coords_ == y.coords_;
    }

  private:
    SimpleCoords coords_;
    int index_;
    bool positive_;
    RootLength length_;
};

/// Symmetric form on simple-root coordinates.
using Gram = std::array<std::array<std::int64_t, 2>, 2>;
using Mat2 = std::array<std::array<int, 2>, 2>;

inline constexpr Gram kG2Gram{{{2, -3}, {-3, 6}}};

/// beta^vee written as c1*alpha1^vee + c2*alpha2^vee.
struct CorootCoords {
    Rational c1;
    Rational c2;
    friend bool operator==(const CorootCoords &, const CorootCoords &) = default;
};

class RootSystem {
  public:
    /// The root set is always the G2 list above; the form is injectable so
    /// that consistency checks can be run against a corrupted one.
    explicit RootSystem(const Gram &gram = kG2Gram);

    const Gram &gram() const noexcept { return gram_; }
    std::span<const Root, kPositiveRootCount> positive_roots() const noexcept { return roots_; }
    /// Positive root by its index 1..6.
    const Root &root(int index) const;

    Rational inner(SimpleCoords x, SimpleCoords y) const;
    Rational inner(const Root &x, const Root &y) const {
        return inner(x.simple_coords(), y.simple_coords());
    }
    /// (v, beta^vee) = 2 (v, beta) / (beta, beta)
    Rational pairing(SimpleCoords v, const Root &beta) const;

    CorootCoords coroot(const Root &beta) const;
    /// ((beta, alpha1^vee), (beta, alpha2^vee)); throws std::domain_error if
    /// the form makes either entry fractional.
    std::array<int, 2> pairing_row(const Root &beta) const;
    /// a_ij = (alpha_j, alpha_i^vee), so G2 gives [[2, -3], [-1, 2]].
    Mat2 cartan_matrix() const;

    /// v - (v, beta^vee) beta
    SimpleCoords reflect(const Root &beta, SimpleCoords v) const;

    /// Positive or negative root with these coordinates.
    std::optional<Root> find(SimpleCoords coords) const;
    /// Positive root equal to beta + gamma, if any.
    std::optional<Root> root_sum(const Root &beta, const Root &gamma) const;

  private:
    Gram gram_;
    std::array<Root, kPositiveRootCount> roots_;
};

/// Canonical G2 system shared by the rest of the library.
const RootSystem &g2();
RootSystem build_g2();

/// Element of the Weyl group. `word` is the lexicographically smallest
/// shortest word, letters in composition order: "12" is s1 after s2.
struct WeylElement {
    std::string word;
    Mat2 label_matrix; // acts on Dynkin-label columns (n1, n2)
    Mat2 root_matrix;  // acts on simple-root coordinate columns (a, b)

    int length() const noexcept { return static_cast<int>(word.size()); }
};

class WeylGroup {
  public:
    explicit WeylGroup(const RootSystem &rs);

    /// Sorted by (length, word).
    std::span<const WeylElement> elements() const noexcept { return elements_; }
    const WeylElement &identity() const { return elements_.front(); }
    const WeylElement &longest() const { return elements_.back(); }
    const WeylElement &simple(int i) const;

    /// a composed with b (b applied first).
    const WeylElement &compose(const WeylElement &a, const WeylElement &b) const;
    const WeylElement &inverse(const WeylElement &w) const;
    /// Canonical element for any word over {1, 2}; throws on other letters.
    const WeylElement &from_word(std::string_view word) const;
    const WeylElement *find(const Mat2 &label_matrix) const;

    SimpleCoords act(const WeylElement &w, SimpleCoords v) const;

  private:
    std::vector<WeylElement> elements_;
    Mat2 simple_labels_[2];
    Mat2 simple_roots_[2];
};

const WeylGroup &weyl_group();

Mat2 multiply(const Mat2 &x, const Mat2 &y);
int determinant(const Mat2 &m);

} // namespace g2ido

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rootsmith {

/// Coefficient in the simple-root (or simple-coroot) basis.
using Coord = std::int64_t;

/// Integer coordinate vector in the simple-root basis. Coordinates of
/// coroots are understood in the simple-coroot basis.
using RootCoords = std::vector<Coord>;

/// Index into the canonical root table of a RootSystem.
using RootIndex = std::int32_t;

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

struct CartanType {
  Family family;
  int rank;

  /// Admissible ranks: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F 4, G 2.
  bool admissible() const;

  /// Parse a label like "B2" or "E7". Throws std::invalid_argument.
  static CartanType parse(std::string_view label);
  std::string label() const;

  bool operator==(const CartanType&) const = default;
};

/// A crystallographic root system in simple-root coordinates, with an
/// integer Gram form gram = diag(d) * cartan. The root table is canonically
/// ordered: positive roots by (height, lexicographic), then the negatives
/// mirrored in the same order, so that index(-roots[k]) == k + positive_count.
class RootSystem {
 public:
  static RootSystem build(CartanType t);
  static RootSystem build(std::string_view label) {
    return build(CartanType::parse(label));
  }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  /// cartan[i][j] = <alpha_j, alpha_i^vee> (rows indexed by the coroot).
  const std::vector<std::vector<Coord>>& cartan() const { return cartan_; }
  /// Coprime positive symmetrizers; gram[i][j] = d[i] * cartan[i][j].
  const std::vector<Coord>& symmetrizers() const { return d_; }
  const std::vector<std::vector<Coord>>& gram() const { return gram_; }

  const std::vector<RootCoords>& roots() const { return roots_; }
  std::size_t root_count() const { return roots_.size(); }
  RootIndex positive_count() const { return positive_count_; }
  std::uint64_t weyl_order() const { return weyl_order_; }

  const RootCoords& root(RootIndex i) const { return roots_.at(i); }
  Coord norm(RootIndex i) const { return norms_.at(i); }

  /// x^T * gram * y. Throws std::invalid_argument on length mismatch.
  Coord inner(const RootCoords& x, const RootCoords& y) const;
  Coord inner(RootIndex a, RootIndex b) const {
    return inner_table_[static_cast<std::size_t>(a) * roots_.size() + b];
  }

  /// <beta, alpha^vee> = 2(alpha|beta)/(alpha|alpha); always an integer for
  /// beta in the root lattice.
  Coord cartan_pairing(const RootCoords& beta, RootIndex alpha) const;
  Coord pairing(RootIndex alpha, RootIndex beta) const {
    return pairing_table_[static_cast<std::size_t>(alpha) * roots_.size() +
                          beta];
  }

  /// s_alpha(v) = v - <v, alpha^vee> alpha.
  RootCoords reflect(RootIndex alpha, const RootCoords& v) const;
  RootIndex reflect_root(RootIndex alpha, RootIndex beta) const {
    return refl_table_[static_cast<std::size_t>(alpha) * roots_.size() + beta];
  }

  /// Coordinates of alpha^vee in the simple-coroot basis.
  const RootCoords& coroot(RootIndex alpha) const { return coroots_.at(alpha); }

  bool is_simply_laced() const { return simply_laced_; }

  std::optional<RootIndex> root_index(const RootCoords& coords) const;

  bool is_positive(RootIndex i) const { return i < positive_count_; }
  RootIndex negate(RootIndex i) const {
    return i < positive_count_ ? i + positive_count_ : i - positive_count_;
  }
  RootIndex positive_rep(RootIndex i) const {
    return i < positive_count_ ? i : i - positive_count_;
  }
  /// Index of the simple root alpha_{i+1} (0-based i).
  RootIndex simple_root(int i) const { return simple_idx_.at(i); }

 private:
  RootSystem() = default;

  struct CoordsHash {
    std::size_t operator()(const RootCoords& v) const noexcept;
  };

  CartanType type_{Family::A, 1};
  std::vector<std::vector<Coord>> cartan_;
  std::vector<Coord> d_;
  std::vector<std::vector<Coord>> gram_;
  std::vector<RootCoords> roots_;
  std::vector<RootCoords> coroots_;
  std::vector<Coord> norms_;
  RootIndex positive_count_ = 0;
  std::uint64_t weyl_order_ = 0;
  bool simply_laced_ = true;
  std::vector<RootIndex> simple_idx_;
  std::unordered_map<RootCoords, RootIndex, CoordsHash> index_;
  std::vector<Coord> inner_table_;
  std::vector<Coord> pairing_table_;
  std::vector<RootIndex> refl_table_;
};

}  // namespace rootsmith

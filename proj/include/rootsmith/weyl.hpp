#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rootsmith/root_system.hpp"

namespace rootsmith::weyl {

/// Default size cap for the element-level BFS oracle.
inline constexpr std::uint64_t kDefaultBfsCap = 1000000;

/// A Weyl group element, stored as the permutation it induces on the
/// canonical root table. Value semantics; equality is permutation equality.
struct GroupElement {
  std::vector<RootIndex> perm;

  std::size_t degree() const { return perm.size(); }
  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const { return perm < o.perm; }
};

/// Subset of the root table, by canonical index.
using RootSet = std::set<RootIndex>;

GroupElement identity(const RootSystem& rs);
bool is_identity(const GroupElement& w);

/// The reflection s_alpha as a root permutation; s_alpha == s_{-alpha}.
GroupElement reflection(const RootSystem& rs, RootIndex alpha);

/// (a * b)(x) = a(b(x)). Throws std::invalid_argument on degree mismatch.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& w);

/// Linear extension of w to arbitrary coordinate vectors.
RootCoords apply(const RootSystem& rs, const GroupElement& w,
                 const RootCoords& v);

/// Matrix of w in the simple-root basis; column j holds the coordinates of
/// the image of alpha_{j+1}.
std::vector<std::vector<Coord>> matrix_of(const RootSystem& rs,
                                          const GroupElement& w);

/// Images of the simple roots, the compact serialized form of an element.
std::vector<RootCoords> simple_images(const RootSystem& rs,
                                      const GroupElement& w);

/// Rebuild an element from its simple images. Throws std::invalid_argument
/// if the images do not extend to a permutation of the root table.
GroupElement from_simple_images(const RootSystem& rs,
                                const std::vector<RootCoords>& images);

/// Smallest root subsystem containing r: the fixed point of adding
/// s_alpha(beta) for alpha, beta in the current set (negatives included).
/// Throws std::invalid_argument if r is empty.
RootSet closure_subsystem(const RootSystem& rs, const RootSet& r);

/// True iff the reflections of r generate the full Weyl group, decided by
/// root closure: closure_subsystem(r) equals the whole root system.
bool generates_oracle(const RootSystem& rs, const RootSet& r);

/// Minimal number of reflections whose product is w; computed as the rank
/// of (M - I) over the rationals, M the matrix of w.
int reflection_length(const RootSystem& rs, const GroupElement& w);

/// The positive root gamma with w s_alpha w^{-1} = s_gamma.
RootIndex conjugate_reflection(const RootSystem& rs, const GroupElement& w,
                               RootIndex alpha);

/// Breadth-first closure of gens under composition, identity included.
/// Returns nullopt ("overflow") if the subgroup exceeds `cap` elements.
std::optional<std::vector<GroupElement>> group_bfs(
    const RootSystem& rs, const std::vector<GroupElement>& gens,
    std::uint64_t cap = kDefaultBfsCap);

/// Least k >= 1 with w^k = identity.
std::uint64_t element_order(const GroupElement& w);

}  // namespace rootsmith::weyl

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rootsmith/root_system.hpp"
#include "rootsmith/weyl.hpp"

namespace rootsmith::simple_systems {

/// Trace of the obtuse-ification loop. Step k replaced the running root by
/// s_{delta_p[word[k]-1]} applied to it (word entries are 1-based), so the
/// conjugator realizing gamma = w(beta) is the product of those reflections,
/// later letters leftmost.
struct ObtusifyTrace {
  RootIndex gamma = -1;
  RootCoords gamma_coords;
  std::vector<std::size_t> word;
  std::size_t steps = 0;
};

/// Completions of a corank-1 reflection subgroup and their partition under
/// conjugation by that subgroup.
struct OrbitReport {
  std::vector<RootIndex> completions;
  std::vector<std::vector<RootIndex>> orbits;

  std::size_t orbit_count() const { return orbits.size(); }
};

/// True iff |r| = n, all distinct pairs are obtuse ((alpha|beta) <= 0), and
/// the lattice criterion certifies generation; equivalently r is a simple
/// system for the whole root system.
bool is_simple_system(const RootSystem& rs, const weyl::RootSet& r);

/// Whether the reflections labeled by r admit a choice of root signs that
/// is a simple system. Signs are forced along non-orthogonal pairs, so this
/// reduces to a parity propagation plus the lattice criterion.
bool reflections_form_simple_system(const RootSystem& rs,
                                    const weyl::RootSet& r);

/// While some delta_p[j] has positive inner product with the running root,
/// reflect by it (smallest j first) until all pairings are non-positive.
/// Requires delta_p pairwise obtuse and independent, and the reflections of
/// delta_p together with s_beta to generate the full group; throws
/// std::domain_error("does not generate") otherwise. The resulting gamma
/// completes delta_p to a simple system.
ObtusifyTrace obtusify(const RootSystem& rs,
                       const std::vector<RootIndex>& delta_p, RootIndex beta);

/// Same loop with a custom tie-break: pick(k) selects among the k admissible
/// positions (ascending order) at each step.
ObtusifyTrace obtusify(const RootSystem& rs,
                       const std::vector<RootIndex>& delta_p, RootIndex beta,
                       const std::function<std::size_t(std::size_t)>& pick);

/// All positive roots t such that delta_p together with t passes the
/// lattice criterion. Requires delta_p linearly independent.
std::vector<RootIndex> completions(const RootSystem& rs,
                                   const std::vector<RootIndex>& delta_p);

/// Completions plus their partition under conjugation by the subgroup P
/// generated by delta_p's reflections, P enumerated by group_bfs. Throws
/// std::runtime_error if P exceeds the BFS cap.
OrbitReport orbit_partition(const RootSystem& rs,
                            const std::vector<RootIndex>& delta_p,
                            std::uint64_t bfs_cap = weyl::kDefaultBfsCap);

/// An element g of the subgroup generated by rest's reflections with
/// g^{-1} s_{r1} g = s_{t1}. Requires {r1} + rest and {t1} + rest to pass
/// the lattice criterion (std::domain_error otherwise).
weyl::GroupElement find_conjugator(const RootSystem& rs, RootIndex r1,
                                   const std::vector<RootIndex>& rest,
                                   RootIndex t1);

/// True iff the rank-(n-1) reflection subgroup spanned by delta_p admits a
/// completing reflection, i.e. completions(delta_p) is non-empty. Throws
/// std::invalid_argument if delta_p does not have rank n-1.
bool is_parabolic_corank1(const RootSystem& rs,
                          const std::vector<RootIndex>& delta_p);

/// Simple system of a root subsystem (as produced by closure_subsystem):
/// the indecomposable elements of its positive half, ascending.
std::vector<RootIndex> simple_system_of(const RootSystem& rs,
                                        const weyl::RootSet& subsystem);

}  // namespace rootsmith::simple_systems

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rootsmith/root_system.hpp"
#include "rootsmith/weyl.hpp"

namespace rootsmith::quasicox {

/// Ordered tuple of reflections, each labeled by its positive root index.
struct Factorization {
  std::vector<RootIndex> refs;

  std::size_t length() const { return refs.size(); }
  bool operator==(const Factorization&) const = default;
};

/// Outcome of the root/coroot lattice generation test. An absent index
/// means the corresponding span is rank-deficient.
struct GenerationVerdict {
  bool generates = false;
  std::optional<std::int64_t> root_span_index;
  std::optional<std::int64_t> coroot_span_index;
};

/// Coordinate matrices of r (roots) and r^vee (coroots): generates is true
/// iff both integer spans are all of Z^n, i.e. both indices equal 1.
GenerationVerdict generates_lattice_criterion(const RootSystem& rs,
                                              const weyl::RootSet& r);

/// True iff |r| = n and both coordinate matrices are unimodular bases.
bool is_minimal_generating(const RootSystem& rs, const weyl::RootSet& r);

weyl::GroupElement product(const RootSystem& rs, const Factorization& f);

/// Visit reduced reflection factorizations of w in depth-first order,
/// candidates in ascending root-index order at each branch. Stops early when
/// `visit` returns true; returns whether any visit did.
bool visit_reduced_factorizations(
    const RootSystem& rs, const weyl::GroupElement& w,
    const std::function<bool(const Factorization&)>& visit);

/// First `limit` reduced factorizations of w in the deterministic order.
std::vector<Factorization> reduced_factorizations(const RootSystem& rs,
                                                  const weyl::GroupElement& w,
                                                  std::size_t limit);

/// True iff w has full reflection length n and some reduced factorization
/// whose root set passes the lattice criterion.
bool is_quasi_coxeter(const RootSystem& rs, const weyl::GroupElement& w);

/// True iff some reduced factorization of w has a simple system as its
/// root set, i.e. w is a product of a simple system in some order.
bool is_coxeter(const RootSystem& rs, const weyl::GroupElement& w);

enum class HurwitzDir { Left, Right };

/// Braid move at position i (1-based, 1 <= i < length): the right move sends
/// (.., t_i, t_{i+1}, ..) to (.., t_{i+1}, t_{i+1} t_i t_{i+1}, ..); the left
/// move is its inverse. The product is unchanged.
Factorization hurwitz_move(const RootSystem& rs, const Factorization& f,
                           std::size_t i, HurwitzDir dir);

/// True iff the graph on r with edges {alpha, beta} for (alpha|beta) != 0,
/// alpha != beta, contains a cycle.
bool factorization_graph_has_cycle(const RootSystem& rs,
                                   const weyl::RootSet& r);

}  // namespace rootsmith::quasicox

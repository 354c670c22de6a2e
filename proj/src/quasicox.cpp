#include "rootsmith/quasicox.hpp"

#include <stdexcept>

#include "rootsmith/lattice.hpp"
#include "rootsmith/simple_systems.hpp"

namespace rootsmith::quasicox {

namespace {

using lattice::IntMatrix;

IntMatrix coord_matrix(const RootSystem& rs, const weyl::RootSet& r,
                       bool coroots) {
  IntMatrix m(r.size(), rs.rank());
  std::size_t i = 0;
  for (const RootIndex idx : r) {
    const RootCoords& v = coroots ? rs.coroot(idx) : rs.root(idx);
    for (int j = 0; j < rs.rank(); ++j) m(i, j) = v[j];
    ++i;
  }
  return m;
}

std::optional<std::int64_t> span_index(const RootSystem& rs, IntMatrix m) {
  const auto h = lattice::hnf(m);
  if (h.rank < static_cast<std::size_t>(rs.rank())) return std::nullopt;
  const lattice::Int idx = lattice::lattice_index(
      m, IntMatrix::identity(static_cast<std::size_t>(rs.rank())));
  return static_cast<std::int64_t>(idx);
}

bool dfs_factorizations(const RootSystem& rs, const weyl::GroupElement& rest,
                        int remaining, Factorization& prefix,
                        const std::function<bool(const Factorization&)>& visit) {
  if (remaining == 0) return visit(prefix);
  for (RootIndex t = 0; t < rs.positive_count(); ++t) {
    const weyl::GroupElement next = weyl::compose(weyl::reflection(rs, t), rest);
    if (weyl::reflection_length(rs, next) != remaining - 1) continue;
    prefix.refs.push_back(t);
    if (dfs_factorizations(rs, next, remaining - 1, prefix, visit)) return true;
    prefix.refs.pop_back();
  }
  return false;
}

}  // namespace

GenerationVerdict generates_lattice_criterion(const RootSystem& rs,
                                              const weyl::RootSet& r) {
  if (r.empty()) throw std::invalid_argument("empty root subset");
  GenerationVerdict v;
  v.root_span_index = span_index(rs, coord_matrix(rs, r, false));
  v.coroot_span_index = span_index(rs, coord_matrix(rs, r, true));
  v.generates = v.root_span_index == 1 && v.coroot_span_index == 1;
  return v;
}

bool is_minimal_generating(const RootSystem& rs, const weyl::RootSet& r) {
  if (r.empty()) throw std::invalid_argument("empty root subset");
  if (r.size() != static_cast<std::size_t>(rs.rank())) return false;
  return lattice::is_unimodular_basis(coord_matrix(rs, r, false)) &&
         lattice::is_unimodular_basis(coord_matrix(rs, r, true));
}

weyl::GroupElement product(const RootSystem& rs, const Factorization& f) {
  weyl::GroupElement acc = weyl::identity(rs);
  for (const RootIndex t : f.refs)
    acc = weyl::compose(acc, weyl::reflection(rs, t));
  return acc;
}

bool visit_reduced_factorizations(
    const RootSystem& rs, const weyl::GroupElement& w,
    const std::function<bool(const Factorization&)>& visit) {
  Factorization prefix;
  return dfs_factorizations(rs, w, weyl::reflection_length(rs, w), prefix,
                            visit);
}

std::vector<Factorization> reduced_factorizations(const RootSystem& rs,
                                                  const weyl::GroupElement& w,
                                                  std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("limit must be positive");
  std::vector<Factorization> out;
  visit_reduced_factorizations(rs, w, [&](const Factorization& f) {
    out.push_back(f);
    return out.size() >= limit;
  });
  return out;
}

bool is_quasi_coxeter(const RootSystem& rs, const weyl::GroupElement& w) {
  if (weyl::reflection_length(rs, w) != rs.rank()) return false;
  return visit_reduced_factorizations(rs, w, [&](const Factorization& f) {
    const weyl::RootSet r(f.refs.begin(), f.refs.end());
    return generates_lattice_criterion(rs, r).generates;
  });
}

bool is_coxeter(const RootSystem& rs, const weyl::GroupElement& w) {
  if (weyl::reflection_length(rs, w) != rs.rank()) return false;
  return visit_reduced_factorizations(rs, w, [&](const Factorization& f) {
    const weyl::RootSet r(f.refs.begin(), f.refs.end());
    return simple_systems::reflections_form_simple_system(rs, r);
  });
}

Factorization hurwitz_move(const RootSystem& rs, const Factorization& f,
                           std::size_t i, HurwitzDir dir) {
  if (i < 1 || i >= f.refs.size())
    throw std::out_of_range("move position out of range");
  Factorization out = f;
  const RootIndex a = f.refs[i - 1];
  const RootIndex b = f.refs[i];
  if (dir == HurwitzDir::Right) {
    out.refs[i - 1] = b;
    out.refs[i] = rs.positive_rep(rs.reflect_root(b, a));
  } else {
    out.refs[i - 1] = rs.positive_rep(rs.reflect_root(a, b));
    out.refs[i] = a;
  }
  return out;
}

bool factorization_graph_has_cycle(const RootSystem& rs,
                                   const weyl::RootSet& r) {
  const std::vector<RootIndex> nodes(r.begin(), r.end());
  std::vector<std::size_t> parent(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) parent[i] = i;
  const std::function<std::size_t(std::size_t)> find =
      [&](std::size_t x) -> std::size_t {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (rs.inner(nodes[i], nodes[j]) == 0) continue;
      const std::size_t ri = find(i), rj = find(j);
      if (ri == rj) return true;
      parent[ri] = rj;
    }
  }
  return false;
}

}  // namespace rootsmith::quasicox

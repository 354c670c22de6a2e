#include "rootsmith/simple_systems.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rootsmith/lattice.hpp"
#include "rootsmith/quasicox.hpp"

namespace rootsmith::simple_systems {

namespace {

std::size_t coord_rank(const RootSystem& rs,
                       const std::vector<RootIndex>& roots) {
  lattice::IntMatrix m(roots.size(), rs.rank());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (int j = 0; j < rs.rank(); ++j) m(i, j) = rs.root(roots[i])[j];
  return lattice::hnf(std::move(m)).rank;
}

void check_independent(const RootSystem& rs,
                       const std::vector<RootIndex>& delta_p) {
  if (coord_rank(rs, delta_p) != delta_p.size())
    throw std::invalid_argument("delta_p is not linearly independent");
}

// Product of the word's reflections, later letters leftmost, so the result
// maps the obtusify input to its gamma.
weyl::GroupElement word_element(const RootSystem& rs,
                                const std::vector<RootIndex>& delta_p,
                                const std::vector<std::size_t>& word) {
  weyl::GroupElement acc = weyl::identity(rs);
  for (const std::size_t j : word)
    acc = weyl::compose(weyl::reflection(rs, delta_p[j - 1]), acc);
  return acc;
}

// BFS through the conjugation orbit of `from` under delta's reflections,
// returning p with p s_from p^{-1} = s_to.
weyl::GroupElement orbit_conjugator(const RootSystem& rs,
                                    const std::vector<RootIndex>& delta,
                                    RootIndex from, RootIndex to) {
  std::map<RootIndex, weyl::GroupElement> visited;
  visited.emplace(from, weyl::identity(rs));
  std::vector<RootIndex> queue{from};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const RootIndex cur = queue[qi];
    if (cur == to) return visited.at(cur);
    for (const RootIndex d : delta) {
      const RootIndex next = rs.positive_rep(rs.reflect_root(d, cur));
      if (visited.count(next)) continue;
      visited.emplace(next, weyl::compose(weyl::reflection(rs, d),
                                          visited.at(cur)));
      queue.push_back(next);
    }
  }
  throw std::logic_error("completing reflections not conjugate under P");
}

}  // namespace

bool is_simple_system(const RootSystem& rs, const weyl::RootSet& r) {
  if (r.size() != static_cast<std::size_t>(rs.rank())) return false;
  for (auto it = r.begin(); it != r.end(); ++it)
    for (auto jt = std::next(it); jt != r.end(); ++jt)
      if (rs.inner(*it, *jt) > 0) return false;
  return quasicox::generates_lattice_criterion(rs, r).generates;
}

bool reflections_form_simple_system(const RootSystem& rs,
                                    const weyl::RootSet& r) {
  if (r.size() != static_cast<std::size_t>(rs.rank())) return false;
  const std::vector<RootIndex> nodes(r.begin(), r.end());
  // Obtuseness pins relative signs along every non-orthogonal pair; a sign
  // assignment exists iff the constraints propagate without conflict.
  std::vector<int> sign(nodes.size(), 0);
  for (std::size_t seed = 0; seed < nodes.size(); ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    std::vector<std::size_t> queue{seed};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t i = queue[qi];
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        const Coord ip = rs.inner(nodes[i], nodes[j]);
        if (i == j || ip == 0) continue;
        const int required = ip > 0 ? -sign[i] : sign[i];
        if (sign[j] == 0) {
          sign[j] = required;
          queue.push_back(j);
        } else if (sign[j] != required) {
          return false;
        }
      }
    }
  }
  // Lattice spans are invariant under negating rows.
  return quasicox::generates_lattice_criterion(rs, r).generates;
}

ObtusifyTrace obtusify(const RootSystem& rs,
                       const std::vector<RootIndex>& delta_p, RootIndex beta) {
  return obtusify(rs, delta_p, beta,
                  [](std::size_t) -> std::size_t { return 0; });
}

ObtusifyTrace obtusify(const RootSystem& rs,
                       const std::vector<RootIndex>& delta_p, RootIndex beta,
                       const std::function<std::size_t(std::size_t)>& pick) {
  for (std::size_t i = 0; i < delta_p.size(); ++i)
    for (std::size_t j = i + 1; j < delta_p.size(); ++j)
      if (rs.inner(delta_p[i], delta_p[j]) > 0)
        throw std::invalid_argument("delta_p is not pairwise obtuse");
  check_independent(rs, delta_p);
  weyl::RootSet all(delta_p.begin(), delta_p.end());
  all.insert(beta);
  if (!quasicox::generates_lattice_criterion(rs, all).generates)
    throw std::domain_error("does not generate");

  ObtusifyTrace trace;
  RootIndex cur = beta;
  const std::uint64_t cap = rs.weyl_order();
  for (;;) {
    std::vector<std::size_t> hot;
    for (std::size_t j = 0; j < delta_p.size(); ++j)
      if (rs.inner(delta_p[j], cur) > 0) hot.push_back(j);
    if (hot.empty()) break;
    const std::size_t choice = hot[pick(hot.size()) % hot.size()];
    cur = rs.reflect_root(delta_p[choice], cur);
    trace.word.push_back(choice + 1);
    if (trace.word.size() > cap)
      throw std::logic_error("obtusify exceeded the group-order step bound");
  }
  trace.gamma = cur;
  trace.gamma_coords = rs.root(cur);
  trace.steps = trace.word.size();
  return trace;
}

std::vector<RootIndex> completions(const RootSystem& rs,
                                   const std::vector<RootIndex>& delta_p) {
  check_independent(rs, delta_p);
  const weyl::RootSet base(delta_p.begin(), delta_p.end());
  std::vector<RootIndex> out;
  for (RootIndex t = 0; t < rs.positive_count(); ++t) {
    weyl::RootSet with = base;
    with.insert(t);
    if (quasicox::generates_lattice_criterion(rs, with).generates)
      out.push_back(t);
  }
  return out;
}

OrbitReport orbit_partition(const RootSystem& rs,
                            const std::vector<RootIndex>& delta_p,
                            std::uint64_t bfs_cap) {
  OrbitReport report;
  report.completions = completions(rs, delta_p);

  std::vector<weyl::GroupElement> gens;
  gens.reserve(delta_p.size());
  for (const RootIndex d : delta_p)
    gens.push_back(weyl::reflection(rs, d));
  const auto subgroup = weyl::group_bfs(rs, gens, bfs_cap);
  if (!subgroup)
    throw std::runtime_error("parabolic subgroup exceeds the BFS cap");

  std::map<RootIndex, std::size_t> pos;
  for (std::size_t i = 0; i < report.completions.size(); ++i)
    pos.emplace(report.completions[i], i);
  std::vector<std::size_t> parent(report.completions.size());
  std::iota(parent.begin(), parent.end(), 0);
  const std::function<std::size_t(std::size_t)> find =
      [&](std::size_t x) -> std::size_t {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const RootIndex t : report.completions) {
    for (const auto& p : *subgroup) {
      const RootIndex u = weyl::conjugate_reflection(rs, p, t);
      const auto it = pos.find(u);
      if (it == pos.end())
        throw std::logic_error("conjugation left the completion set");
      parent[find(pos.at(t))] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<RootIndex>> buckets;
  for (std::size_t i = 0; i < report.completions.size(); ++i)
    buckets[find(i)].push_back(report.completions[i]);
  for (auto& [key, members] : buckets)
    report.orbits.push_back(std::move(members));
  return report;
}

weyl::GroupElement find_conjugator(const RootSystem& rs, RootIndex r1,
                                   const std::vector<RootIndex>& rest,
                                   RootIndex t1) {
  for (const RootIndex r : {r1, t1}) {
    weyl::RootSet with(rest.begin(), rest.end());
    with.insert(r);
    if (!quasicox::generates_lattice_criterion(rs, with).generates)
      throw std::domain_error("does not generate");
  }
  std::vector<RootIndex> delta;
  if (!rest.empty()) {
    const auto psi = weyl::closure_subsystem(
        rs, weyl::RootSet(rest.begin(), rest.end()));
    delta = simple_system_of(rs, psi);
  }
  const ObtusifyTrace tr1 = obtusify(rs, delta, r1);
  const ObtusifyTrace tr2 = obtusify(rs, delta, t1);
  const weyl::GroupElement w1 = word_element(rs, delta, tr1.word);
  const weyl::GroupElement w2 = word_element(rs, delta, tr2.word);
  const RootIndex g1 = rs.positive_rep(tr1.gamma);
  const RootIndex g2 = rs.positive_rep(tr2.gamma);
  weyl::GroupElement p = weyl::identity(rs);
  if (g1 != g2) p = orbit_conjugator(rs, delta, g2, g1);
  return weyl::compose(weyl::inverse(w1), weyl::compose(p, w2));
}

bool is_parabolic_corank1(const RootSystem& rs,
                          const std::vector<RootIndex>& delta_p) {
  const std::size_t corank1 = static_cast<std::size_t>(rs.rank()) - 1;
  if (delta_p.size() != corank1 || coord_rank(rs, delta_p) != corank1)
    throw std::invalid_argument("rank of delta_p is not n-1");
  return !completions(rs, delta_p).empty();
}

std::vector<RootIndex> simple_system_of(const RootSystem& rs,
                                        const weyl::RootSet& subsystem) {
  std::vector<RootIndex> positives;
  for (const RootIndex i : subsystem)
    if (rs.is_positive(i)) positives.push_back(i);
  std::vector<RootIndex> out;
  for (const RootIndex b : positives) {
    bool decomposable = false;
    for (const RootIndex x : positives) {
      if (decomposable) break;
      for (const RootIndex y : positives) {
        RootCoords sum = rs.root(x);
        for (int j = 0; j < rs.rank(); ++j) sum[j] += rs.root(y)[j];
        if (sum == rs.root(b)) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) out.push_back(b);
  }
  return out;
}

}  // namespace rootsmith::simple_systems

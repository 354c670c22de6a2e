#include "rootsmith/selftest.hpp"

#include <algorithm>
#include <numeric>

#include "rootsmith/quasicox.hpp"
#include "rootsmith/simple_systems.hpp"
#include "rootsmith/weyl.hpp"

namespace rootsmith::selftest {

std::uint64_t Rng::bounded(std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<RootIndex> sample_positive_subset(Rng& rng, const RootSystem& rs,
                                              std::size_t k) {
  std::vector<RootIndex> pool(rs.positive_count());
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<RootIndex> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k && i < pool.size(); ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(rng.bounded(pool.size() - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

std::vector<std::string> admissible_labels(int max_rank) {
  std::vector<std::string> labels;
  for (const Family fam :
       {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F,
        Family::G}) {
    for (int n = 1; n <= max_rank; ++n) {
      const CartanType t{fam, n};
      if (t.admissible()) labels.push_back(t.label());
    }
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

Summary run(std::uint64_t seed, std::uint64_t samples, int max_rank) {
  Summary summary;
  summary.seed = seed;
  summary.samples = samples;
  summary.max_rank = max_rank;
  for (const std::string& label : admissible_labels(max_rank)) {
    const RootSystem rs = RootSystem::build(label);
    const int n = rs.rank();
    TypeReport report;
    report.label = label;
    Rng rng(seed ^ fnv1a(label));
    for (std::size_t size = static_cast<std::size_t>(n);
         size <= static_cast<std::size_t>(n) + 2; ++size) {
      if (size > static_cast<std::size_t>(rs.positive_count())) continue;
      for (std::uint64_t s = 0; s < samples; ++s) {
        const auto subset = sample_positive_subset(rng, rs, size);
        const weyl::RootSet r(subset.begin(), subset.end());
        const bool by_criterion =
            quasicox::generates_lattice_criterion(rs, r).generates;
        const bool by_oracle = weyl::generates_oracle(rs, r);
        ++report.checks;
        if (by_criterion != by_oracle) {
          ++report.disagreements;
          std::vector<RootCoords> coords;
          for (const RootIndex i : r) coords.push_back(rs.root(i));
          report.offenders.push_back(std::move(coords));
        }
      }
    }
    // Obtusify sweep over the standard corank-1 parabolics.
    for (int skip = 0; skip < n; ++skip) {
      std::vector<RootIndex> delta_p;
      for (int i = 0; i < n; ++i)
        if (i != skip) delta_p.push_back(rs.simple_root(i));
      for (RootIndex beta = 0;
           beta < static_cast<RootIndex>(rs.root_count()); ++beta) {
        weyl::RootSet with(delta_p.begin(), delta_p.end());
        with.insert(beta);
        if (!quasicox::generates_lattice_criterion(rs, with).generates)
          continue;
        const auto trace = simple_systems::obtusify(rs, delta_p, beta);
        report.max_obtusify_steps =
            std::max(report.max_obtusify_steps, trace.steps);
      }
    }
    summary.total_checks += report.checks;
    summary.disagreements += report.disagreements;
    summary.types.push_back(std::move(report));
  }
  summary.pass = summary.disagreements == 0;
  return summary;
}

}  // namespace rootsmith::selftest

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rootsmith/root_system.hpp"
#include "rootsmith/weyl.hpp"

namespace testutil {

using rootsmith::RootCoords;
using rootsmith::RootIndex;
using rootsmith::RootSystem;

inline RootIndex idx(const RootSystem& rs, const RootCoords& v) {
  const auto i = rs.root_index(v);
  REQUIRE(i.has_value());
  return *i;
}

inline rootsmith::weyl::RootSet set_of(const RootSystem& rs,
                                       const std::vector<RootCoords>& vs) {
  rootsmith::weyl::RootSet r;
  for (const auto& v : vs) r.insert(idx(rs, v));
  return r;
}

inline std::vector<RootIndex> list_of(const RootSystem& rs,
                                      const std::vector<RootCoords>& vs) {
  std::vector<RootIndex> r;
  for (const auto& v : vs) r.push_back(idx(rs, v));
  return r;
}

// Deterministic sampling helpers for property tests.
struct TestRng {
  std::mt19937_64 eng;
  explicit TestRng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t bounded(std::uint64_t n) { return eng() % n; }
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(bounded(hi - lo + 1));
  }
};

inline std::vector<RootIndex> random_roots(TestRng& rng, const RootSystem& rs,
                                           std::size_t k,
                                           bool positive_only = false) {
  std::vector<RootIndex> out;
  const std::uint64_t n =
      positive_only ? rs.positive_count() : rs.root_count();
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(static_cast<RootIndex>(rng.bounded(n)));
  return out;
}

inline rootsmith::weyl::GroupElement random_element(TestRng& rng,
                                                    const RootSystem& rs,
                                                    std::size_t word_len) {
  auto w = rootsmith::weyl::identity(rs);
  for (std::size_t i = 0; i < word_len; ++i) {
    const auto t = static_cast<RootIndex>(rng.bounded(rs.positive_count()));
    w = rootsmith::weyl::compose(w, rootsmith::weyl::reflection(rs, t));
  }
  return w;
}

}  // namespace testutil

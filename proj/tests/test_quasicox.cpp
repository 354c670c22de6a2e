#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "rootsmith/lattice.hpp"
#include "rootsmith/quasicox.hpp"
#include "rootsmith/simple_systems.hpp"

using namespace rootsmith;
using namespace rootsmith::quasicox;
using testutil::idx;
using testutil::list_of;
using testutil::set_of;

TEST_SUITE("quasicox") {

TEST_CASE("generation criterion on the B2 witnesses") {
  const RootSystem rs = RootSystem::build("B2");
  const auto both_short = generates_lattice_criterion(
      rs, set_of(rs, {{1, 1}, {0, 1}}));
  CHECK_FALSE(both_short.generates);
  CHECK(both_short.root_span_index == 1);
  CHECK(both_short.coroot_span_index == 2);

  const auto both_long = generates_lattice_criterion(
      rs, set_of(rs, {{1, 0}, {1, 2}}));
  CHECK_FALSE(both_long.generates);
  CHECK(both_long.root_span_index == 2);
  CHECK(both_long.coroot_span_index == 1);

  const auto simple = generates_lattice_criterion(
      RootSystem::build("A2"),
      set_of(RootSystem::build("A2"), {{1, 0}, {0, 1}}));
  CHECK(simple.generates);
  CHECK(simple.root_span_index == 1);
  CHECK(simple.coroot_span_index == 1);
}

TEST_CASE("rank-deficient subsets report no index") {
  const RootSystem rs = RootSystem::build("A2");
  const auto v = generates_lattice_criterion(rs, {idx(rs, {1, 0})});
  CHECK_FALSE(v.generates);
  CHECK_FALSE(v.root_span_index.has_value());
  CHECK_FALSE(v.coroot_span_index.has_value());
  CHECK_THROWS_AS(generates_lattice_criterion(rs, {}),
                  std::invalid_argument);
}

TEST_CASE("criterion agrees with the closure oracle on random subsets") {
  testutil::TestRng rng(5150);
  for (const char* label : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    const RootSystem rs = RootSystem::build(label);
    for (int trial = 0; trial < 150; ++trial) {
      const auto roots = testutil::random_roots(
          rng, rs, rs.rank() + trial % 3);
      const weyl::RootSet r(roots.begin(), roots.end());
      CHECK(generates_lattice_criterion(rs, r).generates ==
            weyl::generates_oracle(rs, r));
    }
  }
}

TEST_CASE("subsystem spans match closure spans both ways") {
  testutil::TestRng rng(60601);
  for (const char* label : {"A3", "B3", "D4"}) {
    const RootSystem rs = RootSystem::build(label);
    for (int trial = 0; trial < 50; ++trial) {
      const auto roots = testutil::random_roots(rng, rs, 2 + trial % 3);
      const weyl::RootSet r(roots.begin(), roots.end());
      const auto sub = weyl::closure_subsystem(rs, r);
      auto rows = [&](const weyl::RootSet& s, bool coroots) {
        lattice::IntMatrix m(s.size(), rs.rank());
        std::size_t i = 0;
        for (const RootIndex t : s) {
          const auto& v = coroots ? rs.coroot(t) : rs.root(t);
          for (int j = 0; j < rs.rank(); ++j) m(i, j) = v[j];
          ++i;
        }
        return m;
      };
      // The subset spans the same root and coroot lattices as its closure.
      CHECK(lattice::lattice_span_equal(rows(r, false), rows(sub, false)));
      CHECK(lattice::lattice_span_equal(rows(r, true), rows(sub, true)));
      // Conversely, a subset of a subsystem with matching spans closes to it.
      weyl::RootSet inside;
      for (const RootIndex t : sub)
        if (inside.size() < r.size() || t % 2 == 0) inside.insert(t);
      if (lattice::lattice_span_equal(rows(inside, false),
                                      rows(sub, false)) &&
          lattice::lattice_span_equal(rows(inside, true), rows(sub, true)))
        CHECK(weyl::closure_subsystem(rs, inside) == sub);
    }
  }
}

TEST_CASE("simply laced systems have equal root and coroot span indices") {
  testutil::TestRng rng(11);
  for (const char* label : {"A3", "D4", "E6"}) {
    const RootSystem rs = RootSystem::build(label);
    REQUIRE(rs.is_simply_laced());
    for (int trial = 0; trial < 40; ++trial) {
      const auto roots = testutil::random_roots(rng, rs, rs.rank());
      const auto v = generates_lattice_criterion(
          rs, weyl::RootSet(roots.begin(), roots.end()));
      CHECK(v.root_span_index == v.coroot_span_index);
    }
  }
}

TEST_CASE("minimal generating sets are unimodular bases") {
  const RootSystem a2 = RootSystem::build("A2");
  CHECK(is_minimal_generating(a2, set_of(a2, {{1, 0}, {0, 1}})));
  const auto redundant = set_of(a2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(is_minimal_generating(a2, redundant));
  CHECK(generates_lattice_criterion(a2, redundant).generates);
  const RootSystem b2 = RootSystem::build("B2");
  CHECK_FALSE(is_minimal_generating(b2, set_of(b2, {{1, 1}, {0, 1}})));
}

TEST_CASE("reduced factorizations of small elements") {
  const RootSystem rs = RootSystem::build("A2");
  const auto id = weyl::identity(rs);
  const auto only_empty = reduced_factorizations(rs, id, 10);
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty.front().refs.empty());

  const auto t = idx(rs, {1, 1});
  const auto single = reduced_factorizations(rs, weyl::reflection(rs, t), 10);
  REQUIRE(single.size() == 1);
  CHECK(single.front().refs == std::vector<RootIndex>{t});

  const auto cox = weyl::compose(weyl::reflection(rs, idx(rs, {1, 0})),
                                 weyl::reflection(rs, idx(rs, {0, 1})));
  const auto fs = reduced_factorizations(rs, cox, 10);
  REQUIRE(fs.size() == 3);
  // Deterministic order: branch candidates ascend by canonical root index.
  CHECK(fs[0].refs == list_of(rs, {{0, 1}, {1, 1}}));
  CHECK(fs[1].refs == list_of(rs, {{1, 0}, {0, 1}}));
  CHECK(fs[2].refs == list_of(rs, {{1, 1}, {1, 0}}));
  for (const auto& f : fs) CHECK(product(rs, f) == cox);
}

TEST_CASE("factorization count matches brute force enumeration") {
  for (const char* label : {"A2", "B2"}) {
    const RootSystem rs = RootSystem::build(label);
    testutil::TestRng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const auto w = testutil::random_element(rng, rs, 2 + trial % 3);
      const int len = weyl::reflection_length(rs, w);
      if (len != 2) continue;
      std::size_t brute = 0;
      for (RootIndex a = 0; a < rs.positive_count(); ++a)
        for (RootIndex b = 0; b < rs.positive_count(); ++b) {
          Factorization f;
          f.refs = {a, b};
          if (product(rs, f) == w) ++brute;
        }
      CHECK(reduced_factorizations(rs, w, 1000).size() == brute);
    }
  }
}

TEST_CASE("quasi-Coxeter detection in A2") {
  const RootSystem rs = RootSystem::build("A2");
  const auto cox = weyl::compose(weyl::reflection(rs, idx(rs, {1, 0})),
                                 weyl::reflection(rs, idx(rs, {0, 1})));
  CHECK(is_quasi_coxeter(rs, cox));
  CHECK(is_coxeter(rs, cox));
  CHECK_FALSE(is_quasi_coxeter(rs, weyl::identity(rs)));
  CHECK_FALSE(is_quasi_coxeter(rs, weyl::reflection(rs, idx(rs, {1, 1}))));
}

TEST_CASE("every ordering of a simple system gives a quasi-Coxeter element") {
  for (const char* label : {"A2", "A3", "B2", "B3", "G2"}) {
    const RootSystem rs = RootSystem::build(label);
    std::vector<RootIndex> simples;
    for (int i = 0; i < rs.rank(); ++i) simples.push_back(rs.simple_root(i));
    std::sort(simples.begin(), simples.end());
    do {
      Factorization f;
      f.refs = simples;
      const auto w = product(rs, f);
      CHECK(is_quasi_coxeter(rs, w));
      CHECK(is_coxeter(rs, w));
    } while (std::next_permutation(simples.begin(), simples.end()));
  }
}

TEST_CASE("quasi-Coxeter is a conjugation invariant") {
  testutil::TestRng rng(808);
  for (const char* label : {"A2", "B2", "A3"}) {
    const RootSystem rs = RootSystem::build(label);
    for (int trial = 0; trial < 8; ++trial) {
      const auto w = testutil::random_element(rng, rs, rs.rank());
      const auto g = testutil::random_element(rng, rs, 3);
      const auto conj =
          weyl::compose(g, weyl::compose(w, weyl::inverse(g)));
      CHECK(is_quasi_coxeter(rs, w) == is_quasi_coxeter(rs, conj));
    }
  }
}

TEST_CASE("hurwitz moves") {
  const RootSystem rs = RootSystem::build("A2");
  Factorization f;
  f.refs = list_of(rs, {{1, 0}, {0, 1}});
  const auto left = hurwitz_move(rs, f, 1, HurwitzDir::Left);
  CHECK(left.refs == list_of(rs, {{1, 1}, {1, 0}}));
  CHECK(hurwitz_move(rs, left, 1, HurwitzDir::Right) == f);
  CHECK_THROWS_AS(hurwitz_move(rs, f, 2, HurwitzDir::Left),
                  std::out_of_range);
  CHECK_THROWS_AS(hurwitz_move(rs, f, 0, HurwitzDir::Right),
                  std::out_of_range);
}

TEST_CASE("hurwitz moves preserve product, length, and closure") {
  testutil::TestRng rng(909);
  for (const char* label : {"A3", "B3"}) {
    const RootSystem rs = RootSystem::build(label);
    for (int trial = 0; trial < 30; ++trial) {
      Factorization f;
      for (int i = 0; i < rs.rank(); ++i)
        f.refs.push_back(
            static_cast<RootIndex>(rng.bounded(rs.positive_count())));
      const auto pos = 1 + rng.bounded(f.refs.size() - 1);
      const auto dir =
          rng.bounded(2) == 0 ? HurwitzDir::Left : HurwitzDir::Right;
      const auto moved = hurwitz_move(rs, f, pos, dir);
      CHECK(product(rs, moved) == product(rs, f));
      CHECK(moved.refs.size() == f.refs.size());
      const weyl::RootSet before(f.refs.begin(), f.refs.end());
      const weyl::RootSet after(moved.refs.begin(), moved.refs.end());
      CHECK(weyl::closure_subsystem(rs, before) ==
            weyl::closure_subsystem(rs, after));
      // Inverse move restores the original tuple.
      const auto back = hurwitz_move(
          rs, moved, pos,
          dir == HurwitzDir::Left ? HurwitzDir::Right : HurwitzDir::Left);
      CHECK(back == f);
    }
  }
}

TEST_CASE("non-orthogonality graph cycle detection") {
  const RootSystem rs = RootSystem::build("A2");
  CHECK_FALSE(
      factorization_graph_has_cycle(rs, set_of(rs, {{1, 0}, {0, 1}})));
  CHECK(factorization_graph_has_cycle(
      rs, set_of(rs, {{1, 0}, {0, 1}, {1, 1}})));
  const RootSystem b2 = RootSystem::build("B2");
  CHECK_FALSE(factorization_graph_has_cycle(
      b2, set_of(b2, {{1, 1}, {0, 1}})));  // orthogonal pair, no edge
}

}  // TEST_SUITE

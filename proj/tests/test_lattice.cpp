#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "rootsmith/lattice.hpp"

using namespace rootsmith::lattice;

namespace {

IntMatrix mat(const std::vector<std::vector<std::int64_t>>& rows) {
  return IntMatrix::from_rows(rows);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 6,
                        std::int64_t max_abs = 9) {
  const std::size_t r = 1 + rng() % max_dim;
  const std::size_t c = 1 + rng() % max_dim;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = static_cast<std::int64_t>(rng() % (2 * max_abs + 1)) - max_abs;
  return m;
}

// Independent elimination oracle: plain division-based row reduction, no
// extended gcd. Row-reduces column by column, repeatedly subtracting
// quotients until one entry survives per pivot column.
IntMatrix naive_hnf(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m(i, col) != 0 &&
            (best == rows || abs(m(i, col)) < abs(m(best, col))))
          best = i;
      if (best == rows) break;
      m.swap_rows(r, best);
      bool reduced = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, col) == 0) continue;
        const Int q = m(i, col) / m(r, col);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
        if (m(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (r < rows && m(r, col) != 0) {
      if (m(r, col) < 0) m.negate_row(r);
      for (std::size_t i = 0; i < r; ++i) {
        Int q = m(i, col) / m(r, col);
        if (m(i, col) % m(r, col) < 0) --q;
        for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
      }
      ++r;
    }
  }
  return m;
}

// Residue-class counting oracle for the index of a full-rank sublattice of
// Z^n: with M a positive integer such that M*Z^n lies in the sublattice,
// the index is M^n divided by the order of the subgroup of (Z/M)^n
// generated by the rows.
std::int64_t coset_count_index(const IntMatrix& sub, std::int64_t big_m) {
  const std::size_t n = sub.cols();
  std::set<std::vector<std::int64_t>> group;
  std::vector<std::vector<std::int64_t>> queue;
  const std::vector<std::int64_t> zero(n, 0);
  group.insert(zero);
  queue.push_back(zero);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t r = 0; r < sub.rows(); ++r) {
      std::vector<std::int64_t> next = queue[qi];
      for (std::size_t j = 0; j < n; ++j) {
        const auto add = static_cast<std::int64_t>(sub(r, j));
        next[j] = ((next[j] + add) % big_m + big_m) % big_m;
      }
      if (group.insert(next).second) queue.push_back(next);
    }
  }
  std::int64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= big_m;
  return total / static_cast<std::int64_t>(group.size());
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("hnf of the identity is the identity") {
  const auto h = hnf(IntMatrix::identity(2));
  CHECK(h.hnf == IntMatrix::identity(2));
  CHECK(h.rank == 2);
  CHECK(h.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("hnf hand-reduced example") {
  const auto h = hnf(mat({{2, 0}, {1, -1}}));
  CHECK(h.hnf == mat({{1, 1}, {0, 2}}));
  CHECK(h.rank == 2);
  // The independent elimination oracle lands on the same form.
  CHECK(naive_hnf(mat({{2, 0}, {1, -1}})) == mat({{1, 1}, {0, 2}}));
}

TEST_CASE("hnf of a zero matrix") {
  const auto h = hnf(mat({{0, 0}}));
  CHECK(h.hnf == mat({{0, 0}}));
  CHECK(h.rank == 0);
  CHECK(h.pivot_cols.empty());
}

TEST_CASE("hnf agrees with the naive elimination oracle on random input") {
  std::mt19937_64 rng(20240511);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = random_matrix(rng);
    CHECK(hnf(m).hnf == naive_hnf(m));
  }
}

TEST_CASE("hnf is idempotent and preserves the row span") {
  std::mt19937_64 rng(987654321);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = random_matrix(rng);
    const auto h = hnf(m);
    CHECK(hnf(h.hnf).hnf == h.hnf);
    const auto hm = hnf(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
      CHECK(in_row_span(hm, m.row(i)).has_value());
    // And conversely every HNF row is spanned by the input rows.
    const auto back = hnf(m);
    for (std::size_t i = 0; i < h.rank; ++i)
      CHECK(in_row_span(back, h.hnf.row(i)).has_value());
  }
}

TEST_CASE("span equality examples") {
  CHECK(lattice_span_equal(IntMatrix::identity(2), mat({{1, 1}, {0, 1}})));
  CHECK_FALSE(
      lattice_span_equal(IntMatrix::identity(2), mat({{2, 0}, {0, 1}})));
  CHECK(lattice_span_equal(mat({{2, 0}, {1, -1}}), mat({{1, 1}, {0, 2}})));
  CHECK_THROWS_AS(lattice_span_equal(IntMatrix::identity(2),
                                     IntMatrix::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("span equality is an equivalence relation on sampled triples") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5);
    IntMatrix b(a.rows(), a.cols());
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        b(i, j) = a(i, j);
        c(i, j) = a(i, j);
      }
    // b: permute rows; c: unimodular row operation. All three span equal.
    b.swap_rows(0, a.rows() - 1);
    if (c.rows() >= 2)
      for (std::size_t j = 0; j < c.cols(); ++j) c(0, j) += 3 * c(1, j);
    CHECK(lattice_span_equal(a, a));
    CHECK(lattice_span_equal(a, b));
    CHECK(lattice_span_equal(b, a));
    CHECK((lattice_span_equal(a, b) && lattice_span_equal(b, c)) ==
          lattice_span_equal(a, c));
  }
}

TEST_CASE("lattice index examples") {
  CHECK(lattice_index(mat({{2, 0}, {0, 2}}), IntMatrix::identity(2)) == 4);
  CHECK(lattice_index(IntMatrix::identity(2), IntMatrix::identity(2)) == 1);
  CHECK(lattice_index(mat({{2, 1}, {0, 1}}), IntMatrix::identity(2)) == 2);
  // Residue-class counting agrees (2*Z^2 resp. det-2 sublattice).
  CHECK(coset_count_index(mat({{2, 0}, {0, 2}}), 2) == 4);
  CHECK(coset_count_index(mat({{2, 1}, {0, 1}}), 2) == 2);
}

TEST_CASE("lattice index error paths") {
  CHECK_THROWS_AS(lattice_index(mat({{1, 1}}), mat({{2, 0}, {0, 2}})),
                  std::domain_error);  // (1,1) not in 2Z^2
  CHECK_THROWS_AS(lattice_index(mat({{2, 0}}), IntMatrix::identity(2)),
                  std::domain_error);  // rank 1 vs rank 2
  CHECK_THROWS_AS(lattice_index(mat({{1}}), IntMatrix::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("lattice index is multiplicative along chains") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    // c = Z^n, b = diag multiples, a = further multiples of b's rows.
    IntMatrix b(n, n), a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t f = 1 + static_cast<std::int64_t>(rng() % 3);
      const std::int64_t g = 1 + static_cast<std::int64_t>(rng() % 3);
      b(i, i) = f;
      a(i, i) = f * g;
    }
    const IntMatrix c = IntMatrix::identity(n);
    CHECK(lattice_index(a, b) * lattice_index(b, c) == lattice_index(a, c));
  }
}

TEST_CASE("unimodular basis test") {
  CHECK(is_unimodular_basis(IntMatrix::identity(3)));
  CHECK_FALSE(is_unimodular_basis(mat({{1, 1}, {0, 2}})));
  CHECK(is_unimodular_basis(mat({{1, 0}, {1, 1}})));
  CHECK_FALSE(is_unimodular_basis(mat({{1, 0, 0}, {0, 1, 0}})));
}

TEST_CASE("unimodularity matches span equality with the identity") {
  std::mt19937_64 rng(1357);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
    CHECK(is_unimodular_basis(m) ==
          lattice_span_equal(m, IntMatrix::identity(n)));
  }
}

TEST_CASE("smith divisors form a divisibility chain") {
  std::mt19937_64 rng(8642);
  for (int trial = 0; trial < 200; ++trial) {
    const auto divs = smith_divisors(random_matrix(rng, 5, 12));
    for (std::size_t i = 0; i + 1 < divs.size(); ++i) {
      CHECK(divs[i] > 0);
      CHECK(divs[i + 1] % divs[i] == 0);
    }
  }
  CHECK(smith_divisors(mat({{2, 0}, {0, 2}})) == std::vector<Int>{2, 2});
}

TEST_CASE("hnf shape invariants") {
  std::mt19937_64 rng(11223344);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = hnf(random_matrix(rng));
    // Pivots positive and strictly right-moving; entries above reduced.
    for (std::size_t i = 0; i < h.rank; ++i) {
      const std::size_t pc = h.pivot_cols[i];
      if (i > 0) CHECK(pc > h.pivot_cols[i - 1]);
      CHECK(h.hnf(i, pc) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.hnf(k, pc) >= 0);
        CHECK(h.hnf(k, pc) < h.hnf(i, pc));
      }
      for (std::size_t j = 0; j < pc; ++j) CHECK(h.hnf(i, j) == 0);
    }
    for (std::size_t i = h.rank; i < h.hnf.rows(); ++i)
      CHECK(h.hnf.row_is_zero(i));
  }
}

}  // TEST_SUITE

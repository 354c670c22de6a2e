#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rootsmith::lattice {

/// Exact integer of unbounded magnitude. All lattice arithmetic is carried
/// out in this type; nothing is ever rounded or wrapped.
using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major. Rows are lattice generators.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Int> row(std::size_t i) const;
  bool row_is_zero(std::size_t i) const;
  /// Matrix consisting of the first `k` rows.
  IntMatrix top_rows(std::size_t k) const;

  void swap_rows(std::size_t i, std::size_t k);
  void swap_cols(std::size_t j, std::size_t l);
  void negate_row(std::size_t i);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Row-style Hermite normal form: pivots positive and strictly right-moving,
/// entries above each pivot reduced into [0, pivot), zero rows last.
struct HnfResult {
  IntMatrix hnf;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduce `m` to its unique row HNF using unimodular row operations only;
/// the integer row span is preserved. Zero matrices are allowed.
HnfResult hnf(IntMatrix m);

/// True iff the integer row spans of `a` and `b` coincide.
/// Throws std::invalid_argument on column-count mismatch.
bool lattice_span_equal(const IntMatrix& a, const IntMatrix& b);

/// Nonzero elementary divisors d1 | d2 | ... of `m` (Smith normal form
/// diagonal), all positive.
std::vector<Int> smith_divisors(IntMatrix m);

/// Index [row-span(sup) : row-span(sub)], the product of the elementary
/// divisors of the change-of-basis matrix. Throws std::domain_error
/// ("not a sublattice") if span(sub) is not contained in span(sup), and
/// ("rank mismatch") if the two spans have different ranks.
Int lattice_index(const IntMatrix& sub, const IntMatrix& sup);

/// True iff `vectors` is square, full-rank, with determinant +-1, i.e. its
/// rows form an integer basis of Z^n.
bool is_unimodular_basis(const IntMatrix& vectors);

/// Coefficients expressing `v` as an integer combination of the HNF basis
/// rows, or nullopt if `v` is not in the integer row span.
std::optional<std::vector<Int>> in_row_span(const HnfResult& basis,
                                            std::vector<Int> v);

}  // namespace rootsmith::lattice

#pragma once

#include <span>
#include <string>
#include <vector>

#include "schemekit/ideals.hpp"
#include "schemekit/polyring.hpp"

namespace schemekit {

/// How the multi-entry kernels (minors, exterior powers, batch normal forms) run.
/// Serial is the reference implementation; Parallel splits independent entries
/// across OpenMP threads and must produce identical results.
enum class Execution { Serial, Parallel };

/// Dense matrix of polynomials over one ring, stored row-major.
class PolyMatrix {
 public:
  /// Zero matrix. Empty shapes are allowed (for instance a row with no columns).
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix identity(RingPtr ring, std::size_t n);

  [[nodiscard]] const RingPtr& ring() const { return ring_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] const Polynomial& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Polynomial value);
  [[nodiscard]] std::span<const Polynomial> entries() const { return entries_; }

  [[nodiscard]] PolyMatrix transpose() const;
  [[nodiscard]] PolyMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  [[nodiscard]] PolyMatrix scaled(const Polynomial& c) const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// `matrix {{a, b}, {c, d}}`; an empty matrix prints as `map(R^r, 0)`.
  [[nodiscard]] std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// [a | b]
PolyMatrix concat_horizontal(const PolyMatrix& a, const PolyMatrix& b);
/// a stacked on top of b.
PolyMatrix concat_vertical(const PolyMatrix& a, const PolyMatrix& b);

/// Entry (i, j) is variable first + j*rows + i.
PolyMatrix generic_matrix(const RingPtr& ring, std::size_t first, std::size_t rows, std::size_t cols);

/// Cofactor expansion along rows, memoized over the remaining column subsets.
Polynomial det(const PolyMatrix& m);
/// Determinant of the square submatrix on the given rows and columns.
Polynomial subdeterminant(const PolyMatrix& m, std::span<const std::size_t> row_idx,
                          std::span<const std::size_t> col_idx);

/// adj(M)_{ij} = (-1)^(i+j) * det of M without row j and column i.
PolyMatrix classical_adjoint(const PolyMatrix& m);

/// Matrix of k x k minors; rows indexed by k-subsets of rows and columns by k-subsets
/// of columns, both in the order of k_subsets.
PolyMatrix exterior_power(std::size_t k, const PolyMatrix& m, Execution exec = Execution::Parallel);

/// Ideal of all k x k minors.
Ideal minors(std::size_t k, const PolyMatrix& m, Execution exec = Execution::Parallel);

/// (number of variables) x (number of polynomials); entry (i, j) = d gens[j] / d x_i.
PolyMatrix jacobian(const RingPtr& ring, std::span<const Polynomial> gens);

/// k-subsets of {0, ..., n-1} in colexicographic order: compared by largest element
/// first, so {0,1}, {0,2}, {1,2}, {0,3}, ...
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);

/// Normal forms of many polynomials against one basis.
std::vector<Polynomial> normal_forms(std::span<const Polynomial> polys, const GroebnerBasis& basis,
                                     Execution exec = Execution::Parallel);

}  // namespace schemekit

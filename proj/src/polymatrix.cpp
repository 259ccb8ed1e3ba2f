#include "schemekit/polymatrix.hpp"

#include <algorithm>
#include <exception>
#include <unordered_map>

namespace schemekit {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  entries_.assign(rows * cols, Polynomial(ring_));
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match its shape");
  for (const auto& e : entries_) require_same_ring(ring_, e.ring(), "matrix entries");
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.empty()) return {std::move(ring), 0, 0};
  std::vector<Polynomial> entries;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw DimensionMismatch("matrix rows have different lengths");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  const std::size_t c = rows.front().size();
  return {std::move(ring), rows.size(), c, std::move(entries)};
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  return entries_[i * cols_ + j];
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial value) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  require_same_ring(ring_, value.ring(), "matrix entry");
  entries_[i * cols_ + j] = std::move(value);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  std::vector<Polynomial> entries;
  entries.reserve(row_idx.size() * col_idx.size());
  for (std::size_t i : row_idx) {
    for (std::size_t j : col_idx) entries.push_back(at(i, j));
  }
  return {ring_, row_idx.size(), col_idx.size(), std::move(entries)};
}

PolyMatrix PolyMatrix::scaled(const Polynomial& c) const {
  require_same_ring(ring_, c.ring(), "matrix scaling");
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = c * e;
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix addition");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix addition: shapes differ");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix subtraction");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix subtraction: shapes differ");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix product");
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  PolyMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial s(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a.at(i, k);
        const auto& y = b.at(k, j);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      out.entries_[i * out.cols_ + j] = std::move(s);
    }
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
  if (rows_ == 0 || cols_ == 0) return "map(" + ring_->to_string() + "^" + std::to_string(rows_) + ", 0)";
  std::string s = "matrix {";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != 0) s += ", ";
    s += '{';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) s += ", ";
      s += at(i, j).to_string();
    }
    s += '}';
  }
  return s + "}";
}

PolyMatrix concat_horizontal(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring(), "matrix concatenation");
  if (a.rows() != b.rows()) throw DimensionMismatch("horizontal concatenation: row counts differ");
  std::vector<Polynomial> entries;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) entries.push_back(a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) entries.push_back(b.at(i, j));
  }
  return {a.ring(), a.rows(), a.cols() + b.cols(), std::move(entries)};
}

PolyMatrix concat_vertical(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring(), "matrix concatenation");
  if (a.cols() != b.cols()) throw DimensionMismatch("vertical concatenation: column counts differ");
  std::vector<Polynomial> entries(a.entries().begin(), a.entries().end());
  entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return {a.ring(), a.rows() + b.rows(), a.cols(), std::move(entries)};
}

PolyMatrix generic_matrix(const RingPtr& ring, std::size_t first, std::size_t rows, std::size_t cols) {
  if (first + rows * cols > ring->num_variables()) {
    throw Error("genericMatrix: not enough variables in " + ring->to_string());
  }
  PolyMatrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Polynomial::variable(ring, first + j * rows + i));
  }
  return m;
}

namespace {

class CofactorDet {
 public:
  CofactorDet(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols)
      : m_(m), rows_(rows), cols_(cols) {}

  Polynomial run() { return expand(0, (std::uint64_t{1} << cols_.size()) - 1); }

 private:
  // Determinant of rows [r, n) against the columns in `mask`.
  Polynomial expand(std::size_t r, std::uint64_t mask) {
    if (r == rows_.size()) return Polynomial::constant(m_.ring(), 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Polynomial acc(m_.ring());
    bool negative = false;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if ((mask & (std::uint64_t{1} << c)) == 0) continue;
      const Polynomial& entry = m_.at(rows_[r], cols_[c]);
      if (!entry.is_zero()) {
        Polynomial term = entry * expand(r + 1, mask & ~(std::uint64_t{1} << c));
        if (negative) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      negative = !negative;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  const PolyMatrix& m_;
  std::span<const std::size_t> rows_;
  std::span<const std::size_t> cols_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Runs body(i) for i in [0, n), in parallel when requested; the first exception is rethrown.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body body) {
  if (exec == Execution::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(schemekit_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Polynomial subdeterminant(const PolyMatrix& m, std::span<const std::size_t> row_idx,
                          std::span<const std::size_t> col_idx) {
  if (row_idx.size() != col_idx.size()) throw DimensionMismatch("determinant of a non-square selection");
  if (row_idx.size() > 63) throw DimensionMismatch("determinant: matrix too large");
  return CofactorDet(m, row_idx, col_idx).run();
}

Polynomial det(const PolyMatrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("det of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const auto idx = iota_vec(m.rows());
  return subdeterminant(m, idx, idx);
}

PolyMatrix classical_adjoint(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("adjoint of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix adj(m.ring(), n, n);
  if (n == 1) {
    adj.set(0, 0, Polynomial::constant(m.ring(), 1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Polynomial d = subdeterminant(m, rows, cols);
      adj.set(i, j, (i + j) % 2 == 0 ? std::move(d) : -d);
    }
  }
  return adj;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

PolyMatrix exterior_power(std::size_t k, const PolyMatrix& m, Execution exec) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) {
    throw DimensionMismatch("exterior power " + std::to_string(k) + " of a " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " matrix");
  }
  const auto row_sets = k_subsets(m.rows(), k);
  const auto col_sets = k_subsets(m.cols(), k);
  std::vector<Polynomial> entries(row_sets.size() * col_sets.size(), Polynomial(m.ring()));
  for_each_index(entries.size(), exec, [&](std::size_t idx) {
    entries[idx] = subdeterminant(m, row_sets[idx / col_sets.size()], col_sets[idx % col_sets.size()]);
  });
  return {m.ring(), row_sets.size(), col_sets.size(), std::move(entries)};
}

Ideal minors(std::size_t k, const PolyMatrix& m, Execution exec) {
  const PolyMatrix e = exterior_power(k, m, exec);
  return Ideal(m.ring(), {e.entries().begin(), e.entries().end()});
}

PolyMatrix jacobian(const RingPtr& ring, std::span<const Polynomial> gens) {
  if (gens.empty()) throw DimensionMismatch("jacobian of an empty list");
  const std::size_t n = ring->num_variables();
  PolyMatrix j(ring, n, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    require_same_ring(ring, gens[c].ring(), "jacobian");
    for (std::size_t v = 0; v < n; ++v) j.set(v, c, partial_derivative(gens[c], v));
  }
  return j;
}

std::vector<Polynomial> normal_forms(std::span<const Polynomial> polys, const GroebnerBasis& basis, Execution exec) {
  std::vector<Polynomial> out(polys.size(), Polynomial(basis.ring()));
  for_each_index(polys.size(), exec, [&](std::size_t i) { out[i] = normal_form(polys[i], basis); });
  return out;
}

}  // namespace schemekit

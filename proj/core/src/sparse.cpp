#include "fracpow/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fracpow {

SparseMatrix SparseMatrix::from_triplets(long rows, long cols, std::vector<Triplet> triplets) {
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m(rows, cols);
  m.col_indices_.reserve(triplets.size());
  m.values_.reserve(triplets.size());

  std::size_t i = 0;
  while (i < triplets.size()) {
    const long r = triplets[i].row;
    const long c = triplets[i].col;
    double v = 0.0;
    while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
      v += triplets[i].value;
      ++i;
    }
    if (v != 0.0) {
      m.col_indices_.push_back(c);
      m.values_.push_back(v);
      ++m.row_offsets_[r + 1];
    }
  }
  for (long r = 0; r < rows; ++r) m.row_offsets_[r + 1] += m.row_offsets_[r];
  return m;
}

SparseMatrix SparseMatrix::sum(double a, const SparseMatrix& A, double b, const SparseMatrix& B) {
  if (A.rows_ != B.rows_ || A.cols_ != B.cols_)
    throw std::invalid_argument("SparseMatrix::sum: shape mismatch");

  SparseMatrix m(A.rows_, A.cols_);
  m.col_indices_.reserve(std::max(A.nnz(), B.nnz()));
  m.values_.reserve(std::max(A.nnz(), B.nnz()));

  for (long r = 0; r < A.rows_; ++r) {
    long ia = A.row_offsets_[r], ea = A.row_offsets_[r + 1];
    long ib = B.row_offsets_[r], eb = B.row_offsets_[r + 1];
    while (ia < ea || ib < eb) {
      long c;
      double v;
      if (ib >= eb || (ia < ea && A.col_indices_[ia] < B.col_indices_[ib])) {
        c = A.col_indices_[ia];
        v = a * A.values_[ia++];
      } else if (ia >= ea || B.col_indices_[ib] < A.col_indices_[ia]) {
        c = B.col_indices_[ib];
        v = b * B.values_[ib++];
      } else {
        c = A.col_indices_[ia];
        v = a * A.values_[ia++] + b * B.values_[ib++];
      }
      m.col_indices_.push_back(c);
      m.values_.push_back(v);
    }
    m.row_offsets_[r + 1] = static_cast<long>(m.values_.size());
  }
  return m;
}

void SparseMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
  if (static_cast<long>(x.size()) != cols_)
    throw std::invalid_argument("SparseMatrix::multiply: size mismatch");
  y.assign(rows_, 0.0);
  for (long r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (long i = row_offsets_[r]; i < row_offsets_[r + 1]; ++i)
      s += values_[i] * x[col_indices_[i]];
    y[r] = s;
  }
}

std::vector<double> SparseMatrix::multiply(const std::vector<double>& x) const {
  std::vector<double> y;
  multiply(x, y);
  return y;
}

std::vector<double> SparseMatrix::diagonal() const {
  std::vector<double> d(std::min(rows_, cols_), 0.0);
  for (long r = 0; r < static_cast<long>(d.size()); ++r) {
    for (long i = row_offsets_[r]; i < row_offsets_[r + 1]; ++i) {
      if (col_indices_[i] == r) {
        d[r] = values_[i];
        break;
      }
    }
  }
  return d;
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (long r = 0; r < rows_; ++r)
    for (long i = row_offsets_[r]; i < row_offsets_[r + 1]; ++i)
      t.push_back({col_indices_[i], r, values_[i]});
  return from_triplets(cols_, rows_, std::move(t));
}

double SparseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double SparseMatrix::asymmetry() const {
  if (rows_ != cols_) throw std::invalid_argument("asymmetry: matrix not square");
  const SparseMatrix d = sum(1.0, *this, -1.0, transposed());
  return d.max_abs();
}

std::vector<double> SparseMatrix::to_dense() const {
  std::vector<double> d(static_cast<std::size_t>(rows_) * cols_, 0.0);
  for (long r = 0; r < rows_; ++r)
    for (long i = row_offsets_[r]; i < row_offsets_[r + 1]; ++i)
      d[r * cols_ + col_indices_[i]] = values_[i];
  return d;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void write_matrix_market(const SparseMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
  char buf[80];
  for (long r = 0; r < m.rows(); ++r) {
    for (long i = m.row_offsets()[r]; i < m.row_offsets()[r + 1]; ++i) {
      std::snprintf(buf, sizeof buf, "%ld %ld %.17g\n", r + 1, m.col_indices()[i] + 1,
                    m.values()[i]);
      out << buf;
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fracpow

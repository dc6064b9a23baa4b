#pragma once

#include <string>
#include <vector>

namespace fracpow {

struct Triplet {
  long row;
  long col;
  double value;
};

/// Square or rectangular CSR matrix over doubles. After construction from
/// triplets, column indices are strictly increasing within each row,
/// duplicate contributions are summed, and entries that cancel to exact zero
/// are dropped.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols), row_offsets_(rows + 1, 0) {}

  static SparseMatrix from_triplets(long rows, long cols, std::vector<Triplet> triplets);

  /// a*A + b*B over the union of the two patterns.
  static SparseMatrix sum(double a, const SparseMatrix& A, double b, const SparseMatrix& B);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long nnz() const { return static_cast<long>(values_.size()); }

  const std::vector<long>& row_offsets() const { return row_offsets_; }
  const std::vector<long>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }

  void multiply(const std::vector<double>& x, std::vector<double>& y) const;
  std::vector<double> multiply(const std::vector<double>& x) const;

  std::vector<double> diagonal() const;
  SparseMatrix transposed() const;
  double max_abs() const;
  /// max |A - A^T| over all entries.
  double asymmetry() const;
  bool is_symmetric(double tol) const { return asymmetry() <= tol; }

  /// Row-major dense copy; meant for small oracle/test matrices.
  std::vector<double> to_dense() const;

 private:
  long rows_ = 0;
  long cols_ = 0;
  std::vector<long> row_offsets_;
  std::vector<long> col_indices_;
  std::vector<double> values_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

/// Coordinate-format export, "%%MatrixMarket matrix coordinate real general".
void write_matrix_market(const SparseMatrix& m, const std::string& path);

}  // namespace fracpow

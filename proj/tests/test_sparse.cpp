#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "fracpow/sparse.hpp"
#include "testutil.hpp"

using fracpow::SparseMatrix;
using fracpow::Triplet;

TEST_SUITE("sparse") {

TEST_CASE("triplet finalization: duplicates summed, zeros dropped, columns sorted") {
  std::vector<Triplet> t = {
      {1, 2, 0.5}, {0, 0, 1.0}, {1, 2, 0.5}, {0, 1, 2.0}, {1, 0, 3.0}, {0, 1, -2.0},
  };
  const auto m = SparseMatrix::from_triplets(2, 3, std::move(t));
  CHECK(m.nnz() == 3);  // (0,1) cancelled exactly
  CHECK(m.values()[0] == 1.0);
  for (long r = 0; r < m.rows(); ++r)
    for (long i = m.row_offsets()[r] + 1; i < m.row_offsets()[r + 1]; ++i)
      CHECK(m.col_indices()[i] > m.col_indices()[i - 1]);
}

TEST_CASE("multiply agrees with dense") {
  std::mt19937 rng(7);
  std::vector<Triplet> t;
  std::uniform_int_distribution<long> idx(0, 9);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  for (int i = 0; i < 60; ++i) t.push_back({idx(rng), idx(rng), val(rng)});
  const auto m = SparseMatrix::from_triplets(10, 10, std::move(t));
  const auto x = testutil::random_vector(10, rng);

  const auto y = m.multiply(x);
  const Eigen::VectorXd yd =
      testutil::to_eigen(m) * Eigen::Map<const Eigen::VectorXd>(x.data(), 10);
  for (int i = 0; i < 10; ++i) CHECK(y[i] == doctest::Approx(yd(i)).epsilon(1e-13));
}

TEST_CASE("transpose and pattern-union sum") {
  std::vector<Triplet> ta = {{0, 0, 1.0}, {0, 2, 2.0}, {2, 1, -1.0}};
  std::vector<Triplet> tb = {{0, 1, 4.0}, {0, 2, 1.0}, {1, 1, 5.0}};
  const auto a = SparseMatrix::from_triplets(3, 3, std::move(ta));
  const auto b = SparseMatrix::from_triplets(3, 3, std::move(tb));

  const auto s = SparseMatrix::sum(2.0, a, -1.0, b);
  const auto sd = testutil::to_eigen(s);
  const Eigen::MatrixXd expect = 2.0 * testutil::to_eigen(a) - testutil::to_eigen(b);
  CHECK((sd - expect).cwiseAbs().maxCoeff() == 0.0);

  const auto at = a.transposed();
  CHECK((testutil::to_eigen(at) - testutil::to_eigen(a).transpose()).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("diagonal and asymmetry") {
  std::vector<Triplet> t = {{0, 0, 2.0}, {1, 1, 3.0}, {0, 1, 1.0}, {1, 0, 1.0}};
  const auto sym = SparseMatrix::from_triplets(2, 2, std::move(t));
  CHECK(sym.diagonal()[0] == 2.0);
  CHECK(sym.diagonal()[1] == 3.0);
  CHECK(sym.asymmetry() == 0.0);
  CHECK(sym.is_symmetric(0.0));

  std::vector<Triplet> t2 = {{0, 1, 1.0}, {1, 0, -1.0}};
  const auto skew = SparseMatrix::from_triplets(2, 2, std::move(t2));
  CHECK(skew.asymmetry() == doctest::Approx(2.0));
}

TEST_CASE("matrix market export") {
  std::vector<Triplet> t = {{0, 0, 1.5}, {2, 1, -2.25}};
  const auto m = SparseMatrix::from_triplets(3, 2, std::move(t));
  const std::string path = "mm_test.mtx";
  fracpow::write_matrix_market(m, path);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "%%MatrixMarket matrix coordinate real general");
  long rows, cols, nnz;
  in >> rows >> cols >> nnz;
  CHECK(rows == 3);
  CHECK(cols == 2);
  CHECK(nnz == 2);
  long r, c;
  double v;
  in >> r >> c >> v;
  CHECK(r == 1);
  CHECK(c == 1);
  CHECK(v == 1.5);
  in >> r >> c >> v;
  CHECK(r == 3);
  CHECK(c == 2);
  CHECK(v == -2.25);
  in.close();
  std::remove(path.c_str());
}

}  // TEST_SUITE

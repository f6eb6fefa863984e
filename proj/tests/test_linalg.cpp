#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dginv/generators.hpp"
#include "dginv/linalg.hpp"
#include "fixtures.hpp"

using dginv::Matrix;

TEST_CASE("rank of fixed matrices") {
  CHECK(dginv::rank(Matrix(4, 4)) == 0);
  CHECK(dginv::rank(Matrix::identity(5)) == 5);
  CHECK(dginv::rank(fixtures::mixed5()) == 4);
}

TEST_CASE("rank equals rank of the transpose") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    int m = 2 + static_cast<int>(rng() % 5);
    Matrix a(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        a(i, j) = static_cast<long long>(rng() % 7) - 3;
    CHECK(dginv::rank(a) == dginv::rank(a.transpose()));
  }
}

TEST_CASE("group inverse of a nonsingular matrix is its inverse") {
  Matrix a = Matrix::from_rows({{0, 2}, {3, 0}});
  Matrix x = dginv::group_inverse_oracle(a);
  Matrix expected(2, 2);
  expected(0, 1) = dginv::make_rational(1, 3);
  expected(1, 0) = dginv::make_rational(1, 2);
  CHECK(x == expected);
  CHECK(*dginv::inverse(a) == expected);
}

TEST_CASE("nilpotent matrix has no group inverse") {
  CHECK_THROWS_AS(dginv::group_inverse_oracle(Matrix::from_rows({{0, 1}, {0, 0}})),
                  dginv::NoGroupInverse);
}

TEST_CASE("zero matrix is its own group inverse") {
  CHECK(dginv::group_inverse_oracle(Matrix(3, 3)) == Matrix(3, 3));
}

TEST_CASE("oracle reproduces the known 5x5 inverse") {
  CHECK(dginv::group_inverse_oracle(fixtures::symmetric5()) == fixtures::symmetric5_inverse());
}

TEST_CASE("axiom verdicts") {
  auto all_true = dginv::verify_group_axioms(fixtures::mixed5(), fixtures::mixed5_inverse());
  CHECK(all_true.all());

  auto id = dginv::verify_group_axioms(Matrix::identity(4), Matrix::identity(4));
  CHECK(id.all());

  Matrix a = fixtures::classd10();
  auto wrong = dginv::verify_group_axioms(a, a.transpose());
  CHECK_FALSE(wrong.all());

  CHECK_THROWS_AS(dginv::verify_group_axioms(Matrix(2, 2), Matrix(3, 3)),
                  dginv::DimensionError);
}

TEST_CASE("oracle output satisfies the axioms whenever it exists") {
  dginv::GenOptions opts;
  for (int t = 0; t < 60; ++t) {
    dginv::Rng rng(1000 + t);
    Matrix a = dginv::gen_random_class_d(12, rng, opts);
    Matrix x = dginv::group_inverse_oracle(a);
    CHECK(dginv::verify_group_axioms(a, x).all());
  }
}

TEST_CASE("group inverse is invariant under relabeling conjugation") {
  std::mt19937_64 perm_rng(5);
  dginv::GenOptions opts;
  for (int t = 0; t < 25; ++t) {
    dginv::Rng rng(2000 + t);
    Matrix a = dginv::gen_random_class_d(10, rng, opts);
    Matrix x = dginv::group_inverse_oracle(a);

    auto perm = dginv::detail::rand_permutation(perm_rng, a.rows());
    Matrix conj = a.conjugate_by_permutation(perm);
    Matrix y_conj = dginv::group_inverse_oracle(conj);
    Matrix y(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) y(perm[i], perm[j]) = y_conj(i, j);
    CHECK(y == x);  // uniqueness: both satisfy the axioms for A
  }
}

#include <numeric>

#include "doctest.h"
#include "gen.hpp"
#include "regkt/zlattice.hpp"

using namespace regkt;

namespace {

DenseMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  DenseMatrix m;
  for (const auto& r : rows) {
    DenseRow row;
    for (long x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows, std::size_t cols) {
  return IntMatrix::from_dense(mat(rows), cols);
}

// Determinant by cofactor expansion, for the minor oracle.
Integer cofactor_det(const DenseMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    DenseMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      DenseRow row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    Integer c = m[0][j] * cofactor_det(sub);
    d += (j % 2 ? -c : c);
  }
  return d;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// k-th determinantal divisor: gcd of all k x k minors.
Integer determinantal_divisor(const DenseMatrix& m, std::size_t cols, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.size(), k, 0, cur, rs);
  subsets(cols, k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      DenseMatrix sub;
      for (auto i : r) {
        DenseRow row;
        for (auto j : c) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(cofactor_det(sub))).get_mpz_t());
    }
  return g;
}

DenseMatrix random_matrix(std::mt19937_64& r, std::size_t rows, std::size_t cols, long range) {
  DenseMatrix m(rows, DenseRow(cols));
  for (auto& row : m)
    for (auto& x : row) x = long(r() % (2 * range + 1)) - range;
  return m;
}

DenseMatrix random_unimodular(std::mt19937_64& r, std::size_t n) {
  DenseMatrix u = identity_matrix(n);
  for (int t = 0; t < 6; ++t) {
    std::size_t i = r() % n, j = r() % n;
    if (i == j) continue;
    long k = long(r() % 5) - 2;
    for (std::size_t c = 0; c < n; ++c) u[i][c] += k * u[j][c];
  }
  return u;
}

}  // namespace

TEST_SUITE("zlattice") {
  TEST_CASE("worked examples") {
    CHECK(smith_diagonal(mat({{2, 0}, {0, 3}}), 2) == std::vector<Integer>{1, 6});
    CHECK(cokernel_structure(imat({{2, 0}, {0, 2}, {1, 1}}, 2)).to_string() == "Z/2");
    CHECK(subgroup_in_quotient(imat({{4, 0}}, 2), imat({{2, 0}}, 2)).to_string() == "Z/2");
    CHECK(cokernel_structure(IntMatrix(2)).to_string() == "Z^2");
    CHECK(cokernel_structure(imat({{1, 0}, {0, 1}}, 2)).to_string() == "0");
    CHECK(cokernel_structure(imat({{2, 0}, {0, 4}}, 2)).to_string() == "Z/2 x Z/4");
  }

  TEST_CASE("Smith form against determinantal divisors") {
    auto& r = testing::rng();
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + r() % 3, cols = 1 + r() % 3;
      auto m = random_matrix(r, rows, cols, 6);
      auto d = smith_diagonal(m, cols);
      REQUIRE(d.size() == std::min(rows, cols));
      Integer prod = 1;
      for (std::size_t k = 1; k <= d.size(); ++k) {
        prod *= d[k - 1];
        CHECK(abs(prod) == determinantal_divisor(m, cols, k));
        if (k >= 2 && d[k - 1] != 0) CHECK(d[k - 1] % d[k - 2] == 0);
      }
      auto sf = smith_normal_form(m, cols);
      CHECK(is_unimodular(sf.U));
      CHECK(is_unimodular(sf.V));
      CHECK(multiply(multiply(sf.U, m, rows), sf.V, cols) == sf.S);
    }
  }

  TEST_CASE("Hermite form is a lattice invariant") {
    auto& r = testing::rng();
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + r() % 4, cols = 1 + r() % 3;
      auto m = random_matrix(r, rows, cols, 5);
      auto u = random_unimodular(r, rows);
      CHECK(hermite_normal_form(m, cols) == hermite_normal_form(multiply(u, m, rows), cols));
      EchelonLattice lat(cols);
      for (const auto& row : m) lat.insert(row);
      CHECK(lat.hermite() == hermite_normal_form(m, cols));
      for (const auto& row : m) CHECK(lat.contains(row));
    }
  }

  TEST_CASE("left kernel") {
    auto& r = testing::rng();
    for (int t = 0; t < 40; ++t) {
      const std::size_t rows = 1 + r() % 4, cols = 1 + r() % 3;
      auto m = random_matrix(r, rows, cols, 4);
      auto k = left_kernel(m, cols);
      if (!k.empty()) {
        auto prod = multiply(k, m, rows);
        for (const auto& row : prod)
          for (const auto& x : row) CHECK(x == 0);
      }
      std::size_t rank = 0;
      {
        EchelonLattice lat(cols);
        for (const auto& row : m) lat.insert(row);
        rank = lat.rank();
      }
      CHECK(k.size() == rows - rank);
    }
  }

  TEST_CASE("subquotient coordinates") {
    // Z^2 / <(4,0),(0,6)> with numerator <(2,0),(0,3)>: Z/2 x Z/2.
    Subquotient sq(imat({{4, 0}, {0, 6}}, 2), imat({{2, 0}, {0, 3}}, 2));
    CHECK(sq.structure().to_string() == "Z/2 x Z/2");
    CHECK(sq.in_numerator(SparseRow::from_dense({2, 3})));
    CHECK_FALSE(sq.in_numerator(SparseRow::from_dense({1, 0})));
    CHECK(sq.is_zero(SparseRow::from_dense({4, 6})));
    CHECK_FALSE(sq.is_zero(SparseRow::from_dense({2, 0})));
  }

  TEST_CASE("injectivity of diagonal maps") {
    CHECK(is_injective_map({2}, mat({{2}}), {4}));
    CHECK_FALSE(is_injective_map({4}, mat({{1}}), {2}));
    CHECK(is_injective_map({0}, mat({{3}}), {0}));
    CHECK_FALSE(is_injective_map({0}, mat({{0}}), {0}));
  }

  TEST_CASE("unit pivot elimination keeps the cokernel") {
    auto& r = testing::rng();
    for (int t = 0; t < 40; ++t) {
      const std::size_t rows = 1 + r() % 5, cols = 1 + r() % 4;
      auto m = IntMatrix::from_dense(random_matrix(r, rows, cols, 3), cols);
      auto direct = smith_diagonal(m.dense(), cols);
      std::vector<Integer> tors;
      std::size_t zeros = cols;
      for (const auto& x : direct)
        if (x != 0) {
          --zeros;
          if (abs(x) != 1) tors.push_back(abs(x));
        }
      auto s = cokernel_structure(m);
      CHECK(s.free_rank == zeros);
      CHECK(s.torsion == tors);
    }
  }
}

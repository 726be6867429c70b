#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "capelli/indexing.hpp"
#include "capelli/nc_matrix.hpp"
#include "capelli/weyl.hpp"

using namespace capelli;

namespace {

// Independent oracle: cofactor-expansion determinant for commutative entries.
Polynomial brute_det(const NcMatrix<Polynomial>& a, std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return a.witness().one_like();
  Polynomial acc = a.witness().zero_like();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<int> rest_rows;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (t != k) rest_rows.push_back(rows[t]);
    }
    std::vector<int> rest_cols(cols.begin() + 1, cols.end());
    Polynomial minor = a.at(rows[k], cols[0]) * brute_det(a, rest_rows, rest_cols);
    acc += (k % 2 == 0) ? minor : -minor;
  }
  return acc;
}

Polynomial brute_per(const NcMatrix<Polynomial>& a, std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return a.witness().one_like();
  Polynomial acc = a.witness().zero_like();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<int> rest_rows;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (t != k) rest_rows.push_back(rows[t]);
    }
    std::vector<int> rest_cols(cols.begin() + 1, cols.end());
    acc += a.at(rows[k], cols[0]) * brute_per(a, rest_rows, rest_cols);
  }
  return acc;
}

std::vector<int> iota1(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

NcMatrix<Polynomial> variable_matrix(int rows, int cols, int var_offset, int total_vars) {
  return NcMatrix<Polynomial>::build(rows, cols, [&](int i, int j) {
    return Polynomial::variable(total_vars, var_offset + (i - 1) * cols + (j - 1));
  });
}

NcMatrix<Polynomial> random_scalar_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<long> val(-5, 5);
  return NcMatrix<Polynomial>::build(rows, cols, [&](int, int) {
    return Polynomial::constant(1, Scalar(val(rng)));
  });
}

}  // namespace

TEST_CASE("inversion count") {
  CHECK(inversion_count(IndexSet({1, 3}), IndexSet({2, 4})) == 1);
  CHECK(inversion_count(IndexSet({2}), IndexSet({1})) == 1);
  CHECK(inversion_count(IndexSet({1, 2, 5}), IndexSet()) == 0);
  CHECK_THROWS_AS(inversion_count(IndexSet({1, 2}), IndexSet({2, 3})), std::invalid_argument);
}

TEST_CASE("multiset factorial") {
  CHECK(multiset_factorial(MultiIndex({1, 1, 2})) == 2);
  CHECK(multiset_factorial(MultiIndex({1, 2, 3})) == 1);
  CHECK(multiset_factorial(MultiIndex({2, 2, 2})) == 6);
  CHECK(multiset_factorial(MultiIndex()) == 1);
}

TEST_CASE("comb and bcomb enumeration") {
  auto c = comb(4, 2);
  CHECK(c.size() == 6);
  CHECK(c.front() == IndexSet({1, 2}));
  CHECK(c.back() == IndexSet({3, 4}));
  for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK(c[i] < c[i + 1]);

  auto b = bcomb(2, 2);
  CHECK(b.size() == 3);
  CHECK(b[0] == MultiIndex({1, 1}));
  CHECK(b[1] == MultiIndex({1, 2}));
  CHECK(b[2] == MultiIndex({2, 2}));

  CHECK(comb(3, 0).size() == 1);
  CHECK(bcomb(3, 0).size() == 1);
  CHECK(comb(2, 3).empty());
}

TEST_CASE("splits") {
  auto ss = subset_splits(IndexSet({1, 3, 4}), 1);
  CHECK(ss.size() == 3);
  CHECK(ss[0].first == IndexSet({1}));
  CHECK(ss[0].second == IndexSet({3, 4}));

  auto ms = multiset_splits(MultiIndex({1, 1, 2}), 1);
  CHECK(ms.size() == 2);  // {1} and {2}, each once
  CHECK(ms[0].first == MultiIndex({1}));
  CHECK(ms[0].second == MultiIndex({1, 2}));
  CHECK(ms[1].first == MultiIndex({2}));
  CHECK(ms[1].second == MultiIndex({1, 1}));
}

TEST_CASE("submatrix access with duplicates") {
  auto a = variable_matrix(3, 3, 0, 9);
  // rows {1,3}, cols {2,3} picks [[a12,a13],[a32,a33]]
  CHECK(a.at(1, 2) == Polynomial::variable(9, 1));
  const std::vector<int> rows{1, 3}, cols{2, 3};
  auto sub = a.submatrix(rows, cols);
  CHECK(sub.rows() == 2);
  CHECK(sub.at(1, 1) == a.at(1, 2));
  CHECK(sub.at(2, 2) == a.at(3, 3));
  CHECK(col_det_param(a, rows, cols) ==
        a.at(1, 2) * a.at(3, 3) - a.at(3, 2) * a.at(1, 3));

  // full index set reproduces the matrix
  auto full = a.submatrix(iota1(3), iota1(3));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(full.at(i, j) == a.at(i, j));

  NcMatrix<Polynomial> single(1, 1, Polynomial::variable(1, 0));
  const std::vector<int> dup{1, 1};
  auto dup_mat = single.submatrix(dup, dup);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(dup_mat.at(i, j) == single.at(1, 1));
  CHECK(per_param(single, dup, dup) == (single.at(1, 1) * single.at(1, 1)).scaled(Scalar(2)));
  CHECK_THROWS_AS(a.submatrix({1, 4}, {1, 2}), std::out_of_range);
}

TEST_CASE("column determinant with parameters, noncommutative order") {
  // [[a,b],[c,d]] with u: (a+u1)(d+u2) - c b, c preceding b.
  const int nv = 4;
  auto a = NcMatrix<WeylElement>::build(2, 2, [&](int i, int j) {
    const int idx = (i - 1) * 2 + (j - 1);
    return idx % 2 == 0 ? WeylElement::variable(nv, idx / 2) : WeylElement::derivative(nv, idx / 2);
  });
  // entries: a=x0, b=d0, c=x1, d=d1
  std::vector<Rational> u{Rational(2), Rational(-1)};
  WeylElement lhs = col_det_param(a, iota1(2), iota1(2), u);
  WeylElement one = WeylElement::constant(nv, Scalar(1));
  WeylElement expected = (a.at(1, 1) + one.scaled(Scalar(Rational(2)))) *
                             (a.at(2, 2) - one) -
                         a.at(2, 1) * a.at(1, 2);
  CHECK(lhs == expected);
}

TEST_CASE("diagonal Weyl determinant d then x") {
  const int nv = 2;
  auto a = NcMatrix<WeylElement>(2, 2, WeylElement(nv));
  a.at(1, 1) = WeylElement::derivative(nv, 0);
  a.at(2, 2) = WeylElement::variable(nv, 0);
  WeylElement det = col_det_param(a, iota1(2), iota1(2));
  WeylElement expected = WeylElement::variable(nv, 0) * WeylElement::derivative(nv, 0) +
                         WeylElement::constant(nv, Scalar(1));
  CHECK(det == expected);
}

TEST_CASE("col det equals brute-force determinant on commutative entries") {
  std::mt19937_64 rng(101);
  for (int n = 1; n <= 3; ++n) {
    auto a = variable_matrix(n, n, 0, n * n);
    CHECK(col_det_param(a, iota1(n), iota1(n)) == brute_det(a, iota1(n), iota1(n)));
    CHECK(sym_det_param(a, iota1(n), iota1(n)) == brute_det(a, iota1(n), iota1(n)));
  }
  for (int t = 0; t < 5; ++t) {
    auto a = random_scalar_matrix(rng, 4, 4);
    CHECK(col_det_param(a, iota1(4), iota1(4)) == brute_det(a, iota1(4), iota1(4)));
  }
}

TEST_CASE("symmetrized determinant examples") {
  const int nv = 4;
  auto a = NcMatrix<WeylElement>::build(2, 2, [&](int i, int j) {
    const int idx = (i - 1) * 2 + (j - 1);
    return idx % 2 == 0 ? WeylElement::variable(nv, idx / 2) : WeylElement::derivative(nv, idx / 2);
  });
  // 1/2 (ad + da - bc - cb)
  WeylElement expected = (a.at(1, 1) * a.at(2, 2) + a.at(2, 2) * a.at(1, 1) -
                          a.at(1, 2) * a.at(2, 1) - a.at(2, 1) * a.at(1, 2))
                             .scaled(Scalar(Rational(1, 2)));
  CHECK(sym_det_param(a, iota1(2), iota1(2)) == expected);

  NcMatrix<WeylElement> single(1, 1, WeylElement::variable(1, 0));
  std::vector<Rational> u{Rational(5)};
  CHECK(sym_det_param(single, iota1(1), iota1(1), u) ==
        WeylElement::variable(1, 0) + WeylElement::constant(1, Scalar(5)));
}

TEST_CASE("Det_{p,q} minor with uneven shift") {
  // p=q=1, diagonal B, I=J={1,2}, u=(1,0):
  //   1/2 ((b1+1) b2 + (b2-1) b1)  with eps = diag(-1, 1).
  auto b = NcMatrix<Polynomial>(2, 2, Polynomial::zero(2));
  b.at(1, 1) = Polynomial::variable(2, 0);
  b.at(2, 2) = Polynomial::variable(2, 1);
  std::vector<Rational> u{Rational(1), Rational(0)};
  Polynomial b1 = b.at(1, 1), b2 = b.at(2, 2);
  Polynomial one = Polynomial::constant(2, Scalar(1));
  Polynomial expected =
      ((b1 + one) * b2 + (b2 - one) * b1).scaled(Scalar(Rational(1, 2)));
  CHECK(det_pq(b, iota1(2), iota1(2), u, 1, 1) == expected);

  // u = 0 recovers the symmetrized determinant of the block.
  auto c = variable_matrix(3, 3, 0, 9);
  std::vector<int> idx{1, 3};
  std::vector<Rational> zero_u{Rational(0), Rational(0)};
  CHECK(det_pq(c, idx, idx, zero_u, 2, 1) == sym_det_param(c, idx, idx));

  // q = 0 turns -u eps into +u.
  std::vector<Rational> u2{Rational(3), Rational(7)};
  CHECK(det_pq(c, idx, idx, u2, 3, 0) == sym_det_param(c, idx, idx, u2));
}

TEST_CASE("permanents") {
  auto a = NcMatrix<Polynomial>(2, 2, Polynomial::zero(1));
  a.at(1, 1) = Polynomial::constant(1, Scalar(1));
  a.at(1, 2) = Polynomial::constant(1, Scalar(2));
  a.at(2, 1) = Polynomial::constant(1, Scalar(3));
  a.at(2, 2) = Polynomial::constant(1, Scalar(4));
  CHECK(per_param(a, iota1(2), iota1(2)) == Polynomial::constant(1, Scalar(10)));

  std::mt19937_64 rng(55);
  auto r = variable_matrix(3, 3, 0, 9);
  CHECK(per_param(r, iota1(3), iota1(3)) == brute_per(r, iota1(3), iota1(3)));
  CHECK(sym_per(r, iota1(3), iota1(3)) == brute_per(r, iota1(3), iota1(3)));

  // symmetrized permanent of a noncommutative 2x2: 1/2 (ad + da + bc + cb)
  const int nv = 4;
  auto w = NcMatrix<WeylElement>::build(2, 2, [&](int i, int j) {
    const int idx = (i - 1) * 2 + (j - 1);
    return idx % 2 == 0 ? WeylElement::variable(nv, idx / 2) : WeylElement::derivative(nv, idx / 2);
  });
  WeylElement expected = (w.at(1, 1) * w.at(2, 2) + w.at(2, 2) * w.at(1, 1) +
                          w.at(1, 2) * w.at(2, 1) + w.at(2, 1) * w.at(1, 2))
                             .scaled(Scalar(Rational(1, 2)));
  CHECK(sym_per(w, iota1(2), iota1(2)) == expected);
  NcMatrix<WeylElement> single(1, 1, WeylElement::variable(1, 0));
  CHECK(sym_per(single, iota1(1), iota1(1)) == WeylElement::variable(1, 0));
}

TEST_CASE("Cauchy-Binet at the symbol level") {
  // For commutative A, B (m x n): sum_J det A_{S,J} det B_{T,J} = det(A tB)_{S,T}.
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const int nv = 2 * m * n;
      auto a = variable_matrix(m, n, 0, nv);
      auto b = variable_matrix(m, n, m * n, nv);
      auto atb = a * b.transposed();  // m x m; entries commute
      for (int d = 1; d <= std::min({m, n, 3}); ++d) {
        for (const IndexSet& s : comb(m, d)) {
          for (const IndexSet& t : comb(m, d)) {
            Polynomial lhs = Polynomial::zero(nv);
            for (const IndexSet& j : comb(n, d)) {
              lhs += col_det_param(a, s.v, j.v) * col_det_param(b, t.v, j.v);
            }
            // det(A tB)_{S,T}: rows S of A tB, cols T -> (A tB)_{s,t} = sum_j a_{s,j} b_{t,j}
            Polynomial rhs = brute_det(atb, s.v, t.v);
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
  // and a larger random-scalar sweep at m = n = 4, d <= 3
  std::mt19937_64 rng(77);
  auto a = random_scalar_matrix(rng, 4, 4);
  auto b = random_scalar_matrix(rng, 4, 4);
  auto atb = a * b.transposed();
  for (int d = 1; d <= 3; ++d) {
    for (const IndexSet& s : comb(4, d)) {
      for (const IndexSet& t : comb(4, d)) {
        Polynomial lhs = Polynomial::zero(1);
        for (const IndexSet& j : comb(4, d)) {
          lhs += col_det_param(a, s.v, j.v) * col_det_param(b, t.v, j.v);
        }
        CHECK(lhs == brute_det(atb, s.v, t.v));
      }
    }
  }
}

TEST_CASE("Laplace-type expansion of det(A+B)") {
  for (int n = 1; n <= 4; ++n) {
    const int nv = 2 * n * n;
    NcMatrix<Polynomial> a = n <= 3 ? variable_matrix(n, n, 0, nv)
                                    : [&] {
                                        std::mt19937_64 rng(99);
                                        return random_scalar_matrix(rng, 4, 4);
                                      }();
    NcMatrix<Polynomial> b = n <= 3 ? variable_matrix(n, n, n * n, nv)
                                    : [&] {
                                        std::mt19937_64 rng(100);
                                        return random_scalar_matrix(rng, 4, 4);
                                      }();
    Polynomial lhs = brute_det(a + b, iota1(n), iota1(n));
    Polynomial rhs = a.witness().zero_like();
    const IndexSet full(iota1(n));
    for (int l = 0; l <= n; ++l) {
      for (const auto& [s1, s2] : subset_splits(full, l)) {
        for (const auto& [t1, t2] : subset_splits(full, l)) {
          const long sgn = inversion_count(s1, s2) + inversion_count(t1, t2);
          Polynomial term = col_det_param(a, s1.v, t1.v) * col_det_param(b, s2.v, t2.v);
          rhs += (sgn % 2 == 0) ? term : -term;
        }
      }
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("determinants are linear in each entry slot") {
  // Every permutation product uses a slot at most once, so the value is
  // affine in that slot: f(u+v) + f(0) = f(u) + f(v).
  std::mt19937_64 rng(123);
  auto a = random_scalar_matrix(rng, 3, 3);
  Polynomial u = Polynomial::constant(1, Scalar(4));
  Polynomial v = Polynomial::constant(1, Scalar(-7));
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      auto at_u = a, at_v = a, at_sum = a, at_zero = a;
      at_u.at(r, c) = u;
      at_v.at(r, c) = v;
      at_sum.at(r, c) = u + v;
      at_zero.at(r, c) = Polynomial::zero(1);
      auto check_affine = [&](auto&& f) {
        CHECK(f(at_sum) + f(at_zero) == f(at_u) + f(at_v));
      };
      check_affine([](const auto& m) { return col_det_param(m, iota1(3), iota1(3)); });
      check_affine([](const auto& m) { return sym_det_param(m, iota1(3), iota1(3)); });
      check_affine([](const auto& m) { return per_param(m, iota1(3), iota1(3)); });
      check_affine([](const auto& m) { return sym_per(m, iota1(3), iota1(3)); });
    }
  }
  // Splitting an entire row is genuinely linear.
  auto b = random_scalar_matrix(rng, 3, 3);
  auto row_sum = a;
  for (int c = 1; c <= 3; ++c) row_sum.at(2, c) = a.at(2, c) + b.at(2, c);
  auto row_b = a;
  for (int c = 1; c <= 3; ++c) row_b.at(2, c) = b.at(2, c);
  CHECK(col_det_param(row_sum, iota1(3), iota1(3)) ==
        col_det_param(a, iota1(3), iota1(3)) + col_det_param(row_b, iota1(3), iota1(3)));
}

TEST_CASE("shape errors") {
  NcMatrix<Polynomial> a(2, 3, Polynomial::zero(1));
  CHECK_THROWS_AS(col_det(a), std::invalid_argument);
  CHECK_THROWS_AS(a.at(3, 1), std::out_of_range);
  std::vector<Rational> u{Rational(1)};
  CHECK_THROWS_AS(col_det_param(a, {1, 2}, {1, 2}, u), std::invalid_argument);
}

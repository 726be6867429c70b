#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/coeffs.hpp"
#include "capelli/indexing.hpp"

using namespace capelli;

namespace {

// Brute-force count of surjections {1..d} -> {1..b}; c^d_{0,b} counts these.
long count_surjections(int d, int b) {
  if (b == 0) return d == 0 ? 1 : 0;
  long count = 0;
  std::vector<int> f(d, 1);
  while (true) {
    std::vector<bool> hit(b + 1, false);
    for (int v : f) hit[v] = true;
    bool onto = true;
    for (int v = 1; v <= b; ++v) onto = onto && hit[v];
    if (onto) ++count;
    int i = 0;
    while (i < d && f[i] == b) f[i++] = 1;
    if (i == d) break;
    ++f[i];
  }
  return count;
}

}  // namespace

TEST_CASE("c coefficient basics") {
  CHECK(c_coeff(0, 0, 0) == 1);
  CHECK(c_coeff(2, 1, 1) == 2);
  CHECK(c_coeff(2, 0, 2) == 2);
  CHECK(c_coeff(3, 0, 0) == 0);
}

TEST_CASE("c^d_{0,b} counts surjections") {
  for (int d = 0; d <= 5; ++d) {
    for (int b = 0; b <= 5; ++b) {
      CHECK(c_coeff(d, 0, b) == count_surjections(d, b));
    }
  }
}

TEST_CASE("b coefficient small values") {
  CHECK(b_coeff(0, 0, 0) == Rational(1));
  CHECK(b_coeff(1, 1, 0) == Rational(1));
  CHECK(b_coeff(1, 0, 0) == Rational(0));
  CHECK(b_coeff(2, 2, 0) == Rational(1));
  CHECK(b_coeff(2, 0, 1) == Rational(1));
  // all other b^2 vanish
  for (int u = 0; u <= 2; ++u) {
    for (int v = 0; u + v <= 2; ++v) {
      if ((u == 2 && v == 0) || (u == 0 && v == 1)) continue;
      CHECK(b_coeff(2, u, v) == Rational(0));
    }
  }
  CHECK(b_coeff(3, -1, 0) == Rational(0));
  CHECK(b_coeff(3, 0, -2) == Rational(0));
}

TEST_CASE("b vanishes above the diagonal u+v > d") {
  for (int d = 0; d <= 6; ++d) {
    for (int u = 0; u <= 8; ++u) {
      for (int v = 0; v <= 8; ++v) {
        if (u + v > d) CHECK(b_coeff(d, u, v) == Rational(0));
      }
    }
  }
}

TEST_CASE("three-way agreement of the b methods up to d = 8") {
  for (int d = 0; d <= 8; ++d) {
    for (int u = 0; u <= 8; ++u) {
      for (int v = 0; v <= 8; ++v) {
        const Rational r = b_coeff(d, u, v, BMethod::Recurrence);
        const Rational c1 = b_coeff(d, u, v, BMethod::Closed1);
        const Rational c2 = b_coeff(d, u, v, BMethod::Closed2);
        CHECK(r == c1);
        CHECK(r == c2);
        CHECK(r.is_integer());
      }
    }
  }
}

TEST_CASE("epsilon closed form basics") {
  CHECK(epsilon_coeff(0, 0, 0, 0) == 1);
  CHECK(epsilon_coeff(1, 0, 0, 1) == -1);
  for (int alpha = 0; alpha <= 3; ++alpha) {
    for (int beta = 0; beta <= 3; ++beta) {
      for (int u = 0; u <= 4; ++u) {
        CHECK(epsilon_coeff(alpha, beta, u, 0) == factorial(u));
      }
    }
  }
  CHECK(epsilon_coeff(-1, 0, 0, 0) == 0);
  CHECK(epsilon_coeff(0, 0, -1, 0) == 0);
}

TEST_CASE("epsilon brute force examples") {
  CHECK(epsilon_bruteforce(IndexSet({1, 2}), 1, 1, 1, 1) == 0);
  CHECK(epsilon_bruteforce(IndexSet({1}), 0, 1, 1, 0) == -1);
  CHECK(epsilon_bruteforce(IndexSet({1, 2, 3}), 3, 0, 2, 1) == 6);
}

TEST_CASE("epsilon brute force equals the closed form for p+q <= 5") {
  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; p + q <= 5; ++q) {
      if (p + q == 0) continue;
      for (int w = 0; w <= p + q; ++w) {
        for (const IndexSet& j : comb(p + q, w)) {
          int alpha = 0;
          for (int v : j.v) alpha += v <= p ? 1 : 0;
          for (int u = 0; u <= w; ++u) {
            CHECK(epsilon_bruteforce(j, u, w - u, p, q) ==
                  epsilon_coeff(alpha, w - alpha, u, w - u));
          }
        }
      }
    }
  }
}

TEST_CASE("combined identity c = sum b eps") {
  // hand-expanded instance: d=2, alpha=beta=1
  Rational sum(0);
  for (int u = 0; u <= 2; ++u) {
    sum += b_coeff(2, u, 2 - u) * Rational(epsilon_coeff(1, 1, u, 2 - u));
  }
  CHECK(sum == Rational(2));
  CHECK(sum == Rational(c_coeff(2, 1, 1)));

  auto rep = verify_cbe_identity(8);
  CHECK(rep.ok);
  CHECK(rep.counterexample.empty());
}

TEST_CASE("intermediate closed form agrees for d <= 4") {
  for (int d = 0; d <= 4; ++d) {
    for (int alpha = 0; alpha <= 4; ++alpha) {
      for (int beta = 0; alpha + beta <= 4; ++beta) {
        Rational sum(0);
        for (int u = 0; u <= alpha + beta; ++u) {
          sum += b_coeff(d, u, alpha + beta - u) *
                 Rational(epsilon_coeff(alpha, beta, u, alpha + beta - u));
        }
        CHECK(cbe_combined_closed_form(d, alpha, beta) == sum);
        CHECK(cbe_combined_closed_form(d, alpha, beta) == Rational(c_coeff(d, alpha, beta)));
      }
    }
  }
}

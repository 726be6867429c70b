#include "capelli/coeffs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace capelli {

namespace {

// (b)^d with 0^0 = 1, allowing negative bases.
BigInt signed_pow(long base, int d) {
  BigInt b(base);
  return int_pow(b, d);
}

}  // namespace

BigInt c_coeff(int d, int alpha, int beta) {
  if (d < 0 || alpha < 0 || beta < 0) throw std::invalid_argument("c_coeff: negative argument");
  BigInt sum = 0;
  for (int k = 0; k <= alpha + beta; ++k) {
    BigInt term = binomial(alpha + beta, k) * signed_pow(beta - k, d);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

namespace {

// Dense recurrence table: b^{d+1}_{u,v} = b^d_{u-1,v} + (u+1) b^d_{u+1,v-1}
//                                         + (v+1) b^d_{u-1,v+1}.
class BTable {
 public:
  const BigInt& get(int d, int u, int v) {
    static const BigInt zero = 0;
    if (u < 0 || v < 0 || u + v > d) return zero;
    while (static_cast<int>(rows_.size()) <= d) grow();
    return rows_[d][idx(d, u, v)];
  }

 private:
  static std::size_t idx(int d, int u, int v) {
    return static_cast<std::size_t>(u) * (d + 1) + v;
  }

  void grow() {
    const int d = static_cast<int>(rows_.size());
    std::vector<BigInt> row(static_cast<std::size_t>(d + 1) * (d + 1), BigInt(0));
    if (d == 0) {
      row[idx(0, 0, 0)] = 1;
    } else {
      const std::vector<BigInt>& prev = rows_[d - 1];
      auto prev_at = [&](int u, int v) -> BigInt {
        if (u < 0 || v < 0 || u + v > d - 1) return 0;
        return prev[static_cast<std::size_t>(u) * d + v];
      };
      for (int u = 0; u <= d; ++u) {
        for (int v = 0; u + v <= d; ++v) {
          row[idx(d, u, v)] =
              prev_at(u - 1, v) + BigInt(u + 1) * prev_at(u + 1, v - 1) + BigInt(v + 1) * prev_at(u - 1, v + 1);
        }
      }
    }
    rows_.push_back(std::move(row));
  }

  std::vector<std::vector<BigInt>> rows_;
};

Rational b_closed1(int d, int u, int v) {
  // sum over m >= 0, mu, nu of
  //   (u-v+m+2mu-2nu)^d (-1)^{m+nu} / (2^{u+v-m} u! v!) C(u,nu) C(v,m) C(v-m,mu)
  Rational sum(0);
  for (int m = 0; m <= v; ++m) {
    for (int nu = 0; nu <= u; ++nu) {
      for (int mu = 0; mu <= v - m; ++mu) {
        BigInt num = signed_pow(u - v + m + 2 * mu - 2 * nu, d) * binomial(u, nu) *
                     binomial(v, m) * binomial(v - m, mu);
        if ((m + nu) % 2 != 0) num = -num;
        BigInt den = factorial(u) * factorial(v);
        const int e = u + v - m;
        if (e >= 0) {
          den *= int_pow(BigInt(2), e);
        } else {
          num *= int_pow(BigInt(2), -e);
        }
        sum += Rational(num, den);
      }
    }
  }
  return sum;
}

Rational b_closed2(int d, int u, int v) {
  // 1/(2^{u+v} u! v!) sum_{k,l} C(2v,k) C(u,l) (-1)^{k+l} (u+v-k-2l)^d
  BigInt num = 0;
  for (int k = 0; k <= 2 * v; ++k) {
    for (int l = 0; l <= u; ++l) {
      BigInt t = binomial(2 * v, k) * binomial(u, l) * signed_pow(u + v - k - 2 * l, d);
      num += ((k + l) % 2 == 0) ? t : -t;
    }
  }
  return Rational(num, int_pow(BigInt(2), u + v) * factorial(u) * factorial(v));
}

}  // namespace

Rational b_coeff(int d, int u, int v, BMethod method) {
  if (d < 0) throw std::invalid_argument("b_coeff: negative degree");
  if (u < 0 || v < 0) return Rational(0);
  switch (method) {
    case BMethod::Recurrence: {
      static thread_local BTable table;
      return Rational(table.get(d, u, v));
    }
    case BMethod::Closed1:
      return b_closed1(d, u, v);
    case BMethod::Closed2:
      return b_closed2(d, u, v);
  }
  throw std::logic_error("b_coeff: unknown method");
}

BigInt epsilon_coeff(int alpha, int beta, int u, int v) {
  if (alpha < 0 || beta < 0 || u < 0 || v < 0) return 0;
  BigInt sum = 0;
  for (int a = 0; a <= v; ++a) {
    const int b = v - a;
    BigInt t = binomial(alpha, a) * binomial(beta, b);
    sum += (a % 2 == 0) ? t : -t;
  }
  return factorial(u) * factorial(v) * sum;
}

BigInt epsilon_bruteforce(const IndexSet& J, int u, int v, int p, int q) {
  if (u < 0 || v < 0) return 0;
  if (J.size() != u + v) throw std::invalid_argument("epsilon_bruteforce: |J| must be u+v");
  for (int j : J.v) {
    if (j < 1 || j > p + q) throw std::invalid_argument("epsilon_bruteforce: index out of range");
  }
  const int w = u + v;
  std::vector<int> perm(w);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt sum = 0;
  do {
    int val = 1;
    for (int i = u; i < w; ++i) {
      const int j = J.v[perm[i]];
      val *= (j <= p) ? -1 : 1;
    }
    sum += val;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Rational cbe_combined_closed_form(int d, int alpha, int beta) {
  // 1/2^{alpha+beta} sum_{k,l,a,b} C(alpha,a) C(beta,b) C(2a+2b,k)
  //   C(alpha+beta-a-b,l) (-1)^{k+l+a} (alpha+beta-k-2l)^d
  BigInt num = 0;
  for (int a = 0; a <= alpha; ++a) {
    for (int b = 0; b <= beta; ++b) {
      for (int k = 0; k <= 2 * a + 2 * b; ++k) {
        for (int l = 0; l <= alpha + beta - a - b; ++l) {
          BigInt t = binomial(alpha, a) * binomial(beta, b) * binomial(2 * a + 2 * b, k) *
                     binomial(alpha + beta - a - b, l) * signed_pow(alpha + beta - k - 2 * l, d);
          num += ((k + l + a) % 2 == 0) ? t : -t;
        }
      }
    }
  }
  return Rational(num, int_pow(BigInt(2), alpha + beta));
}

CbeReport verify_cbe_identity(int d_max) {
  CbeReport rep;
  for (int d = 0; d <= d_max; ++d) {
    for (int alpha = 0; alpha <= d_max; ++alpha) {
      for (int beta = 0; alpha + beta <= d_max; ++beta) {
        Rational rhs(0);
        for (int u = 0; u <= alpha + beta; ++u) {
          const int v = alpha + beta - u;
          rhs += b_coeff(d, u, v) * Rational(epsilon_coeff(alpha, beta, u, v));
        }
        if (rhs != Rational(c_coeff(d, alpha, beta))) {
          rep.ok = false;
          std::ostringstream os;
          os << "d=" << d << " alpha=" << alpha << " beta=" << beta << ": c="
             << Rational(c_coeff(d, alpha, beta)).str() << " sum=" << rhs.str();
          rep.counterexample = os.str();
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace capelli

#pragma once

#include <string>
#include <vector>

#include "capelli/indexing.hpp"
#include "capelli/scalar.hpp"

namespace capelli {

/// c^d_{alpha,beta} = sum_k C(alpha+beta, k) (beta-k)^d (-1)^k, with the
/// 0^0 = 1 convention.
BigInt c_coeff(int d, int alpha, int beta);

enum class BMethod { Recurrence, Closed1, Closed2 };

/// b^d_{u,v}: zero for negative u or v; the three methods agree and the
/// value is always an integer (the closed forms pass through rationals).
Rational b_coeff(int d, int u, int v, BMethod method = BMethod::Recurrence);

/// eps(alpha,beta; u,v) = u! v! sum_{a+b=v} (-1)^a C(alpha,a) C(beta,b);
/// zero when any of the four arguments is negative.
BigInt epsilon_coeff(int alpha, int beta, int u, int v);

/// The defining permutation sum for eps(J; u, v) over S_{u+v}, with
/// eps = diag(-1_p, 1_q) on the diagonal labels of J.
BigInt epsilon_bruteforce(const IndexSet& J, int u, int v, int p, int q);

/// Intermediate closed form for sum_{u+v=alpha+beta} b^d_{u,v} eps: a
/// fourth evaluation path used to cross-check the other three.
Rational cbe_combined_closed_form(int d, int alpha, int beta);

struct CbeReport {
  bool ok = true;
  std::string counterexample;  // empty when ok
};

/// Checks c^d_{alpha,beta} = sum_{u+v=alpha+beta} b^d_{u,v} eps(alpha,beta;u,v)
/// for all 0 <= d <= d_max and 0 <= alpha+beta <= d_max.
CbeReport verify_cbe_identity(int d_max);

}  // namespace capelli

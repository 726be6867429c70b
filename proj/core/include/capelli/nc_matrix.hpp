#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "capelli/indexing.hpp"
#include "capelli/scalar.hpp"

namespace capelli {

/// Any ring the determinant/permanent machinery can run over: Weyl
/// elements, enveloping-algebra elements, Grassmann elements or plain
/// commutative polynomials.  Scalars of the base field act via scaled().
template <class R>
concept RingElement = requires(const R& a, const R& b, const Scalar& c) {
  { a + b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.zero_like() } -> std::convertible_to<R>;
  { a.one_like() } -> std::convertible_to<R>;
  { a.scaled(c) } -> std::convertible_to<R>;
};

/// Rectangular matrix over a non-commutative ring.
template <RingElement R>
class NcMatrix {
 public:
  NcMatrix(int rows, int cols, const R& fill)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("NcMatrix: empty matrix");
  }

  /// Builds entries from a 1-based (row, col) callback.
  static NcMatrix build(int rows, int cols, const std::function<R(int, int)>& f) {
    NcMatrix m(rows, cols, f(1, 1));
    for (int i = 1; i <= rows; ++i) {
      for (int j = 1; j <= cols; ++j) m.at(i, j) = f(i, j);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// 1-based access, matching the index-set conventions.
  R& at(int i, int j) {
    check(i, j);
    return a_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
  }
  const R& at(int i, int j) const {
    check(i, j);
    return a_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
  }

  const R& witness() const { return a_.front(); }

  NcMatrix transposed() const {
    return build(cols_, rows_, [this](int i, int j) { return at(j, i); });
  }

  /// Row/column selection by 1-based labels; repeated labels duplicate
  /// rows or columns, so the result need not be a submatrix proper.
  NcMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    if (rows.empty() || cols.empty()) throw std::invalid_argument("submatrix: empty selection");
    return build(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                 [&](int i, int j) { return at(rows[i - 1], cols[j - 1]); });
  }

  friend NcMatrix operator+(const NcMatrix& x, const NcMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("NcMatrix: shape mismatch in +");
    return build(x.rows_, x.cols_, [&](int i, int j) { return x.at(i, j) + y.at(i, j); });
  }

  friend NcMatrix operator*(const NcMatrix& x, const NcMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("NcMatrix: shape mismatch in *");
    return build(x.rows_, y.cols_, [&](int i, int j) {
      R s = x.witness().zero_like();
      for (int k = 1; k <= x.cols_; ++k) s = s + x.at(i, k) * y.at(k, j);
      return s;
    });
  }

 private:
  void check(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw std::out_of_range("NcMatrix: index out of range");
  }

  int rows_, cols_;
  std::vector<R> a_;
};

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inv;
    }
  }
  return (inv % 2 == 0) ? 1 : -1;
}

template <class F>
void for_each_permutation(int d, F&& f) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

inline void check_tuple_sizes(std::size_t r, std::size_t c, std::size_t u) {
  if (r != c || (u != 0 && u != r))
    throw std::invalid_argument("determinant: row/column/parameter length mismatch");
}

}  // namespace detail

/// Entry picker with the diagonal-shift convention shared by the whole
/// zoo: the Kronecker delta compares the original row and column labels,
/// as in the submatrix-of-the-identity form of the definitions.
template <RingElement R>
R shifted_entry(const NcMatrix<R>& A, int row_label, int col_label, const Rational& u) {
  R e = A.at(row_label, col_label);
  if (!u.is_zero() && row_label == col_label) e = e + A.witness().one_like().scaled(Scalar(u));
  return e;
}

/// Column-determinant with diagonal parameters: factors multiplied
/// left-to-right in column order.  rows/cols are 1-based labels into A;
/// u may be empty (no shift) or match their length.
template <RingElement R>
R col_det_param(const NcMatrix<R>& A, const std::vector<int>& rows, const std::vector<int>& cols,
                const std::vector<Rational>& u = {}) {
  detail::check_tuple_sizes(rows.size(), cols.size(), u.size());
  const int d = static_cast<int>(rows.size());
  R acc = A.witness().zero_like();
  if (d == 0) return A.witness().one_like();
  detail::for_each_permutation(d, [&](const std::vector<int>& sigma, int sign) {
    R prod = A.witness().one_like();
    for (int k = 0; k < d; ++k) {
      Rational shift = u.empty() ? Rational(0) : u[k];
      prod = prod * shifted_entry(A, rows[sigma[k]], cols[k], shift);
    }
    acc += (sign > 0) ? prod : -prod;
  });
  return acc;
}

template <RingElement R>
R col_det(const NcMatrix<R>& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("col_det: non-square matrix");
  std::vector<int> idx(A.rows());
  std::iota(idx.begin(), idx.end(), 1);
  return col_det_param(A, idx, idx);
}

/// Symmetrized determinant with diagonal parameters:
///   (1/d!) sum_{sigma,tau} sgn(sigma) sgn(tau)
///          prod_k (A[rows[sigma(k)], cols[tau(k)]] + u_k delta).
template <RingElement R>
R sym_det_param(const NcMatrix<R>& A, const std::vector<int>& rows, const std::vector<int>& cols,
                const std::vector<Rational>& u = {}) {
  detail::check_tuple_sizes(rows.size(), cols.size(), u.size());
  const int d = static_cast<int>(rows.size());
  if (d == 0) return A.witness().one_like();
  R acc = A.witness().zero_like();
  detail::for_each_permutation(d, [&](const std::vector<int>& sigma, int ssign) {
    detail::for_each_permutation(d, [&](const std::vector<int>& tau, int tsign) {
      R prod = A.witness().one_like();
      for (int k = 0; k < d; ++k) {
        Rational shift = u.empty() ? Rational(0) : u[k];
        prod = prod * shifted_entry(A, rows[sigma[k]], cols[tau[k]], shift);
      }
      acc += (ssign * tsign > 0) ? prod : -prod;
    });
  });
  return acc.scaled(Scalar(Rational(BigInt(1), factorial(d))));
}

/// Symmetrized determinant minor with the uneven diagonal shift
/// eps = diag(-1_p, 1_q):
///   (1/d!) sum_{sigma,tau} sgn sgn prod_k (B[i_sigma(k), j_tau(k)] - u_k eps).
template <RingElement R>
R det_pq(const NcMatrix<R>& B, const std::vector<int>& I, const std::vector<int>& J,
         const std::vector<Rational>& u, int p, int q) {
  detail::check_tuple_sizes(I.size(), J.size(), u.size());
  if (B.rows() != p + q || B.cols() != p + q)
    throw std::invalid_argument("det_pq: matrix must be (p+q) x (p+q)");
  const int d = static_cast<int>(I.size());
  if (d == 0) return B.witness().one_like();
  auto eps = [p](int i, int j) -> int {
    if (i != j) return 0;
    return i <= p ? -1 : 1;
  };
  R acc = B.witness().zero_like();
  detail::for_each_permutation(d, [&](const std::vector<int>& sigma, int ssign) {
    detail::for_each_permutation(d, [&](const std::vector<int>& tau, int tsign) {
      R prod = B.witness().one_like();
      for (int k = 0; k < d; ++k) {
        const int r = I[sigma[k]], c = J[tau[k]];
        R e = B.at(r, c);
        Rational shift = (u.empty() ? Rational(0) : u[k]) * Rational(-eps(r, c));
        if (!shift.is_zero()) e = e + B.witness().one_like().scaled(Scalar(shift));
        prod = prod * e;
      }
      acc += (ssign * tsign > 0) ? prod : -prod;
    });
  });
  return acc.scaled(Scalar(Rational(BigInt(1), factorial(d))));
}

/// Column-permanent with diagonal parameters; rows/cols may repeat
/// (multi-index "submatrices" duplicate rows and columns).
template <RingElement R>
R per_param(const NcMatrix<R>& A, const std::vector<int>& I, const std::vector<int>& J,
            const std::vector<Rational>& u = {}) {
  detail::check_tuple_sizes(I.size(), J.size(), u.size());
  const int d = static_cast<int>(I.size());
  if (d == 0) return A.witness().one_like();
  R acc = A.witness().zero_like();
  detail::for_each_permutation(d, [&](const std::vector<int>& sigma, int) {
    R prod = A.witness().one_like();
    for (int k = 0; k < d; ++k) {
      Rational shift = u.empty() ? Rational(0) : u[k];
      prod = prod * shifted_entry(A, I[sigma[k]], J[k], shift);
    }
    acc += prod;
  });
  return acc;
}

/// Symmetrized permanent: (1/d!) sum over both permutations, no signs.
template <RingElement R>
R sym_per(const NcMatrix<R>& A, const std::vector<int>& I, const std::vector<int>& J) {
  detail::check_tuple_sizes(I.size(), J.size(), 0);
  const int d = static_cast<int>(I.size());
  if (d == 0) return A.witness().one_like();
  R acc = A.witness().zero_like();
  detail::for_each_permutation(d, [&](const std::vector<int>& sigma, int) {
    detail::for_each_permutation(d, [&](const std::vector<int>& tau, int) {
      R prod = A.witness().one_like();
      for (int k = 0; k < d; ++k) prod = prod * A.at(I[sigma[k]], J[tau[k]]);
      acc += prod;
    });
  });
  return acc.scaled(Scalar(Rational(BigInt(1), factorial(d))));
}

}  // namespace capelli

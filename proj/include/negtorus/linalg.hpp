#pragma once

// Exact dense linear algebra on Eigen containers.
// Boost 1.74 number<> breaks Eigen's scalar*matrix overload resolution,
// so products go through lazyProduct()/dot() only.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "negtorus/arith.hpp"

namespace negtorus {

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = MatX<Int>;
using RatMat = MatX<Rational>;
using RatVec = VecX<Rational>;

template <typename To, typename From>
MatX<To> cast_exact(const MatX<From>& m) {
  MatX<To> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = To(m(i, j));
  return r;
}

// fraction-free elimination; exact for integer scalars
template <typename Scalar>
Scalar bareiss_determinant(MatX<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("bareiss_determinant: not square");
  if (n == 0) return Scalar(1);
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return Scalar(0);
      a.row(k).swap(a.row(s));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Gauss-Jordan inverse over a field
template <typename Scalar>
MatX<Scalar> exact_inverse(const MatX<Scalar>& m) {
  const Eigen::Index n = m.rows();
  MatX<Scalar> a = m;
  MatX<Scalar> inv = MatX<Scalar>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw std::domain_error("exact_inverse: singular matrix");
    if (piv != c) {
      a.row(c).swap(a.row(piv));
      inv.row(c).swap(inv.row(piv));
    }
    const Scalar d = a(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(c, j) /= d;
      inv(c, j) /= d;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// x^T A y
template <typename Scalar>
Scalar bilinear(const VecX<Scalar>& x, const MatX<Scalar>& a, const VecX<Scalar>& y) {
  VecX<Scalar> ay = a.lazyProduct(y);
  return x.dot(ay);
}

// (positive, negative, zero) counts of a symmetric form, by symmetric elimination over a field
template <typename Scalar>
std::pair<int, int> inertia(MatX<Scalar> a) {
  int pos = 0, neg = 0;
  Eigen::Index n = a.rows();
  std::vector<Eigen::Index> live(n);
  for (Eigen::Index i = 0; i < n; ++i) live[i] = i;
  while (!live.empty()) {
    Eigen::Index piv = -1;
    for (auto i : live)
      if (a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // all diagonal entries zero: fold e_j into e_i for some a(i,j) != 0
      Eigen::Index bi = -1, bj = -1;
      for (auto i : live)
        for (auto j : live)
          if (bi < 0 && i != j && a(i, j) != 0) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;  // remaining block is zero
      a.row(bi) += a.row(bj);
      a.col(bi) += a.col(bj);
      piv = bi;
    }
    const Scalar d = a(piv, piv);
    if (d > 0) ++pos; else ++neg;
    live.erase(std::find(live.begin(), live.end(), piv));
    for (auto i : live) {
      if (a(i, piv) == 0) continue;
      const Scalar f = a(i, piv) / d;
      for (auto j : live) a(i, j) -= f * a(piv, j);
    }
    for (auto i : live) a(piv, i) = a(i, piv) = Scalar(0);
  }
  return {pos, neg};
}

template <typename Scalar>
int signature(const MatX<Scalar>& a) {
  auto [p, n] = inertia(a);
  return p - n;
}

// invariant factors of an integer matrix (diagonal of the Smith form, zeros included)
std::vector<Int> smith_invariants(IntMat a);

}  // namespace negtorus

#include "negtorus/linalg.hpp"

namespace negtorus {

std::vector<Int> smith_invariants(IntMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Int> diag;
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the trailing block as pivot
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    a.row(t).swap(a.row(pi));
    a.col(t).swap(a.col(pj));
    bool clean = true;
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      Int f = a(i, t) / a(t, t);
      if (f != 0)
        for (Eigen::Index j = t; j < cols; ++j) a(i, j) -= f * a(t, j);
      if (a(i, t) != 0) clean = false;
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      Int f = a(t, j) / a(t, t);
      if (f != 0)
        for (Eigen::Index i = t; i < rows; ++i) a(i, j) -= f * a(i, t);
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility of the rest by the pivot
    Eigen::Index bad = -1;
    for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (a(i, j) % a(t, t) != 0) {
          bad = i;
          break;
        }
    if (bad >= 0) {
      for (Eigen::Index j = t; j < cols; ++j) a(t, j) += a(bad, j);
      continue;
    }
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  while (static_cast<Eigen::Index>(diag.size()) < std::min(rows, cols)) diag.push_back(0);
  return diag;
}

}  // namespace negtorus

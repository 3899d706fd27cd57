// Copyright 2026 The pbr-workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pbr/lp.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pbr::lp {

namespace {

class Tableau {
 public:
  Tableau(const RationalMatrix& A, const RationalVector& b)
      : rows_(A.rows()), vars_(A.cols()), t_(A.rows() + 1, A.cols() + A.rows() + 1),
        flipped_(static_cast<std::size_t>(A.rows()), false),
        basis_(static_cast<std::size_t>(A.rows())) {
    t_.setZero();
    const Eigen::Index rhs = rhs_col();
    for (Eigen::Index r = 0; r < rows_; ++r) {
      const bool flip = b[r] < 0;
      flipped_[static_cast<std::size_t>(r)] = flip;
      for (Eigen::Index c = 0; c < vars_; ++c) t_(r, c) = flip ? Rational(-A(r, c)) : A(r, c);
      t_(r, vars_ + r) = 1;
      t_(r, rhs) = flip ? Rational(-b[r]) : b[r];
      basis_[static_cast<std::size_t>(r)] = vars_ + r;
    }
    // Objective row holds reduced costs of min Σ artificials; rhs keeps −z.
    for (Eigen::Index c = 0; c < vars_; ++c) {
      for (Eigen::Index r = 0; r < rows_; ++r) t_(rows_, c) -= t_(r, c);
    }
    for (Eigen::Index r = 0; r < rows_; ++r) t_(rows_, rhs) -= t_(r, rhs);
  }

  std::size_t run() {
    std::size_t pivots = 0;
    while (true) {
      const Eigen::Index enter = entering();
      if (enter < 0) return pivots;
      const Eigen::Index leave = leaving(enter);
      if (leave < 0) throw std::logic_error("phase-1 objective unbounded below");
      pivot(leave, enter);
      ++pivots;
    }
  }

  Rational objective() const { return -t_(rows_, rhs_col()); }

  RationalVector point() const {
    RationalVector x = RationalVector::Zero(vars_);
    for (Eigen::Index r = 0; r < rows_; ++r) {
      const Eigen::Index v = basis_[static_cast<std::size_t>(r)];
      if (v < vars_) x[v] = t_(r, rhs_col());
    }
    return x;
  }

  /// Phase-1 duals π = c_Bᵀ B⁻¹ read off the artificial reduced costs
  /// (1 − πᵣ), with the row sign flips undone.
  RationalVector certificate() const {
    RationalVector y(rows_);
    for (Eigen::Index r = 0; r < rows_; ++r) {
      Rational pi = 1 - t_(rows_, vars_ + r);
      y[r] = flipped_[static_cast<std::size_t>(r)] ? Rational(-pi) : pi;
    }
    return y;
  }

 private:
  Eigen::Index rhs_col() const { return vars_ + rows_; }

  Eigen::Index entering() const {
    for (Eigen::Index c = 0; c < vars_ + rows_; ++c) {
      if (t_(rows_, c) < 0) return c;
    }
    return -1;
  }

  Eigen::Index leaving(Eigen::Index enter) const {
    Eigen::Index best = -1;
    Rational best_ratio;
    for (Eigen::Index r = 0; r < rows_; ++r) {
      if (t_(r, enter) <= 0) continue;
      Rational ratio = t_(r, rhs_col()) / t_(r, enter);
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(best)])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Eigen::Index width = t_.cols();
    const Rational inv = 1 / t_(row, col);
    std::vector<Eigen::Index> nonzero;
    for (Eigen::Index c = 0; c < width; ++c) {
      if (t_(row, c) != 0) {
        t_(row, c) *= inv;
        nonzero.push_back(c);
      }
    }
    for (Eigen::Index r = 0; r <= rows_; ++r) {
      if (r == row || t_(r, col) == 0) continue;
      const Rational factor = t_(r, col);
      for (Eigen::Index c : nonzero) t_(r, c) -= factor * t_(row, c);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  Eigen::Index rows_;
  Eigen::Index vars_;
  RationalMatrix t_;
  std::vector<bool> flipped_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

PhaseOneResult find_feasible_point(const RationalMatrix& A, const RationalVector& b) {
  if (A.rows() != b.size()) {
    throw DimensionError("constraint matrix has " + std::to_string(A.rows()) +
                         " rows but right-hand side has " + std::to_string(b.size()));
  }
  Tableau tableau(A, b);
  PhaseOneResult result;
  result.pivots = tableau.run();
  if (tableau.objective() == 0) {
    result.feasible = true;
    result.point = tableau.point();
  } else {
    result.certificate = tableau.certificate();
  }
  return result;
}

bool verify_farkas(const RationalMatrix& A, const RationalVector& b, const RationalVector& y) {
  if (y.size() != A.rows() || b.size() != A.rows()) {
    throw DimensionError("certificate has " + std::to_string(y.size()) + " entries for " +
                         std::to_string(A.rows()) + " rows");
  }
  for (Eigen::Index c = 0; c < A.cols(); ++c) {
    Rational acc = 0;
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
      if (y[r] != 0 && A(r, c) != 0) acc += y[r] * A(r, c);
    }
    if (acc > 0) return false;
  }
  Rational yb = 0;
  for (Eigen::Index r = 0; r < A.rows(); ++r) yb += y[r] * b[r];
  return yb > 0;
}

}  // namespace pbr::lp

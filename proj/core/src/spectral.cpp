// Copyright 2026 The graphsym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphsym/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace graphsym {

namespace {

void fix_column_signs(Eigen::MatrixXd& u) {
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    Eigen::Index lead = 0;
    double best = -1.0;
    for (Eigen::Index row = 0; row < u.rows(); ++row) {
      const double mag = std::abs(u(row, col));
      if (mag > best) {  // strict: ties keep the lowest index
        best = mag;
        lead = row;
      }
    }
    if (u(lead, col) < 0.0) u.col(col) = -u.col(col);
  }
}

}  // namespace

SpectralDecomposition eigendecompose(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigendecompose: matrix must be square");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw std::invalid_argument("eigendecompose: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: solver did not converge");

  SpectralDecomposition s;
  s.eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();
  fix_column_signs(s.eigenvectors);

  s.residual = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double r =
        (m * s.eigenvectors.col(i) - s.eigenvalues(i) * s.eigenvectors.col(i))
            .norm();
    s.residual = std::max(s.residual, r);
  }
  return s;
}

SpectralDecomposition eigendecompose(const IntMatrix& m) {
  if (!is_symmetric(m))
    throw std::invalid_argument("eigendecompose: matrix is not symmetric");
  return eigendecompose(Eigen::MatrixXd(m.cast<double>()));
}

SimpleSpectrumResult has_simple_spectrum(const SpectralDecomposition& s,
                                         double tol) {
  SimpleSpectrumResult result;
  result.min_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i + 1 < s.eigenvalues.size(); ++i)
    result.min_gap = std::min(result.min_gap,
                              s.eigenvalues(i + 1) - s.eigenvalues(i));
  result.simple = result.min_gap > tol;
  return result;
}

std::vector<OrthogonalityWitness> ones_orthogonal_eigenvectors(
    const SpectralDecomposition& s, double tol) {
  const Eigen::Index n = s.eigenvalues.size();
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(s.eigenvectors.rows());
  std::vector<OrthogonalityWitness> witnesses;

  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo + 1;  // [lo, hi) = eigenvalues repeated within tol
    while (hi < n && s.eigenvalues(hi) - s.eigenvalues(hi - 1) <= tol) ++hi;
    const Eigen::Index k = hi - lo;
    if (k == 1) {
      const double ip = std::abs(s.eigenvectors.col(lo).dot(ones));
      if (ip <= tol)
        witnesses.push_back({static_cast<int>(lo), ip, s.eigenvectors.col(lo)});
    } else {
      // Individual eigenvectors are basis-dependent within a repeated
      // eigenspace. Rotate the basis so at most one vector carries the
      // projection of 1_n; the rest are the witnesses.
      const Eigen::MatrixXd basis = s.eigenvectors.middleCols(lo, k);
      const Eigen::VectorXd coords = basis.transpose() * ones;
      const double projection_norm = coords.norm();
      Eigen::MatrixXd rotated;
      Eigen::Index first_witness_col;
      if (projection_norm > tol) {
        Eigen::MatrixXd q = Eigen::MatrixXd::Identity(k, k);
        q.col(0) = coords / projection_norm;
        // Gram-Schmidt completion of the rotation
        for (Eigen::Index c = 1; c < k; ++c) {
          Eigen::VectorXd v = Eigen::VectorXd::Unit(k, c);
          for (Eigen::Index prev = 0; prev < c; ++prev)
            v -= q.col(prev).dot(v) * q.col(prev);
          const double norm = v.norm();
          if (norm < 1e-12) {
            // unit vector nearly parallel to span so far; pick another axis
            for (Eigen::Index axis = 0; axis < k; ++axis) {
              v = Eigen::VectorXd::Unit(k, axis);
              for (Eigen::Index prev = 0; prev < c; ++prev)
                v -= q.col(prev).dot(v) * q.col(prev);
              if (v.norm() >= 1e-12) break;
            }
          }
          q.col(c) = v / v.norm();
        }
        rotated = basis * q;
        first_witness_col = 1;
      } else {
        rotated = basis;
        first_witness_col = 0;
      }
      for (Eigen::Index c = first_witness_col; c < k; ++c) {
        const double ip = std::abs(rotated.col(c).dot(ones));
        witnesses.push_back(
            {static_cast<int>(lo + c), ip, rotated.col(c)});
      }
    }
    lo = hi;
  }
  return witnesses;
}

const char* to_string(FriendlinessVerdict v) {
  switch (v) {
    case FriendlinessVerdict::Friendly:
      return "Friendly";
    case FriendlinessVerdict::UnfriendlyRepeatedEigenvalues:
      return "UnfriendlyRepeatedEigenvalues";
    case FriendlinessVerdict::UnfriendlyOrthogonalEigenvector:
      return "UnfriendlyOrthogonalEigenvector";
  }
  return "?";
}

FriendlinessReport classify_friendliness(const Graph& g, double tol) {
  const SpectralDecomposition s = eigendecompose(adjacency_matrix(g));
  FriendlinessReport report;
  report.tolerance_used = tol;
  report.eigenvalues = s.eigenvalues;
  const auto simple = has_simple_spectrum(s, tol);
  report.min_eigengap = simple.min_gap;
  report.orthogonal_witnesses = ones_orthogonal_eigenvectors(s, tol);
  if (!simple.simple)
    report.verdict = FriendlinessVerdict::UnfriendlyRepeatedEigenvalues;
  else if (!report.orthogonal_witnesses.empty())
    report.verdict = FriendlinessVerdict::UnfriendlyOrthogonalEigenvector;
  else
    report.verdict = FriendlinessVerdict::Friendly;
  return report;
}

std::vector<std::complex<double>> complex_spectrum(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("complex_spectrum: matrix must be square");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("complex_spectrum: solver did not converge");
  const auto values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<std::complex<double>> complex_spectrum(const IntMatrix& m) {
  return complex_spectrum(Eigen::MatrixXd(m.cast<double>()));
}

int eigenvalue_multiplicity(const std::vector<std::complex<double>>& spectrum,
                            std::complex<double> target, double tol) {
  int count = 0;
  for (const auto& lambda : spectrum)
    if (std::abs(lambda - target) < tol) ++count;
  return count;
}

}  // namespace graphsym

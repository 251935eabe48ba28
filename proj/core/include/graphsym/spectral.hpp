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

#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "graphsym/graph.hpp"

namespace graphsym {

/// Default tolerance for eigenvalue-gap and orthogonality tests.
inline constexpr double kDefaultSpectralTolerance = 1e-4;

/// Eigendecomposition of a symmetric real matrix.
/// eigenvalues are sorted ascending; eigenvector columns are unit-norm,
/// column i paired with eigenvalue i, signs fixed so that each column's
/// largest-magnitude entry is positive (ties: lowest index).
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  /// max over i of ||A v_i - lambda_i v_i||_2
  double residual = 0.0;
};

/// Throws std::invalid_argument if the input deviates from symmetry by more
/// than 1e-12 entrywise. Deterministic for fixed input.
SpectralDecomposition eigendecompose(const Eigen::MatrixXd& m);
SpectralDecomposition eigendecompose(const IntMatrix& m);

struct SimpleSpectrumResult {
  bool simple = true;
  /// Minimum gap between consecutive sorted eigenvalues; +inf when n <= 1.
  double min_gap = 0.0;
};

/// Simple spectrum: every consecutive gap exceeds tol.
SimpleSpectrumResult has_simple_spectrum(const SpectralDecomposition& s,
                                         double tol);

/// One eigenvector (or eigenspace basis vector) orthogonal to the all-ones
/// vector within tolerance.
struct OrthogonalityWitness {
  int eigenvalue_index = 0;
  double abs_inner_product = 0.0;  // |v' 1_n|, v unit-norm
  Eigen::VectorXd vector;
};

/// Witnesses of eigenvectors orthogonal to 1_n.
/// Simple eigenvalues: index i is a witness iff |v_i' 1| <= tol.
/// Eigenvalues repeated within tol are grouped; a k-dimensional eigenspace
/// contributes k-1 witnesses when the projection of 1_n onto it has norm
/// > tol (the basis is rotated so the remaining vectors are orthogonal to
/// 1_n), and k witnesses otherwise.
std::vector<OrthogonalityWitness> ones_orthogonal_eigenvectors(
    const SpectralDecomposition& s, double tol);

enum class FriendlinessVerdict {
  Friendly,
  UnfriendlyRepeatedEigenvalues,
  UnfriendlyOrthogonalEigenvector,
};

const char* to_string(FriendlinessVerdict v);

struct FriendlinessReport {
  FriendlinessVerdict verdict = FriendlinessVerdict::Friendly;
  double min_eigengap = 0.0;
  std::vector<OrthogonalityWitness> orthogonal_witnesses;
  double tolerance_used = kDefaultSpectralTolerance;
  Eigen::VectorXd eigenvalues;
};

/// Classification of the adjacency matrix: UnfriendlyRepeatedEigenvalues if
/// the simple-spectrum test fails, else UnfriendlyOrthogonalEigenvector if
/// any witness exists, else Friendly.
FriendlinessReport classify_friendliness(const Graph& g,
                                         double tol = kDefaultSpectralTolerance);

/// Complex spectrum of a general square real matrix (permutation matrices
/// have eigenvalues on the unit circle).
std::vector<std::complex<double>> complex_spectrum(const Eigen::MatrixXd& m);
std::vector<std::complex<double>> complex_spectrum(const IntMatrix& m);

/// Number of eigenvalues within tol of target.
int eigenvalue_multiplicity(const std::vector<std::complex<double>>& spectrum,
                            std::complex<double> target, double tol);

}  // namespace graphsym

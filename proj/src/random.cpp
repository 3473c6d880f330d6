// Copyright 2026 The prepsim Authors
//
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

#include "prepsim/random.hpp"

#include <cmath>

namespace prepsim {

ComplexMatrix random_ginibre(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return g;
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  ComplexMatrix g = random_ginibre(dim, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  ComplexMatrix g = random_ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution does not depend on the QR
  // sign conventions.
  for (int k = 0; k < dim; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    q.col(k) *= (mag > 0.0) ? diag / mag : Complex(1.0, 0.0);
  }
  return q;
}

PureStateVector random_pure_state(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = Complex(gauss(rng), gauss(rng));
  }
  return PureStateVector(v / v.norm());
}

DensityMatrix random_density_matrix(int dim, Rng& rng) {
  ComplexMatrix g = random_ginibre(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(std::move(rho));
}

BipartiteState random_correlated_state(int dim_s, int dim_e, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    BipartiteState candidate(dim_s, dim_e,
                             random_density_matrix(dim_s * dim_e, rng));
    if (correlation_norm(candidate) > 1e-3) {
      return candidate;
    }
  }
  throw Error("random_correlated_state: failed to draw a correlated state");
}

BipartiteState random_product_state(int dim_s, int dim_e, Rng& rng) {
  return product_state(random_density_matrix(dim_s, rng),
                       random_density_matrix(dim_e, rng));
}

KrausChannel random_kraus_channel(int dim, int n_ops, Rng& rng) {
  std::vector<ComplexMatrix> raw;
  raw.reserve(n_ops);
  ComplexMatrix accumulated = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < n_ops; ++k) {
    raw.push_back(random_ginibre(dim, rng));
    accumulated += raw.back().adjoint() * raw.back();
  }
  // Right-multiply by S^{-1/2} so that sum K^dagger K = I exactly.
  HermitianEigenSystem es = hermitian_eigen(accumulated, 1e-6);
  ComplexVector inv_roots =
      es.eigenvalues.cwiseSqrt().cwiseInverse().cast<Complex>();
  ComplexMatrix inv_sqrt =
      es.eigenvectors * inv_roots.asDiagonal() * es.eigenvectors.adjoint();
  std::vector<ComplexMatrix> ops;
  ops.reserve(n_ops);
  for (const ComplexMatrix& g : raw) {
    ops.push_back(g * inv_sqrt);
  }
  return KrausChannel(std::move(ops));
}

} // namespace prepsim

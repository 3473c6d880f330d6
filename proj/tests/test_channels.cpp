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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "prepsim/channels.hpp"
#include "prepsim/random.hpp"
#include "prepsim/states.hpp"

#include "oracles.hpp"

using namespace prepsim;

TEST_CASE("apply_kraus: identity channel") {
  Rng rng(3);
  DensityMatrix rho = random_density_matrix(2, rng);
  CHECK((apply_kraus(identity_channel(2), rho.matrix()) - rho.matrix()).norm() ==
        0.0);
}

TEST_CASE("apply_kraus: projector channel halves the mixed state") {
  ComplexMatrix p = pure_density(z_plus()).matrix();
  ComplexMatrix out = apply_kraus(projector_channel(p), 0.5 * identity(2));
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 0.5;
  CHECK((out - expected).norm() <= 1e-14);
  CHECK(out.trace().real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("apply_kraus: full depolarizing sends z+ to the mixed state") {
  ComplexMatrix out = apply_kraus(depolarizing_channel(1.0),
                                  pure_density(z_plus()).matrix());
  CHECK((out - 0.5 * identity(2)).norm() <= 1e-12);

  // Direct 2x2 sum over the four Kraus terms.
  KrausChannel c = depolarizing_channel(1.0);
  ComplexMatrix direct = ComplexMatrix::Zero(2, 2);
  for (const ComplexMatrix& k : c.operators()) {
    direct += oracles::matmul_ref(oracles::matmul_ref(k, pure_density(z_plus()).matrix()),
                                  k.adjoint());
  }
  CHECK((out - direct).norm() <= 1e-14);
}

TEST_CASE("apply_kraus: trace never grows") {
  Rng rng(13);
  KrausChannel c = projector_channel(pure_density(x_plus()).matrix());
  DensityMatrix rho = random_density_matrix(2, rng);
  CHECK(apply_kraus(c, rho.matrix()).trace().real() <=
        rho.matrix().trace().real() + 1e-12);
}

TEST_CASE("apply_kraus: rejects dimension mismatch") {
  CHECK_THROWS_AS(apply_kraus(identity_channel(2), identity(3)),
                  DimensionError);
}

TEST_CASE("KrausChannel: rejects trace-increasing sets") {
  CHECK_THROWS_AS(KrausChannel({1.5 * identity(2)}), ContractViolation);
  CHECK_THROWS_AS(KrausChannel(std::vector<ComplexMatrix>{}),
                  ContractViolation);
}

TEST_CASE("superop_from_action: identity action") {
  SuperOperator s = superop_from_action([](const ComplexMatrix& m) { return m; }, 2);
  CHECK((s.matrix - identity(4)).norm() == 0.0);
}

TEST_CASE("superop_from_action: conjugation by X against basis images") {
  ComplexMatrix x = pauli_x();
  SuperOperator s = superop_from_action(
      [&x](const ComplexMatrix& m) { return ComplexMatrix(x * m * x.adjoint()); }, 2);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(2, 2);
      e(i, j) = 1.0;
      ComplexMatrix direct =
          oracles::matmul_ref(oracles::matmul_ref(x, e), x.adjoint());
      CHECK((apply_superop(s, e) - direct).norm() <= 1e-14);
    }
  }
}

TEST_CASE("superop_from_action: Kraus channel equals sum conj(K) (x) K") {
  Rng rng(37);
  KrausChannel c = random_kraus_channel(2, 3, rng);
  SuperOperator s = superop_from_action(
      [&c](const ComplexMatrix& m) { return apply_kraus(c, m); }, 2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  for (const ComplexMatrix& k : c.operators()) {
    expected += oracles::tensor_ref(k.conjugate(), k);
  }
  CHECK((s.matrix - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("superop round trip matches direct application") {
  Rng rng(41);
  KrausChannel c = random_kraus_channel(2, 2, rng);
  SuperOperator s = superop_from_action(
      [&c](const ComplexMatrix& m) { return apply_kraus(c, m); }, 2);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix h = random_hermitian(2, rng);
    CHECK((apply_superop(s, h) - apply_kraus(c, h)).norm() <= 1e-10);
  }
  CHECK(preserves_hermiticity(s));
}

TEST_CASE("choi_from_superop: identity channel gives 2|Phi+><Phi+|") {
  SuperOperator s = superop_from_action([](const ComplexMatrix& m) { return m; }, 2);
  ChoiMatrix c = choi_from_superop(s);
  ComplexMatrix expected = 2.0 * bell_phi_plus().joint().matrix();
  CHECK((c.matrix - expected).norm() <= 1e-14);
}

TEST_CASE("choi_from_superop: completely depolarizing channel") {
  SuperOperator s = superop_from_action(
      [](const ComplexMatrix& m) {
        return ComplexMatrix(0.5 * m.trace() * identity(2));
      },
      2);
  ChoiMatrix c = choi_from_superop(s);
  // Per basis element: Lambda(E_ij) = delta_ij I/2, so C = I4 / 2.
  CHECK((c.matrix - 0.5 * identity(4)).norm() <= 1e-14);
}

TEST_CASE("choi_from_superop: unitary conjugation is rank one") {
  Rng rng(43);
  ComplexMatrix u = random_unitary(2, rng);
  SuperOperator s = superop_from_action(
      [&u](const ComplexMatrix& m) { return ComplexMatrix(u * m * u.adjoint()); }, 2);
  HermitianEigenSystem es = hermitian_eigen(choi_from_superop(s).matrix);
  CHECK(std::abs(es.eigenvalues(3) - 2.0) <= 1e-10);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(es.eigenvalues(k)) <= 1e-10);
  }
}

TEST_CASE("cp_diagnosis: identity channel") {
  SuperOperator s = superop_from_action([](const ComplexMatrix& m) { return m; }, 2);
  CpDiagnosis d = cp_diagnosis(choi_from_superop(s));
  CHECK(std::abs(d.min_eigenvalue) <= 1e-10);
  CHECK(d.is_cp);
  CHECK(d.tp_deviation <= 1e-10);
}

TEST_CASE("cp_diagnosis: transpose map is not CP") {
  SuperOperator s = superop_from_action(
      [](const ComplexMatrix& m) { return ComplexMatrix(m.transpose()); }, 2);
  ChoiMatrix c = choi_from_superop(s);
  // The Choi of transposition is the SWAP operator.
  CHECK((c.matrix - swap_gate()).norm() <= 1e-14);
  CpDiagnosis d = cp_diagnosis(c);
  CHECK(d.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_FALSE(d.is_cp);
  std::vector<double> ref = oracles::hermitian_eigenvalues_ref(c.matrix);
  CHECK(std::abs(ref.front() + 1.0) <= 1e-8);
}

TEST_CASE("cp_diagnosis: Kraus-built channels are always CP") {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    KrausChannel c = random_kraus_channel(2, 1 + trial % 4, rng);
    SuperOperator s = superop_from_action(
        [&c](const ComplexMatrix& m) { return apply_kraus(c, m); }, 2);
    CpDiagnosis d = cp_diagnosis(choi_from_superop(s));
    CHECK(d.is_cp);
    CHECK(d.tp_deviation <= 1e-10);
  }
}

TEST_CASE("cp_diagnosis: tp_deviation detects trace loss") {
  KrausChannel lossy = projector_channel(pure_density(z_plus()).matrix());
  SuperOperator s = superop_from_action(
      [&lossy](const ComplexMatrix& m) { return apply_kraus(lossy, m); }, 2);
  CpDiagnosis d = cp_diagnosis(choi_from_superop(s));
  CHECK(d.is_cp);
  CHECK(d.tp_deviation > 0.5);
  CHECK_FALSE(lossy.is_trace_preserving());
}

TEST_CASE("vec/unvec: column stacking round trip") {
  Rng rng(53);
  ComplexMatrix m = random_ginibre(3, rng);
  CHECK((unvec(vec(m), 3) - m).norm() == 0.0);
  CHECK(vec(m)(1) == m(1, 0));
  CHECK(vec(m)(3) == m(0, 1));
}

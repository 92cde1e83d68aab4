//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/simplex.hpp"

#include <cmath>

#include "hsforce/edge_length_function.hpp"

namespace hsforce {

double cube_volume_bound(Index m, Index n, double delta) {
  if (m < 1 || m > n)
    throw Error(ErrorCode::kOutOfRange, "need 1 <= m <= n");
  if (delta < 0)
    throw Error(ErrorCode::kOutOfRange, "delta must be nonnegative");
  // Hadamard: vol_m <= prod |edge_i| / m!, and every edge is at most the
  // cube diagonal delta sqrt(n).
  const double diagonal = delta * std::sqrt(static_cast<double>(n));
  return std::pow(diagonal, static_cast<double>(m))
         / std::tgamma(static_cast<double>(m) + 1);
}

SimplexD realize(const EdgeLengthFunction<double> &h, Tolerance tol) {
  if (!feasible(h, tol))
    throw Error(ErrorCode::kInfeasibleLengths,
                "no simplex realizes these edge lengths");
  const Index n = h.dimension();
  Eigen::LLT<Eigen::MatrixXd> llt(h.gram_matrix());
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::kInfeasibleLengths,
                "internal: Cholesky failed after a positive feasibility test");

  // Rows of L are the coordinates of vertices 1..n; L is lower triangular
  // with a positive diagonal, which is exactly the canonical frame.
  Eigen::MatrixXd vertices = Eigen::MatrixXd::Zero(n, n + 1);
  vertices.rightCols(n) = Eigen::MatrixXd(llt.matrixL()).transpose();
  return SimplexD(std::move(vertices), tol);
}

SimplexD realize(const EdgeLengthFunction<Rational> &h, Tolerance tol) {
  if (!feasible(h, tol))
    throw Error(ErrorCode::kInfeasibleLengths,
                "no simplex realizes these edge lengths");
  std::vector<double> values;
  values.reserve(h.values().size());
  for (const Rational &v: h.values())
    values.push_back(to_double(v));
  return realize(EdgeLengthFunction<double>(h.dimension(), std::move(values)),
                 tol);
}

}  // namespace hsforce

#pragma once

#include <array>
#include <vector>

#include "l2lab/numbers.hpp"

namespace l2lab {

/// Weighted path on l+1 vertices: interior edges weight 2, boundary edges
/// (alpha, beta) determined by the ending scenario (i, j).
struct PathModel {
  int length = 2;  // edges
  int i = 1, j = 1;
  Rational alpha, beta;

  int vertex_count() const { return length + 1; }
  /// Weight of edge (k, k+1), 0 <= k < length.
  Rational edge_weight(int k) const;
};

/// Boundary weights: (1,1) -> (2,2); (1,2) -> (1/2,2); (2,2) -> (1/2,1/2).
PathModel build_model(int l, int i, int j);

/// dim ker(A + 2 Id) over the rationals, banded exact elimination.
int kernel_dim_minus_two(const PathModel& m);
/// dim ker(A - lambda Id) for any rational lambda.
int kernel_dim(const PathModel& m, const Rational& lambda);

/// The solution of the deleted-last-row recursion for A + 2 with boundary
/// parameters (alpha, beta): (2a, -4, 4-a^2, a^2, -4, 4-a^2, ..., x_l).
std::vector<Rational> kernel_vector(int l, const Rational& alpha, const Rational& beta);

/// True iff the recursion vector is also killed by the last row, i.e. -2 is
/// an eigenvalue of the path with these boundary weights.
bool closure_condition(int l, const Rational& alpha, const Rational& beta);

/// Dense matrix of A - lambda Id (for oracles and small checks).
std::vector<std::vector<Rational>> dense_matrix(const PathModel& m, const Rational& lambda);

struct ModelRow {
  int l, i, j, dim;
};
/// Table rows (l, i, j, dim) for 2 <= l <= lmax, scenarios (1,1),(1,2),(2,2).
std::vector<ModelRow> models_table(int lmax);
std::vector<ModelRow> models_table_serial(int lmax);

}  // namespace l2lab

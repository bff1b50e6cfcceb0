#include "l2lab/finite_models.hpp"

#include <algorithm>

namespace l2lab {

Rational PathModel::edge_weight(int k) const {
  if (k < 0 || k >= length) throw usage_error("edge_weight: out of range");
  if (k == 0) return alpha;
  if (k == length - 1) return beta;
  return Rational(2);
}

PathModel build_model(int l, int i, int j) {
  if (l < 2) throw usage_error("build_model: segment length must be >= 2");
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 2) throw usage_error("build_model: scenario indices in {1,2}");
  PathModel m;
  m.length = l;
  m.i = i;
  m.j = j;
  if (i == 1 && j == 1) {
    m.alpha = Rational(2);
    m.beta = Rational(2);
  } else if (i == 1 && j == 2) {
    m.alpha = Rational(1, 2);
    m.beta = Rational(2);
  } else {
    m.alpha = Rational(1, 2);
    m.beta = Rational(1, 2);
  }
  return m;
}

namespace {

// Exact elimination of the (symmetric tridiagonal - lambda) system. Row swaps
// keep the band at width <= 2 above the diagonal, so rows are stored as small
// windows [col, col+2].
int tridiagonal_nullity(const PathModel& m, const Rational& lambda) {
  int n = m.vertex_count();
  struct Row {
    int base = 0;                 // column of first stored entry
    std::array<Rational, 3> v{};  // columns base, base+1, base+2
  };
  std::vector<Row> rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    Row& row = rows[static_cast<std::size_t>(r)];
    row.base = std::max(0, r - 1);
    auto put = [&row](int col, const Rational& val) {
      int off = col - row.base;
      if (off >= 0 && off < 3) row.v[static_cast<std::size_t>(off)] = val;
    };
    if (r > 0) put(r - 1, m.edge_weight(r - 1));
    put(r, -lambda);
    if (r < n - 1) put(r + 1, m.edge_weight(r));
  }

  auto entry = [](const Row& row, int col) -> Rational {
    int off = col - row.base;
    if (off < 0 || off >= 3) return Rational(0);
    return row.v[static_cast<std::size_t>(off)];
  };

  int rank = 0;
  std::size_t next = 0;
  for (int col = 0; col < n && next < rows.size(); ++col) {
    // candidate rows for this column sit within the band
    std::size_t piv = next;
    while (piv < rows.size() && entry(rows[piv], col) == 0) {
      // rows are ordered by base; anything starting past col cannot help
      if (rows[piv].base > col) { piv = rows.size(); break; }
      ++piv;
    }
    if (piv >= rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    const Rational p = entry(rows[next], col);
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (rows[r].base > col) break;
      Rational e = entry(rows[r], col);
      if (e == 0) continue;
      Rational f = e / p;
      // subtract f * pivot row; result fits in columns [col+1, col+2]
      Row updated;
      updated.base = col + 1;
      for (int c = col + 1; c <= col + 2 && c < n; ++c)
        updated.v[static_cast<std::size_t>(c - updated.base)] =
            entry(rows[r], c) - f * entry(rows[next], c);
      rows[r] = updated;
    }
    // keep remaining rows ordered by base for the scan above
    std::sort(rows.begin() + static_cast<std::ptrdiff_t>(next) + 1, rows.end(),
              [](const Row& a, const Row& b) { return a.base < b.base; });
    ++rank;
    ++next;
  }
  return n - rank;
}

}  // namespace

int kernel_dim(const PathModel& m, const Rational& lambda) {
  return tridiagonal_nullity(m, lambda);
}

int kernel_dim_minus_two(const PathModel& m) { return kernel_dim(m, Rational(-2)); }

std::vector<Rational> kernel_vector(int l, const Rational& alpha, const Rational& beta) {
  if (l < 2) throw usage_error("kernel_vector: l must be >= 2");
  if (beta == 0) throw usage_error("kernel_vector: beta must be nonzero");
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(l) + 1);
  const Rational a2 = alpha * alpha;
  const std::array<Rational, 3> cycle = {a2, Rational(-4), Rational(4) - a2};
  v.push_back(2 * alpha);
  v.push_back(Rational(-4));
  v.push_back(Rational(4) - a2);
  while (static_cast<int>(v.size()) < l)
    v.push_back(cycle[v.size() % 3]);
  v.resize(static_cast<std::size_t>(l));
  Rational xl;
  switch (l % 3) {
    case 0: xl = 2 * a2 / beta; break;
    case 1: xl = Rational(-8) / beta; break;
    default: xl = 2 * (Rational(4) - a2) / beta; break;
  }
  v.push_back(xl);
  return v;
}

bool closure_condition(int l, const Rational& alpha, const Rational& beta) {
  const Rational a2 = alpha * alpha;
  switch (l % 3) {
    case 0: return beta * (Rational(4) - a2) + Rational(4) / beta * a2 == 0;
    case 1: return beta * a2 - Rational(16) / beta == 0;
    default: return Rational(-4) * beta + Rational(4) * (Rational(4) - a2) / beta == 0;
  }
}

std::vector<std::vector<Rational>> dense_matrix(const PathModel& m, const Rational& lambda) {
  int n = m.vertex_count();
  std::vector<std::vector<Rational>> M(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int k = 0; k < m.length; ++k) {
    M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k + 1)] = m.edge_weight(k);
    M[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(k)] = m.edge_weight(k);
  }
  for (int k = 0; k < n; ++k)
    M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -= lambda;
  return M;
}

namespace {

std::vector<ModelRow> models_rows(int lmax, bool parallel) {
  if (lmax < 2) throw usage_error("models_table: lmax must be >= 2");
  const std::array<std::pair<int, int>, 3> scen = {{{1, 1}, {1, 2}, {2, 2}}};
  std::vector<ModelRow> rows(static_cast<std::size_t>(lmax - 1) * 3);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int l = 2; l <= lmax; ++l)
      for (std::size_t s = 0; s < scen.size(); ++s) {
        PathModel m = build_model(l, scen[s].first, scen[s].second);
        rows[static_cast<std::size_t>(l - 2) * 3 + s] =
            {l, scen[s].first, scen[s].second, kernel_dim_minus_two(m)};
      }
  } else {
    for (int l = 2; l <= lmax; ++l)
      for (std::size_t s = 0; s < scen.size(); ++s) {
        PathModel m = build_model(l, scen[s].first, scen[s].second);
        rows[static_cast<std::size_t>(l - 2) * 3 + s] =
            {l, scen[s].first, scen[s].second, kernel_dim_minus_two(m)};
      }
  }
  return rows;
}

}  // namespace

std::vector<ModelRow> models_table(int lmax) { return models_rows(lmax, true); }
std::vector<ModelRow> models_table_serial(int lmax) { return models_rows(lmax, false); }

}  // namespace l2lab

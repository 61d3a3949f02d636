#include "atlas/expt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace atlas::expt {

std::vector<ProfileRow> trajectory_profiles(const Trajectory& t) {
  if (t.points.empty())
    throw std::invalid_argument("trajectory_profiles: empty trajectory");
  std::vector<ProfileRow> rows(t.points.size());
  for (size_t k = 0; k < t.points.size(); ++k) {
    const auto& p = t.points[k];
    rows[k] = {p.phi,          p.alpha,        p.beta,
               p.values.discord_ab, p.values.discord_ba,
               p.values.neg_ac, p.values.neg_bc, p.values.pi_tangle};
  }
  return rows;
}

double column(const ProfileRow& row, ProfileColumn c) {
  switch (c) {
    case ProfileColumn::phi: return row.phi;
    case ProfileColumn::alpha: return row.alpha;
    case ProfileColumn::beta: return row.beta;
    case ProfileColumn::d_ab: return row.d_ab;
    case ProfileColumn::d_ba: return row.d_ba;
    case ProfileColumn::neg_ac: return row.neg_ac;
    case ProfileColumn::neg_bc: return row.neg_bc;
    case ProfileColumn::pi_tangle:
    default: return row.pi_tangle;
  }
}

namespace {

// Average ranks (1-based), ties sharing the mean of their positions.
std::vector<double> ranks_of(const std::vector<double>& v) {
  const size_t n = v.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });

  std::vector<double> ranks(n);
  size_t k = 0;
  while (k < n) {
    size_t j = k;
    while (j + 1 < n && v[order[j + 1]] == v[order[k]]) ++j;
    const double shared = 0.5 * static_cast<double>(k + j) + 1.0;
    for (size_t m = k; m <= j; ++m) ranks[order[m]] = shared;
    k = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw std::invalid_argument("spearman: constant column has no rank correlation");
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> extract(const std::vector<ProfileRow>& rows, ProfileColumn c) {
  std::vector<double> v(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) v[i] = column(rows[i], c);
  return v;
}

// Longest run of consecutive steps failing `good`; returned as a half-open
// window over row indices (a run of k steps spans k+1 rows).
template <typename StepGood>
IndexWindow worst_run(int n_rows, const StepGood& good) {
  IndexWindow worst{0, 0};
  int run_begin = -1;
  for (int k = 0; k + 1 < n_rows; ++k) {
    if (!good(k)) {
      if (run_begin < 0) run_begin = k;
      if (k + 2 - run_begin > worst.length()) worst = {run_begin, k + 2};
    } else {
      run_begin = -1;
    }
  }
  return worst;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("spearman: need two equal-length columns of >= 2 values");
  return pearson(ranks_of(x), ranks_of(y));
}

MonotonicityReport monotonicity_report(const std::vector<ProfileRow>& rows,
                                       ProfileColumn x, ProfileColumn y) {
  if (rows.size() < 10)
    throw std::invalid_argument("monotonicity_report: need at least 10 rows");
  const auto xs = extract(rows, x);
  const auto ys = extract(rows, y);

  MonotonicityReport rep;
  rep.spearman_xy = spearman(xs, ys);

  const int n = static_cast<int>(rows.size());
  auto comonotone = [&](int k) { return (xs[k + 1] - xs[k]) * (ys[k + 1] - ys[k]) > 0.0; };
  int good = 0;
  for (int k = 0; k + 1 < n; ++k)
    if (comonotone(k)) ++good;
  rep.strict_fraction = static_cast<double>(good) / (n - 1);
  rep.worst_window = worst_run(n, comonotone);
  return rep;
}

MonogamyReport monogamy_report(const std::vector<ProfileRow>& rows) {
  if (rows.size() < 10)
    throw std::invalid_argument("monogamy_report: need at least 10 rows");
  const auto ac = extract(rows, ProfileColumn::neg_ac);
  const auto bc = extract(rows, ProfileColumn::neg_bc);

  MonogamyReport rep;
  rep.spearman_acbc = spearman(ac, bc);

  const int n = static_cast<int>(rows.size());
  auto opposing = [&](int k) { return (ac[k + 1] - ac[k]) * (bc[k + 1] - bc[k]) < 0.0; };
  int good = 0;
  for (int k = 0; k + 1 < n; ++k)
    if (opposing(k)) ++good;
  rep.opposing_fraction = static_cast<double>(good) / (n - 1);
  rep.worst_window = worst_run(n, opposing);
  return rep;
}

IndexWindow longest_opposing_run(const std::vector<ProfileRow>& rows,
                                 ProfileColumn rising, ProfileColumn falling) {
  const auto up = extract(rows, rising);
  const auto down = extract(rows, falling);

  IndexWindow best{0, 0};
  int run_begin = -1;
  for (int k = 0; k + 1 < static_cast<int>(rows.size()); ++k) {
    if (up[k + 1] > up[k] && down[k + 1] < down[k]) {
      if (run_begin < 0) run_begin = k;
      if (k + 2 - run_begin > best.length()) best = {run_begin, k + 2};
    } else {
      run_begin = -1;
    }
  }
  return best;
}

}  // namespace atlas::expt

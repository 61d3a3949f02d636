#include "atlas/expt/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "atlas/expt/parallel.hpp"
#include "atlas/qubit/measures.hpp"

namespace atlas::expt {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double level_tol = 1e-6;    // emitted-point contract
constexpr double polish_target = 1e-9;  // Newton aims well inside the contract

double field_value(ContourQuantity qty, double q, double alpha, double beta) {
  const qubit::Rank2Params p{q, alpha, beta};
  switch (qty) {
    case ContourQuantity::pi_tangle:
      return qubit::pi_tangle(qubit::purify_rank2(p));
    case ContourQuantity::neg_ac:
    default:
      return qubit::negativity(qubit::reduced_ac(p), {0});
  }
}

struct Pt {
  double a, b;  // (alpha, beta)
};

double dist(const Pt& p, const Pt& q) { return std::hypot(p.a - q.a, p.b - q.b); }

// Newton steps along the central-difference gradient; the fields are smooth
// away from their zero sets, and contour seeds start within one cell of the
// level, so a handful of steps suffices.
template <typename F>
Pt polish(const F& f, Pt p, double level) {
  constexpr double h = 1e-5;
  for (int it = 0; it < 50; ++it) {
    const double e = f(p.a, p.b) - level;
    if (std::abs(e) <= polish_target) break;
    const double gx = (f(p.a + h, p.b) - f(p.a - h, p.b)) / (2.0 * h);
    const double gy = (f(p.a, p.b + h) - f(p.a, p.b - h)) / (2.0 * h);
    const double g2 = gx * gx + gy * gy;
    if (g2 < 1e-18) break;  // flat spot; nothing to project onto
    p.a -= e * gx / g2;
    p.b -= e * gy / g2;
  }
  return p;
}

// Grid edges are identified by their lower-left node and orientation so
// segments found in neighboring cells chain up exactly.
long edge_id(int i, int j, int n, bool vertical) {
  return ((static_cast<long>(i) * n + j) << 1) | (vertical ? 1 : 0);
}

struct Segment {
  long ea, eb;
  Pt pa, pb;
};

struct Chain {
  std::vector<Pt> pts;
  bool closed = false;
  double length = 0.0;  // pre-polish polyline length, used for selection
};

double polyline_length(const std::vector<Pt>& pts, bool closed) {
  double len = 0.0;
  for (size_t k = 0; k + 1 < pts.size(); ++k) len += dist(pts[k], pts[k + 1]);
  if (closed && pts.size() > 2) len += dist(pts.back(), pts.front());
  return len;
}

std::vector<Chain> chain_segments(const std::vector<Segment>& segs) {
  std::unordered_map<long, std::vector<int>> at_edge;
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    at_edge[segs[s].ea].push_back(s);
    at_edge[segs[s].eb].push_back(s);
  }

  std::vector<bool> used(segs.size(), false);
  std::vector<Chain> chains;

  auto other_seg = [&](long edge, int self) -> int {
    for (int s : at_edge[edge])
      if (s != self && !used[s]) return s;
    return -1;
  };

  for (int s0 = 0; s0 < static_cast<int>(segs.size()); ++s0) {
    if (used[s0]) continue;
    used[s0] = true;

    // Walk forward from eb; afterwards extend backwards from ea.
    std::vector<Pt> fwd{segs[s0].pa, segs[s0].pb};
    long head = segs[s0].eb;
    const long start_edge = segs[s0].ea;
    bool closed = false;
    for (int s = other_seg(head, s0); s >= 0; s = other_seg(head, -1)) {
      used[s] = true;
      if (segs[s].ea == head) {
        fwd.push_back(segs[s].pb);
        head = segs[s].eb;
      } else {
        fwd.push_back(segs[s].pa);
        head = segs[s].ea;
      }
      if (head == start_edge) {
        closed = true;
        fwd.pop_back();  // the closing point duplicates the first
        break;
      }
    }

    std::vector<Pt> pts;
    if (!closed) {
      std::vector<Pt> bwd;  // grows outward from the original pa
      long tail = start_edge;
      for (int s = other_seg(tail, -1); s >= 0; s = other_seg(tail, -1)) {
        used[s] = true;
        if (segs[s].eb == tail) {
          bwd.push_back(segs[s].pa);
          tail = segs[s].ea;
        } else {
          bwd.push_back(segs[s].pb);
          tail = segs[s].eb;
        }
      }
      pts.assign(bwd.rbegin(), bwd.rend());
      pts.insert(pts.end(), fwd.begin(), fwd.end());
    } else {
      pts = std::move(fwd);
    }

    Chain c;
    c.closed = closed;
    c.length = polyline_length(pts, closed);
    c.pts = std::move(pts);
    chains.push_back(std::move(c));
  }
  return chains;
}

// Arc-length-uniform resampling. Closed chains wrap (samples points, no
// duplicate of the start); open chains pin both endpoints.
std::vector<Pt> resample(const std::vector<Pt>& pts, bool closed, int samples) {
  std::vector<Pt> ring = pts;
  if (closed) ring.push_back(pts.front());

  std::vector<double> cum(ring.size(), 0.0);
  for (size_t k = 1; k < ring.size(); ++k)
    cum[k] = cum[k - 1] + dist(ring[k - 1], ring[k]);
  const double total = cum.back();

  std::vector<Pt> out(samples);
  size_t seg = 0;
  for (int m = 0; m < samples; ++m) {
    const double s = closed ? total * m / samples : total * m / (samples - 1);
    while (seg + 2 < ring.size() && cum[seg + 1] < s) ++seg;
    const double span = cum[seg + 1] - cum[seg];
    const double t = span > 0.0 ? (s - cum[seg]) / span : 0.0;
    out[m] = {ring[seg].a + t * (ring[seg + 1].a - ring[seg].a),
              ring[seg].b + t * (ring[seg + 1].b - ring[seg].b)};
  }
  return out;
}

double signed_area(const std::vector<Pt>& pts) {
  double a2 = 0.0;
  for (size_t k = 0; k < pts.size(); ++k) {
    const Pt& p = pts[k];
    const Pt& q = pts[(k + 1) % pts.size()];
    a2 += p.a * q.b - q.a * p.b;
  }
  return 0.5 * a2;
}

}  // namespace

Trajectory contour_trajectory(ContourQuantity quantity, double level, double q,
                              int samples, const qubit::OptimizerConfig& cfg,
                              int grid_nodes) {
  if (samples < 2) throw std::invalid_argument("contour_trajectory: samples must be >= 2");
  if (grid_nodes < 8) throw std::invalid_argument("contour_trajectory: grid too coarse");
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("contour_trajectory: q must lie strictly inside (0, 1)");

  const int n = grid_nodes;
  auto f = [&](double a, double b) { return field_value(quantity, q, a, b); };

  // Field values on the inclusive node grid; the only expensive pass.
  std::vector<double> vals(static_cast<size_t>(n) * n);
  parallel_for(n * n, [&](int idx) {
    const int i = idx / n, j = idx % n;
    vals[idx] = f(two_pi * i / (n - 1), two_pi * j / (n - 1));
  });
  auto node = [&](int i, int j) { return vals[static_cast<size_t>(i) * n + j]; };
  auto coord = [&](int i) { return two_pi * i / (n - 1); };

  const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
  if (*lo >= level || *hi <= level) {
    throw std::invalid_argument("contour_trajectory: level " + std::to_string(level) +
                                " is not attained on the grid (field range [" +
                                std::to_string(*lo) + ", " + std::to_string(*hi) + "])");
  }

  // Marching squares. Corner bit set = strictly above the level; crossings
  // are linearly interpolated along cell edges.
  std::vector<Segment> segs;
  auto crossing = [&](int i0, int j0, int i1, int j1) -> Pt {
    const double va = node(i0, j0), vb = node(i1, j1);
    const double t = (level - va) / (vb - va);
    return {coord(i0) + t * (coord(i1) - coord(i0)),
            coord(j0) + t * (coord(j1) - coord(j0))};
  };

  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      const bool a00 = node(i, j) > level;
      const bool a10 = node(i + 1, j) > level;
      const bool a11 = node(i + 1, j + 1) > level;
      const bool a01 = node(i, j + 1) > level;
      const int mask = (a00 ? 1 : 0) | (a10 ? 2 : 0) | (a11 ? 4 : 0) | (a01 ? 8 : 0);
      if (mask == 0 || mask == 15) continue;

      // Cell edges: S between (i,j)-(i+1,j), E (i+1,j)-(i+1,j+1),
      // N (i,j+1)-(i+1,j+1), W (i,j)-(i,j+1).
      const long S = edge_id(i, j, n, false), E = edge_id(i + 1, j, n, true);
      const long N = edge_id(i, j + 1, n, false), W = edge_id(i, j, n, true);
      const Pt ps = crossing(i, j, i + 1, j), pe = crossing(i + 1, j, i + 1, j + 1);
      const Pt pn = crossing(i, j + 1, i + 1, j + 1), pw = crossing(i, j, i, j + 1);

      auto emit = [&](long e1, const Pt& p1, long e2, const Pt& p2) {
        segs.push_back({e1, e2, p1, p2});
      };

      switch (mask) {
        case 1: case 14: emit(S, ps, W, pw); break;
        case 2: case 13: emit(S, ps, E, pe); break;
        case 3: case 12: emit(W, pw, E, pe); break;
        case 4: case 11: emit(E, pe, N, pn); break;
        case 6: case 9:  emit(S, ps, N, pn); break;
        case 7: case 8:  emit(W, pw, N, pn); break;
        case 5: case 10: {
          // Saddle: resolve with the corner average.
          const double center =
              0.25 * (node(i, j) + node(i + 1, j) + node(i, j + 1) + node(i + 1, j + 1));
          const bool center_above = center > level;
          const bool diag00 = mask == 5;  // above corners on the 00-11 diagonal
          if (diag00 == center_above) {
            emit(S, ps, E, pe);
            emit(W, pw, N, pn);
          } else {
            emit(S, ps, W, pw);
            emit(E, pe, N, pn);
          }
          break;
        }
        default: break;
      }
    }
  }

  auto chains = chain_segments(segs);
  if (chains.empty())
    throw std::invalid_argument("contour_trajectory: no contour found at the level");

  // Longest closed contour wins; longest open one is the fallback.
  int best = -1;
  for (int c = 0; c < static_cast<int>(chains.size()); ++c) {
    if (best < 0) { best = c; continue; }
    const bool better_class = chains[c].closed && !chains[best].closed;
    const bool same_class = chains[c].closed == chains[best].closed;
    if (better_class || (same_class && chains[c].length > chains[best].length)) best = c;
  }
  const Chain& chosen = chains[best];

  // Polish the raw vertices, resample uniformly, then re-polish the
  // resampled points (interpolation walks slightly off the level set).
  std::vector<Pt> polished(chosen.pts.size());
  parallel_for(static_cast<int>(chosen.pts.size()),
               [&](int k) { polished[k] = polish(f, chosen.pts[k], level); });
  std::vector<Pt> pts = resample(polished, chosen.closed, samples);
  parallel_for(static_cast<int>(pts.size()),
               [&](int k) { pts[k] = polish(f, pts[k], level); });

  if (chosen.closed) {
    if (signed_area(pts) < 0.0) std::reverse(pts.begin(), pts.end());
    const auto start = std::min_element(pts.begin(), pts.end(), [](const Pt& p, const Pt& q) {
      return p.a != q.a ? p.a < q.a : p.b < q.b;
    });
    std::rotate(pts.begin(), start, pts.end());
  }

  Trajectory out;
  out.meta.quantity = quantity;
  out.meta.level = level;
  out.meta.q = q;
  out.meta.closed = chosen.closed;
  out.meta.chosen = best;
  for (const auto& c : chains) out.meta.all_lengths.push_back(c.length);
  out.meta.length = polyline_length(pts, chosen.closed);

  // phi grows with arc length along the final polyline.
  std::vector<double> cum(pts.size(), 0.0);
  for (size_t k = 1; k < pts.size(); ++k) cum[k] = cum[k - 1] + dist(pts[k - 1], pts[k]);
  const double total = chosen.closed ? cum.back() + dist(pts.back(), pts.front()) : cum.back();

  out.points.resize(pts.size());
  parallel_for(static_cast<int>(pts.size()), [&](int k) {
    TrajectoryPoint& tp = out.points[k];
    tp.phi = total > 0.0 ? two_pi * cum[k] / total : 0.0;
    tp.alpha = pts[k].a;
    tp.beta = pts[k].b;
    tp.values = qubit::correlation_values(qubit::purify_rank2({q, tp.alpha, tp.beta}), cfg);
  });

  for (const auto& tp : out.points) {
    out.meta.worst_level_error =
        std::max(out.meta.worst_level_error, std::abs(f(tp.alpha, tp.beta) - level));
    out.meta.converged = out.meta.converged && tp.values.converged;
  }
  return out;
}

}  // namespace atlas::expt

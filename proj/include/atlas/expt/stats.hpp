#pragma once

#include <vector>

#include "atlas/expt/contour.hpp"

namespace atlas::expt {

// Flat per-point view of a trajectory carrying the columns the CSVs emit.
struct ProfileRow {
  double phi = 0.0, alpha = 0.0, beta = 0.0;
  double d_ab = 0.0, d_ba = 0.0;
  double neg_ac = 0.0, neg_bc = 0.0;
  double pi_tangle = 0.0;
};

std::vector<ProfileRow> trajectory_profiles(const Trajectory& t);

enum class ProfileColumn { phi, alpha, beta, d_ab, d_ba, neg_ac, neg_bc, pi_tangle };
double column(const ProfileRow& row, ProfileColumn c);

// Spearman rank correlation with average ranks on ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

// Half-open row-index window; length() is the number of rows covered.
struct IndexWindow {
  int begin = 0, end = 0;
  int length() const { return end - begin; }
};

struct MonotonicityReport {
  double spearman_xy = 0.0;    // rank correlation of y against x
  double strict_fraction = 0.0;  // consecutive steps where y moves with x
  IndexWindow worst_window;      // longest run of non-comonotone steps
};

// How tightly column y follows column x along the profile. Requires at
// least 10 rows and a non-constant x column.
MonotonicityReport monotonicity_report(const std::vector<ProfileRow>& rows,
                                       ProfileColumn x, ProfileColumn y);

struct MonogamyReport {
  double spearman_acbc = 0.0;    // rank correlation of the two negativities
  double opposing_fraction = 0.0;  // steps where they move in opposite senses
  IndexWindow worst_window;        // longest run of same-direction steps
};

// Anticorrelation of neg_ac and neg_bc along a trajectory.
MonogamyReport monogamy_report(const std::vector<ProfileRow>& rows);

// Longest window where `rising` strictly increases while `falling` strictly
// decreases at every step.
IndexWindow longest_opposing_run(const std::vector<ProfileRow>& rows,
                                 ProfileColumn rising, ProfileColumn falling);

}  // namespace atlas::expt

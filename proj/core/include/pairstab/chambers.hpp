#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pairstab/model.hpp"
#include "pairstab/polynomial.hpp"
#include "pairstab/rational.hpp"

namespace pairstab {

// ---------------------------------------------------------------------------
// Upper bounds for delta
// ---------------------------------------------------------------------------

struct DeltaBound {
  // Polynomial bound delta (<=) bound; absent when the target's Hilbert
  // polynomial is needed but unknown (surfaces without chi_E0).
  std::optional<Polynomial> bound;
  Rational delta1_bound;
  std::string form;  // "general", "structure_sheaf" or "torsion"
  // No admissible delta1 > 0 remains.
  bool window_empty = false;
};

// Bound forced on delta by any semistable pair with nonzero kernel.
// kernel_rank is required for TargetKind::general.
DeltaBound delta_upper_bound(const PairProblem& problem, std::optional<int> kernel_rank = std::nullopt);

// ---------------------------------------------------------------------------
// Walls and chambers for delta1
// ---------------------------------------------------------------------------

/// Candidate walls (a r - s d) / (r - s), 0 <= s < r, inside [0, -d/(r-1)),
/// with 0 always adjoined. A conservative superset of the true walls.
struct WallSet {
  int rank = 2;
  Rational degree = 0;
  std::vector<Rational> walls;
  Rational range_hi = 0;
  bool degenerate = false;  // [0, range_hi) is empty
};

WallSet wall_set(int r, const Rational& d);

struct Chamber {
  Rational lo;
  std::optional<Rational> hi;  // nullopt: unbounded above
  int index = 0;
  bool beyond_range = false;   // delta1 past the range where walls were enumerated

  bool contains(const Rational& x) const { return lo < x && (!hi || x < *hi); }
};

struct OnWall {
  Rational value;
};

using ChamberLocation = std::variant<Chamber, OnWall>;

// Chamber of `walls` strictly containing delta1, or OnWall when delta1 is a
// wall or the range end itself. Throws DomainError for delta1 <= 0.
ChamberLocation chamber_of(const WallSet& walls, const Rational& delta1);

// Open intervals between consecutive walls, the last ending at range_hi.
std::vector<Chamber> chambers(const WallSet& walls);

// Rank 2 with a line bundle target: (max{0, 2i + d}, 2i + d + 2). Throws
// DomainError when the interval is empty.
Chamber rank2_chamber(int i, const Rational& d);

// Moduli of the rank-2 series are empty from i = -d on.
bool rank2_series_empty(int i, const Rational& d);

struct SeriesRange {
  long i_min;
  long i_max;
};

// floor(-d/2 - 1) + 1 .. -d - 1 for integral d < 0.
SeriesRange series_indices(const Rational& d);

// For every 0 < s < r, neither [sd/r, sd/r + delta1 (r-s)/r) nor
// [sd/r - delta1/r, sd/r) contains an integer.
bool mu_interval_criterion(int r, const Rational& d, const Rational& delta1);

// ---------------------------------------------------------------------------
// Surface bounds
// ---------------------------------------------------------------------------

struct DiscriminantBound {
  Rational stated;         // -delta1 / (4 H^2)
  Rational proof_derived;  // -delta1^2 / H^2
};

// Lower bounds for 4 c2 - c1^2 of a mu-semistable pair on a surface.
DiscriminantBound discriminant_bound(const Rational& delta1, const Rational& h_squared);

struct RestrictionDegree {
  long n0;
  Rational epsilon;    // gap between d/2 + delta1/2 and the largest integer below it
  Rational threshold;  // (c2 - c1^2/4 + delta1^2/(4 H^2)) / epsilon
};

// Smallest n0 >= 1 with n0 > threshold. Throws OnWallError when
// d/2 + delta1/2 is an integer.
RestrictionDegree restriction_degree(const Rational& d, const Rational& c1_squared, const Rational& c2,
                                     const Rational& delta1, const Rational& h_squared);

// ---------------------------------------------------------------------------
// Level structures and framed bundles
// ---------------------------------------------------------------------------

struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
  bool contains(const Rational& x) const {
    return (lo_closed ? lo <= x : lo < x) && (hi_closed ? x <= hi : x < hi);
  }
};

// Semistable pairs with target O_D^r on a curve of genus >= 2 exist iff
// delta lies in (0, r l(D)].
Interval level_structure_window(int r, int level_length);

// r^2 (g - 1) + r^2 l(D).
Rational level_structure_dimension(int r, const Rational& genus, int level_length);

// Rank 2, one reduced point, delta = 1: the strictly semistable locus is
// P^1 x U(-1, 2), of dimension 1 + 4(g - 1) + 1 = 4g - 2.
Rational rank2_point_strictly_semistable_dimension(const Rational& genus);

struct FramedComponent {
  int multiplicity = 0;     // a_i, with H = sum a_i C_i
  std::vector<Rational> nu; // nu_s(E0, C_i) for s = 1 .. r-1
};

struct FramedWindow {
  Rational lower_raw;  // max_s r s / (r - s) * sum_i a_i nu_s
  Interval window;     // (max{lower_raw, 0}, (r - 1) C.H)
  bool empty = false;
};

FramedWindow framed_delta_window(int r, const Rational& c_dot_h, const std::vector<FramedComponent>& components);

}  // namespace pairstab

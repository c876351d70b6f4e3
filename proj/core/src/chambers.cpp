#include "pairstab/chambers.hpp"

#include <algorithm>

#include "pairstab/errors.hpp"

namespace pairstab {

DeltaBound delta_upper_bound(const PairProblem& problem, std::optional<int> kernel_rank) {
  const int r = problem.rank;
  const int e = problem.variety.dimension;
  DeltaBound out;
  switch (problem.target.kind) {
    case TargetKind::structure_sheaf: {
      if (r < 2) throw DomainError("the structure-sheaf bound needs rk E > 1");
      out.form = "structure_sheaf";
      out.delta1_bound = -problem.degree / (r - 1);
      std::optional<Polynomial> chi_o = problem.target.chi;
      if (!chi_o && problem.variety.is_curve()) chi_o = hilbert_polynomial(problem.variety, 1, 0);
      if (chi_o) out.bound = (*chi_o * r - problem.chi) / (r - 1);
      break;
    }
    case TargetKind::torsion_on_divisor: {
      out.form = "torsion";
      out.delta1_bound = problem.target.degree;
      if (problem.target.chi) {
        out.bound = problem.target.chi;
      } else if (problem.variety.is_curve()) {
        out.bound = Polynomial::constant(problem.target.degree);
      }
      break;
    }
    case TargetKind::general: {
      if (!kernel_rank || *kernel_rank < 1 || *kernel_rank > r) {
        throw DomainError("the general bound needs rk Ker alpha in [1, r]");
      }
      if (!problem.target.chi) throw DomainError("the general bound needs the Hilbert polynomial of E0");
      out.form = "general";
      out.bound = problem.chi - (problem.chi - *problem.target.chi) * ratio(r, *kernel_rank);
      out.delta1_bound = out.bound->coefficient(e - 1);
      break;
    }
  }
  out.window_empty = out.bound ? eventual_sign(*out.bound) <= 0 : out.delta1_bound <= 0;
  return out;
}

WallSet wall_set(int r, const Rational& d) {
  if (r < 2) throw DomainError("walls are defined for rank at least 2");
  WallSet out;
  out.rank = r;
  out.degree = d;
  out.range_hi = -d / (r - 1);
  out.degenerate = out.range_hi <= 0;
  out.walls.push_back(0);
  if (!out.degenerate) {
    for (int s = 0; s < r; ++s) {
      // (a r - s d) / (r - s) >= 0  <=>  a >= s d / r
      for (Integer a = ceil(Rational(s * d / r));; ++a) {
        const Rational w = (Rational(a) * r - s * d) / (r - s);
        if (w >= out.range_hi) break;
        out.walls.push_back(w);
      }
    }
  }
  std::sort(out.walls.begin(), out.walls.end());
  out.walls.erase(std::unique(out.walls.begin(), out.walls.end()), out.walls.end());
  return out;
}

ChamberLocation chamber_of(const WallSet& walls, const Rational& delta1) {
  if (delta1 <= 0) throw DomainError("delta1 must be positive");
  if (std::binary_search(walls.walls.begin(), walls.walls.end(), delta1)) return OnWall{delta1};
  if (!walls.degenerate && delta1 == walls.range_hi) return OnWall{delta1};
  if (walls.degenerate || delta1 > walls.range_hi) {
    const Rational lo = walls.degenerate ? Rational(0) : walls.range_hi;
    return Chamber{lo, std::nullopt, static_cast<int>(walls.walls.size()), true};
  }
  const auto upper = std::upper_bound(walls.walls.begin(), walls.walls.end(), delta1);
  const auto idx = static_cast<std::size_t>(upper - walls.walls.begin()) - 1;
  const Rational hi = idx + 1 < walls.walls.size() ? walls.walls[idx + 1] : walls.range_hi;
  return Chamber{walls.walls[idx], hi, static_cast<int>(idx), false};
}

std::vector<Chamber> chambers(const WallSet& walls) {
  if (walls.degenerate) return {Chamber{0, std::nullopt, 0, true}};
  std::vector<Chamber> out;
  for (std::size_t i = 0; i < walls.walls.size(); ++i) {
    const Rational hi = i + 1 < walls.walls.size() ? walls.walls[i + 1] : walls.range_hi;
    out.push_back(Chamber{walls.walls[i], hi, static_cast<int>(i), false});
  }
  return out;
}

Chamber rank2_chamber(int i, const Rational& d) {
  const Rational lo = std::max(Rational(0), Rational(2 * i + d));
  const Rational hi = 2 * i + d + 2;
  if (hi <= lo) {
    throw DomainError("rank-2 chamber for i = " + std::to_string(i) + ", d = " + to_string(d) + " is empty");
  }
  return Chamber{lo, hi, i, false};
}

bool rank2_series_empty(int i, const Rational& d) { return i >= -d; }

SeriesRange series_indices(const Rational& d) {
  if (!is_integer(d) || d >= 0) throw DomainError("the rank-2 series needs an integral degree d < 0");
  const Integer lo = floor(Rational(-d / 2 - 1)) + 1;
  const Rational hi = -d - 1;
  return {lo.get_si(), to_long(hi)};
}

bool mu_interval_criterion(int r, const Rational& d, const Rational& delta1) {
  if (r < 2) throw DomainError("the interval criterion needs rank at least 2");
  if (delta1 <= 0) throw DomainError("delta1 must be positive");
  const auto has_integer = [](const Rational& lo, const Rational& hi) {  // [lo, hi)
    return Rational(ceil(lo)) < hi;
  };
  for (int s = 1; s < r; ++s) {
    const Rational c = s * d / r;
    if (has_integer(c, c + delta1 * (r - s) / r)) return false;
    if (has_integer(c - delta1 / r, c)) return false;
  }
  return true;
}

DiscriminantBound discriminant_bound(const Rational& delta1, const Rational& h_squared) {
  if (h_squared <= 0) throw DomainError("H^2 must be positive");
  if (delta1 < 0) throw DomainError("delta1 must be nonnegative");
  return {-delta1 / (4 * h_squared), -delta1 * delta1 / h_squared};
}

RestrictionDegree restriction_degree(const Rational& d, const Rational& c1_squared, const Rational& c2,
                                     const Rational& delta1, const Rational& h_squared) {
  if (!is_integer(d)) throw DomainError("restriction_degree needs an integral degree");
  if (delta1 <= 0) throw DomainError("delta1 must be positive");
  if (h_squared <= 0) throw DomainError("H^2 must be positive");
  const Rational bound = d / 2 + delta1 / 2;
  if (is_integer(bound)) {
    throw OnWallError("d/2 + delta1/2 = " + to_string(bound) + " is an integer: delta1 lies on a wall");
  }
  RestrictionDegree out;
  out.epsilon = bound - Rational(floor(bound));
  out.threshold = (c2 - c1_squared / 4 + delta1 * delta1 / (4 * h_squared)) / out.epsilon;
  const Integer n0 = floor(out.threshold) + 1;
  out.n0 = n0 < 1 ? 1 : n0.get_si();
  return out;
}

Interval level_structure_window(int r, int level_length) {
  if (r < 1 || level_length < 1) throw DomainError("level structures need r >= 1 and l(D) >= 1");
  return Interval{0, Rational(r) * level_length, false, true};
}

Rational level_structure_dimension(int r, const Rational& genus, int level_length) {
  const Rational r2 = Rational(r) * r;
  return r2 * (genus - 1) + r2 * level_length;
}

Rational rank2_point_strictly_semistable_dimension(const Rational& genus) {
  return 1 + (4 * (genus - 1) + 1);
}

FramedWindow framed_delta_window(int r, const Rational& c_dot_h, const std::vector<FramedComponent>& components) {
  if (r < 2) throw DomainError("framed windows need rank at least 2");
  if (c_dot_h <= 0) throw DomainError("C.H must be positive");
  for (const auto& c : components) {
    if (c.multiplicity < 0) throw DomainError("component multiplicities must be nonnegative");
    if (c.nu.size() != static_cast<std::size_t>(r - 1)) {
      throw DomainError("each component needs nu_s for s = 1 .. r-1");
    }
  }
  FramedWindow out;
  for (int s = 1; s < r; ++s) {
    Rational sum = 0;
    for (const auto& c : components) sum += c.multiplicity * c.nu[static_cast<std::size_t>(s - 1)];
    const Rational term = ratio(r * s, r - s) * sum;
    if (s == 1 || term > out.lower_raw) out.lower_raw = term;
  }
  out.window = Interval{std::max(out.lower_raw, Rational(0)), (r - 1) * c_dot_h, false, false};
  out.empty = out.window.lo >= out.window.hi;
  return out;
}

}  // namespace pairstab

#include "pairstab/gitweights.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "pairstab/errors.hpp"

namespace pairstab {

WeightVector::WeightVector(std::vector<Rational> gamma) : gamma_(std::move(gamma)) {
  if (gamma_.size() < 2) throw DomainError("a weight vector needs at least two entries");
  Rational sum = 0;
  for (std::size_t i = 0; i < gamma_.size(); ++i) {
    gamma_[i].canonicalize();
    if (i > 0 && gamma_[i] < gamma_[i - 1]) throw DomainError("weights must be nondecreasing");
    sum += gamma_[i];
  }
  if (sum != 0) throw DomainError("weights must sum to zero (det lambda = 1)");
  if (gamma_.front() == gamma_.back()) throw DomainError("constant weights describe the trivial subgroup");
}

void BasisProfile::validate() const {
  if (p < 2) throw DomainError("p must be at least 2");
  if (r < 1 || r > p) throw DomainError("r must lie in [1, p]");
  if (ell < 1 || ell > p) throw DomainError("ell must lie in [1, p]");
  if (K.size() != static_cast<std::size_t>(r)) throw DomainError("K must have exactly r entries");
  for (std::size_t j = 0; j < K.size(); ++j) {
    if (K[j] < 1 || K[j] > p) throw DomainError("entries of K must lie in [1, p]");
    if (j > 0 && K[j] <= K[j - 1]) throw DomainError("K must be strictly increasing");
  }
}

Rational mu_hat(const BasisProfile& profile, const WeightVector& gamma, const Rational& eta) {
  profile.validate();
  if (gamma.size() != static_cast<std::size_t>(profile.p)) throw DomainError("weight vector length must equal p");
  Rational gamma_k = 0;
  for (int k : profile.K) gamma_k += gamma[static_cast<std::size_t>(k - 1)];
  return -(gamma_k + eta * gamma[static_cast<std::size_t>(profile.ell - 1)]);
}

WeightVector special_weight_vector(int p, int i) {
  if (i < 1 || i > p - 1) throw DomainError("gamma^(i) needs 1 <= i <= p - 1");
  std::vector<Rational> gamma(static_cast<std::size_t>(p), Rational(i));
  std::fill_n(gamma.begin(), i, Rational(i - p));
  return WeightVector(std::move(gamma));
}

std::vector<Rational> cone_coefficients(const WeightVector& gamma) {
  const auto p = gamma.size();
  std::vector<Rational> c;
  c.reserve(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) c.push_back((gamma[i + 1] - gamma[i]) / static_cast<long>(p));
  return c;
}

Rational critical_mu(const BasisProfile& profile, const Rational& eta, int i) {
  profile.validate();
  if (i < 1 || i > profile.p - 1) throw DomainError("critical values are indexed by 1 <= i <= p - 1");
  const auto jumps = std::count_if(profile.K.begin(), profile.K.end(), [i](int k) { return k <= i; });
  const int ell_reached = profile.ell <= i ? 1 : 0;
  return profile.p * (Rational(jumps) + eta * ell_reached) - i * (profile.r + eta);
}

std::vector<int> critical_indices(const BasisProfile& profile) {
  profile.validate();
  std::vector<int> out;
  const auto keep = [&](int i) {
    if (i >= 1 && i <= profile.p - 1) out.push_back(i);
  };
  keep(profile.ell - 1);
  for (int k : profile.K) keep(k - 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ConditionRow> condition_rows(const BasisProfile& profile, const Rational& eta) {
  profile.validate();
  const int p = profile.p;
  const int r = profile.r;
  std::vector<ConditionRow> rows;
  for (int j = 1; j <= r + 1; ++j) {
    const int k_j = j <= r ? profile.K[static_cast<std::size_t>(j - 1)] : p + 1;
    const int ell_j = std::min(k_j, profile.ell);
    if (ell_j > 1) rows.push_back({1, j, Rational(p * (j - 1)) - (ell_j - 1) * (r + eta)});
  }
  for (int j = 1; j <= r; ++j) {
    const int k_j = profile.K[static_cast<std::size_t>(j - 1)];
    rows.push_back({2, j, p * (j - 1 + eta) - (k_j - 1) * (r + eta)});
  }
  return rows;
}

WeightVerdict hilbert_verdict(const BasisProfile& profile, const Rational& eta, Mode mode) {
  if (eta <= 0) throw DomainError("eta must be positive");
  WeightVerdict v;
  v.rows = condition_rows(profile, eta);
  v.minimum = v.rows.front().value;
  for (const auto& row : v.rows) v.minimum = std::min(v.minimum, row.value);
  v.strict = v.minimum > 0;
  v.satisfied = mode == Mode::stable ? v.strict : v.minimum >= 0;
  return v;
}

namespace {

// Calls visit(gamma) for every nondecreasing integer vector of length p with
// entries in [-bound, bound], zero sum and gamma.front() < gamma.back().
template <typename Visit>
void enumerate_weights(int p, long bound, Visit&& visit) {
  std::vector<long> gamma(static_cast<std::size_t>(p));
  const auto recurse = [&](auto&& self, int pos, long prefix, long lowest) -> void {
    const long remaining = p - pos;
    if (remaining == 1) {
      const long last = -prefix;
      if (last < lowest || last > bound) return;
      gamma[static_cast<std::size_t>(pos)] = last;
      if (gamma.front() < gamma.back()) visit(gamma);
      return;
    }
    // The tail is >= x, so prefix + remaining * x <= 0; it is <= bound, so
    // prefix + x + (remaining - 1) * bound >= 0.
    const long hi_by_sum = prefix <= 0 ? (-prefix) / remaining : -((prefix + remaining - 1) / remaining);
    const long hi = std::min(bound, hi_by_sum);
    const long lo = std::max(lowest, -prefix - (remaining - 1) * bound);
    for (long x = lo; x <= hi; ++x) {
      gamma[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, prefix + x, x);
    }
  };
  recurse(recurse, 0, 0, -bound);
}

}  // namespace

WeightVerdict brute_force_verdict(const BasisProfile& profile, const Rational& eta, int bound, Mode mode) {
  profile.validate();
  if (eta <= 0) throw DomainError("eta must be positive");
  if (bound < 1) throw DomainError("enumeration bound must be at least 1");
  const long limit = static_cast<long>(bound) * profile.p;
  if (limit > (1L << 24)) throw DomainError("enumeration bound too large");

  std::vector<std::size_t> k_index;
  for (int k : profile.K) k_index.push_back(static_cast<std::size_t>(k - 1));
  const auto ell_index = static_cast<std::size_t>(profile.ell - 1);

  WeightVerdict v;
  std::vector<long> argmin;
  bool have_min = false;

  // mu_hat * den = -(den * gamma_K + num * gamma_ell); both factors are kept
  // small enough for 64-bit products, otherwise fall back to exact rationals.
  const auto& num_z = eta.get_num();
  const auto& den_z = eta.get_den();
  const bool machine = num_z.fits_slong_p() && den_z.fits_slong_p() && abs(num_z) < (1L << 28) &&
                       den_z < (1L << 28) && limit * (profile.r + 1) < (1L << 30);
  if (machine) {
    const std::int64_t num = num_z.get_si();
    const std::int64_t den = den_z.get_si();
    std::int64_t best = 0;
    enumerate_weights(profile.p, limit, [&](const std::vector<long>& gamma) {
      std::int64_t gamma_k = 0;
      for (auto idx : k_index) gamma_k += gamma[idx];
      const std::int64_t scaled = -(den * gamma_k + num * gamma[ell_index]);
      ++v.vectors_checked;
      if (!have_min || scaled < best) {
        best = scaled;
        argmin = gamma;
        have_min = true;
      }
    });
    v.minimum = Rational(Integer(static_cast<long>(best)), Integer(static_cast<long>(den)));
  } else {
    enumerate_weights(profile.p, limit, [&](const std::vector<long>& gamma) {
      Rational gamma_k = 0;
      for (auto idx : k_index) gamma_k += gamma[idx];
      Rational value = -(gamma_k + eta * gamma[ell_index]);
      ++v.vectors_checked;
      if (!have_min || value < v.minimum) {
        v.minimum = value;
        argmin = gamma;
        have_min = true;
      }
    });
  }
  v.minimum.canonicalize();
  for (long g : argmin) v.minimizer.emplace_back(g);
  v.strict = v.minimum > 0;
  v.satisfied = mode == Mode::stable ? v.strict : v.minimum >= 0;
  return v;
}

Verdict subspace_criterion(int p, int r, const Rational& eta, int dim_w, int rank_ew, bool in_ker_a, Mode mode) {
  if (p < 1 || r < 1) throw DomainError("p and r must be positive");
  if (eta <= 0) throw DomainError("eta must be positive");
  if (dim_w < 0 || dim_w > p) throw DomainError("dim W must lie in [0, p]");
  if (rank_ew < 0 || rank_ew > r) throw DomainError("rk E_(W) must lie in [0, r]");
  const Rational lhs = dim_w * (r + eta);
  const Rational rhs = in_ker_a ? Rational(p * rank_ew) : p * (rank_ew + eta);
  Verdict v;
  const Rational margin = rhs - lhs;
  v.margin = margin;
  if (dim_w == 0) {
    v.satisfied = v.strict = true;
    return v;
  }
  v.strict = margin > 0;
  v.satisfied = mode == Mode::stable ? v.strict : margin >= 0;
  return v;
}

Rational eta_delta_conversion(int p, int r, const Rational& value, Conversion direction) {
  if (p < 1 || r < 1) throw DomainError("p and r must be positive");
  if (direction == Conversion::eta_to_delta_bar) {
    if (value <= 0) throw DomainError("eta must be positive");
    return p * value / (r + value);
  }
  if (!(0 < value && value < p)) throw DomainError("delta_bar must lie in (0, p)");
  return r * value / (p - value);
}

}  // namespace pairstab

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pairstab/gitweights.hpp"
#include "pairstab/polynomial.hpp"
#include "pairstab/rational.hpp"

namespace pairstab::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

// num / den with |num| <= max_abs and 1 <= den <= max_den.
inline Rational random_rational(Rng& rng, long max_abs, long max_den) {
  return ratio(uniform(rng, -max_abs, max_abs), uniform(rng, 1, max_den));
}

inline Rational random_positive_rational(Rng& rng, long max_num, long max_den) {
  return ratio(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

inline Polynomial random_polynomial(Rng& rng, int max_degree, long max_abs, long max_den) {
  std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree + 1)));
  for (auto& x : c) x = random_rational(rng, max_abs, max_den);
  return Polynomial(std::move(c));
}

// A strictly increasing r-subset of [1, p].
inline std::vector<int> random_subset(Rng& rng, int p, int r) {
  std::vector<int> all(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(r));
  std::sort(all.begin(), all.end());
  return all;
}

inline BasisProfile random_profile(Rng& rng, int max_p) {
  BasisProfile pr;
  pr.p = static_cast<int>(uniform(rng, 2, max_p));
  pr.r = static_cast<int>(uniform(rng, 1, pr.p));
  pr.ell = static_cast<int>(uniform(rng, 1, pr.p));
  pr.K = random_subset(rng, pr.p, pr.r);
  return pr;
}

// Nondecreasing, zero sum, not constant.
inline WeightVector random_weight_vector(Rng& rng, int p, long max_abs, long max_den) {
  for (;;) {
    std::vector<Rational> g(static_cast<std::size_t>(p));
    Rational sum = 0;
    for (auto& x : g) {
      x = random_rational(rng, max_abs, max_den);
      sum += x;
    }
    std::sort(g.begin(), g.end());
    const Rational mean = sum / p;
    for (auto& x : g) x -= mean;
    if (g.front() != g.back()) return WeightVector(std::move(g));
  }
}

// Every strictly increasing r-subset of [1, p], in lexicographic order.
inline std::vector<std::vector<int>> all_subsets(int p, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int k = next; k <= p; ++k) {
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Cauchy bound: every real root of q lies below 1 + max |a_i / a_n|.
inline Rational cauchy_bound(const Polynomial& q) {
  Rational m = 0;
  for (int i = 0; i < q.degree(); ++i) m = std::max(m, Rational(abs(q.coefficient(i) / q.leading())));
  return 1 + m;
}

}  // namespace pairstab::testing

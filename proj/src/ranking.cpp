// SPDX-License-Identifier: Apache-2.0
#include "ranking.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace levyrank {

void rank_permutation_into(std::span<const double> x, RankPermutation& out) {
  const auto n = x.size();
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("rank_permutation: non-finite coordinate");
  }
  out.forward.resize(n);
  out.inverse.resize(n);
  std::iota(out.forward.begin(), out.forward.end(), 0);
  // Stable sort keeps equal coordinates in index order, which is exactly the
  // tie rule: smaller index, smaller rank.
  std::stable_sort(out.forward.begin(), out.forward.end(),
                   [&x](std::int32_t a, std::int32_t b) { return x[a] < x[b]; });
  for (std::size_t k = 0; k < n; ++k) out.inverse[out.forward[k]] = static_cast<std::int32_t>(k);
}

RankPermutation rank_permutation(std::span<const double> x) {
  RankPermutation p;
  rank_permutation_into(x, p);
  return p;
}

std::vector<double> ranked_values(std::span<const double> x) {
  RankPermutation p = rank_permutation(x);
  std::vector<double> y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] = x[p.forward[k]];
  return y;
}

std::vector<double> gaps(std::span<const double> x) {
  if (x.size() < 2) return {};
  RankPermutation p = rank_permutation(x);
  std::vector<double> z(x.size() - 1);
  gaps_into(x, p, z);
  return z;
}

void gaps_into(std::span<const double> x, const RankPermutation& perm, std::span<double> out) {
  assert(out.size() + 1 == x.size());
  for (std::size_t k = 0; k + 1 < x.size(); ++k)
    out[k] = x[perm.forward[k + 1]] - x[perm.forward[k]];
}

void center_in_place(std::span<double> x) {
  if (x.empty()) return;
  const double inv_n = 1.0 / static_cast<double>(x.size());
  double mean = 0;
  for (double v : x) mean += v;
  mean *= inv_n;
  for (double& v : x) v -= mean;
  double residual = 0;
  for (double v : x) residual += v;
  residual *= inv_n;
  for (double& v : x) v -= residual;
}

std::vector<double> centered(std::span<const double> x) {
  std::vector<double> y(x.begin(), x.end());
  center_in_place(y);
  return y;
}

void permute_by_inverse_into(std::span<const double> w, const RankPermutation& perm,
                             std::span<double> out) {
  assert(w.size() == out.size() && w.size() == perm.inverse.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[perm.inverse[i]];
}

std::vector<double> permute_by_inverse(std::span<const double> w, const RankPermutation& perm) {
  std::vector<double> u(w.size());
  permute_by_inverse_into(w, perm, u);
  return u;
}

}  // namespace levyrank

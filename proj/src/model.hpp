// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hash.hpp"
#include "rng.hpp"

namespace levyrank {

/// One-dimensional displacement distribution with closed-form first and
/// second moments. These four families cover every jump setting the tool
/// supports; anything without closed-form moments is rejected by
/// construction, so the stability verdict never needs Monte Carlo.
class ScalarLaw {
 public:
  enum class Kind { constant, exponential, normal, mixture };

  static ScalarLaw constant(double value);
  static ScalarLaw exponential(double rate);
  static ScalarLaw normal(double mean, double variance);
  static ScalarLaw mixture(std::vector<std::pair<double, ScalarLaw>> parts);

  Kind kind() const { return kind_; }
  double mean() const;
  double second_moment() const;
  double sample(RngStream& rng) const;

  /// All (value, probability) atoms when the law is purely atomic, up to
  /// `cap` atoms; nullopt otherwise.
  std::optional<std::vector<std::pair<double, double>>> finite_support(
      std::size_t cap = 1024) const;

  // Parameter accessors (valid for the matching kind only).
  double value() const { return a_; }
  double rate() const { return a_; }
  double normal_mean() const { return a_; }
  double variance() const { return b_; }
  const std::vector<std::pair<double, ScalarLaw>>& parts() const { return parts_; }

  void hash_into(Fnv1a& h) const;

 private:
  ScalarLaw(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  double a_ = 0;
  double b_ = 0;
  std::vector<std::pair<double, ScalarLaw>> parts_;  // normalized weights
};

/// Distribution of a full displacement vector on R^N.
class DisplacementLaw {
 public:
  enum class Kind { point_mass, single_coordinate, product };

  static DisplacementLaw point_mass(std::vector<double> atom);
  /// Law on one coordinate (0-based), all other coordinates exactly zero.
  static DisplacementLaw single_coordinate(int dim, int coordinate, ScalarLaw law);
  /// Independent coordinates, one scalar law each.
  static DisplacementLaw product(std::vector<ScalarLaw> laws);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  std::vector<double> mean() const;
  std::vector<double> second_moment() const;  // per-coordinate E[z_k^2]
  void sample(RngStream& rng, std::span<double> out) const;

  /// Full finite support as (probability, vector) pairs when every coordinate
  /// is atomic and the product has at most `cap` atoms.
  std::optional<std::vector<std::pair<double, std::vector<double>>>> finite_support(
      std::size_t cap = 1024) const;

  const std::vector<double>& atom() const { return atom_; }
  int coordinate() const { return coordinate_; }
  const ScalarLaw& scalar_law() const { return laws_.front(); }
  const std::vector<ScalarLaw>& product_laws() const { return laws_; }

  void hash_into(Fnv1a& h) const;

 private:
  DisplacementLaw(Kind k, int dim) : kind_(k), dim_(dim) {}
  Kind kind_;
  int dim_;
  std::vector<double> atom_;
  int coordinate_ = -1;
  std::vector<ScalarLaw> laws_;
};

struct JumpComponent {
  double rate;
  DisplacementLaw law;
};

/// Finite jump-intensity measure: a mixture of rated displacement laws.
/// Total rate zero means a jump-free (pure diffusion) system.
class JumpMeasure {
 public:
  JumpMeasure(int dim, std::vector<JumpComponent> components);
  static JumpMeasure none(int dim);

  struct RankJump {
    int rank;  // 0-based rank receiving the jump
    double rate;
    ScalarLaw law;
  };
  /// Independent per-rank jumps: each entry is embedded on its rank
  /// coordinate with exact zeros elsewhere.
  static JumpMeasure per_rank(int dim, const std::vector<RankJump>& entries);

  int dim() const { return dim_; }
  double total_rate() const { return total_rate_; }
  const std::vector<JumpComponent>& components() const { return components_; }

  /// Component selection by rate share; u uniform in (0,1).
  const JumpComponent& pick(double u) const;

  void hash_into(Fnv1a& h) const;

 private:
  int dim_;
  double total_rate_ = 0;
  std::vector<JumpComponent> components_;
};

/// Mean displacement rate per rank: f_k = sum over components of
/// rate * E[z_k]. Exact closed form.
std::vector<double> jump_mean_vector(const JumpMeasure& jumps);

/// Per-rank second-moment rates; throws if any value fails to be finite.
std::vector<double> second_moment_check(const JumpMeasure& jumps);

/// Symmetric positive definite covariance of the driving noise, stored with
/// its lower-triangular factor. Positive definiteness is established by the
/// factorization itself: every pivot must exceed 1e-12 relative to the
/// largest diagonal entry.
class Covariance {
 public:
  static Covariance diagonal(std::vector<double> variances);
  static Covariance dense(const std::vector<std::vector<double>>& matrix);

  int dim() const { return dim_; }
  bool is_diagonal() const { return diagonal_; }
  /// Diagonal entries a_kk.
  const std::vector<double>& variances() const { return variances_; }
  double entry(int i, int j) const;

  /// out = F xi with F F^T = A (F from the stored factorization).
  void apply_factor(std::span<const double> xi, std::span<double> out) const;

  void hash_into(Fnv1a& h) const;

 private:
  Covariance(int dim, bool diag) : dim_(dim), diagonal_(diag) {}
  int dim_;
  bool diagonal_;
  std::vector<double> variances_;  // diagonal of A
  std::vector<double> dense_;      // row-major A, dense case only
  std::vector<double> factor_;     // sqrt variances (diag) or row-major lower L
};

/// The governing triple (drift vector, covariance, jump measure) plus the
/// particle count. Immutable and validated on construction; the single source
/// of truth for the dynamics.
class ModelSpec {
 public:
  ModelSpec(std::vector<double> drift, Covariance covariance, JumpMeasure jumps);

  int n_particles() const { return static_cast<int>(drift_.size()); }
  const std::vector<double>& drift() const { return drift_; }
  const Covariance& covariance() const { return covariance_; }
  const JumpMeasure& jumps() const { return jumps_; }

  std::uint64_t fingerprint() const;

 private:
  std::vector<double> drift_;
  Covariance covariance_;
  JumpMeasure jumps_;
};

/// Closed-form stability verdict for a model.
struct StabilityReport {
  std::vector<double> jump_means;        // f
  std::vector<double> effective_drifts;  // m = g + f
  std::vector<double> centered_drifts;   // centered m
  std::vector<double> partial_sums;      // prefix sums of centered m, length N-1
  double margin = 0;                     // min partial sum
  bool stable = false;                   // margin strictly positive
};

/// Evaluates the rank-drift stability criterion: the system is stable iff
/// every bottom-group partial sum of centered effective drifts is strictly
/// positive. A zero partial sum reports not stable; the margin field shows
/// how close the verdict is to the boundary.
StabilityReport check_stability(const ModelSpec& spec);

}  // namespace levyrank

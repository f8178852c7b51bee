#pragma once

#include <limits>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "seqspace/orlicz.hpp"
#include "seqspace/seq.hpp"
#include "seqspace/weights.hpp"

namespace seqspace {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct LpSpace {
  double p;  // [1, inf]
};

struct LpqSpace {
  double p;  // (1, inf)
  double q;  // [1, inf]
};

struct LorentzSpace {
  double q;  // [1, inf)
  WeightSeq w;
};

struct OrliczSpace {
  OrliczFn N;
};

/// A symmetric sequence space. Immutable; the weight partial sums needed by
/// Lorentz and l^{p,q} norms are built once at construction.
class SpaceSpec {
 public:
  using Kind = std::variant<LpSpace, LpqSpace, LorentzSpace, OrliczSpace>;

  static SpaceSpec lp(double p);
  static SpaceSpec lpq(double p, double q);
  static SpaceSpec lorentz(double q, WeightSeq w);
  static SpaceSpec orlicz(OrliczFn N);

  const Kind& kind() const noexcept { return kind_; }
  template <class T>
  const T* as() const noexcept { return std::get_if<T>(&kind_); }

  /// Partial sums of w^q (Lorentz) or k^{q/p-1} (l^{p,q}, q finite); null otherwise.
  const PowerSums* sums() const noexcept { return sums_.get(); }

  std::string name() const;  // "lp", "lpq", "lorentz", "orlicz"
  std::string describe() const;

 private:
  explicit SpaceSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
  std::shared_ptr<const PowerSums> sums_;
};

/// Distribution of a decreasing nonnegative vector: `count` consecutive
/// entries equal to `value`. Counts may be astronomically large.
struct Run {
  double value;
  long double count;
};
using Runs = std::vector<Run>;

/// Nonzero |x| in nonincreasing order, equal neighbours merged.
Runs runs_of(std::span<const double> x);

double norm(const SpaceSpec& space, const Seq& x);
double norm(const SpaceSpec& space, std::span<const double> x);
/// Norm of any vector with the given distribution.
double norm_of_runs(const SpaceSpec& space, const Runs& runs);

/// phi(n) = ||chi_{1..n}||; n is an integer value, possibly beyond 2^64.
double fundamental_function(const SpaceSpec& space, long double n);
/// log2 phi(n), kept in long double for index limits.
long double log2_fundamental(const SpaceSpec& space, long double n);

}  // namespace seqspace

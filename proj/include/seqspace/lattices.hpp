#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "seqspace/orlicz.hpp"
#include "seqspace/random.hpp"
#include "seqspace/spaces.hpp"
#include "seqspace/weights.hpp"

namespace seqspace {

/// Positive weights mu_1, mu_2, ... of a weighted l_q lattice, held as log2.
class MuSeq {
 public:
  /// mu_k = 2^{(k-1)/q} w_{2^{k-1}}.
  static MuSeq from_lorentz(double q, WeightSeq w);
  /// mu_k = ratio^{k-1}.
  static MuSeq geometric(double ratio);
  static MuSeq array(std::vector<double> values);

  long double log2_at(std::uint64_t k) const;
  double operator()(std::uint64_t k) const { return static_cast<double>(std::exp2(log2_at(k))); }
  std::uint64_t length() const noexcept;
  const std::string& label() const noexcept { return label_; }

 private:
  enum class Form { lorentz, geometric, array } form_ = Form::geometric;
  double q_ = 1.0;
  double ratio_ = 1.0;
  std::vector<double> values_;
  std::vector<WeightSeq> w_;  // zero or one element
  std::string label_;
};

struct ExLattice {
  SpaceSpec base;
};
struct WlqLattice {
  double q;
  MuSeq mu;
};
struct UnLattice {
  OrliczFn N;
};

class LatticeSpec {
 public:
  using Kind = std::variant<ExLattice, WlqLattice, UnLattice>;

  static LatticeSpec ex(SpaceSpec base);
  static LatticeSpec wlq(double q, MuSeq mu);
  static LatticeSpec un(OrliczFn N);

  const Kind& kind() const noexcept { return kind_; }
  template <class T>
  const T* as() const noexcept { return std::get_if<T>(&kind_); }
  std::string name() const;  // "ex", "wlq", "un"
  std::string describe() const;

 private:
  explicit LatticeSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

inline constexpr std::size_t kDefaultExCap = 24;

/// Distribution of S a: |a_k| repeated 2^{k-1} times.
Runs dyadic_block_runs(std::span<const double> a);

double lattice_norm(const LatticeSpec& lat, const Seq& a, std::size_t ex_cap = kDefaultExCap);
/// log2 ||e_k||; no dimension cap (closed forms only).
long double log2_unit_norm(const LatticeSpec& lat, std::uint64_t k);
/// (||e_k||)_{k <= k_max}, evaluated through lattice_norm.
std::vector<double> unit_norms(const LatticeSpec& lat, std::size_t k_max, std::size_t ex_cap = kDefaultExCap);

struct ShiftExponents {
  double k_plus = 0.0;           // asymptotic-slope estimate at n_max
  double k_minus = 0.0;
  double k_plus_at_n_max = 0.0;  // (sup_k s_k/s_{k-n})^{1/n} at n = n_max
  double k_minus_at_n_max = 0.0;
  double k_plus_inf = 0.0;       // min over n <= n_max (infimum characterization)
  double k_minus_inf = 0.0;
  int n_max = 0;
  int k_max = 0;
};

/// Shift exponents restricted to the unit vectors, from s_k = ||e_k||, k <= k_max.
ShiftExponents shift_exponents(const LatticeSpec& lat, int n_max, int k_max);

/// (x*_1, x*_2, x*_4, ...), the dyadic samples of the rearrangement.
Seq dyadic_samples(const Seq& x);

/// ||dyadic samples of x||_{E_X} / ||x||_X; lies in [1, 5].
double sandwich_ratio(const SpaceSpec& base, const Seq& x);

enum class EquivalenceKind { lorentz_dyadic, orlicz_dyadic };
EquivalenceKind parse_equivalence_kind(const std::string& name);
const char* equivalence_kind_name(EquivalenceKind k);

struct EquivalenceParams {
  double q = 2.0;
  WeightSeq w = WeightSeq::power(0.25);
  OrliczFn N = OrliczFn::power(2.0);
  std::size_t max_length = 4096;
  std::uint64_t seed = kDefaultSeed;
};

/// Ratios ||dyadic samples||_lattice / ||x||_X over random decreasing x.
struct EquivalenceReport {
  EquivalenceKind kind;
  int trials = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double proven_lo = 1.0;  // constants from the modular-sum argument
  double proven_hi = 0.0;
};

EquivalenceReport ex_equivalence_report(EquivalenceKind kind, const EquivalenceParams& params, int trials);

struct ConditionResult {
  bool holds = false;
  double margin = 0.0;    // 2^{1/q} - estimate
  double estimate = 0.0;  // (sup_k w_{2^k}/w_{2^{k+n}})^{1/n} at n = n_max
};

/// Dyadic growth condition on w needed for E_{lambda_q(w)} = l_q(mu).
ConditionResult dyadic_weight_condition(double q, const WeightSeq& w, int n_max, int k_max);

}  // namespace seqspace

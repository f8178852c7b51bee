#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/random.hpp"
#include "seqspace/spaces.hpp"

namespace seqspace {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Estimate of a limit index from a truncated family: `point` is the
/// asymptotic slope at n_max; `range` also covers the inf/sup characterization.
struct LimitEstimate {
  double point = 0.0;
  Interval range;
  double at_n_max = 0.0;  // (1/n_max) log2 T_{n_max}
  std::string method;     // closed_form | truncated_sup
};

struct IndexOptions {
  int n_max = 48;                            // Lorentz / l^{p,q} routes
  std::uint64_t j_max = std::uint64_t{1} << 14;
  int orlicz_n_max = 20;
  int orlicz_k_max = 200;
  std::size_t dim = 4096;
  std::uint64_t seed = kDefaultSeed;
};

struct IndexPair {
  LimitEstimate alpha;
  LimitEstimate beta;
};

/// Boyd indices. Closed forms for l^p and l^{p,inf}; partial-sum ratios for
/// Lorentz and l^{p,q}; the dyadic inverse-function formula for Orlicz.
IndexPair boyd_indices(const SpaceSpec& space, const IndexOptions& opt = {});

/// Fundamental indices (mu, nu) from dilation functions of phi.
IndexPair fundamental_indices(const SpaceSpec& space, const IndexOptions& opt = {});

/// Dyadic inverse-function formula for Orlicz spaces; gated on a finite
/// Delta_2 margin.
IndexPair orlicz_indices(const OrliczFn& N, int n_max, int k_max);

/// Lorentz indices via partial-sum ratios (full) or dyadic weight ratios
/// (simplified, requires the dyadic weight condition).
IndexPair lorentz_indices(double q, const WeightSeq& w, int n_max, std::uint64_t j_max, bool simplified);

struct IndexReport {
  std::string space;
  Interval alpha;
  Interval beta;
  double alpha_point = 0.0;
  double beta_point = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  std::pair<double, double> f_interval{0.0, 0.0};
  std::map<std::string, std::string> method;
  IndexOptions params;
  std::vector<std::string> notes;
};

IndexReport index_report(const SpaceSpec& space, const IndexOptions& opt = {});

/// [1/beta, 1/alpha] with 1/0 = inf.
std::pair<double, double> f_interval(const IndexReport& report);

struct FundamentalTypeCheck {
  bool evidence = false;
  double gap_alpha = 0.0;  // alpha - mu
  double gap_beta = 0.0;   // nu - beta
};

FundamentalTypeCheck fundamental_type_check(const IndexReport& report, double tol = 5e-3);

/// alpha <= mu <= nu <= beta within slack, all in [0, 1].
bool ordering_chain_holds(const IndexReport& report, double slack = 1e-6);

}  // namespace seqspace

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqspace/operators.hpp"
#include "seqspace/random.hpp"
#include "seqspace/spaces.hpp"

namespace seqspace {

enum class SearchStrategy { structured, random, optimize };

SearchStrategy parse_strategy(const std::string& name);
const char* strategy_name(SearchStrategy s);

struct SearchOptions {
  int restarts = 16;
  int iterations = 500;
  int random_trials = 64;
  std::uint64_t seed = kDefaultSeed;
};

/// A certified lower bound ||op x|| / ||x|| together with its witness x.
struct NormCertificate {
  double value = 0.0;
  Seq witness;
  std::size_t input_dim = 0;        // inputs searched had length <= input_dim
  std::uint64_t output_length = 0;  // stored length of op(witness)
  bool truncated = false;           // input_dim < dim because outputs had to fit in dim
  std::string family;               // which family produced the witness
};

/// Lower bound on the norm of the operator program (applied left to right)
/// acting on X, over vectors of length <= dim whose image fits in dim entries.
NormCertificate operator_norm_lower(const SpaceSpec& space, const std::vector<OperatorSpec>& program,
                                    std::size_t dim, SearchStrategy strategy,
                                    const SearchOptions& options = {});
NormCertificate operator_norm_lower(const SpaceSpec& space, const OperatorSpec& op, std::size_t dim,
                                    SearchStrategy strategy, const SearchOptions& options = {});

struct DilationSup {
  double value = 0.0;  // sup over j <= j_max
  std::uint64_t argmax_j = 0;
  std::uint64_t j_max = 0;
};

/// sup_{j<=j_max} (W(2^n j) / W(j))^{1/q}, W the partial sums of w^q: the norm
/// of sigma_{2^n} on lambda_q(w) when the sup runs over all j.
DilationSup lorentz_dilation_norm(double q, const WeightSeq& w, int n, std::uint64_t j_max);
/// sup_{j<=j_max} (W(j) / W(2^n j))^{1/q}, the matching quantity for sigma_{2^{-n}}.
DilationSup lorentz_contraction_norm(double q, const WeightSeq& w, int n, std::uint64_t j_max);
/// log2 of the two sups above from precomputed partial sums, for large n.
struct DyadicRatioLog {
  long double up = 0.0L;    // log2 sup_j W(2^n j)/W(j)
  long double down = 0.0L;  // log2 sup_j W(j)/W(2^n j)
};
DyadicRatioLog dyadic_ratio_logs(const PowerSums& W, int n, const std::vector<std::uint64_t>& js);

struct SpectralRadiusEstimate {
  double min_over_n = 0.0;  // min_n ||op^n||^{1/n}
  double at_n_max = 0.0;    // ||op^{n_max}||^{1/n_max}
  std::vector<double> per_n;
  std::string caveat;
};

SpectralRadiusEstimate spectral_radius_estimate(const SpaceSpec& space, const OperatorSpec& op, int n_max,
                                                std::size_t dim, const SearchOptions& options = {});

}  // namespace seqspace

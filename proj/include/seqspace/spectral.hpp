#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqspace/random.hpp"
#include "seqspace/seq.hpp"
#include "seqspace/spaces.hpp"

namespace seqspace {

struct WitnessReport {
  double lambda = 0.0;
  int n = 0;
  double residual = 0.0;      // ||(D - lambda) v|| / ||v||
  double residual_raw = 0.0;  // ||(D - lambda) v||
  std::optional<double> predicted;
  long double support_size = 0.0L;
  double norm = 0.0;  // ||v||
  std::string method;
};

/// Largest stored length for the dense path (seeds with more than one entry).
inline constexpr std::size_t kWitnessDenseCap = std::size_t{1} << 24;

/// v_n = n^{-1/p} sum_{k<=n} 2^{(1-k)/p} D^{k-1}(seed), lambda = 2^{1/p}.
/// A single-entry seed is handled through its level distribution, so n can be
/// large (the support has 2^n - 1 entries for seed e_1).
WitnessReport doubling_witness_vn(const SpaceSpec& space, double p, int n, const Seq& seed = Seq::unit(1));

struct ScanOptions {
  std::size_t dim = std::size_t{1} << 14;  // test vectors live on {1..dim}
  int restarts = 8;
  std::uint64_t seed = kDefaultSeed;
};

struct ScanPoint {
  double lambda = 0.0;
  double estimate = 0.0;  // upper estimate of inf ||D_lambda x||/||x|| over x on {1..dim}
  std::string method;     // vn_witness / geometric / local_min
  double witness = -1.0;  // best v_n value when lambda in (1, 2], else negative
  int levels = 0;
};

/// Per-lambda upper estimates of the lower bound of D - lambda. Only upper
/// estimates of the infimum; nothing here bounds it from below.
std::vector<ScanPoint> residual_scan(const SpaceSpec& space, const std::vector<double>& lambda_grid,
                                     const ScanOptions& opt = {});

/// lambda_0 + i (lambda_1 - lambda_0)/(steps - 1) from "start:stop:steps".
std::vector<double> parse_grid(const std::string& text);

struct ShiftIdentityCheck {
  bool identity = false;     // T^2 a = lambda^2 e_j - 2 lambda^{1-n} e_{j+n+1} + lambda^{-2n} e_{j+2n+2}
  bool lower_bound = false;  // a >= n lambda^{-n} e_{j+n}
  bool coefficient = false;  // a_{j+n} = (n+1) lambda^{-n}
  bool holds() const { return identity && lower_bound && coefficient; }
};

/// a = (sum_{i<=n} lambda^{-i} tau^i)^2 e_j and the identities above.
ShiftIdentityCheck shift_witness_identity(const mpq_class& lambda, int n, int j);
ShiftIdentityCheck shift_witness_identity(double lambda, int n, int j, double tol = 1e-10);

/// sum_k lambda^k a_k, k 1-based.
mpq_class moment_functional(const mpq_class& lambda, const std::vector<mpq_class>& a);
double moment_functional(double lambda, const Seq& a);

/// The finitely supported a with (tau_1 - lambda) a = b.
std::vector<mpq_class> solve_T_lambda(const mpq_class& lambda, const std::vector<mpq_class>& b);
Seq solve_T_lambda(double lambda, const Seq& b, double tol = 1e-10);

}  // namespace seqspace

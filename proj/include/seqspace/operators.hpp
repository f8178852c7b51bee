#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seqspace/seq.hpp"

namespace seqspace {

/// Sparse index-map operators on finitely supported sequences.
struct OperatorSpec {
  enum class Kind {
    dilate_up,              // sigma_m
    dilate_down,            // sigma_{1/m}
    shift,                  // tau_n, n in Z
    doubling,               // D = tau_1 sigma_2
    doubling_inverse,       // D^{-1} = sigma_{1/2} tau_{-1}
    block_embed,            // S
    avg_project,            // Q, dyadic block means
    avg_project_n,          // R_n, means over blocks of 2^n
    shift_minus_lambda,     // T_lambda = tau_1 - lambda
    doubling_minus_lambda,  // D_lambda = D - lambda
  };

  Kind kind = Kind::shift;
  long long param = 0;  // m for dilations, n for shifts and R_n
  mpq_class lambda;     // exact lambda; lambda_d is its double value

  double lambda_d() const { return lambda.get_d(); }

  static OperatorSpec dilate_up(long long m);
  static OperatorSpec dilate_down(long long m);
  static OperatorSpec shift(long long n);
  static OperatorSpec doubling();
  static OperatorSpec doubling_inverse();
  static OperatorSpec block_embed();
  static OperatorSpec avg_project();
  static OperatorSpec avg_project_n(long long n);
  static OperatorSpec shift_minus_lambda(const mpq_class& lambda);
  static OperatorSpec doubling_minus_lambda(const mpq_class& lambda);
  static OperatorSpec shift_minus_lambda(double lambda);
  static OperatorSpec doubling_minus_lambda(double lambda);

  /// CLI names: sigma_up:m, sigma_down:m, tau:n, doubling, doubling_inv, S, Q,
  /// R:n, T:lambda, Dl:lambda. lambda may be decimal or p/q.
  static OperatorSpec parse(std::string_view text);
  std::string name() const;

  /// Length of the stored output for an input of stored length n (before
  /// trailing zeros are stripped).
  std::uint64_t output_length(std::uint64_t n) const;
};

/// Largest input length supported by S and Q (the output has 2^len - 1 entries).
inline constexpr std::size_t kMaxDyadicLength = 24;

Seq apply(const OperatorSpec& op, const Seq& x);
std::vector<double> apply(const OperatorSpec& op, std::span<const double> x);
/// Exact action on rational vectors; trailing zeros stripped.
std::vector<mpq_class> apply(const OperatorSpec& op, const std::vector<mpq_class>& x);

/// op applied k times.
Seq apply_power(const OperatorSpec& op, const Seq& x, int k);
/// Operators applied left to right (program[0] first).
std::vector<double> apply_program(const std::vector<OperatorSpec>& program, std::span<const double> x);
std::uint64_t program_output_length(const std::vector<OperatorSpec>& program, std::uint64_t n);

/// Parses "3/2", "-4", "0.75" into an exact rational (decimals exactly).
mpq_class parse_rational(std::string_view text);

}  // namespace seqspace

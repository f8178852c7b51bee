#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace seqspace {

/// Positive nonincreasing weight sequence w_1, w_2, ... for Lorentz spaces.
class WeightSeq {
 public:
  enum class Form { power, array, generator };

  /// w_k = k^{-theta}, theta >= 0.
  static WeightSeq power(double theta);
  /// Finite table; only usable for norms of vectors no longer than the table.
  static WeightSeq array(std::vector<double> values);
  /// Arbitrary rule k -> w_k, spot-checked for positivity and monotonicity
  /// over k <= 2^20.
  static WeightSeq generator(std::function<double(std::uint64_t)> rule, std::string label);

  Form form() const noexcept { return form_; }
  double theta() const noexcept { return theta_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::string& label() const noexcept { return label_; }

  /// Whether w_k is defined for every k (index estimation needs this).
  bool unbounded() const noexcept { return form_ != Form::array; }
  /// Largest valid index for the array form, otherwise UINT64_MAX.
  std::uint64_t length() const noexcept;

  /// w_k, k >= 1.
  double operator()(std::uint64_t k) const;
  /// log2 w_{2^e}; any e >= 0 for the power form, e <= 63 for generators.
  long double log2_at_pow2(long long e) const;

  /// Throws requires_generator for the array form.
  void require_unbounded(const char* what) const;

 private:
  Form form_ = Form::power;
  double theta_ = 0.0;
  std::vector<double> values_;
  std::function<double(std::uint64_t)> rule_;
  std::string label_;
};

/// Partial sums W(m) = sum_{i<=m} w_i^q, for m possibly far beyond what can be
/// summed term by term. Power weights use a direct table up to 2^16 and an
/// Euler-Maclaurin tail beyond it; tables for other forms are summed directly.
class PowerSums {
 public:
  static constexpr std::uint64_t kTable = 1u << 16;
  static constexpr std::uint64_t kGeneratorCap = 1u << 26;

  /// Sums of i^{-s}; s may be negative (increasing weights of l^{p,q}, q > p).
  static std::shared_ptr<const PowerSums> power(long double s);
  /// Sums of w_i^q. For generators the table reaches `reach` (capped).
  static std::shared_ptr<const PowerSums> of(const WeightSeq& w, double q,
                                             std::uint64_t reach = std::uint64_t{1} << 20);

  /// W(m) for integer-valued m >= 0.
  long double prefix(long double m) const;
  /// log2 W(m).
  long double log2_prefix(long double m) const;
  /// Largest m accepted by prefix().
  long double reach() const noexcept { return reach_; }
  bool is_power() const noexcept { return power_form_; }
  long double exponent() const noexcept { return s_; }

 private:
  long double tail(long double b) const;  // sum over (kTable, b]

  bool power_form_ = false;
  long double s_ = 0.0L;
  long double reach_ = 0.0L;
  std::vector<long double> table_;  // table_[m] = W(m)
};

}  // namespace seqspace

#pragma once

#include <functional>
#include <string>

namespace seqspace {

/// Orlicz function N: convex, nondecreasing, N(0) = 0, N(1) = 1.
class OrliczFn {
 public:
  enum class Form { power, power_log, custom };

  /// N(t) = t^p, p >= 1.
  static OrliczFn power(double p);
  /// N(t) = t^p (1 + a |ln t|); convexity is checked like any other profile.
  static OrliczFn power_log(double p, double a);
  /// Any rule; validated on the probe grid.
  static OrliczFn custom(std::function<double(double)> rule, std::string label);

  double operator()(double t) const;
  long double eval_ld(long double t) const;

  Form form() const noexcept { return form_; }
  double p() const noexcept { return p_; }
  double a() const noexcept { return a_; }
  const std::string& label() const noexcept { return label_; }

 private:
  void validate() const;

  Form form_ = Form::power;
  double p_ = 1.0;
  double a_ = 0.0;
  std::function<double(double)> rule_;
  std::string label_;
};

/// t >= 0 with N(t) = s. Power functions use the closed form; everything else
/// bisects in log t after geometric bracket expansion.
double orlicz_inverse(const OrliczFn& N, double s);
long double orlicz_inverse_ld(const OrliczFn& N, long double s);

/// max of N(2u)/N(u) over `samples` log-spaced u in [u_min, 1/2].
double delta2_margin(const OrliczFn& N, double u_min, int samples);

}  // namespace seqspace

#include "seqspace/orlicz.hpp"

#include <cmath>

#include "seqspace/error.hpp"

namespace seqspace {

namespace {

constexpr int kProbe = 1024;
constexpr long double kInverseFloor = 1e-300L;

}  // namespace

OrliczFn OrliczFn::power(double p) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::range_error, "Orlicz power p must lie in [1, inf)");
  OrliczFn N;
  N.form_ = Form::power;
  N.p_ = p;
  N.label_ = "t^" + std::to_string(p);
  return N;
}

OrliczFn OrliczFn::power_log(double p, double a) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::range_error, "Orlicz power p must lie in [1, inf)");
  require(std::isfinite(a) && a >= 0.0, ErrorCode::range_error, "power_log coefficient a must be >= 0");
  OrliczFn N;
  N.form_ = Form::power_log;
  N.p_ = p;
  N.a_ = a;
  N.label_ = "t^" + std::to_string(p) + "(1+" + std::to_string(a) + "|ln t|)";
  N.validate();
  return N;
}

OrliczFn OrliczFn::custom(std::function<double(double)> rule, std::string label) {
  require(static_cast<bool>(rule), ErrorCode::invalid_argument, "empty Orlicz rule");
  OrliczFn N;
  N.form_ = Form::custom;
  N.rule_ = std::move(rule);
  N.label_ = std::move(label);
  N.validate();
  return N;
}

long double OrliczFn::eval_ld(long double t) const {
  if (t <= 0.0L) return 0.0L;
  switch (form_) {
    case Form::power:
      return std::pow(t, static_cast<long double>(p_));
    case Form::power_log:
      return std::pow(t, static_cast<long double>(p_)) * (1.0L + a_ * std::fabs(std::log(t)));
    case Form::custom:
      return rule_(static_cast<double>(t));
  }
  return 0.0L;
}

double OrliczFn::operator()(double t) const { return static_cast<double>(eval_ld(t)); }

void OrliczFn::validate() const {
  require(std::fabs(eval_ld(1.0L) - 1.0L) <= 1e-12L, ErrorCode::range_error,
          "Orlicz function must satisfy N(1) = 1");
  require(form_ != Form::custom || rule_(0.0) == 0.0, ErrorCode::range_error,
          "Orlicz function must satisfy N(0) = 0");
  // geometric grid on [1e-9, 1]
  const double lo = std::log(1e-9);
  auto grid = [&](int i) { return std::exp(lo * (1.0 - static_cast<double>(i) / (kProbe - 1))); };
  double prev = 0.0;
  for (int i = 0; i < kProbe; ++i) {
    double t = grid(i);
    double v = (*this)(t);
    require(std::isfinite(v) && v >= prev, ErrorCode::range_error,
            "Orlicz function is not nondecreasing near t=" + std::to_string(t));
    prev = v;
    if (i + 1 < kProbe) {
      double s = grid(i + 1);
      double mid = (*this)((s + t) / 2.0);
      double chord = ((*this)(s) + v) / 2.0;
      require(mid <= chord * (1.0 + 1e-12), ErrorCode::range_error,
              "Orlicz function is not convex near t=" + std::to_string(t));
    }
  }
}

long double orlicz_inverse_ld(const OrliczFn& N, long double s) {
  require(s >= 0.0L && std::isfinite(static_cast<double>(s)), ErrorCode::invalid_argument,
          "orlicz_inverse needs a finite s >= 0");
  if (s == 0.0L) return 0.0L;
  if (N.form() == OrliczFn::Form::power) return std::pow(s, 1.0L / N.p());
  long double lo = 1.0L, hi = 1.0L;
  while (N.eval_ld(lo) > s) {
    lo /= 2.0L;
    require(lo >= kInverseFloor, ErrorCode::not_bracketable, "orlicz_inverse: cannot bracket s from below");
  }
  while (N.eval_ld(hi) < s) {
    hi *= 2.0L;
    require(hi <= 1e300L, ErrorCode::not_bracketable, "orlicz_inverse: N stays below s on the probe range");
  }
  for (int it = 0; it < 200 && hi / lo - 1.0L > 4.0L * std::numeric_limits<long double>::epsilon(); ++it) {
    long double mid = std::sqrt(lo * hi);
    if (N.eval_ld(mid) < s)
      lo = mid;
    else
      hi = mid;
  }
  return std::sqrt(lo * hi);
}

double orlicz_inverse(const OrliczFn& N, double s) { return static_cast<double>(orlicz_inverse_ld(N, s)); }

double delta2_margin(const OrliczFn& N, double u_min, int samples) {
  require(u_min > 0.0 && u_min < 0.5, ErrorCode::range_error, "delta2_margin needs 0 < u_min < 1/2");
  require(samples >= 2, ErrorCode::invalid_argument, "delta2_margin needs at least two samples");
  const double a = std::log(u_min), b = std::log(0.5);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double u = std::exp(a + (b - a) * i / (samples - 1));
    long double den = N.eval_ld(u);
    if (den <= 0.0L) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, static_cast<double>(N.eval_ld(2.0L * u) / den));
  }
  return worst;
}

}  // namespace seqspace

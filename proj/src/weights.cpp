#include "seqspace/weights.hpp"

#include <cmath>
#include <limits>

#include "seqspace/error.hpp"

namespace seqspace {

namespace {

constexpr std::uint64_t kSpotCheck = std::uint64_t{1} << 20;

}  // namespace

WeightSeq WeightSeq::power(double theta) {
  require(std::isfinite(theta) && theta >= 0.0, ErrorCode::range_error,
          "power weight exponent theta must be finite and >= 0");
  WeightSeq w;
  w.form_ = Form::power;
  w.theta_ = theta;
  w.label_ = "k^-" + std::to_string(theta);
  return w;
}

WeightSeq WeightSeq::array(std::vector<double> values) {
  require(!values.empty(), ErrorCode::invalid_argument, "weight array is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]) && values[i] > 0.0, ErrorCode::range_error,
            "weights must be finite and positive");
    require(i == 0 || values[i] <= values[i - 1], ErrorCode::range_error,
            "weights must be nonincreasing");
  }
  WeightSeq w;
  w.form_ = Form::array;
  w.values_ = std::move(values);
  w.label_ = "array[" + std::to_string(w.values_.size()) + "]";
  return w;
}

WeightSeq WeightSeq::generator(std::function<double(std::uint64_t)> rule, std::string label) {
  require(static_cast<bool>(rule), ErrorCode::invalid_argument, "empty weight generator");
  double prev = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 1; k <= kSpotCheck; ++k) {
    double v = rule(k);
    require(std::isfinite(v) && v > 0.0, ErrorCode::range_error,
            "generator weight not positive at k=" + std::to_string(k));
    require(v <= prev, ErrorCode::range_error,
            "generator weights increase at k=" + std::to_string(k));
    prev = v;
  }
  WeightSeq w;
  w.form_ = Form::generator;
  w.rule_ = std::move(rule);
  w.label_ = std::move(label);
  return w;
}

std::uint64_t WeightSeq::length() const noexcept {
  return form_ == Form::array ? values_.size() : std::numeric_limits<std::uint64_t>::max();
}

double WeightSeq::operator()(std::uint64_t k) const {
  require(k >= 1, ErrorCode::invalid_argument, "weight index is 1-based");
  switch (form_) {
    case Form::power:
      return std::pow(static_cast<double>(k), -theta_);
    case Form::array:
      require(k <= values_.size(), ErrorCode::dimension_overflow,
              "weight index " + std::to_string(k) + " beyond array length");
      return values_[k - 1];
    case Form::generator:
      return rule_(k);
  }
  return 0.0;
}

long double WeightSeq::log2_at_pow2(long long e) const {
  require(e >= 0, ErrorCode::invalid_argument, "dyadic exponent must be >= 0");
  if (form_ == Form::power) return -static_cast<long double>(theta_) * static_cast<long double>(e);
  require(e <= 63, ErrorCode::dimension_overflow, "dyadic weight index 2^e needs e <= 63");
  return std::log2(static_cast<long double>((*this)(std::uint64_t{1} << e)));
}

void WeightSeq::require_unbounded(const char* what) const {
  require(unbounded(), ErrorCode::requires_generator,
          std::string(what) + " requires a power or generator weight, not an explicit array");
}

std::shared_ptr<const PowerSums> PowerSums::power(long double s) {
  auto ps = std::make_shared<PowerSums>();
  ps->power_form_ = true;
  ps->s_ = s;
  ps->reach_ = std::numeric_limits<long double>::max();
  ps->table_.resize(kTable + 1);
  ps->table_[0] = 0.0L;
  for (std::uint64_t i = 1; i <= kTable; ++i)
    ps->table_[i] = ps->table_[i - 1] + std::pow(static_cast<long double>(i), -s);
  return ps;
}

std::shared_ptr<const PowerSums> PowerSums::of(const WeightSeq& w, double q, std::uint64_t reach) {
  require(q >= 1.0 && std::isfinite(q), ErrorCode::range_error, "q must lie in [1, inf)");
  if (w.form() == WeightSeq::Form::power)
    return power(static_cast<long double>(w.theta()) * static_cast<long double>(q));
  auto ps = std::make_shared<PowerSums>();
  std::uint64_t len = w.form() == WeightSeq::Form::array ? w.values().size()
                                                         : std::min(reach, kGeneratorCap);
  ps->table_.resize(len + 1);
  ps->table_[0] = 0.0L;
  for (std::uint64_t i = 1; i <= len; ++i)
    ps->table_[i] = ps->table_[i - 1] + std::pow(static_cast<long double>(w(i)), static_cast<long double>(q));
  ps->reach_ = static_cast<long double>(len);
  return ps;
}

long double PowerSums::tail(long double b) const {
  // Euler-Maclaurin for f(x) = x^{-s} on (a, b], a = kTable.
  const long double a = static_cast<long double>(kTable);
  const long double s = s_;
  const long double L = std::log(b / a);
  const long double fa = std::pow(a, -s), fb = std::pow(b, -s);
  long double integral;
  const long double t = (1.0L - s) * L;
  if (std::fabs(t) < 1e-12L)
    integral = a * fa * L * (1.0L + t / 2.0L);
  else
    integral = a * fa * std::expm1(t) / (1.0L - s);
  auto d1 = [&](long double x) { return -s * std::pow(x, -s - 1.0L); };
  auto d3 = [&](long double x) { return -s * (s + 1) * (s + 2) * std::pow(x, -s - 3.0L); };
  auto d5 = [&](long double x) {
    return -s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * std::pow(x, -s - 5.0L);
  };
  return integral + (fb - fa) / 2.0L + (d1(b) - d1(a)) / 12.0L - (d3(b) - d3(a)) / 720.0L +
         (d5(b) - d5(a)) / 30240.0L;
}

long double PowerSums::prefix(long double m) const {
  require(m >= 0.0L, ErrorCode::invalid_argument, "prefix length must be >= 0");
  const long double tl = static_cast<long double>(table_.size() - 1);
  if (m <= tl) return table_[static_cast<std::size_t>(m)];
  require(power_form_, ErrorCode::dimension_overflow,
          "weight sums requested beyond the available table (" + std::to_string(table_.size() - 1) + ")");
  return table_.back() + tail(m);
}

long double PowerSums::log2_prefix(long double m) const { return std::log2(prefix(m)); }

}  // namespace seqspace

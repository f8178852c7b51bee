#include "seqspace/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seqspace/error.hpp"
#include "seqspace/simd/kernels.hpp"

namespace seqspace {

namespace {

std::string fmt(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os << v;
  return os.str();
}

// sum_r (u_r^q - u_{r+1}^q) W(M_r) with u = v / vmax; all terms nonnegative.
long double abel_sum(const Runs& runs, const PowerSums& W, long double q) {
  const long double vmax = runs.front().value;
  long double acc = 0.0L, end = 0.0L;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    end += runs[r].count;
    long double cur = std::pow(runs[r].value / vmax, q);
    long double next = r + 1 < runs.size() ? std::pow(runs[r + 1].value / vmax, q) : 0.0L;
    acc += (cur - next) * W.prefix(end);
  }
  return acc;
}

double luxemburg(const OrliczFn& N, const Runs& runs) {
  if (runs.size() == 1) {
    const Run& r = runs.front();
    return static_cast<double>(r.value / orlicz_inverse_ld(N, 1.0L / r.count));
  }
  auto modular = [&](long double u) {
    long double acc = 0.0L;
    for (const Run& r : runs) acc += r.count * N.eval_ld(r.value / u);
    return acc;
  };
  long double lo = runs.front().value / 2.0L, hi = 0.0L;
  for (const Run& r : runs) hi += r.count * r.value;
  for (int it = 0; it < 200 && hi / lo - 1.0L > 1e-15L; ++it) {
    long double mid = std::sqrt(lo * hi);
    if (modular(mid) > 1.0L)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>(hi);
}

double lp_dense(double p, std::span<const double> x) {
  const auto& k = simd::active();
  const double m = k.max_abs(x.data(), x.size());
  if (m == 0.0) return 0.0;
  if (std::isinf(p)) return m;
  if (p == 1.0) return k.sum_abs(x.data(), x.size());
  if (p == 2.0) {
    if (m > 1e-150 && m < 1e150) return std::sqrt(k.sum_sq(x.data(), x.size()));
    std::vector<double> scaled(x.begin(), x.end());
    k.axpby(0.0, scaled.data(), 1.0 / m, scaled.data(), scaled.size());
    return m * std::sqrt(k.sum_sq(scaled.data(), scaled.size()));
  }
  long double acc = 0.0L;
  for (double v : x)
    if (v != 0.0) acc += std::pow(std::fabs(v) / static_cast<long double>(m), static_cast<long double>(p));
  return static_cast<double>(m * std::pow(acc, 1.0L / p));
}

}  // namespace

SpaceSpec SpaceSpec::lp(double p) {
  require(p >= 1.0 && !std::isnan(p), ErrorCode::range_error, "lp: p must lie in [1, inf]");
  return SpaceSpec(LpSpace{p});
}

SpaceSpec SpaceSpec::lpq(double p, double q) {
  require(p > 1.0 && std::isfinite(p), ErrorCode::range_error, "lpq: p must lie in (1, inf)");
  require(q >= 1.0 && !std::isnan(q), ErrorCode::range_error, "lpq: q must lie in [1, inf]");
  SpaceSpec s(LpqSpace{p, q});
  if (std::isfinite(q)) s.sums_ = PowerSums::power(1.0L - static_cast<long double>(q) / p);
  return s;
}

SpaceSpec SpaceSpec::lorentz(double q, WeightSeq w) {
  require(q >= 1.0 && std::isfinite(q), ErrorCode::range_error, "lorentz: q must lie in [1, inf)");
  auto sums = PowerSums::of(w, q);
  SpaceSpec s(LorentzSpace{q, std::move(w)});
  s.sums_ = std::move(sums);
  return s;
}

SpaceSpec SpaceSpec::orlicz(OrliczFn N) { return SpaceSpec(OrliczSpace{std::move(N)}); }

std::string SpaceSpec::name() const {
  static const char* names[] = {"lp", "lpq", "lorentz", "orlicz"};
  return names[kind_.index()];
}

std::string SpaceSpec::describe() const {
  if (auto* s = as<LpSpace>()) return "l^" + fmt(s->p);
  if (auto* s = as<LpqSpace>()) return "l^{" + fmt(s->p) + "," + fmt(s->q) + "}";
  if (auto* s = as<LorentzSpace>()) return "lambda_" + fmt(s->q) + "(" + s->w.label() + ")";
  return "l_N(" + as<OrliczSpace>()->N.label() + ")";
}

Runs runs_of(std::span<const double> x) {
  std::vector<double> a;
  a.reserve(x.size());
  for (double v : x)
    if (v != 0.0) a.push_back(std::fabs(v));
  std::sort(a.begin(), a.end(), std::greater<>());
  Runs runs;
  for (double v : a) {
    if (!runs.empty() && runs.back().value == v)
      runs.back().count += 1.0L;
    else
      runs.push_back({v, 1.0L});
  }
  return runs;
}

double norm_of_runs(const SpaceSpec& space, const Runs& runs) {
  if (runs.empty()) return 0.0;
  const long double vmax = runs.front().value;
  if (auto* s = space.as<LpSpace>()) {
    if (std::isinf(s->p)) return runs.front().value;
    long double acc = 0.0L;
    for (const Run& r : runs) acc += r.count * std::pow(r.value / vmax, static_cast<long double>(s->p));
    return static_cast<double>(vmax * std::pow(acc, 1.0L / s->p));
  }
  if (auto* s = space.as<LpqSpace>()) {
    if (std::isinf(s->q)) {
      long double best = 0.0L, end = 0.0L;
      for (const Run& r : runs) {
        end += r.count;
        best = std::max(best, r.value * std::pow(end, 1.0L / s->p));
      }
      return static_cast<double>(best);
    }
    return static_cast<double>(vmax * std::pow(abel_sum(runs, *space.sums(), s->q), 1.0L / s->q));
  }
  if (auto* s = space.as<LorentzSpace>()) {
    long double total = 0.0L;
    for (const Run& r : runs) total += r.count;
    require(total <= space.sums()->reach(), ErrorCode::dimension_overflow,
            "vector longer than the available Lorentz weights");
    return static_cast<double>(vmax * std::pow(abel_sum(runs, *space.sums(), s->q), 1.0L / s->q));
  }
  return luxemburg(space.as<OrliczSpace>()->N, runs);
}

double norm(const SpaceSpec& space, std::span<const double> x) {
  if (auto* s = space.as<LpSpace>()) return lp_dense(s->p, x);
  return norm_of_runs(space, runs_of(x));
}

double norm(const SpaceSpec& space, const Seq& x) { return norm(space, x.coeffs()); }

long double log2_fundamental(const SpaceSpec& space, long double n) {
  require(n >= 1.0L, ErrorCode::invalid_argument, "fundamental function needs n >= 1");
  if (auto* s = space.as<LpSpace>()) return std::isinf(s->p) ? 0.0L : std::log2(n) / s->p;
  if (auto* s = space.as<LpqSpace>()) {
    if (std::isinf(s->q)) return std::log2(n) / s->p;
    return space.sums()->log2_prefix(n) / s->q;
  }
  if (auto* s = space.as<LorentzSpace>()) return space.sums()->log2_prefix(n) / s->q;
  return -std::log2(orlicz_inverse_ld(space.as<OrliczSpace>()->N, 1.0L / n));
}

double fundamental_function(const SpaceSpec& space, long double n) {
  require(n >= 1.0L, ErrorCode::invalid_argument, "fundamental function needs n >= 1");
  return norm_of_runs(space, Runs{{1.0, n}});
}

}  // namespace seqspace

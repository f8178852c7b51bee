#include "seqspace/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seqspace/error.hpp"
#include "seqspace/parallel.hpp"

namespace seqspace {

MuSeq MuSeq::from_lorentz(double q, WeightSeq w) {
  require(q >= 1.0 && std::isfinite(q), ErrorCode::range_error, "wlq: q must lie in [1, inf)");
  MuSeq m;
  m.form_ = Form::lorentz;
  m.q_ = q;
  m.label_ = "2^{(k-1)/" + std::to_string(q) + "} w_{2^{k-1}}, w=" + w.label();
  m.w_.push_back(std::move(w));
  return m;
}

MuSeq MuSeq::geometric(double ratio) {
  require(std::isfinite(ratio) && ratio > 0.0, ErrorCode::range_error, "geometric mu needs ratio > 0");
  MuSeq m;
  m.form_ = Form::geometric;
  m.ratio_ = ratio;
  m.label_ = std::to_string(ratio) + "^{k-1}";
  return m;
}

MuSeq MuSeq::array(std::vector<double> values) {
  require(!values.empty(), ErrorCode::invalid_argument, "mu array is empty");
  for (double v : values) require(std::isfinite(v) && v > 0.0, ErrorCode::range_error, "mu_k must be positive");
  MuSeq m;
  m.form_ = Form::array;
  m.values_ = std::move(values);
  m.label_ = "array[" + std::to_string(m.values_.size()) + "]";
  return m;
}

std::uint64_t MuSeq::length() const noexcept {
  if (form_ == Form::array) return values_.size();
  if (form_ == Form::lorentz && w_.front().form() == WeightSeq::Form::array)
    return static_cast<std::uint64_t>(std::bit_width(w_.front().length()));
  return UINT64_MAX;
}

long double MuSeq::log2_at(std::uint64_t k) const {
  require(k >= 1, ErrorCode::invalid_argument, "mu index is 1-based");
  switch (form_) {
    case Form::lorentz:
      return static_cast<long double>(k - 1) / q_ + w_.front().log2_at_pow2(static_cast<long long>(k - 1));
    case Form::geometric:
      return static_cast<long double>(k - 1) * std::log2(static_cast<long double>(ratio_));
    case Form::array:
      require(k <= values_.size(), ErrorCode::dimension_overflow, "mu index beyond array length");
      return std::log2(static_cast<long double>(values_[k - 1]));
  }
  return 0.0L;
}

LatticeSpec LatticeSpec::ex(SpaceSpec base) { return LatticeSpec(ExLattice{std::move(base)}); }

LatticeSpec LatticeSpec::wlq(double q, MuSeq mu) {
  require(q >= 1.0 && std::isfinite(q), ErrorCode::range_error, "wlq: q must lie in [1, inf)");
  return LatticeSpec(WlqLattice{q, std::move(mu)});
}

LatticeSpec LatticeSpec::un(OrliczFn N) { return LatticeSpec(UnLattice{std::move(N)}); }

std::string LatticeSpec::name() const {
  static const char* names[] = {"ex", "wlq", "un"};
  return names[kind_.index()];
}

std::string LatticeSpec::describe() const {
  if (auto* l = as<ExLattice>()) return "E[" + l->base.describe() + "]";
  if (auto* l = as<WlqLattice>()) {
    std::ostringstream os;
    os << "l_" << l->q << "(" << l->mu.label() << ")";
    return os.str();
  }
  return "U_N(" + as<UnLattice>()->N.label() + ")";
}

Runs dyadic_block_runs(std::span<const double> a) {
  std::vector<std::pair<double, long double>> parts;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0.0) parts.emplace_back(std::fabs(a[k]), std::ldexp(1.0L, static_cast<int>(k)));
  std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  Runs runs;
  for (const auto& [v, c] : parts) {
    if (!runs.empty() && runs.back().value == v)
      runs.back().count += c;
    else
      runs.push_back({v, c});
  }
  return runs;
}

double lattice_norm(const LatticeSpec& lat, const Seq& a, std::size_t ex_cap) {
  if (a.empty()) return 0.0;
  if (auto* l = lat.as<ExLattice>()) {
    require(a.size() <= ex_cap, ErrorCode::dimension_overflow,
            "E_X vector of length " + std::to_string(a.size()) + " exceeds the cap of " + std::to_string(ex_cap) +
                " coordinates");
    return norm_of_runs(l->base, dyadic_block_runs(a.coeffs()));
  }
  if (auto* l = lat.as<WlqLattice>()) {
    std::vector<long double> t;
    long double top = -INFINITY;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0.0) continue;
      long double v = std::log2(std::fabs(static_cast<long double>(a[k]))) + l->mu.log2_at(k + 1);
      t.push_back(v);
      top = std::max(top, v);
    }
    long double acc = 0.0L;
    for (long double v : t) acc += std::exp2(l->q * (v - top));
    return static_cast<double>(std::exp2(top) * std::pow(acc, 1.0L / l->q));
  }
  return norm_of_runs(SpaceSpec::orlicz(lat.as<UnLattice>()->N), dyadic_block_runs(a.coeffs()));
}

long double log2_unit_norm(const LatticeSpec& lat, std::uint64_t k) {
  require(k >= 1, ErrorCode::invalid_argument, "unit vector index is 1-based");
  if (auto* l = lat.as<ExLattice>()) return log2_fundamental(l->base, std::ldexp(1.0L, static_cast<int>(k - 1)));
  if (auto* l = lat.as<WlqLattice>()) return l->mu.log2_at(k);
  const auto& N = lat.as<UnLattice>()->N;
  return -std::log2(orlicz_inverse_ld(N, std::ldexp(1.0L, -static_cast<int>(k - 1))));
}

std::vector<double> unit_norms(const LatticeSpec& lat, std::size_t k_max, std::size_t ex_cap) {
  require(k_max >= 1, ErrorCode::invalid_argument, "unit_norms needs k_max >= 1");
  std::vector<double> s(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) s[k - 1] = lattice_norm(lat, Seq::unit(k), ex_cap);
  return s;
}

ShiftExponents shift_exponents(const LatticeSpec& lat, int n_max, int k_max) {
  require(n_max >= 2 && k_max > n_max, ErrorCode::invalid_argument, "shift_exponents needs 2 <= n_max < k_max");
  std::vector<long double> ls(static_cast<std::size_t>(k_max) + 1);
  parallel_for(static_cast<std::size_t>(k_max), [&](std::size_t i) { ls[i + 1] = log2_unit_norm(lat, i + 1); });
  auto up = [&](int n) {  // log2 sup_{n<k<=k_max} s_k / s_{k-n}
    long double b = -INFINITY;
    for (int k = n + 1; k <= k_max; ++k) b = std::max(b, ls[k] - ls[k - n]);
    return b;
  };
  auto down = [&](int n) {  // log2 sup_{k<=k_max-n} s_k / s_{k+n}
    long double b = -INFINITY;
    for (int k = 1; k + n <= k_max; ++k) b = std::max(b, ls[k] - ls[k + n]);
    return b;
  };
  ShiftExponents out;
  out.n_max = n_max;
  out.k_max = k_max;
  long double inf_up = INFINITY, inf_down = INFINITY;
  for (int n = 1; n <= n_max; ++n) {
    inf_up = std::min(inf_up, up(n) / n);
    inf_down = std::min(inf_down, down(n) / n);
  }
  out.k_plus_inf = static_cast<double>(std::exp2(inf_up));
  out.k_minus_inf = static_cast<double>(std::exp2(inf_down));
  out.k_plus_at_n_max = static_cast<double>(std::exp2(up(n_max) / n_max));
  out.k_minus_at_n_max = static_cast<double>(std::exp2(down(n_max) / n_max));
  out.k_plus = static_cast<double>(std::exp2(up(n_max) - up(n_max - 1)));
  out.k_minus = static_cast<double>(std::exp2(down(n_max) - down(n_max - 1)));
  return out;
}

Seq dyadic_samples(const Seq& x) {
  const auto xs = sorted_abs(x.coeffs());
  std::vector<double> a;
  for (std::size_t i = 1; i <= xs.size(); i *= 2) a.push_back(xs[i - 1]);
  return Seq(std::move(a));
}

double sandwich_ratio(const SpaceSpec& base, const Seq& x) {
  const double den = norm(base, x);
  require(den > 0.0, ErrorCode::invalid_argument, "sandwich_ratio needs x != 0");
  return lattice_norm(LatticeSpec::ex(base), dyadic_samples(x), 64) / den;
}

EquivalenceKind parse_equivalence_kind(const std::string& name) {
  if (name == "lorentz_dyadic") return EquivalenceKind::lorentz_dyadic;
  if (name == "orlicz_dyadic") return EquivalenceKind::orlicz_dyadic;
  fail(ErrorCode::unknown_kind, "unknown equivalence kind '" + name + "'");
}

const char* equivalence_kind_name(EquivalenceKind k) {
  return k == EquivalenceKind::lorentz_dyadic ? "lorentz_dyadic" : "orlicz_dyadic";
}

EquivalenceReport ex_equivalence_report(EquivalenceKind kind, const EquivalenceParams& params, int trials) {
  require(trials >= 1, ErrorCode::invalid_argument, "ex_equivalence_report needs trials >= 1");
  const bool lor = kind == EquivalenceKind::lorentz_dyadic;
  const SpaceSpec space = lor ? SpaceSpec::lorentz(params.q, params.w) : SpaceSpec::orlicz(params.N);
  const LatticeSpec lat =
      lor ? LatticeSpec::wlq(params.q, MuSeq::from_lorentz(params.q, params.w)) : LatticeSpec::un(params.N);
  std::vector<double> ratios(static_cast<std::size_t>(trials));
  parallel_for(ratios.size(), [&](std::size_t t) {
    Rng rng(derive_seed(params.seed, t));
    Seq x(random_decreasing(rng, random_length(rng, params.max_length)));
    ratios[t] = lattice_norm(lat, dyadic_samples(x), 64) / norm(space, x);
  });
  EquivalenceReport rep{kind, trials, *std::min_element(ratios.begin(), ratios.end()),
                        *std::max_element(ratios.begin(), ratios.end()), 1.0,
                        lor ? std::pow(4.0, 1.0 / params.q) : 4.0};
  return rep;
}

ConditionResult dyadic_weight_condition(double q, const WeightSeq& w, int n_max, int k_max) {
  require(q >= 1.0 && std::isfinite(q), ErrorCode::range_error, "q must lie in [1, inf)");
  require(n_max >= 1 && k_max >= 0, ErrorCode::invalid_argument, "need n_max >= 1 and k_max >= 0");
  w.require_unbounded("the dyadic weight condition");
  long double best = -INFINITY;
  for (int k = 0; k <= k_max; ++k) best = std::max(best, w.log2_at_pow2(k) - w.log2_at_pow2(k + n_max));
  ConditionResult r;
  r.estimate = static_cast<double>(std::exp2(best / n_max));
  r.margin = std::exp2(1.0 / q) - r.estimate;
  r.holds = r.margin > 1e-12;
  return r;
}

}  // namespace seqspace

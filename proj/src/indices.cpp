#include "seqspace/indices.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "seqspace/error.hpp"
#include "seqspace/lattices.hpp"
#include "seqspace/norm_search.hpp"
#include "seqspace/parallel.hpp"

namespace seqspace {

namespace {

double clamp01(long double v) { return static_cast<double>(std::clamp(v, 0.0L, 1.0L)); }

LimitEstimate closed_form(double v) { return {v, {v, v}, v, "closed_form"}; }

// T[n-1] = log2 of the truncated sup for dilation by 2^n (growth type, beta-like).
LimitEstimate growth_limit(const std::vector<long double>& T, long double scale) {
  const int N = static_cast<int>(T.size());
  long double inf_char = INFINITY;
  for (int n = 1; n <= N; ++n) inf_char = std::min(inf_char, scale * T[n - 1] / n);
  const long double at = scale * T[N - 1] / N;
  const long double point = N >= 2 ? scale * (T[N - 1] - T[N - 2]) : at;
  LimitEstimate e;
  e.point = clamp01(point);
  e.at_n_max = clamp01(at);
  e.range = {clamp01(std::min(point, inf_char)), clamp01(std::max(point, at))};
  e.method = "truncated_sup";
  return e;
}

// T[n-1] = log2 of the truncated sup for contraction by 2^{-n} (alpha-like):
// the index is -lim T_n / n = sup_n (-T_n / n).
LimitEstimate decay_limit(const std::vector<long double>& T, long double scale) {
  const int N = static_cast<int>(T.size());
  long double sup_char = -INFINITY;
  for (int n = 1; n <= N; ++n) sup_char = std::max(sup_char, -scale * T[n - 1] / n);
  const long double at = -scale * T[N - 1] / N;
  const long double point = N >= 2 ? -scale * (T[N - 1] - T[N - 2]) : at;
  LimitEstimate e;
  e.point = clamp01(point);
  e.at_n_max = clamp01(at);
  e.range = {clamp01(std::min(point, at)), clamp01(std::max(point, sup_char))};
  e.method = "truncated_sup";
  return e;
}

IndexPair partial_sum_route(const PowerSums& W, long double inv_q, int n_max, std::uint64_t j_max) {
  require(n_max >= 2, ErrorCode::invalid_argument, "index estimation needs n_max >= 2");
  std::vector<std::uint64_t> js(j_max);
  for (std::uint64_t j = 0; j < j_max; ++j) js[j] = j + 1;
  std::vector<long double> up(n_max), down(n_max);
  parallel_for(static_cast<std::size_t>(n_max), [&](std::size_t i) {
    auto r = dyadic_ratio_logs(W, static_cast<int>(i) + 1, js);
    up[i] = r.up;
    down[i] = r.down;
  });
  return {decay_limit(down, inv_q), growth_limit(up, inv_q)};
}

// m-set for dilation functions: integers up to `dense`, a 16-per-octave grid
// and exact powers of two up to 2^octaves.
std::vector<long double> m_set(std::uint64_t dense, int octaves) {
  std::set<long double> s;
  for (std::uint64_t m = 1; m <= dense; ++m) s.insert(static_cast<long double>(m));
  for (int i = 0; i <= 16 * octaves; ++i) s.insert(std::nearbyint(std::exp2(static_cast<long double>(i) / 16)));
  for (int k = 0; k <= octaves; ++k) s.insert(std::ldexp(1.0L, k));
  return {s.begin(), s.end()};
}

IndexPair phi_route(const SpaceSpec& space, const std::vector<long double>& ms, int n_max) {
  require(n_max >= 2, ErrorCode::invalid_argument, "index estimation needs n_max >= 2");
  std::vector<long double> base(ms.size());
  parallel_for(ms.size(), [&](std::size_t i) { base[i] = log2_fundamental(space, ms[i]); });
  std::vector<long double> up(n_max), down(n_max);
  parallel_for(static_cast<std::size_t>(n_max), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    long double u = -INFINITY, d = -INFINITY;
    for (std::size_t k = 0; k < ms.size(); ++k) {
      const long double diff = log2_fundamental(space, std::ldexp(ms[k], n)) - base[k];
      u = std::max(u, diff);
      d = std::max(d, -diff);
    }
    up[i] = u;
    down[i] = d;
  });
  return {decay_limit(down, 1.0L), growth_limit(up, 1.0L)};
}

}  // namespace

IndexPair orlicz_indices(const OrliczFn& N, int n_max, int k_max) {
  require(n_max >= 2 && k_max >= n_max, ErrorCode::invalid_argument, "orlicz_indices needs 2 <= n_max <= k_max");
  require(k_max + n_max <= 996, ErrorCode::range_error, "orlicz_indices: 2^-(k_max+n_max) underflows 1e-300");
  const double margin = delta2_margin(N, 1e-12, 512);
  require(std::isfinite(margin), ErrorCode::condition_failed,
          "Orlicz function fails the Delta_2 probe (N(2u)/N(u) unbounded on the grid)");
  std::vector<long double> L(static_cast<std::size_t>(k_max + n_max) + 1);
  parallel_for(L.size(), [&](std::size_t k) {
    L[k] = std::log2(orlicz_inverse_ld(N, std::ldexp(1.0L, -static_cast<int>(k))));
  });
  std::vector<long double> A(n_max), B(n_max);
  for (int n = 1; n <= n_max; ++n) {
    long double a = -INFINITY, b = -INFINITY;
    for (int k = 0; k <= k_max; ++k) a = std::max(a, L[k + n] - L[k]);
    for (int k = n; k <= k_max; ++k) b = std::max(b, L[k - n] - L[k]);
    A[n - 1] = a;
    B[n - 1] = b;
  }
  IndexPair out{decay_limit(A, 1.0L), growth_limit(B, 1.0L)};
  if (N.form() == OrliczFn::Form::power) out.alpha.method = out.beta.method = "closed_form";
  return out;
}

IndexPair lorentz_indices(double q, const WeightSeq& w, int n_max, std::uint64_t j_max, bool simplified) {
  w.require_unbounded("Lorentz index estimation");
  const long double inv_q = 1.0L / q;
  if (!simplified) {
    auto W = PowerSums::of(w, q, std::uint64_t{1} << 26);
    return partial_sum_route(*W, inv_q, n_max, j_max);
  }
  const int kk = static_cast<int>(std::bit_width(j_max)) - 1;
  const bool gen = w.form() == WeightSeq::Form::generator;
  const ConditionResult cond = dyadic_weight_condition(q, w, gen ? std::min(n_max, 63 - kk) : n_max, kk);
  require(cond.holds, ErrorCode::condition_failed,
          "simplified Lorentz indices need the dyadic weight condition lim (sup w_{2^k}/w_{2^{k+n}})^{1/n} < 2^{1/q}"
          " (estimate " + std::to_string(cond.estimate) + ")");
  const int nn = gen ? std::min(n_max, 63 - kk) : n_max;
  require(nn >= 2, ErrorCode::invalid_argument, "index estimation needs n_max >= 2");
  std::vector<long double> A(nn), B(nn);
  for (int n = 1; n <= nn; ++n) {
    long double a = -INFINITY, b = -INFINITY;
    for (int k = 0; k <= kk; ++k) a = std::max(a, w.log2_at_pow2(k) - w.log2_at_pow2(k + n));
    for (int k = n + 1; k <= kk + n; ++k) b = std::max(b, w.log2_at_pow2(k) - w.log2_at_pow2(k - n));
    A[n - 1] = a;
    B[n - 1] = b;
  }
  // alpha = 1/q - lim A_n / n, beta = 1/q + lim B_n / n
  for (int n = 1; n <= nn; ++n) {
    A[n - 1] -= static_cast<long double>(n) * inv_q;
    B[n - 1] += static_cast<long double>(n) * inv_q;
  }
  return {decay_limit(A, 1.0L), growth_limit(B, 1.0L)};
}

IndexPair boyd_indices(const SpaceSpec& space, const IndexOptions& opt) {
  if (auto* s = space.as<LpSpace>()) return {closed_form(1.0 / s->p), closed_form(1.0 / s->p)};
  if (auto* s = space.as<LpqSpace>()) {
    if (std::isinf(s->q)) return {closed_form(1.0 / s->p), closed_form(1.0 / s->p)};
    return partial_sum_route(*space.sums(), 1.0L / s->q, opt.n_max, opt.j_max);
  }
  if (auto* s = space.as<LorentzSpace>()) {
    s->w.require_unbounded("Boyd index estimation");
    return partial_sum_route(*space.sums(), 1.0L / s->q, opt.n_max, opt.j_max);
  }
  return orlicz_indices(space.as<OrliczSpace>()->N, opt.orlicz_n_max, opt.orlicz_k_max);
}

IndexPair fundamental_indices(const SpaceSpec& space, const IndexOptions& opt) {
  if (auto* s = space.as<LpSpace>()) return {closed_form(1.0 / s->p), closed_form(1.0 / s->p)};
  if (auto* s = space.as<LpqSpace>(); s && std::isinf(s->q))
    return {closed_form(1.0 / s->p), closed_form(1.0 / s->p)};
  if (auto* s = space.as<LorentzSpace>()) s->w.require_unbounded("fundamental index estimation");
  if (space.as<OrliczSpace>()) {
    IndexPair r = phi_route(space, m_set(1024, opt.orlicz_k_max), opt.orlicz_n_max);
    if (space.as<OrliczSpace>()->N.form() == OrliczFn::Form::power) r.alpha.method = r.beta.method = "closed_form";
    return r;
  }
  std::vector<long double> ms(opt.j_max);
  for (std::uint64_t j = 0; j < opt.j_max; ++j) ms[j] = static_cast<long double>(j + 1);
  return phi_route(space, ms, opt.n_max);
}

std::pair<double, double> f_interval(const IndexReport& report) {
  auto recip = [](double v) { return v <= 0.0 ? kInf : 1.0 / v; };
  return {recip(report.beta_point), recip(report.alpha_point)};
}

IndexReport index_report(const SpaceSpec& space, const IndexOptions& opt) {
  IndexReport r;
  r.space = space.describe();
  r.params = opt;
  const IndexPair boyd = boyd_indices(space, opt);
  const IndexPair fund = fundamental_indices(space, opt);
  r.alpha = boyd.alpha.range;
  r.beta = boyd.beta.range;
  r.alpha_point = boyd.alpha.point;
  r.beta_point = boyd.beta.point;
  r.mu = fund.alpha.point;
  r.nu = fund.beta.point;
  r.method = {{"alpha", boyd.alpha.method}, {"beta", boyd.beta.method},
              {"mu", fund.alpha.method},    {"nu", fund.beta.method},
              {"f_interval", boyd.alpha.method == "closed_form" ? "closed_form" : "truncated_sup"}};
  r.f_interval = f_interval(r);
  if (auto* s = space.as<LpqSpace>(); s && s->q > s->p)
    r.notes.push_back("l^{p,q} with q > p carries a quasi-norm; indices use the quasi-norm itself");
  if (space.as<LpSpace>() && std::isinf(space.as<LpSpace>()->p))
    r.notes.push_back("p = inf: sup-norm (c_0) conventions, 1/0 = inf");
  if (boyd.alpha.method == "truncated_sup")
    r.notes.push_back("point estimates are asymptotic slopes log2 T_n - log2 T_{n-1} at n = n_max");
  return r;
}

FundamentalTypeCheck fundamental_type_check(const IndexReport& report, double tol) {
  FundamentalTypeCheck c;
  c.gap_alpha = report.alpha_point - report.mu;
  c.gap_beta = report.nu - report.beta_point;
  c.evidence = std::fabs(c.gap_alpha) <= tol && std::fabs(c.gap_beta) <= tol;
  return c;
}

bool ordering_chain_holds(const IndexReport& r, double slack) {
  return r.alpha_point >= -slack && r.alpha_point <= r.mu + slack && r.mu <= r.nu + slack &&
         r.nu <= r.beta_point + slack && r.beta_point <= 1.0 + slack;
}

}  // namespace seqspace

#include "seqspace/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "seqspace/error.hpp"
#include "seqspace/lattices.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/parallel.hpp"

namespace seqspace {

namespace {

// X-norm of S c: coefficient c_k on the k-th dyadic block.
double block_norm(const SpaceSpec& space, std::span<const double> c) {
  return norm_of_runs(space, dyadic_block_runs(c));
}

// (tau_1 - lambda) c
std::vector<double> t_lambda(std::span<const double> c, double lambda) {
  std::vector<double> out(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k + 1] += c[k];
    out[k] -= lambda * c[k];
  }
  return out;
}

// ||D_lambda S c|| / ||S c|| = ||T_lambda c||_{E_X} / ||c||_{E_X}.
double block_ratio(const SpaceSpec& space, std::span<const double> c, double lambda) {
  const double den = block_norm(space, c);
  if (den == 0.0 || !std::isfinite(den)) return kInf;
  return block_norm(space, t_lambda(c, lambda)) / den;
}

}  // namespace

WitnessReport doubling_witness_vn(const SpaceSpec& space, double p, int n, const Seq& seed) {
  require(n >= 1, ErrorCode::invalid_argument, "doubling_witness_vn needs n >= 1");
  require(p >= 1.0 && std::isfinite(p), ErrorCode::range_error, "doubling_witness_vn needs 1 <= p < inf");
  require(!seed.empty(), ErrorCode::invalid_argument, "seed vector must be nonzero");
  for (double s : seed.coeffs())
    require(s >= 0.0 && std::isfinite(s), ErrorCode::invalid_argument, "seed vector must be nonnegative");

  WitnessReport r;
  r.lambda = std::exp2(1.0 / p);
  r.n = n;
  const long double P = p;
  const long double scale = std::pow(static_cast<long double>(n), -1.0L / P);

  std::size_t nnz = 0, pos = 0;
  for (std::size_t i = 0; i < seed.size(); ++i)
    if (seed[i] != 0.0) ++nnz, pos = i;

  if (nnz == 1) {
    // D^{k-1} e_j is the indicator of 2^{k-1} entries, the levels are disjoint
    // and D maps level k onto level k+1.
    r.method = "level_runs";
    const double s = seed[pos];
    std::vector<double> v(n), dv(n + 1, 0.0);
    for (int k = 0; k < n; ++k) v[k] = static_cast<double>(scale * std::exp2(-k / P) * s);
    for (int k = 0; k <= n; ++k) {
      const long double prev = k > 0 ? static_cast<long double>(v[k - 1]) : 0.0L;
      const long double cur = k < n ? static_cast<long double>(v[k]) : 0.0L;
      dv[k] = static_cast<double>(prev - static_cast<long double>(r.lambda) * cur);
    }
    r.norm = block_norm(space, v);
    r.residual_raw = block_norm(space, dv);
    r.support_size = std::ldexp(1.0L, n) - 1.0L;
  } else {
    r.method = "dense";
    const auto D = OperatorSpec::doubling();
    const std::uint64_t last_len = [&] {
      std::uint64_t len = seed.size();
      for (int k = 1; k < n; ++k) {
        require(len <= kWitnessDenseCap, ErrorCode::dimension_overflow, "witness support exceeds the dense cap");
        len = D.output_length(len);
      }
      return len;
    }();
    require(last_len <= kWitnessDenseCap, ErrorCode::dimension_overflow,
            "support of D^{n-1}(seed) exceeds the dense cap of " + std::to_string(kWitnessDenseCap));
    std::vector<double> v(last_len, 0.0);
    Seq y = seed;
    for (int k = 0; k < n; ++k) {
      if (k > 0) y = seqspace::apply(D, y);
      const double c = static_cast<double>(scale * std::exp2(-k / P));
      for (std::size_t i = 0; i < y.size(); ++i) v[i] += c * y[i];
    }
    strip_trailing_zeros(v);
    const auto dl = seqspace::apply(OperatorSpec::doubling_minus_lambda(r.lambda), std::span<const double>(v));
    r.norm = norm(space, std::span<const double>(v));
    r.residual_raw = norm(space, std::span<const double>(dl));
    r.support_size = static_cast<long double>(std::count_if(v.begin(), v.end(), [](double x) { return x != 0.0; }));
  }
  r.residual = r.norm > 0.0 ? r.residual_raw / r.norm : kInf;
  if (const auto* lp = space.as<LpSpace>(); lp && lp->p == p && nnz == 1)
    r.predicted = static_cast<double>(std::pow(4.0L / n, 1.0L / P)) / r.norm;
  return r;
}

std::vector<double> parse_grid(const std::string& text) {
  std::istringstream is(text);
  double a = 0, b = 0;
  long long steps = 0;
  char c1 = 0, c2 = 0;
  if (!(is >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':' || !(is >> std::ws).eof())
    fail(ErrorCode::parse_error, "grid must be start:stop:steps, got '" + text + "'");
  require(steps >= 1, ErrorCode::invalid_argument, "grid needs at least one step");
  std::vector<double> g;
  for (long long i = 0; i < steps; ++i) g.push_back(steps == 1 ? a : a + (b - a) * static_cast<double>(i) / (steps - 1));
  return g;
}

namespace {

struct Candidate {
  double value = kInf;
  const char* method = "";
  void offer(double v, const char* m) {
    if (v < value) value = v, method = m;
  }
};

// Coordinate search over block profiles, relative steps halved down to 1e-6.
double local_min(const SpaceSpec& space, std::vector<double> c, double lambda) {
  double best = block_ratio(space, c, lambda);
  for (double step = 0.5; step > 1e-6; step *= 0.5) {
    bool improved = true;
    for (int sweep = 0; improved && sweep < 200; ++sweep) {
      improved = false;
      const double scale = *std::max_element(c.begin(), c.end(), [](double x, double y) { return std::fabs(x) < std::fabs(y); });
      const double h = step * std::max(std::fabs(scale), 1e-300);
      for (std::size_t k = 0; k < c.size(); ++k)
        for (double dir : {1.0, -1.0}) {
          const double old = c[k];
          c[k] = old + dir * h;
          const double v = block_ratio(space, c, lambda);
          if (v < best * (1.0 - 1e-14)) {
            best = v;
            improved = true;
          } else {
            c[k] = old;
          }
        }
    }
  }
  return best;
}

ScanPoint scan_one(const SpaceSpec& space, double lambda, const ScanOptions& opt, std::size_t index) {
  const int K = std::bit_width(opt.dim + 1) - 1;  // 2^K - 1 <= dim
  ScanPoint pt;
  pt.lambda = lambda;
  pt.levels = K;
  Candidate best;

  if (lambda > 1.0 && lambda <= 2.0) {
    const double p_star = 1.0 / std::log2(lambda);
    double w = kInf;
    for (int n = 1; n <= K; ++n) w = std::min(w, doubling_witness_vn(space, p_star, n).residual);
    pt.witness = w;
    best.offer(w, "vn_witness");
  }

  // Geometric profiles, blockwise and entrywise.
  std::vector<double> c(K);
  std::vector<double> x(opt.dim);
  const auto Dl = OperatorSpec::doubling_minus_lambda(lambda);
  for (int i = 0; i <= 64; ++i) {
    const double r = std::exp2(-4.0 + 6.0 * i / 64.0);
    for (int k = 0; k < K; ++k) c[k] = std::pow(r, k);
    best.offer(block_ratio(space, c, lambda), "geometric");
    if (i % 4 == 0) {
      const double rr = std::pow(r, 1.0 / std::max<double>(1.0, std::sqrt(static_cast<double>(opt.dim))));
      double v = 1.0;
      for (auto& e : x) e = v, v *= rr;
      const double den = norm(space, std::span<const double>(x));
      if (den > 0.0) best.offer(norm(space, std::span<const double>(seqspace::apply(Dl, std::span<const double>(x)))) / den, "geometric");
    }
  }

  // Multi-start local minimization: tapered profiles first, then random ones.
  Rng rng(derive_seed(opt.seed, index));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int s = 0; s < std::max(1, opt.restarts); ++s) {
    for (int k = 0; k < K; ++k) {
      const double taper = std::sin(std::numbers::pi * (k + 1) / (K + 1));
      const double geo = std::pow(lambda > 0.0 ? 1.0 / lambda : 1.0, k);
      c[k] = s == 0 ? taper * geo : s == 1 ? taper : geo * (1.0 + 0.5 * u(rng));
    }
    best.offer(local_min(space, c, lambda), "local_min");
  }
  pt.estimate = best.value;
  pt.method = best.method;
  return pt;
}

}  // namespace

std::vector<ScanPoint> residual_scan(const SpaceSpec& space, const std::vector<double>& lambda_grid,
                                     const ScanOptions& opt) {
  for (double l : lambda_grid)
    require(l > 0.0 && std::isfinite(l), ErrorCode::range_error, "residual_scan: lambda must be positive");
  require(opt.dim >= 1, ErrorCode::invalid_argument, "residual_scan: dim must be >= 1");
  std::vector<ScanPoint> out(lambda_grid.size());
  parallel_for(lambda_grid.size(), [&](std::size_t i) { out[i] = scan_one(space, lambda_grid[i], opt, i); });
  return out;
}

namespace {

template <class T>
std::vector<T> unit_vec(int j) {
  std::vector<T> e(j, T(0));
  e[j - 1] = T(1);
  return e;
}

template <class T>
T at(const std::vector<T>& v, std::size_t i) {
  return i < v.size() ? v[i] : T(0);
}

// a = (sum_{i<=n} lambda^{-i} tau^i)^2 e_j, built by explicit convolution.
template <class T>
std::vector<T> shift_witness(const T& lambda, int n, int j) {
  std::vector<T> box(n + 1);
  T pw(1);
  for (int i = 0; i <= n; ++i) box[i] = pw, pw /= lambda;
  std::vector<T> a(j + 2 * n, T(0));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) a[j - 1 + i + k] += box[i] * box[k];
  return a;
}

template <class T, class Eq>
ShiftIdentityCheck check_identity(const T& lambda, int n, int j, Eq eq) {
  require(n >= 1 && j >= 1, ErrorCode::invalid_argument, "shift_witness_identity needs n, j >= 1");
  const auto a = shift_witness(lambda, n, j);
  std::vector<T> t2;
  if constexpr (std::is_same_v<T, mpq_class>) {
    const auto T_l = OperatorSpec::shift_minus_lambda(lambda);
    t2 = seqspace::apply(T_l, seqspace::apply(T_l, a));
  } else {
    const auto T_l = OperatorSpec::shift_minus_lambda(lambda);
    t2 = seqspace::apply(T_l, seqspace::apply(T_l, std::span<const T>(a)));
  }
  T lam_n(1);
  for (int i = 0; i < n; ++i) lam_n /= lambda;  // lambda^{-n}
  std::vector<T> expect(j + 2 * n + 2, T(0));
  expect[j - 1] = lambda * lambda;
  expect[j + n] = T(-2) * lam_n * lambda;
  expect[j + 2 * n + 1] = lam_n * lam_n;
  ShiftIdentityCheck r;
  r.identity = true;
  for (std::size_t i = 0; i < std::max(t2.size(), expect.size()); ++i)
    r.identity = r.identity && eq(at(t2, i), at(expect, i));
  r.lower_bound = true;
  for (std::size_t i = 0; i < a.size(); ++i) r.lower_bound = r.lower_bound && a[i] >= T(0);
  r.lower_bound = r.lower_bound && at(a, j + n - 1) >= T(n) * lam_n;
  r.coefficient = eq(at(a, j + n - 1), T(n + 1) * lam_n);
  return r;
}

}  // namespace

ShiftIdentityCheck shift_witness_identity(const mpq_class& lambda, int n, int j) {
  require(sgn(lambda) > 0, ErrorCode::range_error, "shift_witness_identity needs lambda > 0");
  return check_identity(lambda, n, j, [](const mpq_class& x, const mpq_class& y) { return x == y; });
}

ShiftIdentityCheck shift_witness_identity(double lambda, int n, int j, double tol) {
  require(lambda > 0.0 && std::isfinite(lambda), ErrorCode::range_error, "shift_witness_identity needs lambda > 0");
  const double scale = std::max({1.0, lambda * lambda, std::pow(lambda, -2.0 * n) * (n + 1)});
  return check_identity(lambda, n, j, [&](double x, double y) { return std::fabs(x - y) <= tol * scale; });
}

mpq_class moment_functional(const mpq_class& lambda, const std::vector<mpq_class>& a) {
  mpq_class s = 0, pw = lambda;
  for (const auto& ak : a) {
    s += pw * ak;
    pw *= lambda;
  }
  return s;
}

double moment_functional(double lambda, const Seq& a) {
  long double s = 0.0L, pw = lambda;
  for (double ak : a.coeffs()) {
    s += pw * ak;
    pw *= lambda;
  }
  return static_cast<double>(s);
}

std::vector<mpq_class> solve_T_lambda(const mpq_class& lambda, const std::vector<mpq_class>& b) {
  require(sgn(lambda) > 0, ErrorCode::range_error, "solve_T_lambda needs lambda > 0");
  if (moment_functional(lambda, b) != 0) fail(ErrorCode::not_in_range, "b not in Im T_λ");
  std::vector<mpq_class> bs = b;
  strip_trailing_zeros(bs);
  if (bs.empty()) return {};
  std::vector<mpq_class> a(bs.size() - 1);
  mpq_class prev = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] = (prev - bs[k]) / lambda;
    prev = a[k];
  }
  strip_trailing_zeros(a);
  require(seqspace::apply(OperatorSpec::shift_minus_lambda(lambda), a) == bs, ErrorCode::not_in_range,
          "b not in Im T_λ (recurrence did not close)");
  return a;
}

Seq solve_T_lambda(double lambda, const Seq& b, double tol) {
  require(lambda > 0.0 && std::isfinite(lambda), ErrorCode::range_error, "solve_T_lambda needs lambda > 0");
  long double scale = 0.0L, pw = std::fabs(lambda);
  for (double bk : b.coeffs()) {
    scale += pw * std::fabs(bk);
    pw *= std::fabs(lambda);
  }
  if (std::fabs(moment_functional(lambda, b)) > tol * std::max(1.0L, scale))
    fail(ErrorCode::not_in_range, "b not in Im T_λ");
  if (b.empty()) return {};
  std::vector<double> a(b.size() - 1);
  double prev = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] = (prev - b[k]) / lambda;
    prev = a[k];
  }
  const auto back = seqspace::apply(OperatorSpec::shift_minus_lambda(lambda), std::span<const double>(a));
  double bmax = 0.0, err = 0.0;
  for (std::size_t i = 0; i < std::max(back.size(), b.size()); ++i) {
    bmax = std::max(bmax, std::fabs(b[i]));
    err = std::max(err, std::fabs(at(back, i) - b[i]));
  }
  require(err <= 1e3 * tol * std::max(1.0, bmax), ErrorCode::not_in_range, "b not in Im T_λ (recurrence did not close)");
  Seq out(std::move(a));
  return out;
}

}  // namespace seqspace

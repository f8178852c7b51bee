#include "seqspace/norm_search.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "seqspace/error.hpp"
#include "seqspace/parallel.hpp"

namespace seqspace {

namespace {

struct Best {
  double value = -1.0;
  std::vector<double> x;
  std::string family;

  void offer(double v, const std::vector<double>& cand, const char* fam) {
    if (v > value) {
      value = v;
      x = cand;
      family = fam;
    }
  }
};

class Evaluator {
 public:
  Evaluator(const SpaceSpec& space, const std::vector<OperatorSpec>& program)
      : space_(space), program_(program) {}

  double ratio(const std::vector<double>& x) const {
    const double den = norm(space_, std::span<const double>(x));
    if (den == 0.0) return 0.0;
    return norm(space_, std::span<const double>(apply_program(program_, x))) / den;
  }

 private:
  const SpaceSpec& space_;
  const std::vector<OperatorSpec>& program_;
};

std::size_t fitting_input(const std::vector<OperatorSpec>& program, std::size_t dim) {
  std::size_t lo = 0, hi = dim;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo + 1) / 2;
    if (program_output_length(program, mid) <= dim)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::vector<std::size_t> offsets_for(std::size_t L) {
  std::set<std::size_t> s{0, 1, 2};
  for (std::size_t p = 1; p <= L; p *= 2)
    for (std::size_t o : {p - 1, p, p + 1})
      if (o < L) s.insert(o);
  return {s.begin(), s.end()};
}

std::vector<std::size_t> lengths_for(std::size_t L) {
  std::set<std::size_t> s;
  for (std::size_t k = 1; k <= std::min<std::size_t>(L, 16); ++k) s.insert(k);
  for (std::size_t p = 1; p <= L; p *= 2)
    for (std::size_t l : {p - 1, p, p + 1})
      if (l >= 1 && l <= L) s.insert(l);
  s.insert(L);
  return {s.begin(), s.end()};
}

void structured_search(const Evaluator& ev, std::size_t L, Best& best) {
  const auto offs = offsets_for(L);
  const auto lens = lengths_for(L);
  for (std::size_t off : offs) {
    for (std::size_t len : lens) {
      if (off + len > L) continue;
      std::vector<double> x(off + len, 0.0);
      std::fill(x.begin() + off, x.end(), 1.0);
      best.offer(ev.ratio(x), x, "indicator");
    }
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.8, 0.9, 0.95, 0.98, 0.99, 0.995, 0.999}) {
      std::vector<double> x(L, 0.0);
      double v = 1.0;
      for (std::size_t i = off; i < L && v > 1e-300; ++i, v *= r) x[i] = v;
      strip_trailing_zeros(x);
      best.offer(ev.ratio(x), x, "geometric");
    }
  }
  // dyadic blocks and dyadic-block geometric profiles
  for (std::size_t k = 0; (std::size_t{2} << k) - 1 <= L; ++k) {
    std::vector<double> x((std::size_t{2} << k) - 1, 0.0);
    std::fill(x.begin() + ((std::size_t{1} << k) - 1), x.end(), 1.0);
    best.offer(ev.ratio(x), x, "dyadic_block");
  }
  for (double c : {0.25, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    std::vector<double> x(L, 0.0);
    double v = 1.0;
    for (std::size_t k = 0; (std::size_t{1} << k) - 1 < L; ++k, v *= c)
      for (std::size_t i = (std::size_t{1} << k) - 1; i < std::min(L, (std::size_t{2} << k) - 1); ++i) x[i] = v;
    best.offer(ev.ratio(x), x, "dyadic_geometric");
  }
}

void random_search(const Evaluator& ev, std::size_t L, const SearchOptions& opt, Best& best) {
  const int trials = std::max(1, opt.random_trials);
  std::vector<double> values(trials);
  std::vector<std::vector<double>> xs(trials);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    Rng rng(derive_seed(opt.seed, t));
    std::size_t len = random_length(rng, L);
    xs[t] = t % 2 == 0 ? random_signed(rng, len) : random_decreasing(rng, len);
    values[t] = ev.ratio(xs[t]);
  });
  for (int t = 0; t < trials; ++t) best.offer(values[t], xs[t], "random");
}

std::vector<double> cone_vector(const std::vector<std::size_t>& knots, const std::vector<double>& inc) {
  // a_k = sum of increments whose knot is >= k (knots are 1-based lengths)
  std::vector<double> x(knots.back(), 0.0);
  double acc = 0.0;
  std::size_t k = knots.size();
  for (std::size_t i = x.size(); i-- > 0;) {
    while (k > 0 && knots[k - 1] > i) acc += inc[--k];
    x[i] = acc;
  }
  return x;
}

void cone_search(const Evaluator& ev, std::size_t L, const SearchOptions& opt, Best& best) {
  std::set<std::size_t> ks;
  const int G = static_cast<int>(std::min<std::size_t>(L, 24));
  for (int i = 0; i < G; ++i)
    ks.insert(std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(L), G == 1 ? 1.0 : i / double(G - 1))))));
  const std::vector<std::size_t> knots(ks.begin(), ks.end());
  const int restarts = std::max(1, opt.restarts);
  std::vector<double> values(restarts);
  std::vector<std::vector<double>> xs(restarts);
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    Rng rng(derive_seed(opt.seed, 1000 + r));
    std::normal_distribution<double> normal;
    std::vector<double> inc(knots.size(), 1.0);
    if (r > 0)
      for (auto& d : inc) d = std::fabs(normal(rng));
    double cur = ev.ratio(cone_vector(knots, inc));
    double step = 1.0;
    for (int it = 0; it < opt.iterations && step > 1e-4; ++it) {
      bool improved = false;
      double scale = 0.0;
      for (double d : inc) scale = std::max(scale, d);
      for (std::size_t i = 0; i < inc.size(); ++i) {
        for (double dir : {1.0, -1.0}) {
          std::vector<double> trial = inc;
          trial[i] = std::max(0.0, trial[i] + dir * step * scale);
          double v = ev.ratio(cone_vector(knots, trial));
          if (v > cur * (1.0 + 1e-14)) {
            cur = v;
            inc = std::move(trial);
            improved = true;
            break;
          }
        }
      }
      if (!improved) step /= 2.0;
    }
    xs[r] = cone_vector(knots, inc);
    values[r] = cur;
  });
  for (int r = 0; r < restarts; ++r) best.offer(values[r], xs[r], "cone_ascent");
}

}  // namespace

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "structured") return SearchStrategy::structured;
  if (name == "random") return SearchStrategy::random;
  if (name == "optimize") return SearchStrategy::optimize;
  fail(ErrorCode::unknown_kind, "unknown search strategy '" + name + "'");
}

const char* strategy_name(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::structured: return "structured";
    case SearchStrategy::random: return "random";
    case SearchStrategy::optimize: return "optimize";
  }
  return "?";
}

NormCertificate operator_norm_lower(const SpaceSpec& space, const std::vector<OperatorSpec>& program,
                                    std::size_t dim, SearchStrategy strategy, const SearchOptions& options) {
  require(dim >= 1, ErrorCode::invalid_argument, "operator_norm_lower needs dim >= 1");
  NormCertificate cert;
  std::size_t L = fitting_input(program, dim);
  cert.truncated = L < dim;
  if (L == 0) L = 1;
  cert.input_dim = L;
  Evaluator ev(space, program);
  Best best;
  switch (strategy) {
    case SearchStrategy::structured:
      structured_search(ev, L, best);
      break;
    case SearchStrategy::random:
      random_search(ev, L, options, best);
      break;
    case SearchStrategy::optimize: {
      cone_search(ev, L, options, best);
      bool averaging = !program.empty() && std::any_of(program.begin(), program.end(), [](const OperatorSpec& op) {
        return op.kind == OperatorSpec::Kind::dilate_down || op.kind == OperatorSpec::Kind::doubling_inverse;
      });
      if (averaging) random_search(ev, L, options, best);
      break;
    }
  }
  cert.value = std::max(0.0, best.value);
  cert.witness = Seq(best.x);
  cert.output_length = apply_program(program, best.x).size();
  cert.family = best.family;
  return cert;
}

NormCertificate operator_norm_lower(const SpaceSpec& space, const OperatorSpec& op, std::size_t dim,
                                    SearchStrategy strategy, const SearchOptions& options) {
  return operator_norm_lower(space, std::vector<OperatorSpec>{op}, dim, strategy, options);
}

DyadicRatioLog dyadic_ratio_logs(const PowerSums& W, int n, const std::vector<std::uint64_t>& js) {
  DyadicRatioLog out{-INFINITY, -INFINITY};
  for (std::uint64_t j : js) {
    const long double jj = static_cast<long double>(j);
    const long double d = W.log2_prefix(std::ldexp(jj, n)) - W.log2_prefix(jj);
    out.up = std::max(out.up, d);
    out.down = std::max(out.down, -d);
  }
  return out;
}

namespace {

DilationSup dilation_sup(double q, const WeightSeq& w, int n, std::uint64_t j_max, bool up) {
  require(n >= 1 && n <= 62, ErrorCode::range_error, "dilation exponent n must lie in [1, 62]");
  require(j_max >= 1, ErrorCode::invalid_argument, "j_max must be >= 1");
  const long double reach = std::ldexp(static_cast<long double>(j_max), n);
  require(w.form() != WeightSeq::Form::array || static_cast<long double>(w.length()) >= reach,
          ErrorCode::dimension_overflow, "weight array shorter than 2^n j_max");
  auto W = PowerSums::of(w, q, static_cast<std::uint64_t>(std::min(reach, 1.8e19L)));
  DilationSup out{0.0, 0, j_max};
  long double best = -INFINITY;
  for (std::uint64_t j = 1; j <= j_max; ++j) {
    const long double jj = static_cast<long double>(j);
    long double d = W->log2_prefix(std::ldexp(jj, n)) - W->log2_prefix(jj);
    if (!up) d = -d;
    if (d > best) {
      best = d;
      out.argmax_j = j;
    }
  }
  out.value = static_cast<double>(std::exp2(best / q));
  return out;
}

}  // namespace

DilationSup lorentz_dilation_norm(double q, const WeightSeq& w, int n, std::uint64_t j_max) {
  return dilation_sup(q, w, n, j_max, true);
}

DilationSup lorentz_contraction_norm(double q, const WeightSeq& w, int n, std::uint64_t j_max) {
  return dilation_sup(q, w, n, j_max, false);
}

SpectralRadiusEstimate spectral_radius_estimate(const SpaceSpec& space, const OperatorSpec& op, int n_max,
                                                std::size_t dim, const SearchOptions& options) {
  require(n_max >= 1, ErrorCode::invalid_argument, "spectral_radius_estimate needs n_max >= 1");
  SpectralRadiusEstimate est;
  est.per_n.resize(static_cast<std::size_t>(n_max));
  parallel_for(static_cast<std::size_t>(n_max), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    std::vector<OperatorSpec> program(static_cast<std::size_t>(n), op);
    auto cert = operator_norm_lower(space, program, dim, SearchStrategy::structured, options);
    est.per_n[i] = std::pow(cert.value, 1.0 / n);
  });
  est.min_over_n = *std::min_element(est.per_n.begin(), est.per_n.end());
  est.at_n_max = est.per_n.back();
  est.caveat =
      "inner norms are search lower bounds; min over n follows the infimum characterization, so the "
      "estimate is neither a certified upper nor lower bound";
  return est;
}

}  // namespace seqspace

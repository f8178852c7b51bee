#include "seqspace/operators.hpp"

#include <bit>
#include <charconv>
#include <cmath>

#include "seqspace/error.hpp"
#include "seqspace/simd/kernels.hpp"

namespace seqspace {

namespace {

using K = OperatorSpec::Kind;

std::uint64_t dyadic_length(std::uint64_t n) {
  require(n <= kMaxDyadicLength, ErrorCode::dimension_overflow,
          "dyadic expansion of a length-" + std::to_string(n) + " vector exceeds the cap of " +
              std::to_string(kMaxDyadicLength));
  return (std::uint64_t{1} << n) - 1;
}

template <class T>
T from_count(std::uint64_t m) {
  if constexpr (std::is_same_v<T, mpq_class>)
    return mpq_class(static_cast<unsigned long>(m));
  else
    return static_cast<T>(m);
}

template <class T>
T lambda_as(const OperatorSpec& op) {
  if constexpr (std::is_same_v<T, mpq_class>)
    return op.lambda;
  else
    return op.lambda_d();
}

template <class T>
void doubling_into(std::span<const T> x, std::vector<T>& out) {
  out.assign(x.empty() ? 0 : 2 * x.size() + 1, T(0));
  if constexpr (std::is_same_v<T, double>) {
    if (!x.empty()) simd::active().repeat(x.data(), x.size(), 2, out.data() + 1);
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) out[2 * i + 1] = out[2 * i + 2] = x[i];
  }
}

// Means over consecutive blocks of size m starting at offset 0; a trailing
// partial block is averaged with the missing entries counted as zero.
template <class T>
std::vector<T> block_means(std::span<const T> x, std::uint64_t m) {
  const std::size_t full = x.size() / m, nb = (x.size() + m - 1) / m;
  std::vector<T> out(nb, T(0));
  if constexpr (std::is_same_v<T, double>) {
    if (full > 0) simd::active().block_mean(x.data(), full, m, out.data());
  } else {
    for (std::size_t b = 0; b < full; ++b) {
      T s(0);
      for (std::size_t r = 0; r < m; ++r) s += x[b * m + r];
      out[b] = s / from_count<T>(m);
    }
  }
  if (nb > full) {
    T s(0);
    for (std::size_t i = full * m; i < x.size(); ++i) s += x[i];
    out[full] = s / from_count<T>(m);
  }
  return out;
}

template <class T>
std::vector<T> apply_t(const OperatorSpec& op, std::span<const T> x) {
  const std::size_t n = x.size();
  std::vector<T> out;
  switch (op.kind) {
    case K::dilate_up: {
      const auto m = static_cast<std::size_t>(op.param);
      out.assign(n * m, T(0));
      if constexpr (std::is_same_v<T, double>) {
        if (n > 0) simd::active().repeat(x.data(), n, m, out.data());
      } else {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t r = 0; r < m; ++r) out[i * m + r] = x[i];
      }
      break;
    }
    case K::dilate_down:
      out = block_means(x, static_cast<std::uint64_t>(op.param));
      break;
    case K::shift: {
      const long long s = op.param;
      if (s >= 0) {
        out.assign(n == 0 ? 0 : n + static_cast<std::size_t>(s), T(0));
        for (std::size_t i = 0; i < n; ++i) out[i + static_cast<std::size_t>(s)] = x[i];
      } else if (static_cast<std::size_t>(-s) < n) {
        out.assign(x.begin() + (-s), x.end());
      }
      break;
    }
    case K::doubling:
      doubling_into(x, out);
      break;
    case K::doubling_inverse:
      if (n > 1) out = block_means(x.subspan(1), 2);
      break;
    case K::block_embed: {
      out.assign(dyadic_length(n), T(0));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = (std::size_t{1} << k) - 1; i < (std::size_t{2} << k) - 1; ++i) out[i] = x[k];
      break;
    }
    case K::avg_project: {
      const std::size_t blocks = static_cast<std::size_t>(std::bit_width(n));
      out.assign(dyadic_length(blocks), T(0));
      for (std::size_t k = 0; k < blocks; ++k) {
        const std::size_t lo = (std::size_t{1} << k) - 1, hi = (std::size_t{2} << k) - 1;
        T s(0);
        for (std::size_t i = lo; i < std::min(hi, n); ++i) s += x[i];
        s /= from_count<T>(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) out[i] = s;
      }
      break;
    }
    case K::avg_project_n: {
      const std::uint64_t b = std::uint64_t{1} << op.param;
      auto means = block_means(x, b);
      out.assign(means.size() * b, T(0));
      for (std::size_t k = 0; k < means.size(); ++k)
        for (std::size_t r = 0; r < b; ++r) out[k * b + r] = means[k];
      break;
    }
    case K::shift_minus_lambda: {
      const T lam = lambda_as<T>(op);
      out.assign(n == 0 ? 0 : n + 1, T(0));
      for (std::size_t i = 0; i < n; ++i) out[i + 1] = x[i];
      for (std::size_t i = 0; i < n; ++i) out[i] -= lam * x[i];
      break;
    }
    case K::doubling_minus_lambda: {
      doubling_into(x, out);
      const T lam = lambda_as<T>(op);
      if constexpr (std::is_same_v<T, double>) {
        if (n > 0) {
          // out[0..n) += -lam * x, done as y <- a*x + b*y on the prefix
          simd::active().axpby(-lam, x.data(), 1.0, out.data(), n);
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) out[i] -= lam * x[i];
      }
      break;
    }
  }
  strip_trailing_zeros(out);
  return out;
}

bool parse_ll(std::string_view s, long long& v) {
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

}  // namespace

OperatorSpec OperatorSpec::dilate_up(long long m) {
  require(m >= 1, ErrorCode::range_error, "sigma_m needs m >= 1");
  return {K::dilate_up, m, 0};
}
OperatorSpec OperatorSpec::dilate_down(long long m) {
  require(m >= 1, ErrorCode::range_error, "sigma_{1/m} needs m >= 1");
  return {K::dilate_down, m, 0};
}
OperatorSpec OperatorSpec::shift(long long n) { return {K::shift, n, 0}; }
OperatorSpec OperatorSpec::doubling() { return {K::doubling, 0, 0}; }
OperatorSpec OperatorSpec::doubling_inverse() { return {K::doubling_inverse, 0, 0}; }
OperatorSpec OperatorSpec::block_embed() { return {K::block_embed, 0, 0}; }
OperatorSpec OperatorSpec::avg_project() { return {K::avg_project, 0, 0}; }
OperatorSpec OperatorSpec::avg_project_n(long long n) {
  require(n >= 1 && n <= 30, ErrorCode::range_error, "R_n needs 1 <= n <= 30");
  return {K::avg_project_n, n, 0};
}
OperatorSpec OperatorSpec::shift_minus_lambda(const mpq_class& lambda) {
  require(sgn(lambda) > 0, ErrorCode::range_error, "T_lambda needs lambda > 0");
  return {K::shift_minus_lambda, 0, lambda};
}
OperatorSpec OperatorSpec::doubling_minus_lambda(const mpq_class& lambda) {
  require(sgn(lambda) > 0, ErrorCode::range_error, "D_lambda needs lambda > 0");
  return {K::doubling_minus_lambda, 0, lambda};
}
OperatorSpec OperatorSpec::shift_minus_lambda(double lambda) {
  require(std::isfinite(lambda), ErrorCode::range_error, "lambda must be finite");
  return shift_minus_lambda(mpq_class(lambda));
}
OperatorSpec OperatorSpec::doubling_minus_lambda(double lambda) {
  require(std::isfinite(lambda), ErrorCode::range_error, "lambda must be finite");
  return doubling_minus_lambda(mpq_class(lambda));
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  require(!s.empty(), ErrorCode::parse_error, "empty rational");
  mpq_class r;
  if (s.find('/') != std::string::npos) {
    require(r.set_str(s, 10) == 0 && r.get_den() != 0, ErrorCode::parse_error, "bad rational '" + s + "'");
    r.canonicalize();
    return r;
  }
  // decimal, possibly with exponent: convert exactly
  std::size_t epos = s.find_first_of("eE");
  long long exp10 = 0;
  std::string mant = s.substr(0, epos);
  if (epos != std::string::npos)
    require(parse_ll(std::string_view(s).substr(epos + 1 + (s[epos + 1] == '+')), exp10), ErrorCode::parse_error,
            "bad exponent in '" + s + "'");
  bool neg = !mant.empty() && (mant[0] == '-' || mant[0] == '+');
  bool minus = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::size_t dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
    exp10 -= static_cast<long long>(mant.size() - dot - 1);
  }
  require(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
          ErrorCode::parse_error, "bad number '" + s + "'");
  mpz_class num(digits, 10), scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::llabs(exp10)));
  r = exp10 >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  r.canonicalize();
  return minus ? mpq_class(-r) : r;
}

OperatorSpec OperatorSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_int = [&](const char* what) {
    long long v = 0;
    require(parse_ll(arg, v), ErrorCode::parse_error, std::string("operator ") + what + " needs an integer argument");
    return v;
  };
  if (head == "sigma_up") return dilate_up(need_int("sigma_up"));
  if (head == "sigma_down") return dilate_down(need_int("sigma_down"));
  if (head == "tau") return shift(need_int("tau"));
  if (head == "R") return avg_project_n(need_int("R"));
  if (head == "T") return shift_minus_lambda(parse_rational(arg));
  if (head == "Dl") return doubling_minus_lambda(parse_rational(arg));
  require(arg.empty(), ErrorCode::parse_error, "operator '" + std::string(head) + "' takes no argument");
  if (head == "doubling") return doubling();
  if (head == "doubling_inv") return doubling_inverse();
  if (head == "S") return block_embed();
  if (head == "Q") return avg_project();
  fail(ErrorCode::unknown_kind, "unknown operator '" + std::string(text) + "'");
}

std::string OperatorSpec::name() const {
  switch (kind) {
    case K::dilate_up: return "sigma_up:" + std::to_string(param);
    case K::dilate_down: return "sigma_down:" + std::to_string(param);
    case K::shift: return "tau:" + std::to_string(param);
    case K::doubling: return "doubling";
    case K::doubling_inverse: return "doubling_inv";
    case K::block_embed: return "S";
    case K::avg_project: return "Q";
    case K::avg_project_n: return "R:" + std::to_string(param);
    case K::shift_minus_lambda: return "T:" + lambda.get_str();
    case K::doubling_minus_lambda: return "Dl:" + lambda.get_str();
  }
  return "?";
}

std::uint64_t OperatorSpec::output_length(std::uint64_t n) const {
  if (n == 0) return 0;
  switch (kind) {
    case K::dilate_up: return n * static_cast<std::uint64_t>(param);
    case K::dilate_down: return (n + param - 1) / param;
    case K::shift: return param >= 0 ? n + param : (n > static_cast<std::uint64_t>(-param) ? n + param : 0);
    case K::doubling:
    case K::doubling_minus_lambda: return 2 * n + 1;
    case K::doubling_inverse: return n / 2;
    case K::block_embed: return n >= 64 ? UINT64_MAX : (std::uint64_t{1} << n) - 1;
    case K::avg_project: return (std::uint64_t{1} << std::bit_width(n)) - 1;
    case K::avg_project_n: {
      const std::uint64_t b = std::uint64_t{1} << param;
      return (n + b - 1) / b * b;
    }
    case K::shift_minus_lambda: return n + 1;
  }
  return n;
}

std::vector<double> apply(const OperatorSpec& op, std::span<const double> x) { return apply_t<double>(op, x); }

Seq apply(const OperatorSpec& op, const Seq& x) { return Seq(apply_t<double>(op, x.coeffs())); }

std::vector<mpq_class> apply(const OperatorSpec& op, const std::vector<mpq_class>& x) {
  return apply_t<mpq_class>(op, std::span<const mpq_class>(x));
}

Seq apply_power(const OperatorSpec& op, const Seq& x, int k) {
  Seq y = x;
  for (int i = 0; i < k; ++i) y = apply(op, y);
  return y;
}

std::vector<double> apply_program(const std::vector<OperatorSpec>& program, std::span<const double> x) {
  std::vector<double> y(x.begin(), x.end());
  for (const auto& op : program) y = apply(op, std::span<const double>(y));
  return y;
}

std::uint64_t program_output_length(const std::vector<OperatorSpec>& program, std::uint64_t n) {
  for (const auto& op : program) {
    n = op.output_length(n);
    if (n == UINT64_MAX) break;
  }
  return n;
}

}  // namespace seqspace

#include "seqspace/seq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seqspace/error.hpp"

namespace seqspace {

Seq::Seq(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double v : coeffs_)
    require(std::isfinite(v), ErrorCode::invalid_argument, "sequence entries must be finite");
  strip_trailing_zeros(coeffs_);
}

Seq::Seq(std::initializer_list<double> coeffs) : Seq(std::vector<double>(coeffs)) {}

Seq Seq::unit(std::size_t k) {
  require(k >= 1, ErrorCode::invalid_argument, "unit vector index is 1-based");
  std::vector<double> v(k, 0.0);
  v[k - 1] = 1.0;
  return Seq(std::move(v));
}

Seq Seq::indicator(std::size_t n) { return Seq(std::vector<double>(n, 1.0)); }

std::vector<double> sorted_abs(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return std::fabs(x[a]) > std::fabs(x[b]); });
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = std::fabs(x[idx[i]]);
  return out;
}

Seq rearrange(const Seq& x) { return Seq(sorted_abs(x.coeffs())); }

Seq disjoint_sum(const Seq& x, const Seq& y) {
  std::vector<double> out(x.vec());
  out.insert(out.end(), y.vec().begin(), y.vec().end());
  return Seq(std::move(out));
}

bool same_ordered_distribution(const Seq& x, const Seq& y) {
  auto nonzero_sorted = [](const Seq& s) {
    std::vector<double> v;
    for (double c : s.coeffs())
      if (c != 0.0) v.push_back(c);
    std::sort(v.begin(), v.end());
    return v;
  };
  return nonzero_sorted(x) == nonzero_sorted(y);
}

}  // namespace seqspace

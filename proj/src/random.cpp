#include "seqspace/random.hpp"

#include <algorithm>
#include <cmath>

namespace seqspace {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> random_decreasing(Rng& rng, std::size_t length) {
  std::normal_distribution<double> normal;
  std::vector<double> v(length);
  double acc = 0.0;
  for (auto& x : v) {
    acc += std::fabs(normal(rng));
    x = acc;
  }
  std::reverse(v.begin(), v.end());
  if (!v.empty() && v.front() > 0.0) {
    const double top = v.front();
    for (auto& x : v) x /= top;
  }
  return v;
}

std::size_t random_length(Rng& rng, std::size_t max_length) {
  std::uniform_real_distribution<double> u(0.0, std::log2(static_cast<double>(max_length) + 1.0));
  auto len = static_cast<std::size_t>(std::exp2(u(rng)));
  return std::clamp<std::size_t>(len, 1, max_length);
}

std::vector<double> random_signed(Rng& rng, std::size_t length) {
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<double> v(length);
  for (auto& x : v) x = coin(rng) == 0 ? 0.0 : normal(rng);
  return v;
}

}  // namespace seqspace

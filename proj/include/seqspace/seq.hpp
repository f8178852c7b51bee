#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace seqspace {

/// Drops trailing zeros so that equal sequences have equal storage.
template <class T>
void strip_trailing_zeros(std::vector<T>& v) {
  while (!v.empty() && v.back() == T(0)) v.pop_back();
}

/// Finitely supported real sequence. Storage is dense and 0-based: coeffs()[i]
/// is the (i+1)-th term; everything past the end is zero. The zero sequence is
/// the empty vector.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<double> coeffs);
  Seq(std::initializer_list<double> coeffs);

  static Seq unit(std::size_t k);       // e_k, 1-based
  static Seq indicator(std::size_t n);  // chi_{1..n}

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  const std::vector<double>& vec() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  /// 0-based access, zero beyond the stored length.
  double operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Nonincreasing rearrangement of |x|.
Seq rearrange(const Seq& x);

/// |x| sorted nonincreasingly, zeros kept. Stable on ties.
std::vector<double> sorted_abs(std::span<const double> x);

/// x followed by y.
Seq disjoint_sum(const Seq& x, const Seq& y);

/// Equality of the multisets of nonzero (signed) entries.
bool same_ordered_distribution(const Seq& x, const Seq& y);

}  // namespace seqspace

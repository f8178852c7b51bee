#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace seqspace {

using ExactRational = mpq_class;

/// Finitely supported sequence on the rationals in (0, 1). Keys are kept in
/// canonical (reduced) form so distinct keys are distinct numbers.
class QSeq {
 public:
  using Map = std::map<ExactRational, double>;

  QSeq() = default;
  static QSeq unit(const ExactRational& q);

  void add(const ExactRational& key, double coeff);
  const Map& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// (sum |c|^p)^{1/p}
  double lp_norm(double p) const;

 private:
  Map entries_;
};

enum class Q0Op { D2, D3 };

/// D_b e_q = sum_{r<b} e_{(q+r)/b}; colliding keys add.
QSeq apply_q0(Q0Op op, const QSeq& x);

struct Q0Collision {
  ExactRational key;
  std::pair<int, int> first;   // (l, m)
  std::pair<int, int> second;
};

struct Q0Disjointness {
  bool ok = true;
  std::vector<std::pair<std::pair<int, int>, std::size_t>> supports;  // ((l,m), |support|)
  std::optional<Q0Collision> collision;
  std::optional<std::pair<int, int>> bad_cardinality;  // (l,m) whose support is not 2^l 3^m unit entries
};

/// Exhaustive check over 1 <= l <= l_max, 1 <= m <= m_max that D_2^l D_3^m e_{1/6}
/// has 2^l 3^m unit coefficients and that the supports are pairwise disjoint.
Q0Disjointness verify_q0_disjointness(int l_max, int m_max);

struct UnWitness {
  double p = 0.0;
  int n = 0;
  double norm = 0.0;         // ||u_n||_p
  double d2_residual = 0.0;  // ||2^{-1/p} D_2 u_n - u_n||_p
  double d3_residual = 0.0;  // ||3^{-1/p} D_3 u_n - u_n||_p
  double d2_predicted = 0.0;
  double d3_predicted = 0.0;  // 3^{1/p} n^{-1/p}, the rate stated alongside the D_2 one
  double d3_telescoped = 0.0; // (2/n)^{1/p}: two boundary sums of mass 1/n each
  bool explicit_check = false;  // also built key by key in exact arithmetic
  double explicit_max_deviation = 0.0;
};

inline constexpr int kUnDefaultCap = 12;

/// u_n = n^{-2/p} sum_{j,k<=n} 2^{-j/p} 3^{-k/p} D_2^j D_3^k e_{1/6}. Computed on
/// the block structure (one coefficient per (j,k), block size 2^j 3^k); for
/// n <= explicit_up_to the vectors are also built explicitly on Q_0.
UnWitness q0_witness_un(double p, int n, int cap = kUnDefaultCap, int explicit_up_to = 5);

}  // namespace seqspace

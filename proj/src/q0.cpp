#include "seqspace/q0.hpp"

#include <cmath>

#include "seqspace/error.hpp"

namespace seqspace {

QSeq QSeq::unit(const ExactRational& q) {
  QSeq s;
  s.add(q, 1.0);
  return s;
}

void QSeq::add(const ExactRational& key, double coeff) {
  ExactRational k = key;
  k.canonicalize();
  require(sgn(k) > 0 && k < 1, ErrorCode::range_error, "Q_0 keys must lie in (0, 1)");
  auto [it, inserted] = entries_.emplace(std::move(k), coeff);
  if (!inserted) it->second += coeff;
  if (it->second == 0.0) entries_.erase(it);
}

double QSeq::lp_norm(double p) const {
  long double acc = 0.0L;
  for (const auto& [k, c] : entries_) acc += std::pow(std::fabs(static_cast<long double>(c)), static_cast<long double>(p));
  return static_cast<double>(std::pow(acc, 1.0L / p));
}

QSeq apply_q0(Q0Op op, const QSeq& x) {
  const unsigned long b = op == Q0Op::D2 ? 2 : 3;
  QSeq out;
  for (const auto& [q, c] : x.entries())
    for (unsigned long r = 0; r < b; ++r) out.add((q + r) / b, c);
  return out;
}

Q0Disjointness verify_q0_disjointness(int l_max, int m_max) {
  require(l_max >= 1 && m_max >= 1, ErrorCode::invalid_argument, "need l_max, m_max >= 1");
  Q0Disjointness res;
  std::map<ExactRational, std::pair<int, int>> owner;
  QSeq d3 = QSeq::unit(ExactRational(1, 6));
  for (int m = 1; m <= m_max; ++m) {
    d3 = apply_q0(Q0Op::D3, d3);
    QSeq v = d3;
    for (int l = 1; l <= l_max; ++l) {
      v = apply_q0(Q0Op::D2, v);
      const std::size_t expect = static_cast<std::size_t>(std::pow(2, l) * std::pow(3, m));
      res.supports.push_back({{l, m}, v.size()});
      bool units = v.size() == expect;
      for (const auto& [k, c] : v.entries()) units = units && c == 1.0;
      if (!units && !res.bad_cardinality) {
        res.ok = false;
        res.bad_cardinality = std::make_pair(l, m);
      }
      for (const auto& [k, c] : v.entries()) {
        auto [it, inserted] = owner.emplace(k, std::make_pair(l, m));
        if (!inserted && !res.collision) {
          res.ok = false;
          res.collision = Q0Collision{k, it->second, {l, m}};
        }
      }
    }
  }
  return res;
}

namespace {

// Block (j,k) coefficients, j in [0, n+1], k in [0, n+1].
using Blocks = std::vector<std::vector<long double>>;

long double blocks_lp(const Blocks& b, long double p) {
  long double acc = 0.0L;
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t k = 0; k < b[j].size(); ++k)
      if (b[j][k] != 0.0L)
        acc += std::pow(std::fabs(b[j][k]), p) * std::ldexp(std::pow(3.0L, static_cast<long double>(k)), static_cast<int>(j));
  return std::pow(acc, 1.0L / p);
}

QSeq explicit_un(double p, int n) {
  QSeq u;
  const long double scale = std::pow(static_cast<long double>(n), -2.0L / p);
  QSeq d3 = QSeq::unit(ExactRational(1, 6));
  for (int k = 1; k <= n; ++k) {
    d3 = apply_q0(Q0Op::D3, d3);
    QSeq v = d3;
    for (int j = 1; j <= n; ++j) {
      v = apply_q0(Q0Op::D2, v);
      const long double c = scale * std::pow(2.0L, -j / static_cast<long double>(p)) *
                            std::pow(3.0L, -k / static_cast<long double>(p));
      for (const auto& [key, one] : v.entries()) u.add(key, static_cast<double>(c * one));
    }
  }
  return u;
}

QSeq combine(const QSeq& a, double ca, const QSeq& b, double cb) {
  QSeq out;
  for (const auto& [k, c] : a.entries()) out.add(k, ca * c);
  for (const auto& [k, c] : b.entries()) out.add(k, cb * c);
  return out;
}

}  // namespace

UnWitness q0_witness_un(double p, int n, int cap, int explicit_up_to) {
  require(p >= 1.0 && std::isfinite(p), ErrorCode::range_error, "q0_witness_un needs 1 <= p < inf");
  require(n >= 1, ErrorCode::invalid_argument, "q0_witness_un needs n >= 1");
  require(n <= cap, ErrorCode::dimension_overflow,
          "q0_witness_un: n=" + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  const long double P = p;
  const std::size_t S = static_cast<std::size_t>(n) + 2;
  Blocks u(S, std::vector<long double>(S, 0.0L));
  const long double scale = std::pow(static_cast<long double>(n), -2.0L / P);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) u[j][k] = scale * std::pow(2.0L, -j / P) * std::pow(3.0L, -k / P);
  // D_2 (resp. D_3) carries block (j,k) onto block (j+1,k) (resp. (j,k+1)).
  Blocks r2(S, std::vector<long double>(S, 0.0L)), r3 = r2;
  const long double c2 = std::pow(2.0L, -1.0L / P), c3 = std::pow(3.0L, -1.0L / P);
  for (std::size_t j = 0; j < S; ++j)
    for (std::size_t k = 0; k < S; ++k) {
      r2[j][k] = (j > 0 ? c2 * u[j - 1][k] : 0.0L) - u[j][k];
      r3[j][k] = (k > 0 ? c3 * u[j][k - 1] : 0.0L) - u[j][k];
    }
  UnWitness w;
  w.p = p;
  w.n = n;
  w.norm = static_cast<double>(blocks_lp(u, P));
  w.d2_residual = static_cast<double>(blocks_lp(r2, P));
  w.d3_residual = static_cast<double>(blocks_lp(r3, P));
  w.d2_predicted = static_cast<double>(std::pow(2.0L / n, 1.0L / P));
  w.d3_predicted = static_cast<double>(std::pow(3.0L / n, 1.0L / P));
  w.d3_telescoped = static_cast<double>(std::pow(2.0L / n, 1.0L / P));
  if (n <= explicit_up_to) {
    const QSeq ue = explicit_un(p, n);
    const double e_norm = ue.lp_norm(p);
    const double e2 = combine(apply_q0(Q0Op::D2, ue), static_cast<double>(c2), ue, -1.0).lp_norm(p);
    const double e3 = combine(apply_q0(Q0Op::D3, ue), static_cast<double>(c3), ue, -1.0).lp_norm(p);
    w.explicit_check = true;
    w.explicit_max_deviation = std::max({std::fabs(e_norm - w.norm), std::fabs(e2 - w.d2_residual),
                                         std::fabs(e3 - w.d3_residual)});
  }
  return w;
}

}  // namespace seqspace

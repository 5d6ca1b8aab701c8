#pragma once

// Schur elements of the Ariki-Koike algebra H_{d,r}.
//
// Three closed formulas are provided and must agree as rational functions:
//   * schur_factored / expand_factored: the cancellation-free product over
//     (node of λ^(s), t) pairs of (q^h Q_s/Q_t − 1), h the generalized hook
//     of the node with respect to λ^(t);
//   * schur_mathas: hook lengths times the pairwise X_st quotients;
//   * schur_gim: beta numbers of an L-symbol.
// On top of these sit the semisimplicity element P(q) and the evaluation of
// Schur elements at exact rational parameters.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "akschur/combinatorics.hpp"
#include "akschur/factor_product.hpp"
#include "akschur/polynomial.hpp"

namespace akschur {

/// One factor (q^h Q_s Q_t^{-1} − 1) of the cancellation-free form. For
/// s = t this is q^h − 1 with h a classical hook length.
struct SchurFactor {
  int h = 0;
  int s = 0;
  int t = 0;

  friend bool operator==(const SchurFactor&, const SchurFactor&) = default;
};

/// Ordering by (s, t, h), the serialization order.
inline bool factor_order(const SchurFactor& a, const SchurFactor& b) {
  if (a.s != b.s) return a.s < b.s;
  if (a.t != b.t) return a.t < b.t;
  return a.h < b.h;
}

/// sign · q^q_exp · (q − 1)^qm1_exp · Π (q^h Q_s/Q_t − 1).
struct SchurFactored {
  int d = 1;
  int sign = 1;
  long long q_exp = 0;
  int qm1_exp = 0;
  std::vector<SchurFactor> factors;  // sorted by factor_order

  friend bool operator==(const SchurFactored&, const SchurFactored&) = default;
};

namespace detail {

inline MonomialKey q_Q(int d, int q_exp, int s) {
  MonomialKey k(d);
  k.e_q() = q_exp;
  if (s >= 0) k.e_Q(s) = 1;
  return k;
}

/// q^a Q_s − q^b Q_t.
inline LaurentPoly q_Q_difference(int d, int a, int s, int b, int t) {
  return LaurentPoly::binomial(1, q_Q(d, a, s), -1, q_Q(d, b, t));
}

/// q^h Q_s Q_t^{-1} − 1 (q^h − 1 when s = t).
inline LaurentPoly cross_factor(int d, int h, int s, int t) {
  MonomialKey k(d);
  k.e_q() = h;
  k.e_Q(s) += 1;
  k.e_Q(t) -= 1;
  return LaurentPoly::binomial(1, k, -1, MonomialKey(d));
}

inline int sign_of_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline void check_pair(const MultiPartition& lambda, int s, int t) {
  if (s < 0 || t >= lambda.d())
    throw std::invalid_argument("charge index out of range");
  if (s >= t) throw std::invalid_argument("X_st requires s < t");
}

inline MonomialKey all_Q(int d, int power) {
  MonomialKey k(d);
  for (int s = 0; s < d; ++s) k.e_Q(s) = power;
  return k;
}

inline void accumulate_x_st_mathas(FactorProduct& acc, const MultiPartition& lambda,
                                   int s, int t) {
  const int d = lambda.d();
  const Partition& ls = lambda[s];
  const Partition& mu = lambda[t];
  const Partition mu_conj = conjugate(mu);
  for (Node x : nodes(mu)) acc.multiply(q_Q_difference(d, content(x), t, 0, s));
  for (Node x : nodes(ls)) {
    const int c = content(x);
    acc.multiply(q_Q_difference(d, c, s, mu.first(), t));
    for (int k = 1; k <= mu.first(); ++k) {
      acc.multiply(q_Q_difference(d, c, s, k - 1 - mu_conj.part(k), t));
      acc.multiply(q_Q_difference(d, c, s, k - mu_conj.part(k), t), -1);
    }
  }
}

inline long long cross_conj_sum(const MultiPartition& lambda, int s, int t) {
  const Partition a = conjugate(lambda[s]);
  const Partition b = conjugate(lambda[t]);
  long long total = 0;
  for (int i = 1; i <= std::min(a.length(), b.length()); ++i)
    total += static_cast<long long>(a.part(i)) * b.part(i);
  return total;
}

inline void accumulate_x_st_closed(FactorProduct& acc, const MultiPartition& lambda,
                                   int s, int t) {
  const int d = lambda.d();
  const Partition& ls = lambda[s];
  const Partition& lt = lambda[t];
  MonomialKey unit(d);
  unit.e_q() = static_cast<int>(-cross_conj_sum(lambda, s, t));
  unit.e_Q(s) = lt.size();
  unit.e_Q(t) = ls.size();
  acc.multiply_monomial(unit);
  const Partition ls_conj = conjugate(ls);
  const Partition lt_conj = conjugate(lt);
  for (Node x : nodes(ls))
    acc.multiply(cross_factor(d, generalized_hook_conj(ls, lt_conj, x), s, t));
  for (Node x : nodes(lt))
    acc.multiply(cross_factor(d, generalized_hook_conj(lt, ls_conj, x), t, s));
}

}  // namespace detail

/// α(λ') = ½ Σ_s Σ_i (λ^(s)'_i − 1) λ^(s)'_i.
inline long long alpha_conj(const MultiPartition& lambda) {
  long long total = 0;
  for (const auto& c : lambda.components()) total += n_value_by_columns(c);
  return total;
}

/// α(λ') + Σ_{s<t} Σ_i λ^(s)'_i λ^(t)'_i == n(λ̄).
inline bool lemma_nbar_check(const MultiPartition& lambda) {
  long long lhs = alpha_conj(lambda);
  for (int s = 0; s < lambda.d(); ++s)
    for (int t = s + 1; t < lambda.d(); ++t) lhs += detail::cross_conj_sum(lambda, s, t);
  return lhs == n_value(bar_partition(lambda));
}

namespace detail {

/// q^a y − 1 in the (q, y) context.
inline LaurentPoly aux_factor(int a) {
  return LaurentPoly::binomial(1, MonomialKey(a, {1}), -1, MonomialKey(0, {0}),
                               VarContext::aux);
}

}  // namespace detail

/// Both sides of the rim-content identity relating a partition and its
/// conjugate, built as plain (unnormalized) quotients in q and y.
inline std::pair<RationalFn, RationalFn> conj_cont_sides(const Partition& lambda, int k) {
  if (lambda.empty()) throw std::invalid_argument("partition must be nonempty");
  if (k < 1 || k > lambda.first()) throw std::invalid_argument("k out of range");
  using detail::aux_factor;
  const Partition conj = conjugate(lambda);
  const LaurentPoly one = LaurentPoly::constant(1, 1, VarContext::aux);

  RationalFn lhs(one, aux_factor(lambda.first()));
  for (int i = 1; i <= conj.part(k); ++i)
    lhs = rf_mul(lhs, RationalFn(aux_factor(lambda.part(i) - i + 1),
                                 aux_factor(lambda.part(i) - i)));

  RationalFn rhs(one, aux_factor(-conj.part(k) + k - 1));
  for (int j = k; j <= lambda.first(); ++j)
    rhs = rf_mul(rhs, RationalFn(aux_factor(-conj.part(j) + j - 1),
                                 aux_factor(-conj.part(j) + j)));
  return {std::move(lhs), std::move(rhs)};
}

inline bool lemma_conj_cont_check(const Partition& lambda, int k) {
  auto [lhs, rhs] = conj_cont_sides(lambda, k);
  return rf_equal(lhs, rhs);
}

inline SchurFactored schur_factored(const MultiPartition& lambda) {
  const int d = lambda.d();
  const int r = lambda.size();
  SchurFactored out;
  out.d = d;
  out.sign = detail::sign_of_power(static_cast<long long>(r) * (d - 1));
  out.q_exp = -n_value(bar_partition(lambda));
  out.qm1_exp = -r;
  std::vector<Partition> conj;
  for (const auto& c : lambda.components()) conj.push_back(conjugate(c));
  out.factors.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(d));
  for (int s = 0; s < d; ++s)
    for (Node x : nodes(lambda[s]))
      for (int t = 0; t < d; ++t)
        out.factors.push_back(
            {generalized_hook_conj(lambda[s], conj[static_cast<std::size_t>(t)], x), s, t});
  std::sort(out.factors.begin(), out.factors.end(), factor_order);
  return out;
}

/// Expands with each (q^h − 1) absorbing one (q − 1)^{-1} as [h]_q, so the
/// result is a Laurent polynomial and no division happens.
inline LaurentPoly expand_factored(const SchurFactored& sf) {
  const int d = sf.d;
  int diagonal = 0;
  for (const auto& f : sf.factors) diagonal += (f.s == f.t);
  if (diagonal != -sf.qm1_exp)
    throw std::invalid_argument("factored form does not pair (q-1) powers with hooks");
  MonomialKey lead(d);
  lead.e_q() = static_cast<int>(sf.q_exp);
  LaurentPoly out = LaurentPoly::monomial(sf.sign, lead);
  for (const auto& f : sf.factors) {
    if (f.s == f.t)
      out *= q_integer(f.h, d);
    else
      out *= detail::cross_factor(d, f.h, f.s, f.t);
  }
  return out;
}

inline RationalFn x_st_mathas(const MultiPartition& lambda, int s, int t) {
  detail::check_pair(lambda, s, t);
  FactorProduct acc(lambda.d());
  detail::accumulate_x_st_mathas(acc, lambda, s, t);
  return acc.to_rational_fn();
}

inline RationalFn x_st_closed(const MultiPartition& lambda, int s, int t) {
  detail::check_pair(lambda, s, t);
  FactorProduct acc(lambda.d());
  detail::accumulate_x_st_closed(acc, lambda, s, t);
  return acc.to_rational_fn();
}

inline RationalFn schur_mathas(const MultiPartition& lambda) {
  const int d = lambda.d();
  const int r = lambda.size();
  FactorProduct acc(d);
  acc.multiply_constant(detail::sign_of_power(static_cast<long long>(r) * (d - 1)));
  acc.multiply_monomial(detail::all_Q(d, -r));
  MonomialKey qpow(d);
  qpow.e_q() = static_cast<int>(-alpha_conj(lambda));
  acc.multiply_monomial(qpow);
  for (int s = 0; s < d; ++s) {
    const Partition& c = lambda[s];
    const Partition cc = conjugate(c);
    for (Node x : nodes(c)) {
      acc.multiply_monomial(detail::q_Q(d, 0, s));
      acc.multiply(q_integer(generalized_hook_conj(c, cc, x), d));
    }
  }
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t) detail::accumulate_x_st_mathas(acc, lambda, s, t);
  return acc.to_rational_fn();
}

inline int default_symbol_length(const MultiPartition& lambda) {
  return std::max(lambda.length(), 1);
}

inline RationalFn schur_gim(const MultiPartition& lambda, int L) {
  const int d = lambda.d();
  const int r = lambda.size();
  const Symbol sym = symbol(lambda, L);  // validates L

  const long long dd = d, LL = L;
  const long long a_L = static_cast<long long>(r) * (d - 1) + (dd * (dd - 1) / 2) * (LL * (LL - 1) / 2);
  const long long b_num = dd * LL * (LL - 1) * (2 * dd * LL - dd - 3);
  if (b_num % 12 != 0) throw std::logic_error("b_L is not an integer");

  FactorProduct acc(d);
  acc.multiply_constant(detail::sign_of_power(a_L));
  MonomialKey qpow(d);
  qpow.e_q() = static_cast<int>(b_num / 12);
  acc.multiply_monomial(qpow);
  acc.multiply(q_var(d) - LaurentPoly::constant(d, 1), -r);
  acc.multiply_monomial(detail::all_Q(d, -r));

  // ν_λ
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t)
      acc.multiply(detail::q_Q_difference(d, 0, s, 0, t), L);
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t)
      for (int b : sym.rows[static_cast<std::size_t>(s)].betas)
        for (int k = 1; k <= b; ++k) acc.multiply(detail::q_Q_difference(d, k, s, 0, t));

  // δ_λ
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t)
      for (int bs : sym.rows[static_cast<std::size_t>(s)].betas)
        for (int bt : sym.rows[static_cast<std::size_t>(t)].betas)
          acc.multiply(detail::q_Q_difference(d, bs, s, bt, t), -1);
  for (int s = 0; s < d; ++s) {
    const auto& betas = sym.rows[static_cast<std::size_t>(s)].betas;
    for (std::size_t i = 0; i < betas.size(); ++i)
      for (std::size_t j = i + 1; j < betas.size(); ++j)
        acc.multiply(detail::q_Q_difference(d, betas[i], s, betas[j], s), -1);
  }
  return acc.to_rational_fn();
}

inline RationalFn schur_gim(const MultiPartition& lambda) {
  return schur_gim(lambda, default_symbol_length(lambda));
}

/// q^{-n(λ)} Π [hook]_q, the Schur element of the Iwahori-Hecke algebra of
/// the symmetric group (d = 1).
inline LaurentPoly hook_schur_element(const Partition& lambda) {
  MonomialKey lead(1);
  lead.e_q() = static_cast<int>(-n_value(lambda));
  LaurentPoly out = LaurentPoly::monomial(1, lead);
  for (Node x : nodes(lambda)) out *= q_integer(classical_hook(lambda, x), 1);
  return out;
}

// ---------------------------------------------------------------------------
// Semisimplicity

/// P(q) = Π_{i=1}^r [i]_q · Π_{s<t} Π_{-r<k<r} (q^k Q_s − Q_t).
inline LaurentPoly semisimplicity_poly(int d, int r) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  LaurentPoly out = LaurentPoly::constant(d, 1);
  for (int i = 1; i <= r; ++i) out *= q_integer(i, d);
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t)
      for (int k = -r + 1; k < r; ++k) out *= detail::q_Q_difference(d, k, s, 0, t);
  return out;
}

/// P(q) at a specialization, evaluated factor by factor.
inline Rational semisimplicity_value(int d, int r, const ParamSpec& spec) {
  if (spec.arity() != d) throw std::invalid_argument("specialization arity mismatch");
  Rational out = 1;
  Rational qi = 0, qpow = 1;
  for (int i = 1; i <= r; ++i) {
    qi += qpow;
    qpow *= spec.q();
    out *= qi;
  }
  for (int s = 0; s < d; ++s)
    for (int t = s + 1; t < d; ++t)
      for (int k = -r + 1; k < r; ++k)
        out *= rational_pow(spec.q(), k) * spec.Q(s) - spec.Q(t);
  return out;
}

/// Value of one factor through the [h]_q grouping: s = t factors give
/// [h]_q (h at q = 1), others q^h Q_s/Q_t − 1.
inline Rational evaluate_factor(const SchurFactor& f, const ParamSpec& spec) {
  if (f.s == f.t) {
    Rational total = 0, p = 1;
    for (int i = 0; i < f.h; ++i) {
      total += p;
      p *= spec.q();
    }
    return total;
  }
  return rational_pow(spec.q(), f.h) * spec.Q(f.s) / spec.Q(f.t) - 1;
}

struct VanishingReport {
  Rational value;
  std::vector<SchurFactor> vanishing_factors;
  bool irreducible = true;
};

inline VanishingReport vanishing_report(const SchurFactored& sf, const ParamSpec& spec) {
  if (spec.arity() != sf.d) throw std::invalid_argument("specialization arity mismatch");
  VanishingReport out;
  out.value = Rational(sf.sign) * rational_pow(spec.q(), sf.q_exp);
  for (const auto& f : sf.factors) {
    Rational v = evaluate_factor(f, spec);
    if (v == 0) out.vanishing_factors.push_back(f);
    out.value *= v;
  }
  out.irreducible = out.value != 0;
  return out;
}

inline VanishingReport vanishing_report(const MultiPartition& lambda, const ParamSpec& spec) {
  return vanishing_report(schur_factored(lambda), spec);
}

struct SemisimpleVerdict {
  bool semisimple = true;
  std::optional<MultiPartition> witness;  // first λ whose Schur element vanishes
};

inline SemisimpleVerdict semisimple_at(int d, int r, const ParamSpec& spec) {
  MultiPartitionGenerator gen(d, r);
  while (auto lambda = gen.next())
    if (!vanishing_report(*lambda, spec).irreducible) return {false, std::move(*lambda)};
  return {};
}

// ---------------------------------------------------------------------------
// Text form

inline std::string factor_string(const SchurFactor& f) {
  std::string qh = f.h == 0 ? "" : (f.h == 1 ? "q" : "q^" + std::to_string(f.h));
  if (f.s == f.t) return "(" + (qh.empty() ? std::string("1") : qh) + " - 1)";
  std::string ratio = "Q" + std::to_string(f.s) + "/Q" + std::to_string(f.t);
  return "(" + (qh.empty() ? ratio : qh + "*" + ratio) + " - 1)";
}

/// e.g. "-q^-7*(q-1)^-6 * (q^2 - 1) * (q*Q0/Q1 - 1)"; repeated factors are
/// collected into a power.
inline std::string to_string(const SchurFactored& sf) {
  std::ostringstream os;
  os << (sf.sign < 0 ? "-" : "");
  std::vector<std::string> head;
  if (sf.q_exp != 0) head.push_back(sf.q_exp == 1 ? "q" : "q^" + std::to_string(sf.q_exp));
  if (sf.qm1_exp != 0) head.push_back("(q - 1)^" + std::to_string(sf.qm1_exp));
  if (head.empty()) head.push_back("1");
  for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "*" : "") << head[i];
  for (std::size_t i = 0; i < sf.factors.size();) {
    std::size_t j = i;
    while (j < sf.factors.size() && sf.factors[j] == sf.factors[i]) ++j;
    os << " * " << factor_string(sf.factors[i]);
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace akschur

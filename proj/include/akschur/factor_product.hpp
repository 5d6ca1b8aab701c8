#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "akschur/polynomial.hpp"

namespace akschur {

/// Accumulates a product of Laurent polynomials raised to integer powers and
/// emits it as an unreduced RationalFn.
///
/// Each non-monomial factor is stored up to a unit of the Laurent ring: the
/// smallest exponent of every variable is shifted to zero and the term with
/// the largest key gets a positive coefficient. Factors that agree after this
/// normalization combine their exponents, so a factor appearing in both a
/// numerator and a denominator is never expanded. No other cancellation is
/// attempted.
class FactorProduct {
 public:
  explicit FactorProduct(int arity, VarContext ctx = VarContext::params)
      : arity_(arity), ctx_(ctx), unit_(arity), coeff_(1) {}

  /// Multiplies by f^exponent; a negative exponent divides.
  FactorProduct& multiply(const LaurentPoly& f, int exponent = 1) {
    if (f.arity() != arity_ || f.context() != ctx_)
      throw std::invalid_argument("polynomial arity mismatch");
    if (f.is_zero()) {
      if (exponent < 0) throw std::domain_error("division by the zero polynomial");
      if (exponent > 0) zero_ = true;
      return *this;
    }
    if (exponent == 0) return *this;
    if (f.is_monomial()) {
      const auto& [k, c] = f.terms().front();
      multiply_monomial(k, exponent);
      coeff_ *= rational_pow(Rational(c), exponent);
      return *this;
    }
    MonomialKey shift = f.min_exponents();
    LaurentPoly normal = f * LaurentPoly::monomial(1, MonomialKey(arity_) - shift, ctx_);
    if (normal.terms().back().second < 0) {
      normal = -normal;
      if (exponent % 2 != 0) coeff_ = -coeff_;
    }
    multiply_monomial(shift, exponent);
    auto [it, fresh] = factors_.try_emplace(std::move(normal), 0);
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
    return *this;
  }

  FactorProduct& multiply_monomial(const MonomialKey& k, int exponent = 1) {
    unit_ += k.scaled(exponent);
    return *this;
  }

  FactorProduct& multiply_constant(const Rational& c) {
    if (c == 0) zero_ = true;
    else coeff_ *= c;
    return *this;
  }

  FactorProduct& multiply(const FactorProduct& other) {
    if (other.arity_ != arity_ || other.ctx_ != ctx_)
      throw std::invalid_argument("polynomial arity mismatch");
    zero_ = zero_ || other.zero_;
    coeff_ *= other.coeff_;
    unit_ += other.unit_;
    for (const auto& [f, e] : other.factors_) {
      auto [it, fresh] = factors_.try_emplace(f, 0);
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
    return *this;
  }

  /// Number of distinct normalized factors still carrying a nonzero power.
  std::size_t distinct_factors() const noexcept { return factors_.size(); }

  RationalFn to_rational_fn() const {
    LaurentPoly num = LaurentPoly::monomial(zero_ ? Integer(0) : numerator(coeff_), unit_, ctx_);
    LaurentPoly den = LaurentPoly::constant(arity_, denominator(coeff_), ctx_);
    if (zero_) return RationalFn(num, den);
    for (const auto& [f, e] : factors_) {
      if (e > 0)
        num *= f.pow(e);
      else
        den *= f.pow(-e);
    }
    return RationalFn(std::move(num), std::move(den));
  }

 private:
  int arity_;
  VarContext ctx_;
  MonomialKey unit_;
  Rational coeff_;
  bool zero_ = false;
  std::map<LaurentPoly, int> factors_;
};

}  // namespace akschur

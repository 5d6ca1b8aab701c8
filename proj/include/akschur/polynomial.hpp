#pragma once

// Exact sparse Laurent polynomials in q and Q_0..Q_{d-1} (or q and y for the
// auxiliary two-variable context), unreduced rational functions over them,
// and evaluation at exact rational specializations.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace akschur {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// `params`: variables q, Q_0..Q_{arity-1}. `aux`: variables q, y (arity 1).
enum class VarContext { params, aux };

/// Exponent vector (e_q, e_Q[0], ..., e_Q[arity-1]). Ordered
/// lexicographically, i.e. by e_q first and then e_Q.
class MonomialKey {
 public:
  using Storage = boost::container::small_vector<int, 8>;

  MonomialKey() : exps_(1, 0) {}
  explicit MonomialKey(int arity) : exps_(static_cast<std::size_t>(arity) + 1, 0) {}
  MonomialKey(int e_q, std::initializer_list<int> e_Q) : exps_(1, e_q) {
    exps_.insert(exps_.end(), e_Q.begin(), e_Q.end());
  }
  MonomialKey(int e_q, const std::vector<int>& e_Q) : exps_(1, e_q) {
    exps_.insert(exps_.end(), e_Q.begin(), e_Q.end());
  }

  int arity() const noexcept { return static_cast<int>(exps_.size()) - 1; }
  int e_q() const noexcept { return exps_[0]; }
  int e_Q(int s) const { return exps_.at(static_cast<std::size_t>(s) + 1); }
  int& e_q() noexcept { return exps_[0]; }
  int& e_Q(int s) { return exps_.at(static_cast<std::size_t>(s) + 1); }

  /// Exponent of variable v, where v = 0 is q and v = s + 1 is Q_s.
  int exp(std::size_t v) const { return exps_[v]; }
  int& exp(std::size_t v) { return exps_[v]; }
  std::size_t vars() const noexcept { return exps_.size(); }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  MonomialKey& operator+=(const MonomialKey& o) {
    check_same(o);
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
    return *this;
  }
  MonomialKey& operator-=(const MonomialKey& o) {
    check_same(o);
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] -= o.exps_[i];
    return *this;
  }
  friend MonomialKey operator+(MonomialKey a, const MonomialKey& b) { return a += b; }
  friend MonomialKey operator-(MonomialKey a, const MonomialKey& b) { return a -= b; }

  MonomialKey scaled(int k) const {
    MonomialKey out = *this;
    for (auto& e : out.exps_) e *= k;
    return out;
  }

  friend bool operator==(const MonomialKey& a, const MonomialKey& b) {
    return a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const MonomialKey& a,
                                          const MonomialKey& b) {
    return std::lexicographical_compare_three_way(
        a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int e : exps_)
      h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_same(const MonomialKey& o) const {
    if (o.exps_.size() != exps_.size())
      throw std::invalid_argument("monomial arity mismatch");
  }

  Storage exps_;
};

struct MonomialKeyHash {
  std::size_t operator()(const MonomialKey& k) const noexcept { return k.hash(); }
};

/// Sparse Laurent polynomial with integer coefficients. Terms are kept sorted
/// by key with no zero coefficients, so equality is structural.
class LaurentPoly {
 public:
  using Term = std::pair<MonomialKey, Integer>;

  explicit LaurentPoly(int arity = 0, VarContext ctx = VarContext::params)
      : arity_(arity), ctx_(ctx) {
    if (arity < 0) throw std::invalid_argument("negative arity");
    if (ctx == VarContext::aux && arity != 1)
      throw std::invalid_argument("the auxiliary context has exactly one extra variable");
  }

  static LaurentPoly aux() { return LaurentPoly(1, VarContext::aux); }

  static LaurentPoly constant(int arity, const Integer& c,
                              VarContext ctx = VarContext::params) {
    return monomial(c, MonomialKey(arity), ctx);
  }

  static LaurentPoly monomial(const Integer& c, const MonomialKey& key,
                              VarContext ctx = VarContext::params) {
    LaurentPoly p(key.arity(), ctx);
    if (c != 0) p.terms_.emplace_back(key, c);
    return p;
  }

  /// Monomial in a fixed context; rejects keys of the wrong arity.
  static LaurentPoly monomial_in(const LaurentPoly& like, const Integer& c,
                                 const MonomialKey& key) {
    if (key.arity() != like.arity_)
      throw std::invalid_argument("monomial arity mismatch with context");
    return monomial(c, key, like.ctx_);
  }

  /// c1 * m1 + c2 * m2.
  static LaurentPoly binomial(const Integer& c1, const MonomialKey& m1,
                              const Integer& c2, const MonomialKey& m2,
                              VarContext ctx = VarContext::params) {
    return monomial(c1, m1, ctx) + monomial(c2, m2, ctx);
  }

  /// Builds from arbitrary (possibly duplicated, unsorted) terms.
  static LaurentPoly from_terms(int arity, std::vector<Term> terms,
                                VarContext ctx = VarContext::params) {
    LaurentPoly p(arity, ctx);
    for (const auto& [k, c] : terms)
      if (k.arity() != arity) throw std::invalid_argument("term arity mismatch");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
  }

  int arity() const noexcept { return arity_; }
  VarContext context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  bool is_constant(const Integer& c) const {
    if (c == 0) return is_zero();
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == c;
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly out(a.arity_, a.ctx_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        out.terms_.push_back(*j++);
      } else {
        Integer c = i->second + j->second;
        if (c != 0) out.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly out(a.arity_, a.ctx_);
    if (a.is_zero() || b.is_zero()) return out;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      const auto& mono = a.terms_.size() == 1 ? a : b;
      const auto& other = a.terms_.size() == 1 ? b : a;
      const auto& [mk, mc] = mono.terms_[0];
      out.terms_.reserve(other.terms_.size());
      // Shifting by a monomial preserves key order.
      for (const auto& [k, c] : other.terms_) out.terms_.emplace_back(k + mk, c * mc);
      return out;
    }
    std::unordered_map<MonomialKey, Integer, MonomialKeyHash> acc;
    acc.reserve(a.terms_.size() * 2 + b.terms_.size() * 2);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) acc[ka + kb] += ca * cb;
    out.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (c != 0) out.terms_.emplace_back(k, std::move(c));
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a polynomial");
    LaurentPoly result = constant(arity_, 1, ctx_);
    LaurentPoly base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  /// Componentwise minimum of the exponents over all terms.
  MonomialKey min_exponents() const {
    if (terms_.empty()) return MonomialKey(arity_);
    MonomialKey out = terms_.front().first;
    for (const auto& [k, c] : terms_)
      for (std::size_t v = 0; v < k.vars(); ++v) out.exp(v) = std::min(out.exp(v), k.exp(v));
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  /// Total order used for keyed containers of factors.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& [ka, ca] = a.terms_[i];
      const auto& [kb, cb] = b.terms_[i];
      if (auto c = ka <=> kb; c != 0) return c < 0;
      if (ca != cb) return ca < cb;
    }
    return false;
  }

  void check_compatible(const LaurentPoly& o) const {
    if (o.arity_ != arity_ || o.ctx_ != ctx_)
      throw std::invalid_argument("polynomial arity mismatch");
  }

 private:
  int arity_ = 0;
  VarContext ctx_ = VarContext::params;
  std::vector<Term> terms_;
};

/// q in the given context.
inline LaurentPoly q_var(int arity, VarContext ctx = VarContext::params) {
  MonomialKey k(arity);
  k.e_q() = 1;
  return LaurentPoly::monomial(1, k, ctx);
}

/// [h]_q = 1 + q + ... + q^{h-1} for h >= 1.
inline LaurentPoly q_integer(int h, int arity, VarContext ctx = VarContext::params) {
  if (h < 1) throw std::invalid_argument("q-integer needs h >= 1");
  std::vector<LaurentPoly::Term> terms;
  for (int i = 0; i < h; ++i) {
    MonomialKey k(arity);
    k.e_q() = i;
    terms.emplace_back(k, 1);
  }
  return LaurentPoly::from_terms(arity, std::move(terms), ctx);
}

/// Substitutes Q_s <-> Q_t.
inline LaurentPoly swap_Q(const LaurentPoly& p, int s, int t) {
  if (s < 0 || t < 0 || s >= p.arity() || t >= p.arity())
    throw std::invalid_argument("variable index out of range");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& [k, c] : p.terms()) {
    MonomialKey m = k;
    std::swap(m.e_Q(s), m.e_Q(t));
    terms.emplace_back(std::move(m), c);
  }
  return LaurentPoly::from_terms(p.arity(), std::move(terms), p.context());
}

// ---------------------------------------------------------------------------
// Rational functions

class PoleError : public std::domain_error {
 public:
  PoleError()
      : std::domain_error(
            "specialization hits a pole of the unreduced representation") {}
};

/// num / den, never reduced. Equality is by cross-multiplication.
class RationalFn {
 public:
  explicit RationalFn(LaurentPoly num)
      : num_(std::move(num)), den_(LaurentPoly::constant(num_.arity(), 1, num_.context())) {}

  RationalFn(LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    num_.check_compatible(den_);
    if (den_.is_zero()) throw std::domain_error("zero denominator");
  }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  int arity() const noexcept { return num_.arity(); }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

inline RationalFn rf_mul(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num() * b.num(), a.den() * b.den());
}

inline RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return rf_mul(a, b);
}

inline bool rf_equal(const RationalFn& a, const RationalFn& b) {
  a.num().check_compatible(b.num());
  if (a.den() == b.den()) return a.num() == b.num();
  return a.num() * b.den() == b.num() * a.den();
}

// ---------------------------------------------------------------------------
// Specialization

/// Parses an exact rational written as an integer or "p/q". Floats are
/// rejected.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Integer {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw std::invalid_argument("empty integer");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("not an exact rational: '" + std::string(s) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational");
  return Rational(num, den);
}

inline std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << '/' << denominator(x);
  return os.str();
}

/// Values for q and Q_0..Q_{d-1} (or q and y); all nonzero so that every
/// Laurent monomial has a value.
class ParamSpec {
 public:
  ParamSpec(Rational q, std::vector<Rational> Q) : q_(std::move(q)), Q_(std::move(Q)) {
    if (q_ == 0) throw std::invalid_argument("q must be nonzero");
    for (const auto& v : Q_)
      if (v == 0) throw std::invalid_argument("every Q_s must be nonzero");
  }

  const Rational& q() const noexcept { return q_; }
  const std::vector<Rational>& Q() const noexcept { return Q_; }
  const Rational& Q(int s) const { return Q_.at(static_cast<std::size_t>(s)); }
  int arity() const noexcept { return static_cast<int>(Q_.size()); }

  /// Value of variable v (0 is q, s + 1 is Q_s).
  const Rational& value(std::size_t v) const { return v == 0 ? q_ : Q_.at(v - 1); }

 private:
  Rational q_;
  std::vector<Rational> Q_;
};

inline Rational rational_pow(const Rational& base, long long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("negative power of zero");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational result = 1, b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

inline Rational evaluate(const MonomialKey& key, const ParamSpec& spec) {
  if (key.arity() != spec.arity())
    throw std::invalid_argument("specialization arity mismatch");
  Rational v = 1;
  for (std::size_t i = 0; i < key.vars(); ++i)
    if (key.exp(i) != 0) v *= rational_pow(spec.value(i), key.exp(i));
  return v;
}

inline Rational evaluate(const LaurentPoly& p, const ParamSpec& spec) {
  if (p.arity() != spec.arity())
    throw std::invalid_argument("specialization arity mismatch");
  // Per-variable power cache; exponents repeat heavily across terms.
  std::vector<std::map<int, Rational>> cache(static_cast<std::size_t>(p.arity()) + 1);
  Rational total = 0;
  for (const auto& [k, c] : p.terms()) {
    Rational term = Rational(c);
    for (std::size_t v = 0; v < k.vars(); ++v) {
      int e = k.exp(v);
      if (e == 0) continue;
      auto [it, fresh] = cache[v].try_emplace(e);
      if (fresh) it->second = rational_pow(spec.value(v), e);
      term *= it->second;
    }
    total += term;
  }
  return total;
}

inline Rational rf_evaluate(const RationalFn& f, const ParamSpec& spec) {
  Rational den = evaluate(f.den(), spec);
  if (den == 0) throw PoleError();
  return evaluate(f.num(), spec) / den;
}

// ---------------------------------------------------------------------------
// Text form: terms by descending power of q, then ascending Q exponents,
// e.g. "q + 1", "1 - Q0*Q1^-1".

inline std::string var_name(VarContext ctx, std::size_t v) {
  if (v == 0) return "q";
  if (ctx == VarContext::aux) return "y";
  return "Q" + std::to_string(v - 1);
}

inline std::string monomial_string(const MonomialKey& k, VarContext ctx) {
  std::string out;
  for (std::size_t v = 0; v < k.vars(); ++v) {
    int e = k.exp(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(ctx, v);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const LaurentPoly::Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->first.e_q() > b->first.e_q();
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [k, c] = *t;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::string mono = monomial_string(k, p.context());
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << to_string(p);
}

inline std::ostream& operator<<(std::ostream& os, const RationalFn& f) {
  return os << '(' << to_string(f.num()) << ") / (" << to_string(f.den()) << ')';
}

}  // namespace akschur

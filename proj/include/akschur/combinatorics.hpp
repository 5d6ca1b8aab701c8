#pragma once

// Partitions, multipartitions, beta numbers and symbols, and the streaming
// enumerators used by every sweep in the library.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace akschur {

/// A weakly decreasing sequence of positive integers. Trailing zeros passed
/// to the constructor are dropped, so equality is structural.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  int size() const noexcept {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  /// λ_i with 1-based i; zero past the last stored part.
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)]
                                     : 0;
  }

  int first() const noexcept { return part(1); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A cell (row, col) of a Young diagram, both 1-based.
struct Node {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Node&, const Node&) = default;
  friend bool operator==(const Node&, const Node&) = default;
};

inline bool contains(const Partition& lambda, Node x) noexcept {
  return x.row >= 1 && x.col >= 1 && x.col <= lambda.part(x.row);
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
  for (int p : lambda.parts())
    for (int k = 0; k < p; ++k) ++out[static_cast<std::size_t>(k)];
  return Partition(std::move(out));
}

/// Nodes in row-major order.
inline std::vector<Node> nodes(const Partition& lambda) {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) out.push_back({i, j});
  return out;
}

inline void require_node(const Partition& lambda, Node x) {
  if (!contains(lambda, x)) throw std::invalid_argument("node not in diagram");
}

inline bool is_removable(const Partition& lambda, Node x) {
  require_node(lambda, x);
  return x.col == lambda.part(x.row) && lambda.part(x.row + 1) < x.col;
}

inline int content(Node x) noexcept { return x.col - x.row; }

/// h^μ_{i,j} = λ_i − i + μ'_j − j + 1, with μ'_j = 0 beyond μ's first row.
/// The conjugate is passed in so callers sweeping many nodes compute it once.
inline int generalized_hook_conj(const Partition& lambda,
                                 const Partition& mu_conj, Node x) {
  return lambda.part(x.row) - x.row + mu_conj.part(x.col) - x.col + 1;
}

inline int generalized_hook(const Partition& lambda, const Partition& mu,
                            Node x) {
  require_node(lambda, x);
  return generalized_hook_conj(lambda, conjugate(mu), x);
}

inline int classical_hook(const Partition& lambda, Node x) {
  return generalized_hook(lambda, lambda, x);
}

/// n(λ) = Σ (i−1) λ_i.
inline long long n_value(const Partition& lambda) noexcept {
  long long total = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    total += static_cast<long long>(i - 1) * lambda.part(i);
  return total;
}

/// ½ Σ (λ'_i − 1) λ'_i, the column form of n(λ).
inline long long n_value_by_columns(const Partition& lambda) {
  long long twice = 0;
  const Partition conj = conjugate(lambda);
  for (int c : conj.parts())
    twice += static_cast<long long>(c - 1) * c;
  return twice / 2;
}

/// Ordered d-tuple of partitions.
class MultiPartition {
 public:
  explicit MultiPartition(std::vector<Partition> components)
      : components_(std::move(components)) {
    if (components_.empty())
      throw std::invalid_argument("a multipartition needs at least one component");
  }

  /// The unique multipartition of 0 with d components.
  static MultiPartition empty(int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(d)));
  }

  int d() const noexcept { return static_cast<int>(components_.size()); }
  const Partition& operator[](int s) const {
    return components_.at(static_cast<std::size_t>(s));
  }
  const std::vector<Partition>& components() const noexcept {
    return components_;
  }

  int size() const noexcept {
    int r = 0;
    for (const auto& c : components_) r += c.size();
    return r;
  }

  /// ℓ(λ), the maximum length over the components.
  int length() const noexcept {
    int l = 0;
    for (const auto& c : components_) l = std::max(l, c.length());
    return l;
  }

  friend auto operator<=>(const MultiPartition&,
                          const MultiPartition&) = default;
  friend bool operator==(const MultiPartition&,
                         const MultiPartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// All parts of all components, sorted decreasingly.
inline Partition bar_partition(const MultiPartition& lambda) {
  std::vector<int> parts;
  for (const auto& c : lambda.components())
    parts.insert(parts.end(), c.parts().begin(), c.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

struct BetaSet {
  int L = 0;
  std::vector<int> betas;  // strictly decreasing

  friend bool operator==(const BetaSet&, const BetaSet&) = default;
};

struct Symbol {
  int L = 0;
  std::vector<BetaSet> rows;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

inline BetaSet beta_set(const Partition& lambda, int L) {
  if (L < lambda.length())
    throw std::invalid_argument("L smaller than length");
  BetaSet out{L, {}};
  out.betas.reserve(static_cast<std::size_t>(L));
  for (int i = 1; i <= L; ++i) out.betas.push_back(lambda.part(i) + L - i);
  return out;
}

inline Symbol symbol(const MultiPartition& lambda, int L) {
  Symbol out{L, {}};
  out.rows.reserve(static_cast<std::size_t>(lambda.d()));
  for (const auto& c : lambda.components()) out.rows.push_back(beta_set(c, L));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Successor of `lambda` among partitions of the same size in
/// lexicographically decreasing order, or nullopt after (1,1,...,1).
inline std::optional<Partition> next_partition(const Partition& lambda) {
  std::vector<int> parts = lambda.parts();
  int ones = 0;
  while (!parts.empty() && parts.back() == 1) {
    parts.pop_back();
    ++ones;
  }
  if (parts.empty()) return std::nullopt;
  int v = parts.back() - 1;
  parts.back() = v;
  int rem = ones + 1;
  while (rem > 0) {
    int p = std::min(v, rem);
    parts.push_back(p);
    rem -= p;
  }
  return Partition(std::move(parts));
}

inline Partition first_partition(int m) {
  if (m < 0) throw std::invalid_argument("partition size must be non-negative");
  return m == 0 ? Partition() : Partition({m});
}

/// Streams the partitions of m in lexicographically decreasing order.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int m) : current_(first_partition(m)) {}

  std::optional<Partition> next() {
    if (!current_) return std::nullopt;
    std::optional<Partition> out = std::move(current_);
    current_ = next_partition(*out);
    return out;
  }

 private:
  std::optional<Partition> current_;
};

inline std::vector<Partition> enumerate_partitions(int m) {
  std::vector<Partition> out;
  PartitionGenerator gen(m);
  while (auto p = gen.next()) out.push_back(std::move(*p));
  return out;
}

/// Streams P(d, r). Sizes run through the compositions of r into d parts
/// with the first component largest first; within a composition the
/// components advance odometer-style, rightmost fastest, each through its
/// partitions in lexicographically decreasing order.
class MultiPartitionGenerator {
 public:
  MultiPartitionGenerator(int d, int r) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    sizes_.assign(static_cast<std::size_t>(d), 0);
    sizes_[0] = r;
    reset_components();
  }

  std::optional<MultiPartition> next() {
    if (done_) return std::nullopt;
    MultiPartition out(current_);
    advance();
    return out;
  }

 private:
  void reset_components() {
    current_.clear();
    for (int m : sizes_) current_.push_back(first_partition(m));
  }

  bool next_composition() {
    const int d = static_cast<int>(sizes_.size());
    for (int i = d - 2; i >= 0; --i) {
      auto ui = static_cast<std::size_t>(i);
      if (sizes_[ui] == 0) continue;
      int tail = 0;
      for (int j = i + 1; j < d; ++j) tail += sizes_[static_cast<std::size_t>(j)];
      --sizes_[ui];
      for (int j = i + 1; j < d; ++j) sizes_[static_cast<std::size_t>(j)] = 0;
      sizes_[ui + 1] = tail + 1;
      return true;
    }
    return false;
  }

  void advance() {
    for (int s = static_cast<int>(current_.size()) - 1; s >= 0; --s) {
      auto us = static_cast<std::size_t>(s);
      if (auto nxt = next_partition(current_[us])) {
        current_[us] = std::move(*nxt);
        for (std::size_t t = us + 1; t < current_.size(); ++t)
          current_[t] = first_partition(sizes_[t]);
        return;
      }
    }
    if (next_composition())
      reset_components();
    else
      done_ = true;
  }

  std::vector<int> sizes_;
  std::vector<Partition> current_;
  bool done_ = false;
};

inline std::vector<MultiPartition> enumerate_multipartitions(int d, int r) {
  std::vector<MultiPartition> out;
  MultiPartitionGenerator gen(d, r);
  while (auto p = gen.next()) out.push_back(std::move(*p));
  return out;
}

// ---------------------------------------------------------------------------
// Text forms

inline std::ostream& operator<<(std::ostream& os, const Partition& lambda) {
  os << '[';
  for (std::size_t i = 0; i < lambda.parts().size(); ++i)
    os << (i ? "," : "") << lambda.parts()[i];
  return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const MultiPartition& lambda) {
  os << '[';
  for (int s = 0; s < lambda.d(); ++s) os << (s ? "," : "") << lambda[s];
  return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, Node x) {
  return os << '(' << x.row << ',' << x.col << ')';
}

}  // namespace akschur

#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <vector>

#include "akschur/combinatorics.hpp"

using namespace akschur;

namespace {

// Independent oracles: recursive counting and enumeration, hooks counted on
// the diagram cell by cell.

long long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  long long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) total += count_partitions(n - p, p);
  return total;
}

void brute_partitions(int n, int max_part, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    brute_partitions(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

long long count_multipartitions(int d, int r) {
  if (d == 1) return count_partitions(r, r);
  long long total = 0;
  for (int first = 0; first <= r; ++first)
    total += count_partitions(first, first) * count_multipartitions(d - 1, r - first);
  return total;
}

int hook_by_counting(const Partition& lambda, Node x) {
  int arm = lambda.part(x.row) - x.col;
  int leg = 0;
  for (int k = x.row + 1; k <= lambda.length(); ++k)
    if (lambda.part(k) >= x.col) ++leg;
  return arm + leg + 1;
}

std::vector<Partition> all_partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_size; ++m)
    for (auto& p : enumerate_partitions(m)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Partition, RejectsBadParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0, 1}), std::invalid_argument);
}

TEST(Partition, StripsTrailingZeros) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_EQ(Partition({3, 1, 0}).length(), 2);
  EXPECT_TRUE(Partition({0}).empty());
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{4, 1}), (Partition{2, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{4, 2, 1, 1}), (Partition{4, 2, 1, 1}));
}

TEST(Nodes, Examples) {
  EXPECT_EQ(nodes(Partition{2, 1}), (std::vector<Node>{{1, 1}, {1, 2}, {2, 1}}));
  EXPECT_TRUE(nodes(Partition{}).empty());
  auto n = nodes(Partition{4, 1});
  ASSERT_EQ(n.size(), 5u);
  EXPECT_EQ(n.back(), (Node{2, 1}));
}

TEST(Removable, Examples) {
  EXPECT_TRUE(is_removable(Partition{4, 1}, {1, 4}));
  EXPECT_FALSE(is_removable(Partition{4, 1}, {1, 1}));
  EXPECT_FALSE(is_removable(Partition{2, 2}, {1, 2}));
  EXPECT_TRUE(is_removable(Partition{2, 2}, {2, 2}));
}

TEST(Removable, RejectsNodeOutsideDiagram) {
  EXPECT_THROW(is_removable(Partition{2, 1}, {2, 2}), std::invalid_argument);
  EXPECT_THROW(is_removable(Partition{}, {1, 1}), std::invalid_argument);
}

TEST(Removable, MatchesDeletionDefinition) {
  for (const auto& lambda : all_partitions_up_to(9))
    for (Node x : nodes(lambda)) {
      std::vector<int> parts = lambda.parts();
      bool ok = true;
      if (x.col != parts[static_cast<std::size_t>(x.row - 1)]) {
        ok = false;  // deleting a non-final cell of a row leaves a gap
      } else {
        --parts[static_cast<std::size_t>(x.row - 1)];
        for (std::size_t i = 1; i < parts.size(); ++i)
          if (parts[i] > parts[i - 1]) ok = false;
      }
      EXPECT_EQ(is_removable(lambda, x), ok) << lambda << " " << x;
    }
}

TEST(Content, Examples) {
  EXPECT_EQ(content({1, 1}), 0);
  EXPECT_EQ(content({1, 4}), 3);
  EXPECT_EQ(content({3, 1}), -2);
}

TEST(Hooks, ClassicalExamples) {
  EXPECT_EQ(classical_hook(Partition{4, 1}, {1, 1}), 5);
  EXPECT_EQ(classical_hook(Partition{4, 1}, {1, 4}), 1);
  EXPECT_EQ(classical_hook(Partition{2, 1}, {1, 1}), 3);
  EXPECT_THROW(classical_hook(Partition{2, 1}, {3, 1}), std::invalid_argument);
}

TEST(Hooks, GeneralizedExamples) {
  EXPECT_EQ(generalized_hook(Partition{1}, Partition{}, {1, 1}), 0);
  EXPECT_EQ(generalized_hook(Partition{4, 1}, Partition{2, 1}, {1, 1}), 5);
  EXPECT_EQ(generalized_hook(Partition{4, 1}, Partition{4, 1}, {1, 1}), 5);
  // Column beyond μ's width contributes μ'_j = 0.
  EXPECT_EQ(generalized_hook(Partition{4, 1}, Partition{2, 1}, {1, 4}), 4 - 1 + 0 - 4 + 1);
  EXPECT_THROW(generalized_hook(Partition{1}, Partition{}, {1, 2}), std::invalid_argument);
}

TEST(NValue, Examples) {
  EXPECT_EQ(n_value(Partition{1}), 0);
  EXPECT_EQ(n_value(Partition{4, 2, 1, 1}), 7);
  EXPECT_EQ(n_value(Partition{2, 2}), 2);
  EXPECT_EQ(n_value_by_columns(Partition{2, 2}), 2);
}

TEST(BarPartition, Examples) {
  EXPECT_EQ(bar_partition(MultiPartition({{4, 1}, {}, {2, 1}})), (Partition{4, 2, 1, 1}));
  EXPECT_EQ(bar_partition(MultiPartition({{1}, {1}})), (Partition{1, 1}));
  EXPECT_EQ(bar_partition(MultiPartition::empty(2)), Partition{});
}

TEST(BetaSet, Examples) {
  EXPECT_EQ(beta_set(Partition{3, 1}, 2).betas, (std::vector<int>{4, 1}));
  EXPECT_EQ(beta_set(Partition{}, 3).betas, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(beta_set(Partition{2}, 1).betas, (std::vector<int>{2}));
  EXPECT_THROW(beta_set(Partition{1, 1}, 1), std::invalid_argument);
}

TEST(Symbol, Examples) {
  auto rows = [](const Symbol& s) {
    std::vector<std::vector<int>> out;
    for (const auto& r : s.rows) out.push_back(r.betas);
    return out;
  };
  EXPECT_EQ(rows(symbol(MultiPartition({{1}, {}}), 1)), (std::vector<std::vector<int>>{{1}, {0}}));
  EXPECT_EQ(rows(symbol(MultiPartition::empty(2), 2)),
            (std::vector<std::vector<int>>{{1, 0}, {1, 0}}));
  EXPECT_EQ(rows(symbol(MultiPartition({{2, 1}, {1}}), 2)),
            (std::vector<std::vector<int>>{{3, 1}, {2, 0}}));
  EXPECT_THROW(symbol(MultiPartition({{1, 1}, {1}}), 1), std::invalid_argument);
}

TEST(Enumerate, PartitionCounts) {
  EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
  EXPECT_EQ(enumerate_partitions(8).size(), 22u);
  for (int m = 0; m <= 15; ++m)
    EXPECT_EQ(static_cast<long long>(enumerate_partitions(m).size()), count_partitions(m, m));
}

TEST(Enumerate, PartitionsMatchBruteForceInLexDecreasingOrder) {
  for (int m = 1; m <= 12; ++m) {
    std::vector<std::vector<int>> brute;
    std::vector<int> prefix;
    brute_partitions(m, m, prefix, brute);  // already lexicographically decreasing
    std::vector<std::vector<int>> got;
    for (const auto& p : enumerate_partitions(m)) got.push_back(p.parts());
    EXPECT_EQ(got, brute) << "m=" << m;
  }
}

TEST(Enumerate, MultipartitionExamples) {
  EXPECT_EQ(enumerate_multipartitions(1, 4).size(), 5u);
  auto d2 = enumerate_multipartitions(2, 2);
  std::vector<MultiPartition> expected{
      MultiPartition({{2}, {}}), MultiPartition({{1, 1}, {}}), MultiPartition({{1}, {1}}),
      MultiPartition({{}, {2}}), MultiPartition({{}, {1, 1}})};
  EXPECT_EQ(d2, expected);
  auto d3 = enumerate_multipartitions(3, 0);
  ASSERT_EQ(d3.size(), 1u);
  EXPECT_EQ(d3[0], MultiPartition::empty(3));
}

TEST(Enumerate, MultipartitionCountsAndUniqueness) {
  for (int d = 1; d <= 4; ++d)
    for (int r = 0; r <= 7; ++r) {
      auto all = enumerate_multipartitions(d, r);
      EXPECT_EQ(static_cast<long long>(all.size()), count_multipartitions(d, r))
          << "d=" << d << " r=" << r;
      std::set<MultiPartition> unique(all.begin(), all.end());
      EXPECT_EQ(unique.size(), all.size());
      for (const auto& l : all) {
        EXPECT_EQ(l.size(), r);
        EXPECT_EQ(l.d(), d);
      }
    }
  for (int r = 0; r <= 10; ++r)
    EXPECT_EQ(enumerate_multipartitions(1, r).size(), enumerate_partitions(r).size());
}

TEST(Enumerate, RejectsBadArguments) {
  EXPECT_THROW(MultiPartitionGenerator(0, 2), std::invalid_argument);
  EXPECT_THROW(MultiPartitionGenerator(2, -1), std::invalid_argument);
  EXPECT_THROW(PartitionGenerator(-1), std::invalid_argument);
}

// Properties over every partition with |λ| ≤ 12.

TEST(Properties, ConjugateIsInvolution) {
  for (const auto& l : all_partitions_up_to(12)) EXPECT_EQ(conjugate(conjugate(l)), l);
}

TEST(Properties, NValueRowAndColumnFormsAgree) {
  for (const auto& l : all_partitions_up_to(12)) EXPECT_EQ(n_value(l), n_value_by_columns(l)) << l;
}

TEST(Properties, RemovableNodeHitsConjugate) {
  for (const auto& l : all_partitions_up_to(12)) {
    const Partition c = conjugate(l);
    for (Node x : nodes(l))
      if (is_removable(l, x)) EXPECT_EQ(c.part(l.part(x.row)), x.row) << l << " " << x;
  }
}

TEST(Properties, NodesTransposeUnderConjugation) {
  for (const auto& l : all_partitions_up_to(12)) {
    std::set<Node> transposed;
    for (Node x : nodes(conjugate(l))) transposed.insert({x.col, x.row});
    auto own = nodes(l);
    EXPECT_EQ(std::set<Node>(own.begin(), own.end()), transposed) << l;
  }
}

TEST(Properties, ClassicalHookIsPositiveAndMatchesCounting) {
  for (const auto& l : all_partitions_up_to(12))
    for (Node x : nodes(l)) {
      const int h = classical_hook(l, x);
      EXPECT_GE(h, 1);
      EXPECT_EQ(h, generalized_hook(l, l, x));
      EXPECT_EQ(h, hook_by_counting(l, x));
    }
}

TEST(Properties, BetaSetShift) {
  for (const auto& l : all_partitions_up_to(9))
    for (int L = std::max(l.length(), 1); L <= l.length() + 3; ++L) {
      BetaSet b = beta_set(l, L);
      for (std::size_t i = 1; i < b.betas.size(); ++i) EXPECT_GT(b.betas[i - 1], b.betas[i]);
      std::vector<int> shifted;
      for (int v : b.betas) shifted.push_back(v + 1);
      shifted.push_back(0);
      EXPECT_EQ(beta_set(l, L + 1).betas, shifted);
    }
}

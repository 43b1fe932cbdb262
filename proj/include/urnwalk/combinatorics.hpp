#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace urnwalk {

// Pascal triangle of C(i, j) for i <= n, j <= k in unsigned 64-bit, with
// entries clamped to kSaturated once they no longer fit. Rank arithmetic
// refuses workloads whose total count saturates.
class BinomialTable {
 public:
  static constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

  BinomialTable(int n, int k);

  // C(i, j); zero when j < 0 or j > i.
  std::uint64_t at(int i, int j) const;

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_;
  int k_;
  std::vector<std::uint64_t> c_;
};

// Combinations are sorted lists of distinct positions in [0, n), compared in
// lexicographic order; ranks run over [0, C(n, k)).

std::uint64_t combination_rank(const BinomialTable& table, std::span<const int> combination);

std::vector<int> combination_unrank(const BinomialTable& table, std::uint64_t rank);

// Advances to the lexicographic successor in place; false at the last one.
bool next_combination(std::span<int> combination, int n);

}  // namespace urnwalk

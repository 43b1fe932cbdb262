#include "urnwalk/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace urnwalk {

BinomialTable::BinomialTable(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial table: negative dimensions");
  c_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(k + 1), 0);
  auto cell = [&](int i, int j) -> std::uint64_t& {
    return c_[static_cast<std::size_t>(i) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i <= n; ++i) {
    cell(i, 0) = 1;
    for (int j = 1; j <= k && j <= i; ++j) {
      const std::uint64_t a = cell(i - 1, j - 1);
      const std::uint64_t b = (j <= i - 1) ? cell(i - 1, j) : 0;
      const std::uint64_t sum = a + b;
      cell(i, j) = (a == kSaturated || b == kSaturated || sum < a) ? kSaturated : sum;
    }
  }
}

std::uint64_t BinomialTable::at(int i, int j) const {
  if (j < 0 || j > i || i < 0) return 0;
  if (i > n_ || j > k_) throw std::out_of_range("binomial table: index out of range");
  return c_[static_cast<std::size_t>(i) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(j)];
}

std::uint64_t combination_rank(const BinomialTable& table, std::span<const int> combination) {
  const int n = table.n();
  const int k = static_cast<int>(combination.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int level = 0; level < k; ++level) {
    for (int pos = prev + 1; pos < combination[static_cast<std::size_t>(level)]; ++pos) {
      const std::uint64_t below = table.at(n - 1 - pos, k - 1 - level);
      if (below == BinomialTable::kSaturated) throw std::overflow_error("combination rank exceeds 64 bits");
      rank += below;
    }
    prev = combination[static_cast<std::size_t>(level)];
  }
  return rank;
}

std::vector<int> combination_unrank(const BinomialTable& table, std::uint64_t rank) {
  const int n = table.n();
  const int k = table.k();
  std::vector<int> combination(static_cast<std::size_t>(k));
  int pos = 0;
  for (int level = 0; level < k; ++level) {
    for (;; ++pos) {
      if (pos > n - k + level) throw std::out_of_range("combination rank out of range");
      const std::uint64_t below = table.at(n - 1 - pos, k - 1 - level);
      if (below == BinomialTable::kSaturated) throw std::overflow_error("combination rank exceeds 64 bits");
      if (rank < below) break;
      rank -= below;
    }
    combination[static_cast<std::size_t>(level)] = pos++;
  }
  if (k == 0 && rank != 0) throw std::out_of_range("combination rank out of range");
  return combination;
}

bool next_combination(std::span<int> combination, int n) {
  const int k = static_cast<int>(combination.size());
  int i = k - 1;
  while (i >= 0 && combination[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  int value = ++combination[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) combination[static_cast<std::size_t>(j)] = ++value;
  return true;
}

}  // namespace urnwalk

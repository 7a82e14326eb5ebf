#include "lahkit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lahkit::oracle {

namespace {

long guardrail(long fallback) {
  if (const char* env = std::getenv("LAHKIT_GUARDRAIL")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::domain_error("LAHKIT_GUARDRAIL must be a positive integer");
  }
  return fallback;
}

void check_size(long n, long r, long cap) {
  if (n < 0 || r < 0) throw std::invalid_argument("oracle: negative argument");
  if (n + r > guardrail(cap))
    throw std::domain_error("oracle guardrail: n+r = " + std::to_string(n + r) + " exceeds " +
                            std::to_string(guardrail(cap)) +
                            " (set LAHKIT_GUARDRAIL to override)");
}

// Visits every set partition of [n+r] whose first r elements lie in distinct
// blocks, growing element by element. Elements 1..r are the r smallest, so
// separating them means each must open its own block. Block sizes are only
// validated at the end; fn receives the block list ordered by minimum.
template <class Fn>
void for_each_partition(long n, long r, const SizeSet& S, Fn&& fn) {
  long total = n + r;
  long max_size = 0;
  for (long s = total; s >= 1; --s)
    if (S.contains(s)) {
      max_size = s;
      break;
    }
  if (max_size == 0 && total > 0) return;

  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, long e) -> void {
    if (e > total) {
      for (const auto& b : blocks)
        if (!S.contains(static_cast<long>(b.size()))) return;
      fn(blocks);
      return;
    }
    if (e <= r) {
      blocks.push_back({static_cast<int>(e)});
      self(self, e + 1);
      blocks.pop_back();
      return;
    }
    // index loop: the recursive call grows `blocks`, so references would dangle
    long present = static_cast<long>(blocks.size());
    for (long i = 0; i < present; ++i) {
      if (static_cast<long>(blocks[i].size()) == max_size) continue;
      blocks[i].push_back(static_cast<int>(e));
      self(self, e + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({static_cast<int>(e)});
    self(self, e + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
}

Int orderings(const std::vector<std::vector<int>>& blocks) {
  Int p = 1;
  for (const auto& b : blocks) p *= factorial(static_cast<long>(b.size()));
  return p;
}

}  // namespace

Int count_list_partitions(long n, long k, const SizeSet& S, long r) {
  check_size(n, r, 10);
  if (k < 0) throw std::invalid_argument("oracle: negative k");
  Int total = 0;
  for_each_partition(n, r, S, [&](const std::vector<std::vector<int>>& blocks) {
    if (static_cast<long>(blocks.size()) == k + r) total += orderings(blocks);
  });
  return total;
}

Int count_set_partitions(long n, long k, const SizeSet& S, long r) {
  check_size(n, r, 11);
  if (k < 0) throw std::invalid_argument("oracle: negative k");
  Int total = 0;
  for_each_partition(n, r, S, [&](const std::vector<std::vector<int>>& blocks) {
    if (static_cast<long>(blocks.size()) == k + r) total += 1;
  });
  return total;
}

Int count_ordered_set_partitions(long n, const SizeSet& S, long r) {
  check_size(n, r, 8);
  Int total = 0;
  for_each_partition(n, r, S, [&](const std::vector<std::vector<int>>& blocks) {
    total += factorial(static_cast<long>(blocks.size()));
  });
  return total;
}

Int count_list_sequences(long n, const SizeSet& S, long r) {
  check_size(n, r, 8);
  Int total = 0;
  for_each_partition(n, r, S, [&](const std::vector<std::vector<int>>& blocks) {
    total += factorial(static_cast<long>(blocks.size())) * orderings(blocks);
  });
  return total;
}

std::vector<ListPartition> list_partitions(const std::vector<int>& labels, const SizeSet& S) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ListPartition> out;
  ListPartition cur;

  // Take the smallest remaining label, pick the size and the other members of
  // its list, then every ordering of that list; blocks come out min-ordered.
  auto rec = [&](auto&& self, std::vector<int> rem) -> void {
    if (rem.empty()) {
      out.push_back(cur);
      return;
    }
    int head = rem.front();
    long limit = static_cast<long>(rem.size());
    for (long s = 1; s <= limit; ++s) {
      if (!S.contains(s)) continue;
      std::vector<int> idx(s - 1);  // indices into rem[1..] for the other members
      // iterate over (s-1)-subsets of rem[1..]
      for (long i = 0; i < s - 1; ++i) idx[i] = static_cast<int>(i) + 1;
      while (true) {
        std::vector<int> block{head};
        for (int i : idx) block.push_back(rem[i]);
        std::sort(block.begin(), block.end());
        do {
          cur.push_back(block);
          std::vector<int> next;
          for (long i = 1; i < limit; ++i)
            if (std::find(idx.begin(), idx.end(), static_cast<int>(i)) == idx.end())
              next.push_back(rem[i]);
          self(self, std::move(next));
          cur.pop_back();
        } while (std::next_permutation(block.begin(), block.end()));
        // advance the subset
        long p = s - 2;
        while (p >= 0 && idx[p] == limit - (s - 1) + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (long q = p + 1; q < s - 1; ++q) idx[q] = idx[q - 1] + 1;
      }
    }
  };
  rec(rec, std::move(sorted));
  return out;
}

}  // namespace lahkit::oracle

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lahkit/poset.hpp"

using namespace lahkit;

namespace {
const SizeSet kAll = SizeSet::parse("all");
const SizeSet kOdd = SizeSet::parse("odd");

std::vector<AsteriskList> all_asterisk_lists(std::vector<int> labels) {
  std::vector<AsteriskList> out;
  std::sort(labels.begin(), labels.end());
  do {
    for (size_t cut = 0; cut <= labels.size(); ++cut) {
      AsteriskList l;
      l.before.assign(labels.begin(), labels.begin() + cut);
      l.after.assign(labels.begin() + cut, labels.end());
      out.push_back(std::move(l));
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

// Order decision straight from the definition: try every sub-partition of a's
// lists, every assignment of its blocks to components, every block order and
// asterisk cut. Exponential, but the test posets are tiny.
bool brute_leq(const PartitionPair& a, const PartitionPair& b, const SizeSet& S) {
  if (a.specials.size() != b.specials.size()) return false;
  size_t r = a.specials.size();
  size_t m = a.lists.size();

  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    oracle::ListPartition sub, rest;
    for (size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? sub : rest).push_back(a.lists[i]);
    if (!merge_leq(rest, b.lists, S)) continue;
    if (r == 0) {
      if (sub.empty()) return true;
      continue;
    }

    // assignment of sub's blocks to the r components, as a base-r counter
    std::vector<size_t> comp(sub.size(), 0);
    bool carry = false;
    while (!carry) {
      bool all_match = true;
      for (size_t i = 0; i < r && all_match; ++i) {
        std::vector<size_t> mine;
        for (size_t t = 0; t < sub.size(); ++t)
          if (comp[t] == i) mine.push_back(t);
        if (!S.contains(static_cast<long>(mine.size()) + 1)) {
          all_match = false;
          break;
        }
        bool found = false;
        std::sort(mine.begin(), mine.end());
        do {
          for (size_t cut = 0; cut <= mine.size() && !found; ++cut) {
            AsteriskList t;
            for (size_t p = 0; p < mine.size(); ++p) {
              auto& side = p < cut ? t.before : t.after;
              side.insert(side.end(), sub[mine[p]].begin(), sub[mine[p]].end());
            }
            if (asterisk_product(a.specials[i], t) == b.specials[i]) found = true;
          }
        } while (!found && std::next_permutation(mine.begin(), mine.end()));
        all_match = found;
      }
      if (all_match) return true;

      size_t d = 0;
      while (d < comp.size() && ++comp[d] == r) comp[d++] = 0;
      carry = d == comp.size();
      if (sub.empty()) break;  // exactly one (empty) assignment
    }
  }
  return false;
}

long find_by_repr(const Poset& P, const std::string& text) {
  for (size_t i = 0; i < P.elements.size(); ++i)
    if (P.elements[i].repr() == text) return static_cast<long>(i);
  return -1;
}
}  // namespace

TEST_CASE("asterisk product splices into the slot") {
  AsteriskList a{{1}, {2}};   // 1 * 2
  AsteriskList b{{3}, {}};    // 3 *
  AsteriskList ab = asterisk_product(a, b);
  CHECK(ab.before == std::vector<int>{1, 3});
  CHECK(ab.after == std::vector<int>{2});
  CHECK(ab.word() == std::vector<int>{1, 3, 2});

  AsteriskList ba = asterisk_product(b, a);
  CHECK(ba.before == std::vector<int>{3, 1});
  CHECK(ba.after == std::vector<int>{2});

  AsteriskList unit;
  CHECK(asterisk_product(a, unit) == a);
  CHECK(asterisk_product(unit, a) == a);
  CHECK(unit.size() == 0);
  CHECK(a.size() == 2);
}

TEST_CASE("asterisk product is left-cancellative") {
  std::vector<AsteriskList> rights = all_asterisk_lists({4, 5});
  {
    auto extra = all_asterisk_lists({4});
    rights.insert(rights.end(), extra.begin(), extra.end());
    rights.push_back(AsteriskList{});
  }
  for (const AsteriskList& a : all_asterisk_lists({1, 2, 3}))
    for (size_t i = 0; i < rights.size(); ++i)
      for (size_t j = i + 1; j < rights.size(); ++j)
        CHECK(asterisk_product(a, rights[i]) != asterisk_product(a, rights[j]));
}

TEST_CASE("merge order on list partitions") {
  oracle::ListPartition singles = {{1}, {2}, {3}};
  CHECK(merge_leq(singles, {{1, 2, 3}}, kAll));
  CHECK(merge_leq(singles, {{1, 2, 3}}, kOdd));
  CHECK(merge_leq(singles, {{2, 3, 1}}, kAll));

  oracle::ListPartition two = {{1, 2}, {3}};
  CHECK(merge_leq(two, {{3, 1, 2}}, kAll));
  CHECK_FALSE(merge_leq(two, {{3, 1, 2}}, kOdd));  // two pieces, 2 not odd
  CHECK_FALSE(merge_leq(two, {{1, 3, 2}}, kAll));  // interleaves the block 1 2
  CHECK_FALSE(merge_leq(singles, {{1, 2}}, kAll)); // label totals differ
  CHECK(merge_leq(two, two, kAll));
  CHECK(merge_leq({}, {}, kOdd));
}

TEST_CASE("construction of asterisk tuples from blocks") {
  AsteriskList mid{{1}, {2}};    // 1 * 2
  AsteriskList front{{}, {1, 2}};  // * 1 2
  AsteriskList rev{{2}, {1}};    // 2 * 1

  CHECK(constructed_from({mid}, {{1}, {2}}, kAll));
  CHECK(constructed_from({mid}, {{1}, {2}}, kOdd));  // 2 blocks, 2+1 odd
  CHECK(constructed_from({rev}, {{1}, {2}}, kAll));
  CHECK(constructed_from({front}, {{1, 2}}, kAll));
  CHECK_FALSE(constructed_from({front}, {{1, 2}}, kOdd));  // 1 block, 1+1 not odd
  CHECK_FALSE(constructed_from({mid}, {{1, 2}}, kAll));    // asterisk inside a block
  CHECK_FALSE(constructed_from({AsteriskList{{1}, {}}, AsteriskList{{2}, {}}}, {{1, 2}}, kAll));
  CHECK_FALSE(constructed_from({AsteriskList{{1}, {}}}, {{1}, {2}}, kAll));  // 2 unplaced
  CHECK(constructed_from({}, {}, kOdd));
}

TEST_CASE("order decision matches the definition, exhaustively") {
  struct Instance {
    long n, r;
    const SizeSet* S;
  };
  for (Instance inst : {Instance{3, 2, &kOdd}, Instance{3, 1, &kAll}, Instance{3, 0, &kAll}}) {
    Poset P = build_poset(inst.n, *inst.S, inst.r);
    long m = static_cast<long>(P.elements.size());
    long mismatches = 0;
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j)
        if (P.leq[i][j] != brute_leq(P.elements[i], P.elements[j], *inst.S)) ++mismatches;
    INFO("n=", inst.n, " r=", inst.r, " set=", inst.S->description());
    CHECK(mismatches == 0);
  }
}

TEST_CASE("hand-checked relation") {
  PartitionPair zero{{AsteriskList{}, AsteriskList{}}, {{1}, {2}, {3}}};
  PartitionPair up{{AsteriskList{{1, 2}, {}}, AsteriskList{}}, {{3}}};
  CHECK(pair_leq(zero, up, kOdd));
  CHECK_FALSE(pair_leq(up, zero, kOdd));
  CHECK(pair_leq(zero, zero, kOdd));
  // one label per component needs component size 1 in S-1: fine for all sizes,
  // impossible for odd ones
  PartitionPair mixed{{AsteriskList{{1}, {}}, AsteriskList{{2}, {}}}, {{3}}};
  CHECK(pair_leq(zero, mixed, kAll));
  CHECK_FALSE(pair_leq(zero, mixed, kOdd));
  CHECK_FALSE(pair_leq(mixed, up, kAll));  // 2 * cannot be peeled off the bare *
}

TEST_CASE("poset for odd sizes, r=2, n=3") {
  Poset P = build_poset(3, kOdd, 2);
  CHECK(P.elements.size() == 43);
  CHECK(P.level_counts() == std::vector<Int>{0, 42, 0, 1});
  CHECK(P.mobius_cardinals() == std::vector<Int>{0, -42, 0, 1});

  REQUIRE(P.zero_index >= 0);
  const PartitionPair& zero = P.elements[P.zero_index];
  CHECK(zero.level() == 3);
  CHECK(zero.repr() == "(*, *)||1|2|3");
  CHECK(P.mobius[P.zero_index] == 1);

  // only levels 1 and 3 are populated, so 0-hat is covered by all of level 1
  auto edges = P.cover_edges();
  long from_zero = 0, trivial_specials = 0;
  for (auto [i, j] : edges) {
    if (i != P.zero_index) continue;
    ++from_zero;
    CHECK(P.elements[j].level() == 1);
    const auto& sp = P.elements[j].specials;
    if (sp[0].size() == 0 && sp[1].size() == 0) ++trivial_specials;
  }
  CHECK(from_zero == 42);
  CHECK(trivial_specials == 6);  // the 3! one-list elements with bare asterisks
}

TEST_CASE("poset for odd sizes, r=2, n=4") {
  Poset P = build_poset(4, kOdd, 2);
  CHECK(P.elements.size() == 553);
  CHECK(P.level_counts() == std::vector<Int>{456, 0, 96, 0, 1});
  CHECK(P.mobius_cardinals() == std::vector<Int>{696, 0, -96, 0, 1});
  CHECK(P.mobius[P.zero_index] == 1);

  long top = find_by_repr(P, "(* 1 2 3 4, *)||-");
  REQUIRE(top >= 0);
  CHECK(P.mobius[top] == 2);
  long split = find_by_repr(P, "(1 * 2, * 3 4)||-");
  REQUIRE(split >= 0);
  CHECK(P.mobius[split] == 1);
}

TEST_CASE("verification suites") {
  for (long r : {0, 1, 2}) {
    IdentityReport rep = verify_poset(kOdd, r, 4);
    INFO("odd r=", r);
    CHECK(rep.pass);
    CHECK(!rep.points.empty());
  }
  for (long r : {0, 1}) {
    IdentityReport rep = verify_poset(kAll, r, 4);
    INFO("all r=", r);
    CHECK(rep.pass);
  }
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(build_poset(8, kOdd, 2), std::domain_error);       // 5613553 elements
  CHECK_THROWS_AS(build_poset(4, kAll, 0, 10), std::domain_error);   // budget knob
  CHECK_THROWS_AS(build_poset(3, SizeSet::parse("even"), 0), std::domain_error);
  CHECK_THROWS_AS(build_poset(5, SizeSet::parse("1,2,5"), 0), std::domain_error);
  CHECK_THROWS_AS(build_poset(0, kOdd, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_poset(3, kOdd, -1), std::invalid_argument);
}

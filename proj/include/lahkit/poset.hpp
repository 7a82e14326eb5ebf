#pragma once

#include <string>
#include <vector>

#include "lahkit/numbers.hpp"
#include "lahkit/oracle.hpp"
#include "lahkit/sequences.hpp"
#include "lahkit/sizeset.hpp"

namespace lahkit {

// An ordered list with one asterisk slot somewhere in it: before * after.
struct AsteriskList {
  std::vector<int> before, after;
  long size() const { return static_cast<long>(before.size() + after.size()); }
  std::vector<int> word() const;  // before ++ after
  friend bool operator==(const AsteriskList&, const AsteriskList&) = default;
};

// a (*) b = a1 b1 * b2 a2: the product splices b into a's asterisk slot. It
// is left-cancellative, which the order decision below leans on.
AsteriskList asterisk_product(const AsteriskList& a, const AsteriskList& b);

// One element of the poset: r asterisk lists (component sizes in S-1) plus a
// partition of the remaining labels into lists with sizes in S, blocks
// ordered by minimum.
struct PartitionPair {
  std::vector<AsteriskList> specials;
  oracle::ListPartition lists;
  long level() const { return static_cast<long>(lists.size()); }
  std::string repr() const;  // e.g. "(1 3 *, *)||2 4|5"
  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

// Does every list of b split into whole consecutive lists of a, the number of
// pieces per list lying in S, with a used up exactly?
bool merge_leq(const oracle::ListPartition& a, const oracle::ListPartition& b, const SizeSet& S);

// Can the tuple be obtained by concatenating, per component, the lists of some
// sub-partition (in any order, the asterisk placed between pieces), each
// component using a number of lists lying in S-1?
bool constructed_from(const std::vector<AsteriskList>& tuple, const oracle::ListPartition& blocks,
                      const SizeSet& S);

// The poset order: some sub-partition a'' of a's lists is absorbed into the
// asterisk components (b.specials = a.specials (*) tuple-from-a'') and the
// rest of a's lists merge into b's lists. The absorbed tuple is unique by
// left cancellation, so the decision is direct rather than a search.
bool pair_leq(const PartitionPair& a, const PartitionPair& b, const SizeSet& S);

struct Poset {
  long n = 0, r = 0;
  std::string set_desc;
  std::vector<PartitionPair> elements;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: element i <= element j
  std::vector<Int> mobius;             // mu(0hat, x)
  long zero_index = -1;

  std::vector<Int> level_counts() const;     // index k: elements at level k
  std::vector<Int> mobius_cardinals() const; // index k: sum of mu over level k
  std::vector<std::pair<long, long>> cover_edges() const;
};

// Builds the whole poset on [n]. Requires S to pass is_plus_one_monoid(n) and
// the predicted element count (row total of the Lah triangle) to stay within
// the budget.
Poset build_poset(long n, const SizeSet& S, long r, long element_budget = 20000);

// Level counts against the Lah triangle, order axioms, Mobius cardinals
// against the rows of the inverse Lah matrix, for every 1 <= n <= n_max.
IdentityReport verify_poset(const SizeSet& S, long r, long n_max, long element_budget = 20000);

}  // namespace lahkit

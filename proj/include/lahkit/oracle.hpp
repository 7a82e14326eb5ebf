#pragma once

#include <vector>

#include "lahkit/numbers.hpp"
#include "lahkit/sizeset.hpp"

namespace lahkit::oracle {

// Exhaustive counts over partitions of [n+r] with the first r elements in
// distinct blocks and every block size in S. These exist to cross-check the
// generating-function routes, so they share no code with them.
//
// Guardrails on n+r (lists/sets 10/11, ordered totals 8) keep runtimes at
// desk scale; the LAHKIT_GUARDRAIL environment variable (an integer) replaces
// all three caps when set.

// partitions into k+r ordered lists
Int count_list_partitions(long n, long k, const SizeSet& S, long r);
// partitions into k+r unordered blocks
Int count_set_partitions(long n, long k, const SizeSet& S, long r);
// sequences of blocks, any number of blocks
Int count_ordered_set_partitions(long n, const SizeSet& S, long r);
// sequences of ordered lists, any number of lists
Int count_list_sequences(long n, const SizeSet& S, long r);

using ListBlock = std::vector<int>;
using ListPartition = std::vector<ListBlock>;  // blocks ordered by minimum element

// Every partition of the given labels into ordered lists with sizes in S,
// materialized. Used by the poset builder and by structural tests.
std::vector<ListPartition> list_partitions(const std::vector<int>& labels, const SizeSet& S);

}  // namespace lahkit::oracle

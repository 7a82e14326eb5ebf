#pragma once

#include <string>
#include <vector>

namespace lahkit {

enum class SetKind { All, Odd, Even, Finite, AtLeast, AtMost, Not, Residue };

// Derived subsets of S, all listed up to a bound:
//   least    S*    members s with s-1 not in S
//   greatest S-bar members s with s+1 not in S
//   hat      S-hat = S-bar minus S*
struct DerivedSets {
  std::vector<long> least;
  std::vector<long> greatest;
  std::vector<long> hat;
};

// A set of allowed block sizes, always a subset of {1, 2, 3, ...}.
//
// Accepted descriptions:
//   "all" | "odd" | "even"
//   "1,2,5"        explicit members
//   ">=2" "<=4"    half-bounded
//   "not 3"        all positive integers except one
//   "mod 1 3"      {x >= 1 : x = 1 (mod 3)}, needs 0 <= a < b
class SizeSet {
 public:
  static SizeSet parse(const std::string& text);
  // Programmatic finite set; unlike parse() an empty member list is allowed.
  static SizeSet finite(std::vector<long> members);

  bool contains(long s) const;
  std::vector<long> members_upto(long bound) const;
  DerivedSets derived_sets(long bound) const;

  // True when S-1 = {s-1 : s in S} is an additive monoid: 0 in S-1 and
  // closure under addition. "all", "odd" and residue classes 1 mod b are
  // recognized analytically; everything else is checked up to the bound.
  bool is_plus_one_monoid(long bound) const;

  // {s in S : s <= bound} \ {u} as a finite set.
  SizeSet without(long u, long bound) const;

  SetKind kind() const { return kind_; }
  const std::string& description() const { return desc_; }

 private:
  SizeSet() = default;

  SetKind kind_ = SetKind::All;
  long a_ = 0, b_ = 0;          // kind parameters (threshold, excluded, residue)
  std::vector<long> members_;   // Finite only, strictly increasing
  std::string desc_;
};

}  // namespace lahkit

#pragma once

#include <string>
#include <vector>

#include "lahkit/numbers.hpp"
#include "lahkit/series.hpp"
#include "lahkit/sizeset.hpp"

namespace lahkit {

// Lower-triangular table of values for 0 <= k <= n <= n_max. at() is lenient
// and returns 0 outside the triangle, which is the convention every identity
// here relies on for vanishing terms.
struct Triangle {
  std::vector<std::vector<Int>> rows;
  Int at(long n, long k) const {
    if (n < 0 || k < 0 || n >= static_cast<long>(rows.size()) ||
        k >= static_cast<long>(rows[n].size()))
      return 0;
    return rows[n][k];
  }
  long n_max() const { return static_cast<long>(rows.size()) - 1; }
};

// Counts of partitions of [n+r] into k+r ordered lists (Lah) or blocks
// (Stirling) with every size in S and the first r elements in distinct
// lists/blocks. Canonical route: coefficient extraction from
//   (1/k!) * H^k * (H')^r      resp.   (1/k!) * E^k * (E')^r
// where H = sum_{s in S} x^s and E = sum_{s in S} x^s/s!.
Int sr_lah(long n, long k, const SizeSet& S, long r);
Int sr_stirling(long n, long k, const SizeSet& S, long r);
Int s_lah(long n, long k, const SizeSet& S);  // r = 0

Triangle lah_triangle(const SizeSet& S, long r, long n_max);
Triangle stirling_triangle(const SizeSet& S, long r, long n_max);

// Number of compositions of n into k parts, all parts in S.
Int compositions_count(long n, long k, const SizeSet& S);
// The compositions themselves, lexicographically; guarded at n <= 64.
std::vector<std::vector<long>> enumerate_compositions(long n, long k, const SizeSet& S);

// Row sum over k of sr_lah.
Int l_total(long n, const SizeSet& S, long r);

// Ordered set partitions (Fubini) and doubly ordered partitions. Each is
// computed both as a finite sum over the triangle and by EGF extraction from
//   r!/(1-E)^(r+1) * (E')^r      resp.   r!/(1-H)^(r+1) * (H')^r ;
// a route mismatch is an internal error.
Int fubini(long n, const SizeSet& S, long r);
Int doubly_ordered(long n, const SizeSet& S, long r);

// --- verification reports ---------------------------------------------------

struct CheckPoint {
  std::string params;
  Int lhs, rhs;
  bool ok;
};

struct IdentityReport {
  std::string name;
  std::string range;
  std::vector<CheckPoint> points;
  bool pass = true;

  void add(std::string params, Int lhs, Int rhs);
  long failures() const;
};

// Single-term expansion by the first block/list (r = 0).
IdentityReport verify_rec_thm21(const SizeSet& S, long n_max);
// Recurrence driven by the derived sets S* and S-bar (r = 0).
IdentityReport verify_rec_thm22(const SizeSet& S, long n_max);
// Reduction of the r-marked numbers to the r = 0 numbers through weak
// compositions with every part+1 in S (needs r >= 1).
IdentityReport verify_thm31(const SizeSet& S, long r, long n_max);
// Recurrence exchanging one marked element for a new list (needs r >= 1).
IdentityReport verify_rec_thm32(const SizeSet& S, long r, long n_max);
// The three weighted in-place recurrences.
IdentityReport verify_thm33(const SizeSet& S, long r, long n_max);
// Removal of a single size u from S (needs u in S).
IdentityReport verify_thm34(const SizeSet& S, long r, long u, long n_max);
// Classical connection x^(rising n) = sum_k lah(n,k) x_(falling k).
IdentityReport verify_connection_rising_falling(long n_max);
// Classical factorization lah = stirling1 * stirling2.
IdentityReport verify_connection_stirling(long n_max);
// (2n)_k * lah_odd(2n-k, k) = lah_even(2n, k).
IdentityReport verify_parity_relation(long n_max);
// Derivatives of (1+H)^t (H')^r and (1+E)^t (E')^r against weighted row sums,
// for t = 0..t_max.
IdentityReport verify_potential_polynomials(const SizeSet& S, long r, long n_max, long t_max);
// Fubini / doubly ordered recurrences, r = 0..r_max.
IdentityReport verify_rec_fubini(const SizeSet& S, long r_max, long n_max);
IdentityReport verify_rec_doubly(const SizeSet& S, long r_max, long n_max);

// --- convergent series checks ------------------------------------------------

struct SeriesCheck {
  std::string params;
  Rat partial;
  Int exact;
  long terms = 0;
  bool pass = false;
};

// Partial sums of r!/2^(r+1) * sum_l binom(r+l,l)/2^l * sum_k T(n,k) (l)_k
// where T is the Stirling (Fubini case) or Lah (doubly ordered case)
// triangle. Terms are accumulated exactly; summation stops once terms are
// decreasing and negligible against the running sum, or at l_max.
SeriesCheck series_identity_fubini(long n, const SizeSet& S, long r, const Rat& tolerance,
                                   long l_max = 400);
SeriesCheck series_identity_doubly(long n, const SizeSet& S, long r, const Rat& tolerance,
                                   long l_max = 400);

// --- asymptotics --------------------------------------------------------------

struct AsymptoticCheck {
  double ratio_small = 0, ratio_large = 0;
  bool pass = false;
};

// L(n)/n! against exp(-1/2) exp(2 sqrt n) / (2 sqrt(pi) n^(3/4)): the relative
// error must shrink between the two points and be under 0.25 at the larger.
AsymptoticCheck asymptotic_check(long n_small = 100, long n_large = 1000);

}  // namespace lahkit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace lahkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(long n);

// 0 whenever k < 0, n < 0 or k > n.
Int binomial(long n, long k);

// x(x-1)...(x-n+1), empty product for n = 0.
Int falling(const Int& x, long n);
Rat falling(const Rat& x, long n);

// x(x+1)...(x+n-1).
Int rising(const Int& x, long n);
Rat rising(const Rat& x, long n);

Int int_pow(const Int& base, long e);

// Unsigned Stirling numbers of the first kind and Stirling numbers of the
// second kind. Both require 0 <= k <= n.
Int stirling1(long n, long k);
Int stirling2(long n, long k);

std::vector<std::vector<Int>> stirling1_triangle(long n_max);
std::vector<std::vector<Int>> stirling2_triangle(long n_max);

// Classical Lah numbers n!/k! * C(n-1, k-1); 0 for k > n, 1 at (0,0).
Int lah_classic(long n, long k);

// Classical totals L(n) = sum_k lah_classic(n,k) through the three-term
// recurrence L(n+1) = (2n+1) L(n) - (n^2-n) L(n-1).
Int lah_classic_total(long n);

}  // namespace lahkit

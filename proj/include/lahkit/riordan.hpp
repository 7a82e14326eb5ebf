#pragma once

#include <vector>

#include "lahkit/sequences.hpp"
#include "lahkit/series.hpp"

namespace lahkit {

using Matrix = std::vector<std::vector<Int>>;  // lower triangular, row n holds n+1 entries

// An exponential Riordan pair <g, f>: g(0) != 0, f(0) = 0, f'(0) != 0, both
// truncated at the same order. Column k of the induced matrix has EGF
// g * f^k / k!.
struct ExpRiordan {
  Series g, f;
  ExpRiordan(Series g_, Series f_);
  long order() const { return g.order(); }
};

// d(n,k) = n!/k! [x^n] g f^k; every entry must come out integral.
Matrix riordan_to_matrix(const ExpRiordan& R);

// <g,f> * <h,l> = <g·(h∘f), l∘f>
ExpRiordan riordan_mul(const ExpRiordan& A, const ExpRiordan& B);

// <g,f>^(-1) = <1/(g∘fbar), fbar> with fbar the compositional inverse of f.
ExpRiordan riordan_inverse(const ExpRiordan& R);

// The sequence action: h |-> g·(h∘f).
Series riordan_apply(const ExpRiordan& R, const Series& h);

Matrix matrix_mul(const Matrix& A, const Matrix& B);
std::vector<Int> matrix_apply(const Matrix& A, const std::vector<Int>& v);

// Inverse of a unit-lower-triangular integer matrix by forward substitution.
Matrix matrix_inverse_unit_lower(const Matrix& M);

ExpRiordan pascal_riordan(long N);     // <e^x, x>
ExpRiordan stirling2_riordan(long N);  // <1, e^x - 1>
ExpRiordan stirling1_riordan(long N);  // <1, -log(1-x)>, unsigned entries

// The generalized Lah array as a Riordan pair <(H')^r, H>; needs 1 in S so
// that H'(0) != 0... and f'(0) != 0.
ExpRiordan lah_riordan(const SizeSet& S, long r, long N);

// The (N+1)x(N+1) matrix of sr_lah values. Works for any S; when 1 is in S it
// coincides with riordan_to_matrix(lah_riordan(...)).
Matrix lah_matrix(const SizeSet& S, long r, long N);

// Inverse of the Lah matrix, computed through the Riordan group and through
// triangular forward substitution; the two routes must agree. Refused (domain
// error) when 1 is not in S, where the diagonal is not units.
Matrix lah_inverse_matrix(const SizeSet& S, long r, long N);

// Coefficients c_0..c_n of sum_k sr_lah(n,k) x^k.
std::vector<Int> lah_polynomial(long n, const SizeSet& S, long r);

// The same polynomial out of the determinant of the bordered inverse-matrix:
// (-1)^n det of the (n+1)x(n+1) matrix whose first row is 1, x, ..., x^n and
// whose later rows are columns of the inverse array. Expanded along the first
// row; each cofactor is evaluated fraction-free.
std::vector<Int> determinantal_polynomial(long n, const SizeSet& S, long r);

Int integer_determinant(const Matrix& square);  // Bareiss, exact

// Orthogonality, route agreement, row sums and the determinantal identity.
IdentityReport verify_riordan_suite(const SizeSet& S, long r, long N);
// L then its inverse (and the reverse) applied to basis vectors and ones.
IdentityReport verify_inverse_relation(const SizeSet& S, long r, long N);

}  // namespace lahkit

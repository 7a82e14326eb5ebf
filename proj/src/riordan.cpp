#include "lahkit/riordan.hpp"

#include <stdexcept>
#include <string>

namespace lahkit {

ExpRiordan::ExpRiordan(Series g_, Series f_) : g(std::move(g_)), f(std::move(f_)) {
  if (g.order() != f.order())
    throw std::invalid_argument("riordan: g and f must share one truncation order");
  if (g[0] == 0) throw std::domain_error("riordan: g(0) = 0");
  if (f.order() < 1) throw std::domain_error("riordan: order 0 leaves f'(0) undetermined");
  if (f[0] != 0) throw std::domain_error("riordan: f must have f(0) = 0");
  if (f[1] == 0) throw std::domain_error("riordan: f'(0) = 0");
}

Matrix riordan_to_matrix(const ExpRiordan& R) {
  long N = R.order();
  Matrix m(N + 1);
  for (long n = 0; n <= N; ++n) m[n].assign(n + 1, 0);
  Series col = R.g;  // g f^k / k!
  for (long k = 0; k <= N; ++k) {
    if (k > 0) col = (col * R.f).scaled(Rat(1, k));
    for (long n = k; n <= N; ++n) {
      Rat v = Rat(factorial(n)) * col[n];
      if (denominator(v) != 1)
        throw std::domain_error("riordan: non-integer entry at n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
      m[n][k] = numerator(v);
    }
  }
  return m;
}

ExpRiordan riordan_mul(const ExpRiordan& A, const ExpRiordan& B) {
  return ExpRiordan(A.g * compose(B.g, A.f), compose(B.f, A.f));
}

ExpRiordan riordan_inverse(const ExpRiordan& R) {
  Series fbar = reversion(R.f);
  return ExpRiordan(reciprocal(compose(R.g, fbar)), fbar);
}

Series riordan_apply(const ExpRiordan& R, const Series& h) {
  return R.g * compose(h, R.f);
}

Matrix matrix_mul(const Matrix& A, const Matrix& B) {
  if (A.size() != B.size()) throw std::invalid_argument("matrix_mul: size mismatch");
  long N = static_cast<long>(A.size()) - 1;
  Matrix C(N + 1);
  for (long n = 0; n <= N; ++n) {
    C[n].assign(n + 1, 0);
    for (long k = 0; k <= n; ++k)
      for (long i = k; i <= n; ++i) C[n][k] += A[n][i] * B[i][k];
  }
  return C;
}

std::vector<Int> matrix_apply(const Matrix& A, const std::vector<Int>& v) {
  if (A.size() != v.size()) throw std::invalid_argument("matrix_apply: size mismatch");
  std::vector<Int> out(v.size(), 0);
  for (size_t n = 0; n < A.size(); ++n)
    for (size_t k = 0; k <= n; ++k) out[n] += A[n][k] * v[k];
  return out;
}

Matrix matrix_inverse_unit_lower(const Matrix& M) {
  long N = static_cast<long>(M.size()) - 1;
  for (long n = 0; n <= N; ++n)
    if (M[n][n] != 1)
      throw std::domain_error("matrix_inverse_unit_lower: diagonal entry != 1 at n=" +
                              std::to_string(n));
  Matrix X(N + 1);
  for (long n = 0; n <= N; ++n) X[n].assign(n + 1, 0);
  for (long k = 0; k <= N; ++k) {
    X[k][k] = 1;
    for (long n = k + 1; n <= N; ++n) {
      Int acc = 0;
      for (long i = k; i < n; ++i) acc += M[n][i] * X[i][k];
      X[n][k] = -acc;
    }
  }
  return X;
}

ExpRiordan pascal_riordan(long N) {
  Series ex(N);
  for (long i = 0; i <= N; ++i) ex.coeff(i) = Rat(1, factorial(i));
  return ExpRiordan(ex, Series::x(N));
}

ExpRiordan stirling2_riordan(long N) {
  Series f(N);
  for (long i = 1; i <= N; ++i) f.coeff(i) = Rat(1, factorial(i));
  return ExpRiordan(Series::one(N), f);
}

ExpRiordan stirling1_riordan(long N) {
  Series f(N);
  for (long i = 1; i <= N; ++i) f.coeff(i) = Rat(1, i);
  return ExpRiordan(Series::one(N), f);
}

ExpRiordan lah_riordan(const SizeSet& S, long r, long N) {
  if (!S.contains(1))
    throw std::domain_error("lah_riordan: needs 1 in S (otherwise f'(0) = 0)");
  return ExpRiordan(pow_int(Series::from_sizeset(S, SetWeight::DerivativePlain, N), r),
                    Series::from_sizeset(S, SetWeight::Plain, N));
}

Matrix lah_matrix(const SizeSet& S, long r, long N) {
  if (N >= 1 && S.contains(1)) return riordan_to_matrix(lah_riordan(S, r, N));
  Triangle t = lah_triangle(S, r, N);  // also covers N = 0, where no pair exists
  return t.rows;
}

Matrix lah_inverse_matrix(const SizeSet& S, long r, long N) {
  if (!S.contains(1))
    throw std::domain_error(
        "lah_inverse_matrix: needs 1 in S, otherwise f'(0) = 0 and the diagonal vanishes");
  if (N == 0) return {{Int(1)}};
  Matrix via_group = riordan_to_matrix(riordan_inverse(lah_riordan(S, r, N)));
  Matrix via_substitution = matrix_inverse_unit_lower(lah_matrix(S, r, N));
  if (via_group != via_substitution)
    throw std::logic_error("lah_inverse_matrix: Riordan-group and substitution routes disagree");
  return via_group;
}

std::vector<Int> lah_polynomial(long n, const SizeSet& S, long r) {
  Triangle t = lah_triangle(S, r, n);
  return t.rows[n];
}

Int integer_determinant(const Matrix& square) {
  long n = static_cast<long>(square.size());
  for (const auto& row : square)
    if (static_cast<long>(row.size()) != n)
      throw std::invalid_argument("integer_determinant: matrix is not square");
  if (n == 0) return 1;
  Matrix a = square;
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      long p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Int> determinantal_polynomial(long n, const SizeSet& S, long r) {
  Matrix inv = lah_inverse_matrix(S, r, n);
  // rows 1..n of the bordered matrix: row i, column j holds inv[j][i-1]
  Matrix bordered(n);
  for (long i = 1; i <= n; ++i) {
    bordered[i - 1].assign(n + 1, 0);
    for (long j = 0; j <= n; ++j) bordered[i - 1][j] = (i - 1 <= j) ? inv[j][i - 1] : Int(0);
  }
  std::vector<Int> coeffs(n + 1, 0);
  int row_sign = (n % 2 == 0) ? 1 : -1;  // the (-1)^n in front of the determinant
  for (long j = 0; j <= n; ++j) {
    Matrix minor(n);
    for (long i = 0; i < n; ++i) {
      minor[i].reserve(n);
      for (long c = 0; c <= n; ++c)
        if (c != j) minor[i].push_back(bordered[i][c]);
    }
    Int cof = integer_determinant(minor);
    coeffs[j] = Int(row_sign) * ((j % 2 == 0) ? cof : -cof);
  }
  return coeffs;
}

IdentityReport verify_riordan_suite(const SizeSet& S, long r, long N) {
  IdentityReport rep{"riordan", "set=" + S.description() + " r=" + std::to_string(r) +
                                    " N=" + std::to_string(N),
                     {}, true};
  Matrix L = lah_matrix(S, r, N);
  std::string base = "set=" + S.description() + " r=" + std::to_string(r);

  // row sums against the ordered totals
  for (long n = 0; n <= N; ++n) {
    Int sum = 0;
    for (long k = 0; k <= n; ++k) sum += L[n][k];
    rep.add("rowsum " + base + " n=" + std::to_string(n), sum, l_total(n, S, r));
  }

  if (S.contains(1)) {
    Matrix F = lah_inverse_matrix(S, r, N);  // internally checks both routes
    Matrix P = matrix_mul(L, F);
    for (long n = 0; n <= N; ++n)
      for (long k = 0; k <= n; ++k)
        rep.add("orthogonality " + base + " n=" + std::to_string(n) + " k=" + std::to_string(k),
                P[n][k], Int(n == k ? 1 : 0));

    long n_det = std::min<long>(N, 5);
    std::vector<Int> det = determinantal_polynomial(n_det, S, r);
    std::vector<Int> poly = lah_polynomial(n_det, S, r);
    for (long j = 0; j <= n_det; ++j)
      rep.add("determinantal " + base + " n=" + std::to_string(n_det) + " k=" + std::to_string(j),
              det[j], poly[j]);
  }
  return rep;
}

IdentityReport verify_inverse_relation(const SizeSet& S, long r, long N) {
  IdentityReport rep{"inverse-relation", "set=" + S.description() + " r=" + std::to_string(r) +
                                             " N=" + std::to_string(N),
                     {}, true};
  Matrix L = lah_matrix(S, r, N);
  Matrix F = lah_inverse_matrix(S, r, N);
  std::vector<std::vector<Int>> tests;
  for (long i = 0; i <= N; ++i) {
    std::vector<Int> e(N + 1, 0);
    e[i] = 1;
    tests.push_back(std::move(e));
  }
  tests.emplace_back(N + 1, Int(1));
  long idx = 0;
  for (const auto& v : tests) {
    std::vector<Int> fwd = matrix_apply(F, matrix_apply(L, v));
    std::vector<Int> bwd = matrix_apply(L, matrix_apply(F, v));
    for (long i = 0; i <= N; ++i) {
      rep.add("L-then-F vec" + std::to_string(idx) + " i=" + std::to_string(i), fwd[i], v[i]);
      rep.add("F-then-L vec" + std::to_string(idx) + " i=" + std::to_string(i), bwd[i], v[i]);
    }
    ++idx;
  }
  return rep;
}

}  // namespace lahkit

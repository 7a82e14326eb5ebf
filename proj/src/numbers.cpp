#include "lahkit/numbers.hpp"

namespace lahkit {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int num = 1;
  for (long i = 0; i < k; ++i) {
    num *= (n - i);
    num /= (i + 1);  // exact: prefix products are binomials
  }
  return num;
}

template <class T>
static T falling_impl(const T& x, long n) {
  if (n < 0) throw std::invalid_argument("falling: negative length");
  T p = 1;
  for (long i = 0; i < n; ++i) p *= (x - i);
  return p;
}

template <class T>
static T rising_impl(const T& x, long n) {
  if (n < 0) throw std::invalid_argument("rising: negative length");
  T p = 1;
  for (long i = 0; i < n; ++i) p *= (x + i);
  return p;
}

Int falling(const Int& x, long n) { return falling_impl(x, n); }
Rat falling(const Rat& x, long n) { return falling_impl(x, n); }
Int rising(const Int& x, long n) { return rising_impl(x, n); }
Rat rising(const Rat& x, long n) { return rising_impl(x, n); }

Int int_pow(const Int& base, long e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::vector<std::vector<Int>> stirling1_triangle(long n_max) {
  if (n_max < 0) throw std::invalid_argument("stirling1_triangle: negative n_max");
  std::vector<std::vector<Int>> t(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    t[n].assign(n + 1, 0);
    if (n == 0) {
      t[0][0] = 1;
      continue;
    }
    for (long k = 0; k <= n; ++k) {
      if (k > 0) t[n][k] += t[n - 1][k - 1];
      if (k <= n - 1) t[n][k] += (n - 1) * t[n - 1][k];
    }
  }
  return t;
}

std::vector<std::vector<Int>> stirling2_triangle(long n_max) {
  if (n_max < 0) throw std::invalid_argument("stirling2_triangle: negative n_max");
  std::vector<std::vector<Int>> t(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    t[n].assign(n + 1, 0);
    if (n == 0) {
      t[0][0] = 1;
      continue;
    }
    for (long k = 0; k <= n; ++k) {
      if (k > 0) t[n][k] += t[n - 1][k - 1];
      if (k <= n - 1) t[n][k] += k * t[n - 1][k];
    }
  }
  return t;
}

Int stirling1(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("stirling1: need 0 <= k <= n");
  return stirling1_triangle(n)[n][k];
}

Int stirling2(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("stirling2: need 0 <= k <= n");
  return stirling2_triangle(n)[n][k];
}

Int lah_classic(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("lah_classic: negative argument");
  if (k > n) return 0;
  if (n == 0) return 1;  // k == 0 here
  if (k == 0) return 0;
  return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

Int lah_classic_total(long n) {
  if (n < 0) throw std::invalid_argument("lah_classic_total: negative argument");
  Int prev = 1, cur = 1;  // L(0), L(1)
  if (n == 0) return prev;
  for (long m = 1; m < n; ++m) {
    Int next = (2 * m + 1) * cur - (m * m - m) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace lahkit

#include "lahkit/series.hpp"

#include <stdexcept>

namespace lahkit {

namespace {

void check_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
}

}  // namespace

Series::Series(long order) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  c_.assign(order + 1, Rat(0));
}

Series Series::one(long order) {
  Series s(order);
  s.c_[0] = 1;
  return s;
}

Series Series::x(long order) {
  Series s(order);
  if (order < 1) throw std::invalid_argument("series: x needs order >= 1");
  s.c_[1] = 1;
  return s;
}

Series Series::from_coeffs(std::vector<Rat> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("series: empty coefficient list");
  Series s(static_cast<long>(coeffs.size()) - 1);
  s.c_ = std::move(coeffs);
  return s;
}

Series Series::from_sizeset(const SizeSet& set, SetWeight w, long order) {
  Series s(order);
  switch (w) {
    case SetWeight::Plain:
      for (long m = 1; m <= order; ++m)
        if (set.contains(m)) s.c_[m] = 1;
      break;
    case SetWeight::Factorial:
      for (long m = 1; m <= order; ++m)
        if (set.contains(m)) s.c_[m] = Rat(1, factorial(m));
      break;
    case SetWeight::DerivativePlain:
      for (long m = 1; m <= order + 1; ++m)
        if (set.contains(m)) s.c_[m - 1] = m;
      break;
    case SetWeight::DerivativeFactorial:
      for (long m = 1; m <= order + 1; ++m)
        if (set.contains(m)) s.c_[m - 1] = Rat(1, factorial(m - 1));
      break;
  }
  return s;
}

Series Series::truncated(long new_order) const {
  if (new_order < 0 || new_order > order())
    throw std::invalid_argument("series: bad truncation order");
  Series s(new_order);
  for (long i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
  return s;
}

Series Series::operator-() const {
  Series s(order());
  for (long i = 0; i <= order(); ++i) s.c_[i] = -c_[i];
  return s;
}

Series operator+(const Series& a, const Series& b) {
  check_same_order(a, b, "series add");
  Series s(a.order());
  for (long i = 0; i <= a.order(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

Series operator-(const Series& a, const Series& b) {
  check_same_order(a, b, "series sub");
  Series s(a.order());
  for (long i = 0; i <= a.order(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
  return s;
}

Series operator*(const Series& a, const Series& b) {
  check_same_order(a, b, "series mul");
  long n = a.order();
  Series s(n);
  for (long i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; i + j <= n; ++j) {
      if (b.c_[j] == 0) continue;
      s.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return s;
}

Series Series::scaled(const Rat& c) const {
  Series s(order());
  for (long i = 0; i <= order(); ++i) s.c_[i] = c_[i] * c;
  return s;
}

Series pow_int(const Series& a, long m) {
  if (m < 0) throw std::invalid_argument("pow_int: negative exponent");
  Series r = Series::one(a.order());
  Series b = a;
  while (m > 0) {
    if (m & 1) r = r * b;
    if (m >>= 1) b = b * b;
  }
  return r;
}

Series reciprocal(const Series& a) {
  if (a[0] == 0) throw std::domain_error("reciprocal: zero constant term");
  long n = a.order();
  Series b(n);
  Rat inv0 = Rat(1) / a[0];
  b.coeff(0) = inv0;
  for (long m = 1; m <= n; ++m) {
    Rat acc = 0;
    for (long i = 1; i <= m; ++i) acc += a[i] * b[m - i];
    b.coeff(m) = -inv0 * acc;
  }
  return b;
}

Series exp_series(const Series& a) {
  if (a[0] != 0) throw std::domain_error("exp: nonzero constant term");
  long n = a.order();
  Series b(n);
  b.coeff(0) = 1;
  // from b' = a' b:  m*b[m] = sum_{i=1..m} i*a[i]*b[m-i]
  for (long m = 1; m <= n; ++m) {
    Rat acc = 0;
    for (long i = 1; i <= m; ++i) acc += Rat(i) * a[i] * b[m - i];
    b.coeff(m) = acc / m;
  }
  return b;
}

Series compose(const Series& outer, const Series& inner) {
  check_same_order(outer, inner, "compose");
  if (inner[0] != 0) throw std::domain_error("compose: inner series has nonzero constant term");
  long n = outer.order();
  Series r(n);
  r.coeff(0) = outer[n];
  for (long j = n - 1; j >= 0; --j) {
    r = r * inner;
    r.coeff(0) += outer[j];
  }
  return r;
}

Series derivative(const Series& a) {
  long n = a.order();
  if (n == 0) return Series(0);
  Series d(n - 1);
  for (long i = 1; i <= n; ++i) d.coeff(i - 1) = Rat(i) * a[i];
  return d;
}

namespace {

// derivative without dropping the truncation order (top coefficient unknown,
// set to zero); only safe inside reversion where the order-N term of f' never
// reaches the order-N coefficient of the result.
Series derivative_padded(const Series& a) {
  Series d(a.order());
  for (long i = 1; i <= a.order(); ++i) d.coeff(i - 1) = Rat(i) * a[i];
  return d;
}

}  // namespace

Series reversion(const Series& a) {
  if (a[0] != 0) throw std::domain_error("reversion: nonzero constant term");
  if (a.order() < 1 || a[1] == 0) throw std::domain_error("reversion: zero linear term");
  long n = a.order();
  Series x = Series::x(n);
  Series g = x.scaled(Rat(1) / a[1]);  // correct through order 1
  Series fp = derivative_padded(a);
  // Newton: g <- g - (a(g) - x) / a'(g); doubles the correct order each pass
  for (int pass = 0; pass < 64; ++pass) {
    Series err = compose(a, g) - x;
    bool zero = true;
    for (long i = 0; i <= n; ++i)
      if (err[i] != 0) {
        zero = false;
        break;
      }
    if (zero) return g;
    g = g - err * reciprocal(compose(fp, g));
  }
  throw std::logic_error("reversion: Newton iteration failed to converge");
}

Rat egf_coeff(const Series& a, long n) {
  if (n < 0 || n > a.order()) throw std::out_of_range("egf_coeff: index outside truncation");
  return Rat(factorial(n)) * a[n];
}

Int egf_coeff_int(const Series& a, long n) {
  Rat v = egf_coeff(a, n);
  if (denominator(v) != 1)
    throw std::domain_error("egf_coeff_int: coefficient is not an integer");
  return numerator(v);
}

}  // namespace lahkit

#pragma once

#include <vector>

#include "lahkit/numbers.hpp"
#include "lahkit/sizeset.hpp"

namespace lahkit {

// Weight applied to each member s of a size set when it becomes a term:
//   Plain                x^s
//   Factorial            x^s / s!
//   DerivativePlain      s * x^(s-1)
//   DerivativeFactorial  x^(s-1) / (s-1)!
enum class SetWeight { Plain, Factorial, DerivativePlain, DerivativeFactorial };

// A power series over exact rationals, truncated at a fixed order N
// (coefficients of x^0 .. x^N). Binary operations insist on equal orders;
// mixing truncation depths silently is where exactness claims die.
class Series {
 public:
  explicit Series(long order);
  static Series one(long order);
  static Series x(long order);
  static Series from_coeffs(std::vector<Rat> coeffs);
  static Series from_sizeset(const SizeSet& s, SetWeight w, long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Rat& operator[](long i) const { return c_[i]; }
  Rat& coeff(long i) { return c_[i]; }

  Series truncated(long new_order) const;  // new_order <= order()

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) = default;

  Series scaled(const Rat& c) const;

 private:
  std::vector<Rat> c_;
};

Series pow_int(const Series& a, long m);       // m >= 0
Series reciprocal(const Series& a);            // a[0] != 0
Series exp_series(const Series& a);            // a[0] == 0
Series compose(const Series& outer, const Series& inner);  // inner[0] == 0
Series derivative(const Series& a);            // order drops by one
Series reversion(const Series& a);             // a[0] == 0, a[1] != 0

Rat egf_coeff(const Series& a, long n);        // n! * a[n]
Int egf_coeff_int(const Series& a, long n);    // asserts the value is integral

}  // namespace lahkit

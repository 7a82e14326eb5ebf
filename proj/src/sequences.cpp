#include "lahkit/sequences.hpp"

#include <stdexcept>

namespace lahkit {

namespace {

void check_args(long n, long k, long r, const char* who) {
  if (n < 0 || k < 0 || r < 0)
    throw std::invalid_argument(std::string(who) + ": negative argument");
}

// Triangle of n!/k! [x^n] base^k * mark^r for 0 <= k <= n <= n_max,
// built column by column: g_0 = mark^r, g_{k+1} = g_k * base / (k+1).
Triangle egf_triangle(const Series& base, const Series& mark, long r, long n_max) {
  Triangle t;
  t.rows.assign(n_max + 1, {});
  for (long n = 0; n <= n_max; ++n) t.rows[n].assign(n + 1, 0);
  Series g = pow_int(mark, r);
  for (long k = 0; k <= n_max; ++k) {
    if (k > 0) g = (g * base).scaled(Rat(1, k));
    for (long n = k; n <= n_max; ++n) t.rows[n][k] = egf_coeff_int(g, n);
  }
  return t;
}

}  // namespace

Triangle lah_triangle(const SizeSet& S, long r, long n_max) {
  check_args(n_max, 0, r, "lah_triangle");
  return egf_triangle(Series::from_sizeset(S, SetWeight::Plain, n_max),
                      Series::from_sizeset(S, SetWeight::DerivativePlain, n_max), r, n_max);
}

Triangle stirling_triangle(const SizeSet& S, long r, long n_max) {
  check_args(n_max, 0, r, "stirling_triangle");
  return egf_triangle(Series::from_sizeset(S, SetWeight::Factorial, n_max),
                      Series::from_sizeset(S, SetWeight::DerivativeFactorial, n_max), r, n_max);
}

Int sr_lah(long n, long k, const SizeSet& S, long r) {
  check_args(n, k, r, "sr_lah");
  if (k > n) return 0;
  Series g = pow_int(Series::from_sizeset(S, SetWeight::Plain, n), k)
                 .scaled(Rat(1, factorial(k))) *
             pow_int(Series::from_sizeset(S, SetWeight::DerivativePlain, n), r);
  return egf_coeff_int(g, n);
}

Int sr_stirling(long n, long k, const SizeSet& S, long r) {
  check_args(n, k, r, "sr_stirling");
  if (k > n) return 0;
  Series g = pow_int(Series::from_sizeset(S, SetWeight::Factorial, n), k)
                 .scaled(Rat(1, factorial(k))) *
             pow_int(Series::from_sizeset(S, SetWeight::DerivativeFactorial, n), r);
  return egf_coeff_int(g, n);
}

Int s_lah(long n, long k, const SizeSet& S) { return sr_lah(n, k, S, 0); }

Int compositions_count(long n, long k, const SizeSet& S) {
  check_args(n, k, 0, "compositions_count");
  std::vector<long> members = S.members_upto(n);
  std::vector<std::vector<Int>> c(n + 1, std::vector<Int>(k + 1, 0));
  c[0][0] = 1;
  for (long m = 1; m <= n; ++m)
    for (long j = 1; j <= k; ++j)
      for (long s : members) {
        if (s > m) break;
        c[m][j] += c[m - s][j - 1];
      }
  return c[n][k];
}

std::vector<std::vector<long>> enumerate_compositions(long n, long k, const SizeSet& S) {
  check_args(n, k, 0, "enumerate_compositions");
  if (n > 64)
    throw std::domain_error("enumerate_compositions: n > 64 (use compositions_count)");
  std::vector<long> members = S.members_upto(n);
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long rem, long parts) -> void {
    if (parts == 0) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (long s : members) {
      if (s > rem - (parts - 1)) break;  // every later part is >= 1
      cur.push_back(s);
      self(self, rem - s, parts - 1);
      cur.pop_back();
    }
  };
  rec(rec, n, k);
  return out;
}

Int l_total(long n, const SizeSet& S, long r) {
  check_args(n, 0, r, "l_total");
  Triangle t = lah_triangle(S, r, n);
  Int sum = 0;
  for (long k = 0; k <= n; ++k) sum += t.rows[n][k];
  return sum;
}

namespace {

Int ordered_total(long n, const SizeSet& S, long r, bool factorial_weights, const char* who) {
  check_args(n, 0, r, who);
  SetWeight base_w = factorial_weights ? SetWeight::Factorial : SetWeight::Plain;
  SetWeight mark_w = factorial_weights ? SetWeight::DerivativeFactorial : SetWeight::DerivativePlain;

  Triangle t = egf_triangle(Series::from_sizeset(S, base_w, n),
                            Series::from_sizeset(S, mark_w, n), r, n);
  Int finite = 0;
  for (long k = 0; k <= n; ++k) finite += factorial(k + r) * t.rows[n][k];

  Series base = Series::from_sizeset(S, base_w, n);
  Series mark = Series::from_sizeset(S, mark_w, n);
  Series g = reciprocal(pow_int(Series::one(n) - base, r + 1)) * pow_int(mark, r);
  Int extracted = egf_coeff_int(g.scaled(Rat(factorial(r))), n);

  if (finite != extracted)
    throw std::logic_error(std::string(who) + ": finite sum and EGF extraction disagree (" +
                           finite.str() + " vs " + extracted.str() + ")");
  return finite;
}

}  // namespace

Int fubini(long n, const SizeSet& S, long r) {
  return ordered_total(n, S, r, true, "fubini");
}

Int doubly_ordered(long n, const SizeSet& S, long r) {
  return ordered_total(n, S, r, false, "doubly_ordered");
}

void IdentityReport::add(std::string params, Int lhs, Int rhs) {
  bool ok = lhs == rhs;
  if (!ok) pass = false;
  points.push_back({std::move(params), std::move(lhs), std::move(rhs), ok});
}

long IdentityReport::failures() const {
  long f = 0;
  for (const auto& p : points)
    if (!p.ok) ++f;
  return f;
}

}  // namespace lahkit

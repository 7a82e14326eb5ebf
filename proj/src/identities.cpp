#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lahkit/sequences.hpp"

namespace lahkit {

namespace {

std::string pt(const SizeSet& S, long r, long n, long k) {
  std::ostringstream o;
  o << "set=" << S.description() << " r=" << r << " n=" << n << " k=" << k;
  return o.str();
}

}  // namespace

IdentityReport verify_rec_thm21(const SizeSet& S, long n_max) {
  IdentityReport rep{"rec21", "1 <= k <= n <= " + std::to_string(n_max), {}, true};
  Triangle t = lah_triangle(S, 0, n_max);
  std::vector<long> members = S.members_upto(n_max);
  for (long n = 1; n <= n_max; ++n)
    for (long k = 1; k <= n; ++k) {
      Int rhs = 0;
      for (long s : members) {
        if (s > n) break;
        rhs += Int(s) * falling(Int(n - 1), s - 1) * t.at(n - s, k - 1);
      }
      rep.add(pt(S, 0, n, k), t.at(n, k), rhs);
    }
  return rep;
}

IdentityReport verify_rec_thm22(const SizeSet& S, long n_max) {
  IdentityReport rep{"rec22", "1 <= k <= n <= " + std::to_string(n_max), {}, true};
  Triangle t = lah_triangle(S, 0, n_max);
  DerivedSets d = S.derived_sets(n_max);
  for (long n = 1; n <= n_max; ++n)
    for (long k = 1; k <= n; ++k) {
      Int rhs = Int(n + k - 1) * t.at(n - 1, k);
      for (long s : d.least)
        rhs += binomial(n - 1, s - 1) * factorial(s) * t.at(n - s, k - 1);
      // subtract every insertion that overflows a run of S, i.e. all of
      // S-bar: restricting to greatest-not-least misses isolated runs
      // (S = odd fails already at n=2, k=1)
      for (long s : d.greatest)
        rhs -= binomial(n - 1, s) * factorial(s + 1) * t.at(n - s - 1, k - 1);
      rep.add(pt(S, 0, n, k), t.at(n, k), rhs);
    }
  return rep;
}

IdentityReport verify_thm31(const SizeSet& S, long r, long n_max) {
  if (r < 1) throw std::invalid_argument("verify_thm31: needs r >= 1");
  IdentityReport rep{"thm31", "0 <= k <= n <= " + std::to_string(n_max), {}, true};
  Triangle tr = lah_triangle(S, r, n_max);
  Triangle t0 = lah_triangle(S, 0, n_max);
  // weights[m] = sum over weak compositions (i_1..i_r) of m with i_j+1 in S
  // of prod (i_j + 1)
  std::vector<Int> weights(n_max + 1, 0), prev(n_max + 1, 0);
  prev[0] = 1;
  for (long j = 0; j < r; ++j) {
    std::vector<Int> next(n_max + 1, 0);
    for (long m = 0; m <= n_max; ++m) {
      if (prev[m] == 0) continue;
      for (long i = 0; m + i <= n_max; ++i)
        if (S.contains(i + 1)) next[m + i] += prev[m] * (i + 1);
    }
    prev = std::move(next);
  }
  weights = prev;
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Int rhs = 0;
      for (long m = 0; m <= n - k; ++m)
        rhs += binomial(n, m) * factorial(m) * weights[m] * t0.at(n - m, k);
      rep.add(pt(S, r, n, k), tr.at(n, k), rhs);
    }
  return rep;
}

IdentityReport verify_rec_thm32(const SizeSet& S, long r, long n_max) {
  if (r < 1) throw std::invalid_argument("verify_rec_thm32: needs r >= 1");
  IdentityReport rep{"rec32", "1 <= k <= n+1, n < " + std::to_string(n_max), {}, true};
  Triangle tr = lah_triangle(S, r, n_max);
  Triangle tp = lah_triangle(S, r + 1, n_max);
  Triangle tm = lah_triangle(S, r - 1, n_max);
  std::vector<long> members = S.members_upto(n_max + 2);
  for (long n = 0; n < n_max; ++n)
    for (long k = 1; k <= n + 1; ++k) {
      Int rhs = tp.at(n, k - 1);
      for (long s : members) {
        if (s > n + 2) break;
        rhs += Int(r) * factorial(s) * binomial(n, s - 2) * tm.at(n - s + 2, k);
      }
      rep.add(pt(S, r, n + 1, k), tr.at(n + 1, k), rhs);
    }
  return rep;
}

IdentityReport verify_thm33(const SizeSet& S, long r, long n_max) {
  IdentityReport rep{"thm33", "0 <= k <= n <= " + std::to_string(n_max), {}, true};
  Triangle tr = lah_triangle(S, r, n_max);
  Triangle tm = r > 0 ? lah_triangle(S, r - 1, n_max) : Triangle{};
  std::vector<long> members = S.members_upto(n_max + 1);
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Int rhs1 = 0, rhs2 = 0, rhs3 = 0;
      for (long s : members) {
        Int cut = factorial(s) * binomial(n, s);
        Int graft = r > 0 ? factorial(s) * binomial(n, s - 1) : Int(0);
        rhs1 += cut * tr.at(n - s, k - 1);
        if (r > 0) rhs2 += Int(r) * graft * tm.at(n - s + 1, k);
        rhs3 += Int(s) * cut * tr.at(n - s, k - 1);
        if (r > 0) rhs3 += Int(r) * Int(s) * graft * tm.at(n - s + 1, k);
      }
      rep.add("eq1 " + pt(S, r, n, k), Int(k) * tr.at(n, k), rhs1);
      rep.add("eq2 " + pt(S, r, n, k), Int(r) * tr.at(n, k), rhs2);
      rep.add("eq3 " + pt(S, r, n, k), Int(n + r) * tr.at(n, k), rhs3);
    }
  return rep;
}

IdentityReport verify_thm34(const SizeSet& S, long r, long u, long n_max) {
  if (!S.contains(u)) throw std::invalid_argument("verify_thm34: u is not a member of S");
  IdentityReport rep{"thm34", "0 <= k <= n <= " + std::to_string(n_max) + ", u=" + std::to_string(u),
                     {}, true};
  Triangle tr = lah_triangle(S, r, n_max);
  SizeSet Sp = S.without(u, n_max + 1);
  std::vector<Triangle> tp;
  for (long i = 0; i <= r; ++i) tp.push_back(lah_triangle(Sp, r - i, n_max));
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Int rhs = 0;
      for (long i = 0; i <= r; ++i)
        for (long j = 0; j <= k; ++j) {
          long m = n - (u - 1) * i - u * j;
          if (m < 0) continue;
          rhs += binomial(r, i) * binomial(n, j) * falling(Int(n - j), (u - 1) * (i + j)) *
                 int_pow(Int(u), i) * tp[i].at(m, k - j);
        }
      rep.add(pt(S, r, n, k) + " u=" + std::to_string(u), tr.at(n, k), rhs);
    }
  return rep;
}

IdentityReport verify_connection_rising_falling(long n_max) {
  IdentityReport rep{"eq11", "0 <= x <= n <= " + std::to_string(n_max), {}, true};
  for (long n = 0; n <= n_max; ++n)
    for (long x = 0; x <= n; ++x) {
      Int lhs = rising(Int(x), n);
      Int rhs = 0;
      for (long k = 0; k <= n; ++k) rhs += lah_classic(n, k) * falling(Int(x), k);
      rep.add("n=" + std::to_string(n) + " x=" + std::to_string(x), lhs, rhs);
    }
  return rep;
}

IdentityReport verify_connection_stirling(long n_max) {
  IdentityReport rep{"eq12", "0 <= k <= n <= " + std::to_string(n_max), {}, true};
  auto s1 = stirling1_triangle(n_max);
  auto s2 = stirling2_triangle(n_max);
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) {
      Int rhs = 0;
      for (long j = k; j <= n; ++j) rhs += s1[n][j] * s2[j][k];
      rep.add("n=" + std::to_string(n) + " k=" + std::to_string(k), lah_classic(n, k), rhs);
    }
  return rep;
}

IdentityReport verify_parity_relation(long n_max) {
  IdentityReport rep{"parity", "1 <= k <= n <= " + std::to_string(n_max), {}, true};
  Triangle odd = lah_triangle(SizeSet::parse("odd"), 0, 2 * n_max);
  Triangle even = lah_triangle(SizeSet::parse("even"), 0, 2 * n_max);
  for (long n = 1; n <= n_max; ++n)
    for (long k = 1; k <= n; ++k)
      rep.add("n=" + std::to_string(n) + " k=" + std::to_string(k),
              falling(Int(2 * n), k) * odd.at(2 * n - k, k), even.at(2 * n, k));
  return rep;
}

IdentityReport verify_potential_polynomials(const SizeSet& S, long r, long n_max, long t_max) {
  IdentityReport rep{"potential",
                     "0 <= n <= " + std::to_string(n_max) + ", 0 <= t <= " + std::to_string(t_max),
                     {}, true};
  Triangle lah = lah_triangle(S, r, n_max);
  Triangle sti = stirling_triangle(S, r, n_max);
  Series H = Series::from_sizeset(S, SetWeight::Plain, n_max);
  Series dH = Series::from_sizeset(S, SetWeight::DerivativePlain, n_max);
  Series E = Series::from_sizeset(S, SetWeight::Factorial, n_max);
  Series dE = Series::from_sizeset(S, SetWeight::DerivativeFactorial, n_max);
  Series one = Series::one(n_max);
  for (long t = 0; t <= t_max; ++t) {
    Series f = pow_int(one + H, t) * pow_int(dH, r);
    Series g = pow_int(one + E, t) * pow_int(dE, r);
    for (long n = 0; n <= n_max; ++n) {
      Int frhs = 0, grhs = 0;
      for (long k = 0; k <= n; ++k) {
        frhs += lah.at(n, k) * falling(Int(t), k);
        grhs += sti.at(n, k) * falling(Int(t), k);
      }
      std::string p = pt(S, r, n, -1) + " t=" + std::to_string(t);
      rep.add("f " + p, egf_coeff_int(f, n), frhs);
      rep.add("g " + p, egf_coeff_int(g, n), grhs);
    }
  }
  return rep;
}

namespace {

IdentityReport verify_rec_ordered(const SizeSet& S, long r_max, long n_max, bool fubini_kind) {
  const char* name = fubini_kind ? "fubini-rec" : "doubly-rec";
  IdentityReport rep{name, "1 <= n <= " + std::to_string(n_max) + ", r <= " + std::to_string(r_max),
                     {}, true};
  // values[r][n]
  std::vector<std::vector<Int>> v(r_max + 1);
  for (long r = 0; r <= r_max; ++r)
    for (long n = 0; n <= n_max; ++n)
      v[r].push_back(fubini_kind ? fubini(n, S, r) : doubly_ordered(n, S, r));
  std::vector<long> members = S.members_upto(n_max + 1);
  for (long r = 0; r <= r_max; ++r)
    for (long n = 1; n <= n_max; ++n) {
      Int rhs = 0;
      for (long s : members) {
        if (s <= n)
          rhs += (fubini_kind ? binomial(n, s) : falling(Int(n), s)) * v[r][n - s];
        if (r > 0 && s <= n + 1)
          rhs += Int(r) *
                 (fubini_kind ? binomial(n, s - 1) : Int(s) * falling(Int(n), s - 1)) *
                 v[r - 1][n - s + 1];
      }
      rep.add(pt(S, r, n, -1), v[r][n], rhs);
    }
  return rep;
}

SeriesCheck series_identity(long n, const SizeSet& S, long r, const Rat& tolerance, long l_max,
                            bool fubini_kind) {
  if (tolerance <= 0) throw std::invalid_argument("series identity: tolerance must be positive");
  SeriesCheck out;
  out.params = (fubini_kind ? std::string("fubini") : std::string("doubly")) + " set=" +
               S.description() + " r=" + std::to_string(r) + " n=" + std::to_string(n);
  out.exact = fubini_kind ? fubini(n, S, r) : doubly_ordered(n, S, r);
  Triangle t = fubini_kind ? stirling_triangle(S, r, n) : lah_triangle(S, r, n);

  Rat sum = 0, prev_term = -1;
  Rat half = Rat(1, 2);
  Rat weight = int_pow(Int(2), r + 1);  // 2^(r+1)
  long l = 0;
  for (; l <= l_max; ++l) {
    Rat row = 0;
    for (long k = 0; k <= n; ++k) row += Rat(t.at(n, k) * falling(Int(l), k));
    Rat term = Rat(binomial(r + l, l)) / Rat(int_pow(Int(2), l)) * row;
    sum += term;
    // The tail of the series is comparable to its last term, so stop well
    // under the requested tolerance; never before l = n+1, where (l)_k first
    // covers the whole row.
    if (l > n && term <= prev_term && term * 16 <= tolerance * sum) {
      ++l;
      break;
    }
    prev_term = term;
  }
  out.terms = l;
  out.partial = Rat(factorial(r)) / weight * sum;
  Rat diff = out.partial - Rat(out.exact);
  if (diff < 0) diff = -diff;
  Rat bound = tolerance * Rat(out.exact < 0 ? -out.exact : out.exact);
  out.pass = diff <= bound;
  return out;
}

}  // namespace

IdentityReport verify_rec_fubini(const SizeSet& S, long r_max, long n_max) {
  return verify_rec_ordered(S, r_max, n_max, true);
}

IdentityReport verify_rec_doubly(const SizeSet& S, long r_max, long n_max) {
  return verify_rec_ordered(S, r_max, n_max, false);
}

SeriesCheck series_identity_fubini(long n, const SizeSet& S, long r, const Rat& tolerance,
                                   long l_max) {
  return series_identity(n, S, r, tolerance, l_max, true);
}

SeriesCheck series_identity_doubly(long n, const SizeSet& S, long r, const Rat& tolerance,
                                   long l_max) {
  return series_identity(n, S, r, tolerance, l_max, false);
}

AsymptoticCheck asymptotic_check(long n_small, long n_large) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  auto ratio = [](long n) {
    Int ln = lah_classic_total(n);
    Big actual = Big(ln) / Big(factorial(n));
    double nn = static_cast<double>(n);
    double approx =
        std::exp(-0.5) * std::exp(2.0 * std::sqrt(nn)) / (2.0 * std::sqrt(M_PI) * std::pow(nn, 0.75));
    return approx / actual.convert_to<double>();
  };
  AsymptoticCheck c;
  c.ratio_small = ratio(n_small);
  c.ratio_large = ratio(n_large);
  c.pass = std::abs(c.ratio_large - 1.0) < std::abs(c.ratio_small - 1.0) &&
           std::abs(c.ratio_large - 1.0) < 0.25;
  return c;
}

}  // namespace lahkit

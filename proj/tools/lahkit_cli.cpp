#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "lahkit/numbers.hpp"
#include "lahkit/oracle.hpp"
#include "lahkit/poset.hpp"
#include "lahkit/riordan.hpp"
#include "lahkit/sequences.hpp"
#include "lahkit/sizeset.hpp"

namespace {

using lahkit::Int;
using lahkit::Rat;
using ojson = nlohmann::ordered_json;

const std::vector<std::string> kFamily = {"all",  "odd", "even",  "1,2,5",
                                          ">=2",  "<=4", "not 3", "mod 1 3"};

// JSON numbers stay native up to 2^53-1 and become decimal strings beyond,
// so any JSON reader keeps the exact value.
ojson json_int(const Int& v) {
  static const Int kMaxSafe = (Int(1) << 53) - 1;
  if (v >= -kMaxSafe && v <= kMaxSafe) return v.convert_to<long long>();
  return v.str();
}

ojson json_row(const std::vector<Int>& row) {
  ojson a = ojson::array();
  for (const auto& v : row) a.push_back(json_int(v));
  return a;
}

std::string rat_str(const Rat& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Accepts "1/1000000000", "0.000000001" and "1e-9"; always exact.
Rat parse_tolerance(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("tolerance: empty value");
  if (text.find('/') != std::string::npos) {
    Rat q{text};
    if (q <= 0) throw std::invalid_argument("tolerance: must be positive");
    return q;
  }
  std::string t = text;
  long exp10 = 0;
  if (auto epos = t.find_first_of("eE"); epos != std::string::npos) {
    exp10 = std::stol(t.substr(epos + 1));
    t = t.substr(0, epos);
  }
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  long scale = 0;
  if (auto dot = t.find('.'); dot != std::string::npos) {
    scale = static_cast<long>(t.size() - dot - 1);
    t = t.substr(0, dot) + t.substr(dot + 1);
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("tolerance: cannot parse '" + text + "'");
  Rat q{Int(t)};
  Int p10 = 1;
  for (long i = 0, e = exp10 - scale < 0 ? scale - exp10 : exp10 - scale; i < e; ++i) p10 *= 10;
  if (exp10 - scale >= 0)
    q *= Rat{p10};
  else
    q /= Rat{p10};
  if (neg || q <= 0) throw std::invalid_argument("tolerance: must be positive");
  return q;
}

// ---------------------------------------------------------------- seq ------

struct SeqArgs {
  std::string kind, set = "all", format = "plain";
  long r = 0, n = 8, k = -1, k_max = -1;
};

int run_seq(const SeqArgs& a) {
  lahkit::SizeSet S = lahkit::SizeSet::parse(a.set);
  if (a.r < 0 || a.n < 0) throw std::invalid_argument("seq: --r and --n must be nonnegative");
  bool triangle = a.kind == "lah" || a.kind == "stirling";
  if (!triangle && (a.k >= 0 || a.k_max >= 0))
    throw std::invalid_argument("seq: --k/--k-max apply only to lah and stirling");
  if (a.k >= 0 && a.k_max >= 0)
    throw std::invalid_argument("seq: --k and --k-max are mutually exclusive");

  if (triangle && a.k >= 0) {
    Int v = a.kind == "lah" ? lahkit::sr_lah(a.n, a.k, S, a.r)
                            : lahkit::sr_stirling(a.n, a.k, S, a.r);
    if (a.format == "json") {
      ojson doc{{"command", "seq"}, {"kind", a.kind},   {"set", a.set}, {"r", a.r},
                {"n", a.n},         {"k", a.k},         {"value", json_int(v)}};
      std::cout << doc.dump(2) << "\n";
    } else if (a.format == "csv") {
      std::cout << "n,k,value\n" << a.n << "," << a.k << "," << v << "\n";
    } else {
      std::cout << v << "\n";
    }
    return 0;
  }

  if (triangle) {
    lahkit::Triangle t = a.kind == "lah" ? lahkit::lah_triangle(S, a.r, a.n)
                                         : lahkit::stirling_triangle(S, a.r, a.n);
    std::vector<std::vector<Int>> rows = t.rows;
    if (a.k_max >= 0)
      for (auto& row : rows)
        if (static_cast<long>(row.size()) > a.k_max + 1) row.resize(a.k_max + 1);
    if (a.format == "json") {
      ojson doc{{"command", "seq"}, {"kind", a.kind}, {"set", a.set}, {"r", a.r}, {"n_max", a.n}};
      ojson jr = ojson::array();
      for (const auto& row : rows) jr.push_back(json_row(row));
      doc["rows"] = jr;
      std::cout << doc.dump(2) << "\n";
    } else if (a.format == "csv") {
      std::cout << "n,k,value\n";
      for (size_t n = 0; n < rows.size(); ++n)
        for (size_t k = 0; k < rows[n].size(); ++k)
          std::cout << n << "," << k << "," << rows[n][k] << "\n";
    } else {
      for (const auto& row : rows) {
        for (size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k];
        std::cout << "\n";
      }
    }
    return 0;
  }

  std::vector<Int> values;
  for (long n = 0; n <= a.n; ++n) {
    if (a.kind == "total")
      values.push_back(lahkit::l_total(n, S, a.r));
    else if (a.kind == "fubini")
      values.push_back(lahkit::fubini(n, S, a.r));
    else
      values.push_back(lahkit::doubly_ordered(n, S, a.r));
  }
  if (a.format == "json") {
    ojson doc{{"command", "seq"}, {"kind", a.kind}, {"set", a.set}, {"r", a.r}, {"n_max", a.n}};
    doc["values"] = json_row(values);
    std::cout << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "n,value\n";
    for (size_t n = 0; n < values.size(); ++n) std::cout << n << "," << values[n] << "\n";
  } else {
    for (size_t n = 0; n < values.size(); ++n) std::cout << (n ? ", " : "") << values[n];
    std::cout << "\n";
  }
  return 0;
}

// ------------------------------------------------- matrix / inverse / poly -

struct MatArgs {
  std::string set = "all", format = "plain";
  long r = 0, N = 8;
};

int emit_matrix(const lahkit::Matrix& M, const char* command, const MatArgs& a) {
  if (a.format == "json") {
    ojson doc{{"command", command}, {"set", a.set}, {"r", a.r}, {"N", a.N}};
    ojson jr = ojson::array();
    for (const auto& row : M) jr.push_back(json_row(row));
    doc["rows"] = jr;
    std::cout << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "n,k,value\n";
    for (size_t n = 0; n < M.size(); ++n)
      for (size_t k = 0; k < M[n].size(); ++k) std::cout << n << "," << k << "," << M[n][k] << "\n";
  } else {
    for (const auto& row : M) {
      for (size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k];
      std::cout << "\n";
    }
  }
  return 0;
}

int run_matrix(const MatArgs& a, bool inverse) {
  lahkit::SizeSet S = lahkit::SizeSet::parse(a.set);
  if (a.r < 0 || a.N < 0) throw std::invalid_argument("matrix: --r and --N must be nonnegative");
  lahkit::Matrix M =
      inverse ? lahkit::lah_inverse_matrix(S, a.r, a.N) : lahkit::lah_matrix(S, a.r, a.N);
  return emit_matrix(M, inverse ? "inverse" : "matrix", a);
}

struct PolyArgs {
  std::string set = "all", format = "plain";
  long r = 0, n = 8;
};

int run_poly(const PolyArgs& a) {
  lahkit::SizeSet S = lahkit::SizeSet::parse(a.set);
  if (a.r < 0 || a.n < 0) throw std::invalid_argument("poly: --r and --n must be nonnegative");
  std::vector<Int> c = lahkit::lah_polynomial(a.n, S, a.r);
  if (a.format == "json") {
    ojson doc{{"command", "poly"}, {"set", a.set}, {"r", a.r}, {"n", a.n}};
    doc["coefficients"] = json_row(c);
    std::cout << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "k,coefficient\n";
    for (size_t k = 0; k < c.size(); ++k) std::cout << k << "," << c[k] << "\n";
  } else {
    std::cout << "[";
    for (size_t k = 0; k < c.size(); ++k) std::cout << (k ? ", " : "") << c[k];
    std::cout << "]\n";
  }
  return 0;
}

// -------------------------------------------------------------- verify -----

struct VerifyOutcome {
  std::string suite, set, range, extra;
  long r = -1;  // -1: the suite does not depend on r
  bool series_kind = false;
  lahkit::IdentityReport rep;
  std::vector<lahkit::SeriesCheck> series;

  long points() const {
    return series_kind ? static_cast<long>(series.size()) : static_cast<long>(rep.points.size());
  }
  long failures() const {
    if (!series_kind) return rep.failures();
    long f = 0;
    for (const auto& c : series)
      if (!c.pass) ++f;
    return f;
  }
  bool pass() const { return failures() == 0; }
};

VerifyOutcome identity_outcome(std::string suite, std::string set, long r,
                               lahkit::IdentityReport rep, std::string extra = "") {
  VerifyOutcome o;
  o.suite = std::move(suite);
  o.set = std::move(set);
  o.r = r;
  o.range = rep.range;
  o.extra = std::move(extra);
  o.rep = std::move(rep);
  return o;
}

lahkit::IdentityReport merge_reports(lahkit::IdentityReport a, const lahkit::IdentityReport& b) {
  for (const auto& p : b.points) a.points.push_back(p);
  a.pass = a.pass && b.pass;
  return a;
}

std::vector<VerifyOutcome> run_one_suite(const std::string& suite, const std::string& set_text,
                                         long r, long n, long t_max, long u, const Rat& tol) {
  using namespace lahkit;
  std::vector<VerifyOutcome> out;
  if (suite == "eq11") {
    out.push_back(identity_outcome("eq11", "", -1, verify_connection_rising_falling(n)));
    return out;
  }
  if (suite == "eq12") {
    out.push_back(identity_outcome("eq12", "", -1, verify_connection_stirling(n)));
    return out;
  }
  if (suite == "parity") {
    out.push_back(identity_outcome("parity", "", -1, verify_parity_relation(n)));
    return out;
  }

  SizeSet S = SizeSet::parse(set_text);
  if (suite == "rec21") {
    out.push_back(identity_outcome("rec21", set_text, -1, verify_rec_thm21(S, n)));
  } else if (suite == "rec22") {
    out.push_back(identity_outcome("rec22", set_text, -1, verify_rec_thm22(S, n)));
  } else if (suite == "thm31") {
    out.push_back(identity_outcome("thm31", set_text, r, verify_thm31(S, r, n)));
  } else if (suite == "rec32") {
    out.push_back(identity_outcome("rec32", set_text, r, verify_rec_thm32(S, r, n)));
  } else if (suite == "thm33") {
    out.push_back(identity_outcome("thm33", set_text, r, verify_thm33(S, r, n)));
  } else if (suite == "thm34") {
    out.push_back(identity_outcome("thm34", set_text, r, verify_thm34(S, r, u, n),
                                   "u=" + std::to_string(u)));
  } else if (suite == "potential") {
    out.push_back(identity_outcome("potential", set_text, r,
                                   verify_potential_polynomials(S, r, n, t_max)));
  } else if (suite == "fubini-rec") {
    out.push_back(identity_outcome("fubini-rec", set_text, r, verify_rec_fubini(S, r, n)));
  } else if (suite == "doubly-rec") {
    out.push_back(identity_outcome("doubly-rec", set_text, r, verify_rec_doubly(S, r, n)));
  } else if (suite == "fubini-series" || suite == "doubly-series") {
    VerifyOutcome o;
    o.suite = suite;
    o.set = set_text;
    o.r = r;
    o.series_kind = true;
    o.range = "0 <= n <= " + std::to_string(n);
    for (long i = 0; i <= n; ++i)
      o.series.push_back(suite == "fubini-series" ? series_identity_fubini(i, S, r, tol)
                                                  : series_identity_doubly(i, S, r, tol));
    out.push_back(std::move(o));
  } else if (suite == "riordan") {
    IdentityReport rep = verify_riordan_suite(S, r, n);
    if (S.contains(1)) rep = merge_reports(std::move(rep), verify_inverse_relation(S, r, n));
    out.push_back(identity_outcome("riordan", set_text, r, std::move(rep)));
  } else if (suite == "poset") {
    out.push_back(identity_outcome("poset", set_text, r, verify_poset(S, r, n)));
  } else {
    throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  }
  return out;
}

std::vector<VerifyOutcome> run_all_suites(long n, long t_max, const Rat& tol) {
  std::vector<VerifyOutcome> v;
  auto add = [&](std::vector<VerifyOutcome> more) {
    for (auto& o : more) v.push_back(std::move(o));
  };
  for (const auto& s : kFamily) add(run_one_suite("rec21", s, 0, n, t_max, 1, tol));
  for (const auto& s : kFamily) add(run_one_suite("rec22", s, 0, n, t_max, 1, tol));
  for (const auto& s : kFamily)
    for (long r : {1, 2}) add(run_one_suite("thm31", s, r, n, t_max, 1, tol));
  for (const auto& s : kFamily)
    for (long r : {1, 2}) add(run_one_suite("rec32", s, r, n, t_max, 1, tol));
  for (const auto& s : kFamily)
    for (long r : {0, 1, 2}) add(run_one_suite("thm33", s, r, n, t_max, 1, tol));
  for (const auto& s : kFamily) {
    lahkit::SizeSet S = lahkit::SizeSet::parse(s);
    for (long r : {0, 1, 2})
      for (long u : {1, 2})
        if (S.contains(u)) add(run_one_suite("thm34", s, r, n, t_max, u, tol));
  }
  add(run_one_suite("eq11", "", 0, n, t_max, 1, tol));
  add(run_one_suite("eq12", "", 0, n, t_max, 1, tol));
  add(run_one_suite("parity", "", 0, n, t_max, 1, tol));
  for (const auto& s : kFamily)
    for (long r : {0, 1, 2}) add(run_one_suite("potential", s, r, n, t_max, 1, tol));
  for (const auto& s : kFamily) add(run_one_suite("fubini-rec", s, 2, n, t_max, 1, tol));
  for (const std::string s : {"all", "odd"})
    for (long r : {0, 1, 2})
      add(run_one_suite("fubini-series", s, r, std::min(n, 6L), t_max, 1, tol));
  for (const auto& s : kFamily) add(run_one_suite("doubly-rec", s, 2, n, t_max, 1, tol));
  for (const std::string s : {"all", "odd"})
    for (long r : {0, 1, 2})
      add(run_one_suite("doubly-series", s, r, std::min(n, 6L), t_max, 1, tol));
  for (const auto& s : kFamily)
    for (long r : {0, 1, 2}) add(run_one_suite("riordan", s, r, n, t_max, 1, tol));
  for (const auto& s : kFamily) {
    lahkit::SizeSet S = lahkit::SizeSet::parse(s);
    if (!S.is_plus_one_monoid(std::min(n, 3L) + 1)) continue;
    for (long r : {0, 1, 2}) add(run_one_suite("poset", s, r, std::min(n, 3L), t_max, 1, tol));
  }
  return v;
}

void emit_verify(const std::vector<VerifyOutcome>& outs, const std::string& requested,
                 const std::string& format) {
  long total_points = 0, total_failures = 0, failed_suites = 0;
  for (const auto& o : outs) {
    total_points += o.points();
    total_failures += o.failures();
    if (!o.pass()) ++failed_suites;
  }
  bool pass = total_failures == 0;

  if (format == "json") {
    ojson doc{{"command", "verify"}, {"suite", requested}, {"pass", pass}};
    ojson suites = ojson::array();
    for (const auto& o : outs) {
      ojson jo{{"suite", o.suite}};
      if (!o.set.empty()) jo["set"] = o.set;
      if (o.r >= 0) jo["r"] = o.r;
      if (!o.extra.empty()) jo["params"] = o.extra;
      jo["range"] = o.range;
      jo["points"] = o.points();
      jo["failures"] = o.failures();
      jo["pass"] = o.pass();
      if (o.series_kind) {
        ojson checks = ojson::array();
        for (const auto& c : o.series)
          checks.push_back(ojson{{"params", c.params},
                                 {"partial", rat_str(c.partial)},
                                 {"exact", json_int(c.exact)},
                                 {"terms", c.terms},
                                 {"pass", c.pass}});
        jo["checks"] = checks;
      } else if (o.failures() > 0) {
        ojson failing = ojson::array();
        for (const auto& p : o.rep.points)
          if (!p.ok)
            failing.push_back(
                ojson{{"params", p.params}, {"lhs", json_int(p.lhs)}, {"rhs", json_int(p.rhs)}});
        jo["failing"] = failing;
      }
      suites.push_back(std::move(jo));
    }
    doc["suites"] = std::move(suites);
    doc["points"] = total_points;
    doc["failures"] = total_failures;
    std::cout << doc.dump(2) << "\n";
    return;
  }

  if (format == "csv") {
    std::cout << "suite,set,r,params,lhs,rhs,ok\n";
    for (const auto& o : outs) {
      std::string prefix = o.suite + "," + csv_field(o.set) + "," +
                           (o.r >= 0 ? std::to_string(o.r) : "") + ",";
      if (o.series_kind) {
        for (const auto& c : o.series)
          std::cout << prefix << csv_field(c.params) << "," << rat_str(c.partial) << "," << c.exact
                    << "," << (c.pass ? "true" : "false") << "\n";
      } else {
        for (const auto& p : o.rep.points)
          std::cout << prefix << csv_field(p.params) << "," << p.lhs << "," << p.rhs << ","
                    << (p.ok ? "true" : "false") << "\n";
      }
    }
    return;
  }

  for (const auto& o : outs) {
    std::cout << o.suite;
    if (!o.set.empty()) std::cout << " set=" << o.set;
    if (o.r >= 0) std::cout << " r=" << o.r;
    if (!o.extra.empty()) std::cout << " " << o.extra;
    std::cout << " [" << o.range << "]: ";
    if (o.pass()) {
      std::cout << "pass (" << o.points() << " points)\n";
    } else {
      std::cout << "FAIL (" << o.failures() << " of " << o.points() << " points)\n";
      if (o.series_kind) {
        for (const auto& c : o.series)
          if (!c.pass)
            std::cout << "  " << c.params << ": partial=" << rat_str(c.partial)
                      << " exact=" << c.exact << " terms=" << c.terms << "\n";
      } else {
        for (const auto& p : o.rep.points)
          if (!p.ok) std::cout << "  " << p.params << ": lhs=" << p.lhs << " rhs=" << p.rhs << "\n";
      }
    }
  }
  if (pass)
    std::cout << "verify: PASS (" << outs.size() << " suites, " << total_points << " points)\n";
  else
    std::cout << "verify: FAIL (" << failed_suites << " of " << outs.size() << " suites, "
              << total_failures << " of " << total_points << " points)\n";
}

struct VerifyArgs {
  std::string suite, set = "all", format = "plain", tolerance = "1e-9";
  long r = 0, n = 8, t_max = 6, u = 1;
};

int run_verify(const VerifyArgs& a) {
  if (a.n < 0 || a.t_max < 0) throw std::invalid_argument("verify: bounds must be nonnegative");
  Rat tol = parse_tolerance(a.tolerance);
  std::vector<VerifyOutcome> outs =
      a.suite == "all" ? run_all_suites(a.n, a.t_max, tol)
                       : run_one_suite(a.suite, a.set, a.r, a.n, a.t_max, a.u, tol);
  emit_verify(outs, a.suite, a.format);
  for (const auto& o : outs)
    if (!o.pass()) return 1;
  return 0;
}

// --------------------------------------------------------------- oracle ----

struct OracleArgs {
  std::string kind, set = "all", format = "plain";
  long r = 0, n = 0, k = -1;
};

int run_oracle(const OracleArgs& a) {
  lahkit::SizeSet S = lahkit::SizeSet::parse(a.set);
  if (a.r < 0 || a.n < 0) throw std::invalid_argument("oracle: --r and --n must be nonnegative");
  bool per_k = a.kind == "lists" || a.kind == "sets";
  if (per_k && a.k < 0) throw std::invalid_argument("oracle: " + a.kind + " needs --k");
  if (!per_k && a.k >= 0)
    throw std::invalid_argument("oracle: --k applies only to lists and sets");

  Int brute, formula;
  if (a.kind == "lists") {
    brute = lahkit::oracle::count_list_partitions(a.n, a.k, S, a.r);
    formula = lahkit::sr_lah(a.n, a.k, S, a.r);
  } else if (a.kind == "sets") {
    brute = lahkit::oracle::count_set_partitions(a.n, a.k, S, a.r);
    formula = lahkit::sr_stirling(a.n, a.k, S, a.r);
  } else if (a.kind == "ordered") {
    brute = lahkit::oracle::count_ordered_set_partitions(a.n, S, a.r);
    formula = lahkit::fubini(a.n, S, a.r);
  } else {
    brute = lahkit::oracle::count_list_sequences(a.n, S, a.r);
    formula = lahkit::doubly_ordered(a.n, S, a.r);
  }
  bool agree = brute == formula;

  if (a.format == "json") {
    ojson doc{{"command", "oracle"}, {"kind", a.kind}, {"set", a.set}, {"r", a.r}, {"n", a.n}};
    if (per_k) doc["k"] = a.k;
    doc["oracle"] = json_int(brute);
    doc["formula"] = json_int(formula);
    doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "oracle,formula,agree\n"
              << brute << "," << formula << "," << (agree ? "true" : "false") << "\n";
  } else {
    if (agree)
      std::cout << brute << ", agrees\n";
    else
      std::cout << brute << ", DISAGREES (formula gives " << formula << ")\n";
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------- poset ----

struct PosetArgs {
  std::string set = "odd", format = "json";
  long r = 0, n = 3;
};

int run_poset_dump(const PosetArgs& a) {
  lahkit::SizeSet S = lahkit::SizeSet::parse(a.set);
  if (a.r < 0 || a.n < 1) throw std::invalid_argument("poset: needs --n >= 1 and --r >= 0");
  lahkit::Poset P = lahkit::build_poset(a.n, S, a.r);
  std::vector<std::pair<long, long>> covers = P.cover_edges();

  if (a.format == "csv") {
    std::cout << "index,repr,level,mobius\n";
    for (size_t i = 0; i < P.elements.size(); ++i)
      std::cout << i << "," << csv_field(P.elements[i].repr()) << "," << P.elements[i].level()
                << "," << P.mobius[i] << "\n";
    return 0;
  }
  if (a.format == "plain") {
    std::cout << "poset set=" << a.set << " r=" << a.r << " n=" << a.n << ": "
              << P.elements.size() << " elements, " << covers.size() << " covers\n";
    for (size_t i = 0; i < P.elements.size(); ++i)
      std::cout << i << ": " << P.elements[i].repr() << " level=" << P.elements[i].level()
                << " mu=" << P.mobius[i] << "\n";
    for (const auto& [lo, hi] : covers) std::cout << lo << " < " << hi << "\n";
    return 0;
  }

  ojson doc{{"command", "poset"}, {"set", a.set}, {"r", a.r}, {"n", a.n}};
  ojson elems = ojson::array();
  for (size_t i = 0; i < P.elements.size(); ++i)
    elems.push_back(ojson{{"index", i},
                          {"repr", P.elements[i].repr()},
                          {"level", P.elements[i].level()},
                          {"mobius", json_int(P.mobius[i])}});
  doc["elements"] = std::move(elems);
  ojson jcov = ojson::array();
  for (const auto& [lo, hi] : covers) jcov.push_back(ojson::array({lo, hi}));
  doc["covers"] = std::move(jcov);
  doc["level_counts"] = json_row(P.level_counts());
  doc["mobius_cardinals"] = json_row(P.mobius_cardinals());
  std::cout << doc.dump(2) << "\n";
  return 0;
}

const std::vector<std::string> kFormats = {"plain", "json", "csv"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lahkit: partitions of [n+r] into ordered lists with restricted sizes"};
  app.require_subcommand(1);

  SeqArgs sq;
  auto* seq = app.add_subcommand("seq", "Triangles, totals and ordered counts");
  seq->add_option("kind", sq.kind, "lah|stirling|fubini|doubly|total")
      ->required()
      ->check(CLI::IsMember({"lah", "stirling", "fubini", "doubly", "total"}));
  seq->add_option("--set", sq.set, "size set (all|odd|even|\"1,2,5\"|>=m|<=m|\"not p\"|\"mod a b\")");
  seq->add_option("--r", sq.r, "number of special elements");
  seq->add_option("--n,--n-max", sq.n, "row bound");
  seq->add_option("--k", sq.k, "single entry instead of the whole triangle");
  seq->add_option("--k-max", sq.k_max, "column bound");
  seq->add_option("--format", sq.format)->check(CLI::IsMember(kFormats));

  MatArgs mx;
  auto* matrix = app.add_subcommand("matrix", "The Lah matrix as a lower-triangular array");
  matrix->add_option("--set", mx.set);
  matrix->add_option("--r", mx.r);
  matrix->add_option("--N,--n", mx.N, "matrix size bound (rows 0..N)");
  matrix->add_option("--format", mx.format)->check(CLI::IsMember(kFormats));

  MatArgs iv;
  auto* inverse = app.add_subcommand("inverse", "Inverse of the Lah matrix (needs 1 in S)");
  inverse->add_option("--set", iv.set);
  inverse->add_option("--r", iv.r);
  inverse->add_option("--N,--n", iv.N);
  inverse->add_option("--format", iv.format)->check(CLI::IsMember(kFormats));

  PolyArgs pl;
  auto* poly = app.add_subcommand("poly", "Lah polynomial coefficients");
  poly->add_option("--set", pl.set);
  poly->add_option("--r", pl.r);
  poly->add_option("--n", pl.n, "polynomial degree");
  poly->add_option("--format", pl.format)->check(CLI::IsMember(kFormats));

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Identity suites over exact values");
  verify->add_option("suite", vf.suite)
      ->required()
      ->check(CLI::IsMember({"all", "rec21", "rec22", "thm31", "rec32", "thm33", "thm34", "eq11",
                             "eq12", "parity", "potential", "fubini-rec", "fubini-series",
                             "doubly-rec", "doubly-series", "riordan", "poset"}));
  verify->add_option("--set", vf.set);
  verify->add_option("--r", vf.r, "r (or the r sweep bound for fubini-rec/doubly-rec)");
  verify->add_option("--n,--n-max", vf.n);
  verify->add_option("--t-max", vf.t_max, "potential-polynomial order bound");
  verify->add_option("--u", vf.u, "removed size for thm34");
  verify->add_option("--tolerance", vf.tolerance, "series tolerance (decimal or p/q)");
  verify->add_option("--format", vf.format)->check(CLI::IsMember(kFormats));

  OracleArgs oc;
  auto* oracle = app.add_subcommand("oracle", "Brute-force counts against the formulas");
  oracle->add_option("kind", oc.kind, "lists|sets|ordered|doubly")
      ->required()
      ->check(CLI::IsMember({"lists", "sets", "ordered", "doubly"}));
  oracle->add_option("--set", oc.set);
  oracle->add_option("--r", oc.r);
  oracle->add_option("--n", oc.n);
  oracle->add_option("--k", oc.k);
  oracle->add_option("--format", oc.format)->check(CLI::IsMember(kFormats));

  PosetArgs ps;
  auto* poset = app.add_subcommand("poset", "The partition-pair poset");
  auto* dump = poset->add_subcommand("dump", "Elements, covers and Mobius values");
  dump->add_option("--set", ps.set);
  dump->add_option("--r", ps.r);
  dump->add_option("--n", ps.n);
  dump->add_option("--format", ps.format)->check(CLI::IsMember(kFormats));
  poset->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*seq) return run_seq(sq);
    if (*matrix) return run_matrix(mx, false);
    if (*inverse) return run_matrix(iv, true);
    if (*poly) return run_poly(pl);
    if (*verify) return run_verify(vf);
    if (*oracle) return run_oracle(oc);
    if (*dump) return run_poset_dump(ps);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

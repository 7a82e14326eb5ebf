#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "lahkit/sequences.hpp"

using namespace lahkit;

namespace {
const SizeSet kAll = SizeSet::parse("all");
const SizeSet kOdd = SizeSet::parse("odd");
const SizeSet kEven = SizeSet::parse("even");
const SizeSet kFin = SizeSet::parse("1,2,5");
}  // namespace

TEST_CASE("unrestricted sizes reproduce the classical triangles") {
  Triangle lah = lah_triangle(kAll, 0, 9);
  Triangle st = stirling_triangle(kAll, 0, 9);
  for (long n = 0; n <= 9; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(lah.at(n, k) == lah_classic(n, k));
      CHECK(st.at(n, k) == stirling2(n, k));
    }
}

TEST_CASE("triangle access is lenient outside the table") {
  Triangle t = lah_triangle(kAll, 0, 3);
  CHECK(t.at(-1, 0) == 0);
  CHECK(t.at(2, 3) == 0);
  CHECK(t.at(5, 1) == 0);
  CHECK(t.n_max() == 3);
}

TEST_CASE("the matrix for S={1,2,5}, r=2") {
  // independently recomputable by brute force; row 8 is the hardest entry set
  const std::vector<std::vector<Int>> expected = {
      {1},
      {4, 1},
      {8, 10, 1},
      {0, 48, 18, 1},
      {240, 96, 156, 28, 1},
      {2400, 1320, 720, 380, 40, 1},
      {0, 24480, 5760, 3000, 780, 54, 1},
      {0, 120960, 126000, 24360, 9240, 1428, 70, 1},
      {1008000, 0, 1330560, 483840, 92400, 23520, 2408, 88, 1}};
  Triangle t = lah_triangle(kFin, 2, 8);
  REQUIRE(t.rows.size() == 9);
  for (long n = 0; n <= 8; ++n) {
    REQUIRE(t.rows[n].size() == static_cast<size_t>(n + 1));
    for (long k = 0; k <= n; ++k) CHECK(t.at(n, k) == expected[n][k]);
  }
  CHECK(sr_lah(8, 0, kFin, 2) == 1008000);
  CHECK(sr_lah(2, 1, kFin, 2) == 10);
}

TEST_CASE("the matrix for S=odd, r=2") {
  Triangle t = lah_triangle(kOdd, 2, 4);
  CHECK(t.rows[2] == std::vector<Int>{12, 0, 1});
  CHECK(t.rows[3] == std::vector<Int>{0, 42, 0, 1});
  CHECK(t.rows[4] == std::vector<Int>{456, 0, 96, 0, 1});
}

TEST_CASE("s_lah is the r=0 column of sr_lah") {
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= n; ++k) CHECK(s_lah(n, k, kOdd) == sr_lah(n, k, kOdd, 0));
}

TEST_CASE("stirling counts stay below lah counts") {
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) {
      Int sl = sr_lah(n, k, kOdd, 1), ss = sr_stirling(n, k, kOdd, 1);
      CHECK(sl >= ss);
      CHECK((ss == 0) == (sl == 0));
    }
}

TEST_CASE("compositions") {
  SizeSet ge2 = SizeSet::parse(">=2");
  CHECK(compositions_count(6, 2, ge2) == 3);
  auto list = enumerate_compositions(6, 2, ge2);
  REQUIRE(list.size() == 3);
  CHECK(list[0] == std::vector<long>{2, 4});
  CHECK(list[1] == std::vector<long>{3, 3});
  CHECK(list[2] == std::vector<long>{4, 2});

  // C_{>=m}(n,k) = binom(n-(m-1)k-1, k-1)
  for (long m = 1; m <= 3; ++m) {
    SizeSet S = SizeSet::parse(">=" + std::to_string(m));
    for (long n = 1; n <= 10; ++n)
      for (long k = 1; k <= n; ++k)
        CHECK(compositions_count(n, k, S) == binomial(n - (m - 1) * k - 1, k - 1));
  }

  for (long n = 0; n <= 9; ++n)
    for (long k = 0; k <= n + 1; ++k)
      CHECK(compositions_count(n, k, kOdd) ==
            static_cast<long>(enumerate_compositions(n, k, kOdd).size()));

  CHECK(compositions_count(0, 0, kAll) == 1);
  CHECK(compositions_count(0, 1, kAll) == 0);
  CHECK_THROWS_AS(enumerate_compositions(65, 2, kAll), std::domain_error);
}

TEST_CASE("row totals") {
  for (long n = 0; n <= 9; ++n) CHECK(l_total(n, kAll, 0) == lah_classic_total(n));
  // one special element shifts the classical totals by one
  for (long n = 0; n <= 8; ++n) CHECK(l_total(n, kAll, 1) == lah_classic_total(n + 1));
  const Int odd2[] = {1, 1, 13, 43, 553, 3301, 44221, 389383, 5613553};
  for (long n = 0; n <= 8; ++n) CHECK(l_total(n, kOdd, 2) == odd2[n]);
}

TEST_CASE("ordered counts, both flavours") {
  const Int fub_all[] = {1, 1, 3, 13, 75, 541};
  const Int fub_odd[] = {1, 1, 2, 7, 32, 181};
  for (long n = 0; n <= 5; ++n) {
    CHECK(fubini(n, kAll, 0) == fub_all[n]);
    CHECK(fubini(n, kOdd, 0) == fub_odd[n]);
  }

  const Int dbl_all_r1[] = {1, 4, 24, 192, 1920};
  for (long n = 0; n <= 4; ++n) CHECK(doubly_ordered(n, kAll, 1) == dbl_all_r1[n]);
  CHECK(doubly_ordered(1, kAll, 1) == 4);

  // r = 0 reduces to the finite sums over the triangles
  for (long n = 0; n <= 6; ++n) {
    Int f = 0, d = 0;
    Triangle st = stirling_triangle(kAll, 0, n);
    Triangle lt = lah_triangle(kAll, 0, n);
    for (long k = 0; k <= n; ++k) {
      f += factorial(k) * st.at(n, k);
      d += factorial(k) * lt.at(n, k);
    }
    CHECK(fubini(n, kAll, 0) == f);
    CHECK(doubly_ordered(n, kAll, 0) == d);
  }

  // the even-size world is empty at odd n
  CHECK(fubini(3, kEven, 0) == 0);
  CHECK(doubly_ordered(5, kEven, 0) == 0);
  CHECK(fubini(4, kEven, 0) > 0);
}

TEST_CASE("identity report bookkeeping") {
  IdentityReport rep{"demo", "n <= 2", {}, true};
  rep.add("n=1", 3, 3);
  rep.add("n=2", 5, 6);
  CHECK(rep.points.size() == 2);
  CHECK(rep.failures() == 1);
  CHECK_FALSE(rep.pass);
  CHECK(rep.points[1].params == "n=2");
  CHECK_FALSE(rep.points[1].ok);
}

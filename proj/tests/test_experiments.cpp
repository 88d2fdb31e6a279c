#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ncqd/experiments.hpp"

using namespace ncqd;
using doctest::Approx;

TEST_CASE("random_scatter rows satisfy the Schmidt-minimality bound") {
  const RandomScatter scatter = random_scatter(2000, RngSeed{5});
  REQUIRE(scatter.rows.size() == 2000);
  for (const RandomRow& r : scatter.rows) {
    CHECK(r.c2 >= 0.0);
    CHECK(r.c2 <= 1.0 + 1e-12);
    CHECK(r.dg_schmidt <= r.dg_comp + 1e-9);
  }
  CHECK(scatter.summary.max_comp >= scatter.summary.max_schmidt - 1e-12);
}

TEST_CASE("identical seeds give byte-identical CSV output") {
  const std::string a = csv_random(random_scatter(500, RngSeed{42}));
  const std::string b = csv_random(random_scatter(500, RngSeed{42}));
  const std::string c = csv_random(random_scatter(500, RngSeed{43}));
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.rfind("c2,dg_comp,dg_schmidt\n", 0) == 0);
}

TEST_CASE("CSV values re-parse to within 1e-8 of the in-memory rows") {
  const RandomScatter scatter = random_scatter(200, RngSeed{9});
  std::istringstream in(csv_random(scatter));
  std::string line;
  std::getline(in, line);  // header
  std::size_t row = 0;
  while (std::getline(in, line)) {
    REQUIRE(row < scatter.rows.size());
    double c2 = 0.0, comp = 0.0, sch = 0.0;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &c2, &comp, &sch) == 3);
    CHECK(std::abs(c2 - scatter.rows[row].c2) < 1e-8);
    CHECK(std::abs(comp - scatter.rows[row].dg_comp) < 1e-8);
    CHECK(std::abs(sch - scatter.rows[row].dg_schmidt) < 1e-8);
    ++row;
  }
  CHECK(row == scatter.rows.size());
}

TEST_CASE("scan of rho2 hits the zero-discord point at p = 0.5") {
  const std::vector<ScanRow> rows = scan_family(Family::Rho2, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].p == Approx(0.5));
  CHECK(rows[1].dg_comp <= 1e-8);
  CHECK(rows[1].d_prime <= 1e-8);
}

TEST_CASE("scan of rho1 ends at the Bell projector value") {
  const std::vector<ScanRow> rows = scan_family(Family::Rho1, 5);
  const ScanRow& last = rows.back();
  CHECK(last.p == Approx(1.0));
  CHECK(std::abs(last.dg_comp - 1.3535533905932737) < 1e-6);
  CHECK(std::abs(last.d_prime - 1.3535533905932737) < 1e-6);
  for (const ScanRow& r : rows) CHECK(r.converged);
}

TEST_CASE("scan CSV layout") {
  const std::string csv = csv_scan(scan_family(Family::Werner, 3, {6, 200, 1e-9, RngSeed{2}}));
  CHECK(csv.rfind("p,dg_comp,d_prime,converged\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("scan rejects a degenerate grid") {
  CHECK_THROWS_AS(scan_family(Family::Werner, 1), validation_error);
  CHECK_THROWS_AS(random_scatter(0, RngSeed{1}), validation_error);
}

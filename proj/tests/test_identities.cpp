#include <doctest.h>

#include "qmf/errors.hpp"
#include "qmf/identities.hpp"

#include <set>

using namespace qmf;
using namespace qmf::identities;

namespace {
const std::array<Rational, 6> kA = {78278400, 550800, 90823680, 116640, 678813696000LL, 331776000};
const std::array<Rational, 6> kAPrime = {43027200, 550800, 60963840, 116640, 339075072000LL, 331776000};
}  // namespace

TEST_CASE("registry is sorted, unique and complete") {
  const auto& r = registry();
  CHECK(r.size() >= 35);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < r.size(); ++i) {
    ids.insert(r[i].id);
    if (i > 0) CHECK(r[i - 1].id < r[i].id);
  }
  CHECK(ids.size() == r.size());
  for (const char* id : {"RAM-1", "RAM-2", "RAM-3", "DELTA", "E2L2", "LAMBERT-1", "LAMBERT-5", "GRAB-6",
                         "LEE-12", "AB-12", "BR-61", "BR-121", "BR-141", "D2-DERIV-4", "X121-DERIV",
                         "E1-A", "E1-B", "LFACT", "LCOMB-A", "LCOMB-APRIME", "SERRE-CROSS", "MRB-5",
                         "X42D", "XW2-COEFF-8"})
    CHECK_MESSAGE(ids.count(id) == 1, id);
  CHECK_THROWS_AS(find("NOPE"), UnknownIdentity);
}

TEST_CASE("every identity passes at its default order") {
  for (const auto& res : verify_all()) {
    INFO(res.id);
    CHECK(res.passed);
    CHECK(res.order_checked > 0);
  }
}

TEST_CASE("lower orders pass too and an empty filter gives nothing") {
  for (const auto& res : verify_all(10)) {
    INFO(res.id);
    CHECK(res.passed);
    CHECK(res.order_checked <= 10);
  }
  CHECK(verify_all(std::nullopt, [](const std::string&) { return false; }).empty());
  for (std::size_t n : {5u, 20u, 40u}) CHECK(verify("BR-61", n).passed);
}

TEST_CASE("L decompositions and the perturbed control") {
  CHECK(verify_lcomb(kA, 1, 60).passed);
  CHECK(verify_lcomb(kAPrime, 2, 60).passed);
  auto bad = kA;
  bad[0] += 1;
  const auto res = verify_lcomb(bad, 1, 60);
  REQUIRE_FALSE(res.passed);
  REQUIRE(res.failure);
  CHECK(res.failure->exponent <= 10);
}

#include "doctest.h"

#include <set>

#include "cylabacus/crystal.hpp"
#include "cylabacus/cylindric.hpp"
#include "cylabacus/enumerate_verify.hpp"
#include "cylabacus/notation.hpp"

#include "helpers.h"

using namespace cylabacus;

namespace {

std::vector<std::string> formatted(const std::vector<Multipartition>& mps) {
  std::vector<std::string> out;
  for (const auto& mp : mps) out.push_back(format_multipartition(mp));
  return out;
}

}  // namespace

TEST_CASE("partitions in descending lex order") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(3) ==
        std::vector<Partition>{Partition({3}), Partition({2, 1}),
                               Partition({1, 1, 1})});
  CHECK(partitions_of(5).size() == 7);
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("single component stream") {
  CHECK(formatted(enumerate_multipartitions(1, 3)) ==
        std::vector<std::string>{"-", "1", "2", "1^2", "3", "2.1", "1^3"});
}

TEST_CASE("pair stream") {
  auto mps = enumerate_multipartitions(2, 2);
  CHECK(formatted(mps) == std::vector<std::string>{"-/-", "-/1", "1/-", "-/2",
                                                   "-/1^2", "1/1", "2/-",
                                                   "1^2/-"});
  CHECK(mps.size() == 8);
  CHECK(count_multipartitions(2, 2) == 8);
}

TEST_CASE("counts match enumeration") {
  for (int x = 1; x <= 4; ++x)
    for (int n = 0; n <= 6; ++n)
      CHECK(count_multipartitions(x, n) ==
            (uint64_t)enumerate_multipartitions(x, n).size());
  CHECK(count_multipartitions(1, 0) == 1);
  CHECK(count_multipartitions(3, 8) ==
        (uint64_t)enumerate_multipartitions(3, 8).size());
}

TEST_CASE("stream has no duplicates and ascends in size") {
  auto mps = enumerate_multipartitions(3, 4);
  std::set<std::string> seen;
  int last = 0;
  for (const auto& mp : mps) {
    CHECK(seen.insert(format_multipartition(mp)).second);
    CHECK(total_size(mp) >= last);
    last = total_size(mp);
  }
}

TEST_CASE("charge enumeration") {
  EnumerationDomain d;
  d.level = 2;
  d.charge_min = -1;
  d.charge_max = 1;
  auto box = enumerate_charges(d);
  REQUIRE(box.size() == 9);
  CHECK(box.front() == Charge({-1, -1}));
  CHECK(box[1] == Charge({-1, 0}));
  CHECK(box.back() == Charge({1, 1}));

  d.in_window = true;
  d.rank = 2;
  auto window = enumerate_charges(d);
  REQUIRE(window.size() == 9);
  CHECK(window.front() == Charge({-1, -1}));
  CHECK(window.back() == Charge({1, 3}));
  for (const Charge& s : window) CHECK(in_window_D(s, 2));

  d.level = 1;
  d.in_window = false;
  CHECK(enumerate_charges(d).size() == 3);

  EnumerationDomain bad;
  bad.charge_min = 1;
  bad.charge_max = 0;
  CHECK_THROWS_AS(enumerate_charges(bad), std::invalid_argument);
}

TEST_CASE("domain cardinality") {
  EnumerationDomain d;
  d.level = 2;
  d.rank = 2;
  d.max_size = 4;
  d.charge_min = -1;
  d.charge_max = 1;
  CHECK(domain_cardinality(d) == 9 * count_multipartitions(2, 4));
}

TEST_CASE("equivalence harness passes and counts the window") {
  EnumerationDomain d;
  d.level = 2;
  d.rank = 2;
  d.max_size = 4;
  d.charge_min = -1;
  d.charge_max = 1;
  VerificationReport report = verify_cylindric_equivalence(d);
  CHECK(report.pass());
  // 6 of the 9 box charges lie inside the window
  CHECK(report.instances == 6 * count_multipartitions(2, 4));
  CHECK(report.millis >= 0.0);
}

TEST_CASE("periodicity harness visits every charge") {
  EnumerationDomain d;
  d.level = 2;
  d.rank = 2;
  d.max_size = 4;
  d.charge_min = -1;
  d.charge_max = 1;
  VerificationReport report = verify_periodicity_source(d);
  CHECK(report.pass());
  CHECK(report.instances == 9 * count_multipartitions(2, 4));
}

TEST_CASE("duality transport harness") {
  EnumerationDomain d;
  d.level = 2;
  d.rank = 2;
  d.max_size = 4;
  d.charge_min = -1;
  d.charge_max = 1;
  d.in_window = true;
  VerificationReport report = verify_duality_transport(d);
  CHECK(report.pass());
  CHECK(report.instances == 9 * count_multipartitions(2, 4));

  EnumerationDomain single;
  single.level = 1;
  CHECK_THROWS_AS(verify_duality_transport(single), std::invalid_argument);
}

TEST_CASE("sharded runs match single threaded runs") {
  EnumerationDomain d;
  d.level = 2;
  d.rank = 3;
  d.max_size = 4;
  d.charge_min = -2;
  d.charge_max = 2;
  for (auto verify : {verify_cylindric_equivalence, verify_periodicity_source}) {
    VerificationReport solo = verify(d, 1);
    VerificationReport sharded = verify(d, 4);
    CHECK(solo.instances == sharded.instances);
    CHECK(solo.counterexamples == sharded.counterexamples);
    CHECK(solo.pass() == sharded.pass());
  }
  CHECK_THROWS_AS(verify_cylindric_equivalence(d, 0), std::invalid_argument);
}

TEST_CASE("predicate counts agree with direct loops") {
  EnumerationDomain d;
  d.level = 2;
  d.rank = 2;
  d.max_size = 3;
  d.charge_min = 0;
  d.charge_max = 1;
  auto table = count_predicates(d);
  REQUIRE(table.size() == 4);

  std::vector<PredicateCounts> direct(d.max_size + 1);
  for (int n = 0; n <= d.max_size; ++n) direct[n].n = n;
  for (const Charge& s : enumerate_charges(d))
    for (const auto& mp : enumerate_multipartitions(2, 3)) {
      ChargedMultipartition w(mp, s);
      PredicateCounts& row = direct[total_size(mp)];
      if (in_window_D(s, 2) && is_cylindric_def(w, 2)) {
        ++row.cylindric;
        if (is_flotw(w, 2)) ++row.flotw;
      }
      if (is_source(w, 2)) ++row.source;
    }
  for (int n = 0; n <= d.max_size; ++n) {
    CHECK(table[n].n == n);
    CHECK(table[n].cylindric == direct[n].cylindric);
    CHECK(table[n].flotw == direct[n].flotw);
    CHECK(table[n].source == direct[n].source);
  }
  // sharded table matches too
  auto table4 = count_predicates(d, 4);
  for (int n = 0; n <= d.max_size; ++n) {
    CHECK(table4[n].cylindric == table[n].cylindric);
    CHECK(table4[n].flotw == table[n].flotw);
    CHECK(table4[n].source == table[n].source);
  }
}

TEST_CASE("single charge baseline row") {
  EnumerationDomain d;
  d.level = 2;
  d.rank = 2;
  d.max_size = 0;
  auto table = count_predicates(d);
  REQUIRE(table.size() == 1);
  CHECK(table[0].cylindric == 1);
  CHECK(table[0].flotw == 1);
  CHECK(table[0].source == 1);
}

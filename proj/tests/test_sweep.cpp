#include <doctest.h>

#include "fockpath/sweep.hpp"

using namespace fockpath;

namespace {

void check_agree(const SweepReport& s, const SweepReport& p) {
  INFO(s.summary());
  CHECK(s.ok());
  CHECK(s.checked > 0);
  CHECK(s.checked == p.checked);
  CHECK(s.counters == p.counters);
  CHECK(s.failures == p.failures);
}

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("sign sequences") {
    CHECK(sign_sequences_on(0).size() == 1);
    CHECK(sign_sequences_on(4).size() == 16);
  }

  TEST_CASE("report merging keeps failures and counters") {
    SweepReport a, b;
    a.checked = 2;
    a.counters["x"] = 1;
    b.checked = 3;
    b.counters["x"] = 2;
    b.fail("inst", "bad");
    a.merge(b);
    CHECK(a.checked == 5);
    CHECK(a.counters["x"] == 3);
    CHECK_FALSE(a.ok());
    CHECK(a.summary().find("failures 1") != std::string::npos);
  }

  TEST_CASE("serial and parallel sweeps agree") {
    check_agree(sweep_formula(2, 6, Exec::serial), sweep_formula(2, 6, Exec::parallel));
    check_agree(sweep_branching(3, 5, Exec::serial), sweep_branching(3, 5, Exec::parallel));
    check_agree(sweep_shape(2, 6, Exec::serial), sweep_shape(2, 6, Exec::parallel));
    check_agree(sweep_consistency(3, 5, Exec::serial), sweep_consistency(3, 5, Exec::parallel));
    check_agree(sweep_bijection_exhaustive(5, Exec::serial), sweep_bijection_exhaustive(5, Exec::parallel));
    check_agree(sweep_construction(5, Exec::serial), sweep_construction(5, Exec::parallel));
    check_agree(sweep_lattice(6, Exec::serial), sweep_lattice(6, Exec::parallel));
  }

  TEST_CASE("random sweeps are reproducible") {
    const auto a = sweep_bijection_random(200, 9, 42, Exec::parallel);
    const auto b = sweep_bijection_random(200, 9, 42, Exec::serial);
    CHECK(a.ok());
    CHECK(a.checked == 200);
    CHECK(a.checked == b.checked);
  }

  TEST_CASE("small order and jantzen sweeps") {
    const auto o = sweep_order(2);
    CHECK(o.ok());
    CHECK(o.checked > 0);
    const auto j = sweep_jantzen(2, 5);
    CHECK(j.ok());
    CHECK(j.checked > 0);
  }
}

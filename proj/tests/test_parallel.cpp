#include <doctest.h>

#include <omp.h>

#include "qhankel/hankel.hpp"
#include "qhankel/random.hpp"
#include "qhankel/selfcheck.hpp"

using namespace qhankel;

TEST_SUITE("parallel") {
  TEST_CASE("parallel analyze matches the serial reference") {
    Rng rng(1234);
    for (int t = 0; t < 40; ++t) {
      const QSequence h = t % 3 ? random_hankel_sequence(rng, 9) : adversarial_hankel_sequence(rng, 9);
      CHECK(analyze(h) == analyze_serial(h));
    }
  }

  TEST_CASE("thread count does not change the analysis") {
    Rng rng(4321);
    const QSequence h = random_hankel_sequence(rng, 9);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const HankelAnalysis one = analyze(h);
    omp_set_num_threads(4);
    const HankelAnalysis four = analyze(h);
    omp_set_num_threads(saved);
    CHECK(one == four);
  }

  TEST_CASE("serial and parallel sweeps report identical results") {
    SelfCheckOptions opt;
    opt.seed = 99;
    opt.sizes = SweepSizes{}.scaled(0.05);
    opt.execution = Execution::Serial;
    const auto serial = run_selfcheck(opt);
    opt.execution = Execution::Parallel;
    const auto parallel = run_selfcheck(opt);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      CAPTURE(serial[k].name);
      CHECK(serial[k] == parallel[k]);
      CHECK(serial[k].passed());
    }
  }

  TEST_CASE("different seeds draw different instances") {
    SelfCheckOptions a, b;
    a.sizes = b.sizes = SweepSizes{}.scaled(0.02);
    a.seed = 1;
    b.seed = 2;
    CHECK(run_property("hankel_rank_formula", a).passed());
    CHECK(run_property("hankel_rank_formula", b).passed());
    CHECK(instance_seed(1, 0, 0) != instance_seed(2, 0, 0));
    CHECK(instance_seed(1, 0, 0) != instance_seed(1, 0, 1));
    CHECK(instance_seed(1, 0, 0) != instance_seed(1, 1, 0));
  }

  TEST_CASE("unknown property names are rejected") {
    CHECK_THROWS(run_property("no_such_property", SelfCheckOptions{}));
    CHECK(property_names().size() == run_selfcheck([] {
            SelfCheckOptions o;
            o.sizes = SweepSizes{}.scaled(0.01);
            return o;
          }()).size());
  }
}

// Acceptance run: one line per criterion, nonzero exit if any fails.
// Sweeps run at the default sizes; fixed worked examples are checked inline.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qhankel/hankel.hpp"
#include "qhankel/lrr.hpp"
#include "qhankel/rank.hpp"
#include "qhankel/selfcheck.hpp"

using namespace qhankel;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
  // property must run at least `min_instances` instances with zero failures
  void sweep(const SelfCheckOptions& opt, const char* name, std::size_t min_instances) {
    const PropertyResult r = run_property(name, opt);
    if (!detail.empty() && pass) detail += "; ";
    require(!r.skipped, std::string(name) + " skipped");
    require(r.instances >= min_instances,
            std::string(name) + " ran " + std::to_string(r.instances) + " < " + std::to_string(min_instances));
    require(r.failures == 0, std::string(name) + ": " + std::to_string(r.failures) + " failures, first: " +
                                 r.first_failure);
    if (pass) detail += std::string(name) + " " + std::to_string(r.instances);
  }
};

Quaternion q(long w, long x = 0, long y = 0, long z = 0) { return Quaternion::exact(w, x, y, z); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  SelfCheckOptions opt;
  double scale = 1.0;
  app.add_option("--seed", opt.seed, "sweep seed");
  app.add_option("--scale", scale, "sweep size multiplier (values below 1 may drop under the minimums)");
  CLI11_PARSE(app, argc, argv);
  opt.sizes = SweepSizes{}.scaled(scale);

  const auto m = [scale](std::size_t n) {
    return scale >= 1.0 ? n : static_cast<std::size_t>(static_cast<double>(n) * scale);
  };
  const Quaternion i = q(0, 1), j = q(0, 0, 1), k = q(0, 0, 0, 1);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"algebra laws",
       [&] {
         Outcome o;
         o.require(i * j == k, "i*j != k");
         o.require(j * i == -k, "j*i != -k");
         o.sweep(opt, "algebra_laws", m(1000));
         return o;
       }},
      {"adjoint homomorphisms",
       [&] {
         Outcome o;
         o.sweep(opt, "adjoint_homomorphisms", m(100));
         return o;
       }},
      {"exact rank methods agree",
       [&] {
         Outcome o;
         o.sweep(opt, "rank_methods", m(200));
         return o;
       }},
      {"symmetric matrices: left rank = right rank",
       [&] {
         Outcome o;
         o.sweep(opt, "symmetric_rank", m(200));
         return o;
       }},
      {"Hankel matrices: left rank = right rank",
       [&] {
         Outcome o;
         const QMatrix w{{q(1), i}, {j, k}};
         o.require(rank_elimination(w, Side::Left) == 1 && rank_elimination(w, Side::Right) == 2,
                   "witness [[1,i],[j,k]] ranks differ from (1, 2)");
         o.sweep(opt, "hankel_left_right", m(200));
         return o;
       }},
      {"Hankel rank formula min(F, G, m, F+G-m)",
       [&] {
         Outcome o;
         o.sweep(opt, "hankel_rank_formula", m(200));
         o.sweep(opt, "hankel_rank_formula_adversarial", m(30));
         return o;
       }},
      {"minimal extensions keep rank m",
       [&] {
         Outcome o;
         o.sweep(opt, "minimal_extension", m(50));
         return o;
       }},
      {"rank plateau for planted recurrences",
       [&] {
         Outcome o;
         o.sweep(opt, "rank_plateau", m(30));
         return o;
       }},
      {"recurrence round trip",
       [&] {
         Outcome o;
         const QSequence fib = QSequence::from_integers({0, 1, 1, 2, 3, 5});
         const SolveResult r = fit(fib, 2, Side::Left);
         o.require(r.solvable && r.coefficients == QVector{q(1), q(1)}, "Fibonacci fit is not (1, 1)");
         const QSequence ext = generate(QSequence::from_integers({3, 5}), LrrSpec::one_sided(Side::Left, r.coefficients), 2);
         o.require(ext == QSequence::from_integers({3, 5, 8, 13}), "Fibonacci does not extend to 8, 13");
         o.sweep(opt, "lrr_roundtrip", m(50));
         return o;
       }},
      {"periodicity from roots of minus one",
       [&] {
         Outcome o;
         o.require(check_periodicity_roots_of_unity(q(1), i, i, 2, 6), "mu = nu = i, p = 2 not periodic");
         const double s = 0.8660254037844386;
         const Quaternion root = Quaternion::real(0.5, s);
         o.require(check_periodicity_roots_of_unity(Quaternion::real(1, 2, 3, 4), root, root, 3, 9),
                   "i-plane primitive 6th root, p = 3 not periodic");
         o.sweep(opt, "periodicity", m(20));
         o.sweep(opt, "periodicity_float", m(20));
         return o;
       }},
      {"numeric rank matches exact rank",
       [&] {
         Outcome o;
         o.sweep(opt, "numeric_rank", m(50));
         return o;
       }},
  };

  bool all = true;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %-4s %-44s %6.2fs  %s\n", c + 1, o.pass ? "PASS" : "FAIL",
                criteria[c].first.c_str(), secs, o.detail.c_str());
    all = all && o.pass;
  }
  std::printf("%s\n", all ? "all acceptance criteria pass" : "SOME ACCEPTANCE CRITERIA FAIL");
  return all ? 0 : 1;
}

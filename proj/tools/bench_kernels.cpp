// Times the serial reference kernels against their OpenMP versions on a
// symmetric inverse monoid instance and checks that the outputs agree.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gstone/constructions.hpp"
#include "gstone/kernels.hpp"
#include "gstone/parallel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, ms_since(start));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int points = 4;
  int reps = 3;
  if (argc > 1) points = std::atoi(argv[1]);
  if (argc > 2) reps = std::atoi(argv[2]);

  std::vector<std::string> names;
  for (int i = 0; i < points; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  const auto sim = gstone::symmetric_inverse_monoid(names, 6);
  const auto& s = *sim.semigroup;
  const int n = s.size();
  std::printf("instance: I(%d) with %d elements, %d thread(s)\n", points, n,
              gstone::par::max_threads());

  gstone::kernels::MulTable mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      mul[static_cast<std::size_t>(a) * n + b] = s.mul(a, b);
    }
  }
  const auto& idem = s.idempotents();

  bool all_equal = true;
  auto row = [&](const char* name, double serial, double parallel,
                 bool equal) {
    std::printf("%-22s %10.2f ms %10.2f ms   x%.2f  %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0,
                equal ? "outputs equal" : "OUTPUTS DIFFER");
    all_equal = all_equal && equal;
  };

  {
    std::vector<gstone::kernels::Triple> rs, rp;
    const double ts = time_best_of(
        reps, [&] { rs = gstone::kernels::associativity_violations_serial(
                        mul, n, 16); });
    const double tp = time_best_of(
        reps, [&] { rp = gstone::kernels::associativity_violations_parallel(
                        mul, n, 16); });
    row("associativity scan", ts, tp, rs == rp);
  }
  gstone::kernels::LeqTable leq;
  {
    gstone::kernels::LeqTable ls, lp;
    const double ts = time_best_of(
        reps, [&] { ls = gstone::kernels::natural_order_serial(mul, n, idem); });
    const double tp = time_best_of(
        reps,
        [&] { lp = gstone::kernels::natural_order_parallel(mul, n, idem); });
    row("natural order", ts, tp, ls == lp);
    leq = ls;
  }
  std::vector<int> meets;
  {
    std::vector<int> ms, mp;
    const double ts =
        time_best_of(reps, [&] { ms = gstone::kernels::meet_table_serial(leq, n); });
    const double tp = time_best_of(
        reps, [&] { mp = gstone::kernels::meet_table_parallel(leq, n); });
    row("meet table", ts, tp, ms == mp);
    meets = ms;
  }
  {
    std::vector<int> js, jp;
    const double ts =
        time_best_of(reps, [&] { js = gstone::kernels::join_table_serial(leq, n); });
    const double tp = time_best_of(
        reps, [&] { jp = gstone::kernels::join_table_parallel(leq, n); });
    row("join table", ts, tp, js == jp);
  }
  {
    std::vector<std::uint8_t> as, ap;
    const double ts = time_best_of(reps, [&] {
      as = gstone::kernels::arrow_table_serial(leq, meets, n, s.zero());
    });
    const double tp = time_best_of(reps, [&] {
      ap = gstone::kernels::arrow_table_parallel(leq, meets, n, s.zero());
    });
    row("arrow table", ts, tp, as == ap);
  }
  return all_equal ? 0 : 1;
}

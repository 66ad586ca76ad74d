#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hk/analysis.hpp"
#include "hk/antiderivative.hpp"
#include "hk/convergence.hpp"
#include "hk/gallery.hpp"
#include "hk/hk_function.hpp"
#include "hk/norm_search.hpp"
#include "hk/parallel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double timed_ms(Fn&& fn) {
  const auto t0 = Clock::now();
  fn();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
  std::string task;
  double serial_ms = 0;
  double parallel_ms = 0;
  bool identical = false;
};

Row bench_rational_norms() {
  constexpr int kJobs = 200;
  auto batch = [&](hk::Exec how) {
    return hk::indexed_map<hk::Rat>(
        kJobs,
        [&](int i) {
          const auto s =
              hk::gallery::random_step(1000 + std::uint64_t(i), 50, 4, hk::Rat(0), hk::Rat(1));
          return hk::alexiewicz_norm(s);
        },
        how);
  };
  Row r{"alexiewicz norms of 200 random steps (rational)", 0, 0, false};
  std::vector<hk::Rat> a, b;
  r.serial_ms = timed_ms([&] { a = batch(hk::Exec::serial); });
  r.parallel_ms = timed_ms([&] { b = batch(hk::Exec::parallel); });
  r.identical = a == b;
  return r;
}

Row bench_pairing_sweep() {
  constexpr int kN = 512;
  const hk::HKFn<double> f{hk::AntiderivFn::oscillatory(2, 3)};
  const auto seq = to_float(hk::gallery::typewriter_seq());
  auto sweep = [&](hk::Exec how) {
    return hk::indexed_map<double>(
        kN,
        [&](int i) { return hk::hk_integral(hk::multiply_step(f, seq.generate(i + 1))); },
        how);
  };
  Row r{"pairing sweep osc:2:3 x typewriter, N=512 (float)", 0, 0, false};
  std::vector<double> a, b;
  r.serial_ms = timed_ms([&] { a = sweep(hk::Exec::serial); });
  r.parallel_ms = timed_ms([&] { b = sweep(hk::Exec::parallel); });
  r.identical = a == b;
  return r;
}

Row bench_norm_search() {
  const hk::gallery::FamilyMember m = hk::gallery::cos_compact_member();
  auto search = [&](hk::Exec how) {
    hk::SearchOptions opt;
    opt.grid = 65536;
    opt.exec = how;
    return hk::alexiewicz_norm_bracketed(m.flt, opt).value;
  };
  Row r{"norm search on the compactified cosine tail, grid 65536", 0, 0, false};
  double a = 0, b = 0;
  r.serial_ms = timed_ms([&] { a = search(hk::Exec::serial); });
  r.parallel_ms = timed_ms([&] { b = search(hk::Exec::parallel); });
  r.identical = a == b;
  return r;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", hk::hardware_threads());
  const Row rows[] = {bench_rational_norms(), bench_pairing_sweep(), bench_norm_search()};
  std::printf("%-58s %12s %12s %9s %s\n", "task", "serial ms", "parallel ms", "speedup",
              "same result");
  bool all_same = true;
  for (const Row& r : rows) {
    const double speedup = r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0;
    std::printf("%-58s %12.2f %12.2f %9.2fx %s\n", r.task.c_str(), r.serial_ms, r.parallel_ms,
                speedup, r.identical ? "yes" : "NO");
    all_same = all_same && r.identical;
  }
  return all_same ? 0 : 1;
}

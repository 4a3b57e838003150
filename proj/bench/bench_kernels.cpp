// Times the OpenMP kernels against their serial references and checks that
// both produce the same result.
#include "ghc/growth.hpp"
#include "ghc/identity_suite.hpp"
#include "ghc/truncated.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  std::printf("threads: %d\n", omp_get_max_threads());
  bool ok = true;

  {
    auto group = ghc::Group::free(2);
    auto cx = ghc::TruncatedComplex::build(group, 1, 4 + scale, {ghc::Variant::Hochschild});
    const auto& d = cx.boundary(2);
    std::size_t a = 0, b = 0;
    double ts = seconds([&] { a = ghc::rank_serial(d.columns); });
    double tp = seconds([&] { b = ghc::rank_blocked(d.columns, cx.space(2).block); });
    row("rank d_2 (F2, hochschild)", ts, tp, a == b);
    ok = ok && a == b;
  }
  {
    auto group = ghc::Group::free_abelian(2);
    ghc::IdentitySuiteOptions opts;
    opts.samples = 200 * static_cast<std::size_t>(scale);
    opts.max_degree = 4;
    ghc::IdentitySuiteReport a, b;
    double ts = seconds([&] { a = ghc::run_identity_suite(group, opts, false); });
    double tp = seconds([&] { b = ghc::run_identity_suite(group, opts, true); });
    bool same = a.checks.size() == b.checks.size();
    for (std::size_t i = 0; same && i < a.checks.size(); ++i)
      same = a.checks[i].checked == b.checks[i].checked && a.checks[i].violations == b.checks[i].violations;
    row("identity suite (Z^2)", ts, tp, same);
    ok = ok && same;
  }
  {
    auto group = ghc::Group::free(2);
    auto phi = ghc::cochains::length_power(group, 2, 2);
    std::vector<ghc::Rational> a, b;
    const int radius = 5 + scale;
    double ts = seconds([&] { a = ghc::layer_maxima_sq(group, phi, radius, 2'000'000, false); });
    double tp = seconds([&] { b = ghc::layer_maxima_sq(group, phi, radius, 2'000'000, true); });
    row("growth layer scan (F2)", ts, tp, a == b);
    ok = ok && a == b;
  }
  return ok ? 0 : 1;
}

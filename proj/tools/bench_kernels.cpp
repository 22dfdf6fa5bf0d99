// Timing comparison of the serial reference kernels against their OpenMP
// variants, over a few representative complexes. Also asserts agreement of
// the two routes on everything it times.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ccx/complex.hpp"
#include "ccx/fixtures.hpp"
#include "ccx/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Row {
  std::string subject;
  std::string kernel;
  double serial_ms = 0.0;
  double omp_ms = 0.0;
  bool agree = true;
};

template <typename F>
double time_ms(F&& f) {
  auto t0 = Clock::now();
  f();
  return ms_since(t0);
}

void bench_complex(const std::string& name, const ccx::CubeComplex& x, std::vector<Row>& rows) {
  using namespace ccx::kernels;
  {
    Row r{name, "distance_audit", 0, 0, true};
    DistanceAudit a, b;
    r.serial_ms = time_ms([&] { a = distance_audit_serial(x); });
    r.omp_ms = time_ms([&] { b = distance_audit_omp(x); });
    r.agree = a.ok == b.ok;
    rows.push_back(r);
  }
  {
    Row r{name, "median_audit", 0, 0, true};
    MedianAudit a, b;
    r.serial_ms = time_ms([&] { a = median_audit_serial(x); });
    r.omp_ms = time_ms([&] { b = median_audit_omp(x); });
    r.agree = a.ok == b.ok && a.triples_checked == b.triples_checked;
    rows.push_back(r);
  }
  DistMatrix m = hamming_matrix(x);
  {
    Row r{name, "graph_median_audit", 0, 0, true};
    TripleAudit a, b;
    r.serial_ms = time_ms([&] { a = graph_median_audit_serial(m); });
    r.omp_ms = time_ms([&] { b = graph_median_audit_omp(m); });
    r.agree = a.ok == b.ok;
    rows.push_back(r);
  }
  {
    Row r{name, "four_point_scan", 0, 0, true};
    FourPointScan a, b;
    r.serial_ms = time_ms([&] { a = four_point_scan_serial(m); });
    r.omp_ms = time_ms([&] { b = four_point_scan_omp(m); });
    r.agree = a.doubled_delta == b.doubled_delta;
    rows.push_back(r);
  }
}

}  // namespace

int main() {
  std::printf("OpenMP build: %s\n\n", ccx::kernels::built_with_openmp() ? "yes" : "no");
  std::vector<Row> rows;
  for (const char* name : {"grid-4x4", "10gon-5squares", "rand-0", "rand-7"}) {
    bench_complex(name, ccx::fixture(name), rows);
  }
  bench_complex("grid-12x12", ccx::grid_complex(12, 12), rows);

  std::printf("%-14s %-20s %12s %12s %9s %7s\n", "subject", "kernel", "serial (ms)", "omp (ms)",
              "speedup", "agree");
  bool all_agree = true;
  for (const Row& r : rows) {
    double speedup = r.omp_ms > 0 ? r.serial_ms / r.omp_ms : 0.0;
    std::printf("%-14s %-20s %12.3f %12.3f %8.2fx %7s\n", r.subject.c_str(), r.kernel.c_str(),
                r.serial_ms, r.omp_ms, speedup, r.agree ? "yes" : "NO");
    all_agree = all_agree && r.agree;
  }
  if (!all_agree) {
    std::printf("\nserial and OpenMP variants DISAGREE\n");
    return 1;
  }
  return 0;
}

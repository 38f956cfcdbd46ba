#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "ffd/kernels.hpp"
#include "ffd/rng.hpp"

using namespace ffd;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

PauliString random_string(int n, Rng& rng) {
  std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return PauliString(n, rng.raw() & mask, rng.raw() & mask, 0);
}

}  // namespace

int main() {
  Rng rng(42);
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%6s %14s %14s %14s %14s %8s\n", "sites", "left_omp", "left_ref", "addt_omp", "addt_ref", "maxdiff");
  for (int n = 4; n <= 9; ++n) {
    PauliString p = random_string(n, rng);
    Matrix m = Matrix::Random(1 << n, 1 << n);
    const int reps = n <= 6 ? 200 : 20;
    const cplx a(0.6, 0), b(0, 0.8);

    Matrix x = m, y = m;
    double t_left = seconds([&] { apply_left(x, p, a, b); }, reps);
    double t_left_ref = seconds([&] { reference::apply_left(y, p, a, b); }, reps);
    double diff = (x - y).norm() / x.norm();

    Matrix out = Matrix::Zero(1 << n, 1 << n), out_ref = out;
    double t_add = seconds([&] { add_pauli_times(out, p, b, m); }, reps);
    double t_add_ref = seconds([&] { reference::add_pauli_times(out_ref, p, b, m); }, reps);
    diff = std::max(diff, (out - out_ref).norm() / out.norm());

    std::printf("%6d %14.3e %14.3e %14.3e %14.3e %8.1e\n", n, t_left, t_left_ref, t_add, t_add_ref, diff);
  }
  return 0;
}

// Benchmark comparing the OpenMP closure kernels against their serial
// reference implementations on the two BFS workloads: Hurwitz orbits and
// object balls.
//
//   braidlift-bench [orbit_n] [ball_radius]
//
// Both kernels must return identical results; the benchmark aborts if not.

#include <chrono>
#include <iostream>
#include <string>

#include "braidlift/complex.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace braidlift;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int orbit_n = argc > 1 ? std::stoi(argv[1]) : 8;
  const int ball_radius = argc > 2 ? std::stoi(argv[2]) : 8;

#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads = " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP disabled; comparing two serial runs\n";
#endif

  {
    std::vector<Transposition> labels;
    for (int k = 1; k <= 3; ++k) labels.emplace_back(k, k + 1);
    for (int k = static_cast<int>(labels.size()); k < orbit_n; ++k) labels.emplace_back(3, 4);
    const LabelTuple base(4, labels);
    std::vector<LabelTuple> serial, parallel;
    const double t_serial = seconds([&] { serial = hurwitz_orbit_serial(base); });
    const double t_parallel = seconds([&] { parallel = hurwitz_orbit(base); });
    if (serial != parallel) {
      std::cerr << "orbit kernels disagree\n";
      return 1;
    }
    std::cout << "hurwitz_orbit  d=4 n=" << orbit_n << "  size=" << serial.size()
              << "  serial=" << t_serial << "s  parallel=" << t_parallel
              << "s  speedup=" << t_serial / t_parallel << "\n";
  }

  {
    const LabelTuple base(3, {Transposition(1, 2), Transposition(1, 2), Transposition(2, 3)});
    ObjectBall serial, parallel;
    const double t_serial = seconds([&] { serial = object_ball_serial(base, ball_radius); });
    const double t_parallel = seconds([&] { parallel = object_ball(base, ball_radius); });
    if (!(serial.edges == parallel.edges) || serial.vertices.size() != parallel.vertices.size()) {
      std::cerr << "ball kernels disagree\n";
      return 1;
    }
    std::cout << "object_ball    annulus radius=" << ball_radius << "  size=" << serial.vertices.size()
              << "  serial=" << t_serial << "s  parallel=" << t_parallel
              << "s  speedup=" << t_serial / t_parallel << "\n";
  }
  return 0;
}

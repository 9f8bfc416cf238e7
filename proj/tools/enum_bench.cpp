// Compares the OpenMP brute-force enumeration kernel against the serial
// reference on a large random instance and checks they agree.

#include <chrono>
#include <iostream>

#include "stringadp/control.hpp"
#include "stringadp/generators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace stringadp;

namespace {

template <typename Fn>
double time_ms(Fn&& fn, int repeats) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - start).count() / repeats;
}

} // namespace

int main(int argc, char** argv) {
    int states = 16;
    int actions = 4;
    int horizon = 10; // 4^10 ≈ 1.05M trajectories
    int repeats = 3;
    if (argc > 1) horizon = std::atoi(argv[1]);
    if (argc > 2) actions = std::atoi(argv[2]);

    const ControlInstance inst = gen_random_instance(2024, states, actions, horizon);
    const std::uint64_t count = string_count(actions, horizon);
    std::cout << "instance: " << states << " states, " << actions << " actions, horizon " << horizon
              << " (" << count << " trajectories)\n";
#ifdef _OPENMP
    std::cout << "threads : " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads : 1 (built without OpenMP)\n";
#endif

    std::pair<ActionString, double> serial, parallel;
    const double t_serial = time_ms([&] { serial = brute_force_optimal_serial(inst); }, repeats);
    const double t_parallel = time_ms([&] { parallel = brute_force_optimal(inst); }, repeats);

    std::cout << "serial  : " << t_serial << " ms, value " << serial.second << " via "
              << to_string(serial.first) << "\n";
    std::cout << "parallel: " << t_parallel << " ms, value " << parallel.second << " via "
              << to_string(parallel.first) << "\n";
    std::cout << "speedup : " << t_serial / t_parallel << "x\n";

    if (serial != parallel) {
        std::cerr << "FAIL: kernels disagree\n";
        return 1;
    }
    return 0;
}

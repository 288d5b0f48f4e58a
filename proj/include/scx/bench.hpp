#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scx {

// One instrumented run of the refined check against the quadratic baseline
// on the same instance. Work counters carry the asymptotic claims; wall
// times are reported but never asserted anywhere.
struct BenchRecord {
    std::string family;
    std::uint64_t param = 0;
    std::uint64_t n = 0, m = 0, s = 0, t = 0;
    std::uint64_t refined_work = 0;
    std::uint64_t naive_work = 0;
    std::uint64_t wall_refined_us = 0;
    std::uint64_t wall_naive_us = 0;
};

// Runs both checkers on butterfly(d). The butterfly family is the stress
// case where s*t dwarfs m, so the refined work grows ~4x per dimension
// while m only doubles.
BenchRecord bench_butterfly(unsigned d);

std::vector<BenchRecord> run_bench_butterfly(unsigned dmin, unsigned dmax);

// CSV rendering; byte-deterministic apart from the two wall-time columns.
std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r);

}  // namespace scx

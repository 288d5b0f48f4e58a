#include "scx/bench.hpp"

#include <chrono>
#include <sstream>

#include "scx/condense.hpp"
#include "scx/generators.hpp"
#include "scx/sc_check.hpp"

namespace scx {

namespace {

std::uint64_t now_us() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

}  // namespace

BenchRecord bench_butterfly(unsigned d) {
    BenchRecord r;
    r.family = "butterfly";
    r.param = d;
    DirectedGraph g = butterfly(d);
    r.n = g.live_vertex_count();
    r.m = g.edge_count();

    std::uint64_t t0 = now_us();
    ScVerdict refined = is_singly_connected(g);
    r.wall_refined_us = now_us() - t0;
    r.refined_work = refined.counters.total();
    r.s = refined.source_count;
    r.t = refined.sink_count;

    std::uint64_t t1 = now_us();
    Condensation cond = std::get<Condensation>(condense(g));
    ScVerdict naive = naive_quadratic_check(cond.dag);
    r.wall_naive_us = now_us() - t1;
    r.naive_work = naive.counters.total();
    return r;
}

std::vector<BenchRecord> run_bench_butterfly(unsigned dmin, unsigned dmax) {
    std::vector<BenchRecord> rows;
    for (unsigned d = dmin; d <= dmax; ++d) rows.push_back(bench_butterfly(d));
    return rows;
}

std::string bench_csv_header() {
    return "family,param,n,m,s,t,refined_work,naive_work,wall_refined_us,wall_naive_us\n";
}

std::string bench_csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << r.family << ',' << r.param << ',' << r.n << ',' << r.m << ',' << r.s << ',' << r.t
        << ',' << r.refined_work << ',' << r.naive_work << ',' << r.wall_refined_us << ','
        << r.wall_naive_us << '\n';
    return out.str();
}

}  // namespace scx

// Hot paths: bulk singular scans, defect matrix construction and rank,
// and the pairwise line census.

#include <benchmark/benchmark.h>

#include "sdsolid/defect.hpp"
#include "sdsolid/gallery.hpp"
#include "sdsolid/lines.hpp"
#include "sdsolid/rng.hpp"
#include "sdsolid/singular.hpp"

using namespace sds;

namespace {

gallery_build barth_at(std::uint32_t p) {
    gallery_spec gs;
    gs.name = gallery_name::barth;
    gs.fld = field::finite(p);
    return build(gs);
}

std::vector<ppoint> random_points(const field& f, int n, std::uint64_t seed) {
    rng gen(seed);
    std::vector<ppoint> pts;
    while (static_cast<int>(pts.size()) < n) {
        std::array<scalar, 4> c{f.sample(gen), f.sample(gen), f.sample(gen), f.sample(gen)};
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero()) continue;
        ppoint p(f, c);
        bool dup = false;
        for (const auto& q : pts) dup |= q == p;
        if (!dup) pts.push_back(p);
    }
    return pts;
}

void bm_singular_scan(benchmark::State& state) {
    auto p = static_cast<std::uint32_t>(state.range(0));
    auto b = barth_at(p);
    for (auto _ : state) {
        auto scan = find_singular_points(b.F, b.fld, 1);
        benchmark::DoNotOptimize(scan.points.size());
    }
}
BENCHMARK(bm_singular_scan)->Arg(11)->Arg(19)->Arg(31)->Unit(benchmark::kMillisecond);

void bm_singular_scan_depth2(benchmark::State& state) {
    auto p = static_cast<std::uint32_t>(state.range(0));
    auto b = barth_at(p);
    for (auto _ : state) {
        auto scan = find_singular_points(b.F, b.fld, 2);
        benchmark::DoNotOptimize(scan.points.size());
    }
}
BENCHMARK(bm_singular_scan_depth2)->Arg(11)->Arg(19)->Unit(benchmark::kMillisecond);

void bm_nodality_check(benchmark::State& state) {
    auto b = barth_at(11);
    auto scan = find_singular_points(b.F, b.fld, 1);
    for (auto _ : state) {
        int nodes = 0;
        for (const auto& pt : scan.points) nodes += is_node(b.F, pt);
        benchmark::DoNotOptimize(nodes);
    }
}
BENCHMARK(bm_nodality_check)->Unit(benchmark::kMillisecond);

void bm_evaluation_matrix(benchmark::State& state) {
    field f = field::finite(101);
    auto pts = random_points(f, static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        auto m = evaluation_matrix(pts);
        benchmark::DoNotOptimize(m.size());
    }
}
BENCHMARK(bm_evaluation_matrix)->Arg(14)->Arg(65)->Unit(benchmark::kMicrosecond);

void bm_defect_rank(benchmark::State& state) {
    field f = field::finite(101);
    auto pts = random_points(f, static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        auto rep = defect_of(f, pts, true);
        benchmark::DoNotOptimize(rep.defect);
    }
}
BENCHMARK(bm_defect_rank)->Arg(14)->Arg(65)->Unit(benchmark::kMicrosecond);

void bm_defect_rational(benchmark::State& state) {
    field f = field::rationals();
    rng gen(5);
    std::vector<ppoint> pts;
    while (pts.size() < 14) {
        std::array<scalar, 4> c{f.from_int(static_cast<long long>(gen.below(19)) - 9),
                                f.from_int(static_cast<long long>(gen.below(19)) - 9),
                                f.from_int(static_cast<long long>(gen.below(19)) - 9),
                                f.from_int(static_cast<long long>(gen.below(19)) - 9)};
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero()) continue;
        ppoint p(f, c);
        bool dup = false;
        for (const auto& q : pts) dup |= q == p;
        if (!dup) pts.push_back(p);
    }
    for (auto _ : state) {
        auto rep = defect_of(f, pts, true);
        benchmark::DoNotOptimize(rep.defect);
    }
}
BENCHMARK(bm_defect_rational)->Unit(benchmark::kMicrosecond);

void bm_line_census(benchmark::State& state) {
    auto b = barth_at(11);
    auto rec = verify_nodal(b.F, b.fld, 1);
    for (auto _ : state) {
        auto lines = classify_lines(rec);
        benchmark::DoNotOptimize(lines.size());
    }
}
BENCHMARK(bm_line_census)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

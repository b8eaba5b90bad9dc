// Benchmark comparing the serial reference kernels with the OpenMP paths:
// identity tuple scans, derivation-system elimination and certificate
// verification. Both paths must agree exactly; timings go to stdout.

#include <chrono>
#include <cstdio>
#include <string>

#include "degen/catalog.hpp"
#include "degen/derivations.hpp"

using namespace degen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        auto t = Clock::now();
        f();
        best = std::min(best, seconds_since(t));
    }
    return best;
}

void row(const char* name, double serial, double parallel, bool same) {
    printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", name, serial, parallel,
           parallel > 0 ? serial / parallel : 0.0, same ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    const Catalog& cat = builtin_catalog();
    printf("%d worker thread(s) for the parallel path\n", worker_threads());
    printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        std::vector<CheckResult> rs, rp;
        double ts = time_best_of(3, [&] {
            rs.clear();
            for (const auto& [name, A] : cat.algebras) rs.push_back(check_tortkara(A, Exec::Serial));
        });
        double tp = time_best_of(3, [&] {
            rp.clear();
            for (const auto& [name, A] : cat.algebras)
                rp.push_back(check_tortkara(A, Exec::Parallel));
        });
        bool same = true;
        for (std::size_t i = 0; i < rs.size(); ++i)
            same = same && rs[i].has_value() == rp[i].has_value();
        row("tortkara scan (23 algebras)", ts, tp, same);
    }
    {
        std::vector<CheckResult> rs, rp;
        double ts = time_best_of(3, [&] {
            rs.clear();
            for (const auto& [name, A] : cat.algebras) rs.push_back(check_malcev(A, Exec::Serial));
        });
        double tp = time_best_of(3, [&] {
            rp.clear();
            for (const auto& [name, A] : cat.algebras)
                rp.push_back(check_malcev(A, Exec::Parallel));
        });
        bool same = true;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            same = same && rs[i].has_value() == rp[i].has_value();
            if (rs[i] && rp[i]) same = same && rs[i]->indices == rp[i]->indices;
        }
        row("malcev scan (23 algebras)", ts, tp, same);
    }
    {
        std::vector<int> ds, dp;
        double ts = time_best_of(3, [&] {
            ds.clear();
            for (const auto& [name, A] : cat.algebras)
                ds.push_back(derivation_dimension(A, Exec::Serial).dim);
        });
        double tp = time_best_of(3, [&] {
            dp.clear();
            for (const auto& [name, A] : cat.algebras)
                dp.push_back(derivation_dimension(A, Exec::Parallel).dim);
        });
        row("derivation dims (23)", ts, tp, ds == dp);
    }
    {
        std::vector<VerificationReport> rs, rp;
        double ts = time_best_of(3, [&] { rs = verify_all(cat, Exec::Serial); });
        double tp = time_best_of(3, [&] { rp = verify_all(cat, Exec::Parallel); });
        row("verify_all (19 rows)", ts, tp, rs == rp);
    }
    return 0;
}

// Compares the serial reference loops with the OpenMP kernels on the
// degreewise workloads: window dims, homology tables and window certificates.

#include <chrono>
#include <cstdio>
#include <string>

#include "oi/bounds.hpp"

using namespace oi;

namespace {

template <FieldType F>
Presentation<F> sample_presentation(const F& f) {
    Presentation<F> p{f, FreeModule{{2, 1, 0}}, {}};
    Element<F> w1;
    w1.degree = 3;
    w1.terms = {Term<F>{0, IncreasingMap({1, 2}, 3), f.one()},
                Term<F>{1, IncreasingMap({3}, 3), f.neg(f.one())}};
    normalize_element(f, w1);
    Element<F> w2;
    w2.degree = 3;
    w2.terms = {Term<F>{0, IncreasingMap({2, 3}, 3), f.one()},
                Term<F>{2, IncreasingMap({}, 3), f.from_int(2)}};
    normalize_element(f, w2);
    p.relations = {w1, w2};
    return p;
}

template <class Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

template <FieldType F>
void run(const char* field_name, const F& f, int top) {
    const auto p = sample_presentation(f);
    struct Row {
        std::string name;
        double serial_ms;
        double parallel_ms;
    };
    std::vector<Row> rows;

    std::vector<std::int64_t> dims_s, dims_p;
    rows.push_back({"window_dims[0.." + std::to_string(top) + "]",
                    time_ms([&] { dims_s = window_dims(p, 0, top, Exec::serial); }),
                    time_ms([&] { dims_p = window_dims(p, 0, top, Exec::parallel); })});
    if (dims_s != dims_p) {
        std::fprintf(stderr, "mismatch between serial and parallel dims\n");
        std::exit(1);
    }

    HomologyTable h1_s, h1_p;
    rows.push_back({"h1_dims", time_ms([&] { h1_s = h1_dims(p, Exec::serial); }),
                    time_ms([&] { h1_p = h1_dims(p, Exec::parallel); })});
    if (!(h1_s == h1_p)) {
        std::fprintf(stderr, "mismatch between serial and parallel h1\n");
        std::exit(1);
    }

    const int r = prd(p);
    Certificate c_s, c_p;
    rows.push_back({"check_kappa_vbar[w=" + std::to_string(top) + "]",
                    time_ms([&] { c_s = check_kappa_vbar(p, r, top, Exec::serial); }),
                    time_ms([&] { c_p = check_kappa_vbar(p, r, top, Exec::parallel); })});
    if (c_s.pass != c_p.pass) {
        std::fprintf(stderr, "mismatch between serial and parallel certificates\n");
        std::exit(1);
    }

    std::printf("field=%s\n", field_name);
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial(ms)", "openmp(ms)", "speedup");
    for (const auto& row : rows)
        std::printf("%-28s %12.1f %12.1f %7.2fx\n", row.name.c_str(), row.serial_ms,
                    row.parallel_ms, row.serial_ms / (row.parallel_ms > 0 ? row.parallel_ms : 1));
    std::printf("\n");
}

} // namespace

int main(int argc, char** argv) {
    int top = 11;
    if (argc > 1) top = std::stoi(argv[1]);
#ifdef _OPENMP
    std::printf("openmp threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without openmp: both columns run the serial path\n\n");
#endif
    run("F_5", PrimeField{5}, top);
    run("Q", RationalField{}, top);
    return 0;
}

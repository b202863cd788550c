#pragma once

#include <string>

#include "oi/parallel.hpp"
#include "oi/presentation.hpp"

namespace oi::engine {

/// Outcome of one command: a human-readable table, a canonical machine
/// line (deterministic byte-for-byte), and the process exit code.
struct Report {
    std::string table;
    std::string machine;
    int exit_code = 0;
};

struct Options {
    Exec exec = Exec::parallel;
    bool force = false; // run past theorem hypotheses, marked exploratory
};

Report run_dims(const PresentationData& data, int from, int to, const Options& opt);
Report run_h0(const PresentationData& data, const Options& opt);
Report run_h1(const PresentationData& data, const Options& opt);
Report run_t0t1(const PresentationData& data, const Options& opt);
Report run_shift(const PresentationData& data, int r, const Options& opt);
Report run_vbar(const PresentationData& data, int r, const Options& opt);
Report run_check_kappa_vbar(const PresentationData& data, int r, int window, const Options& opt);
Report run_verify_what_span(const PresentationData& data, int r, int window, const Options& opt);
Report run_bound(const PresentationData& data, const Options& opt);
Report run_fit(const PresentationData& data, int from, int to, const Options& opt);
Report run_semi_induced(const PresentationData& data, const Options& opt);
Report run_filtration(const PresentationData& data, const Options& opt);
Report run_h(const PresentationData& data, int i, int bound, const Options& opt);
Report run_std(const PresentationData& data, int max_shift, const Options& opt);

} // namespace oi::engine

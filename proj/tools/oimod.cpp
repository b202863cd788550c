#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "oi/engine.hpp"

namespace {

struct Fixture {
    const char* name;
    const char* content;
};

constexpr Fixture kFixtures[] = {
    {"ramos.json",
     R"({"field":{"kind":"rationals"},"generators":[1],"relations":[{"degree":2,"terms":[{"coeff":"1","gen":0,"map":[1]}]}]})"},
    {"example42.json", R"({"field":{"kind":"rationals"},"generators":[1,0],"relations":[]})"},
    {"m0.json", R"({"field":{"kind":"rationals"},"generators":[0],"relations":[]})"},
    {"m1.json", R"({"field":{"kind":"rationals"},"generators":[1],"relations":[]})"},
    {"m2.json", R"({"field":{"kind":"rationals"},"generators":[2],"relations":[]})"},
    {"m3.json", R"({"field":{"kind":"rationals"},"generators":[3],"relations":[]})"},
};

int write_fixtures(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& fx : kFixtures) {
        const auto path = std::filesystem::path(dir) / fx.name;
        std::ofstream out(path);
        if (!out) throw oi::SchemaError("cannot write '" + path.string() + "'");
        out << fx.content << "\n";
        std::cout << path.string() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finitely presented OI-modules"};
    app.require_subcommand(1);

    std::string input;
    bool machine = false;
    bool force = false;
    bool serial = false;
    int cap = oi::degree_cap();
    app.add_flag("--machine", machine, "emit canonical machine-readable output");
    app.add_flag("--force", force, "run past theorem hypotheses (marked exploratory)");
    app.add_flag("--serial", serial, "disable the parallel degreewise kernels");
    app.add_option("--cap", cap, "degree cap guarding combinatorial blowup")
        ->envname("OI_DEGREE_CAP");

    int from = 0, to = 0, r = 0, window = 0, homology_index = 0, bound = 0, max_shift = 0;
    std::string fixtures_dir;
    std::function<oi::engine::Report(const oi::PresentationData&, const oi::engine::Options&)> run;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "presentation file")->required();
    };

    auto* c_dims = app.add_subcommand("dims", "dimensions of V on a degree window");
    c_dims->add_option("--from", from)->required();
    c_dims->add_option("--to", to)->required();
    add_input(c_dims);
    c_dims->callback([&] {
        run = [&](const auto& d, const auto& o) { return oi::engine::run_dims(d, from, to, o); };
    });

    auto* c_h0 = app.add_subcommand("h0", "H_0 dimension table");
    add_input(c_h0);
    c_h0->callback([&] { run = oi::engine::run_h0; });

    auto* c_h1 = app.add_subcommand("h1", "H_1 dimension table");
    add_input(c_h1);
    c_h1->callback([&] { run = oi::engine::run_h1; });

    auto* c_t = app.add_subcommand("t0t1", "generation, relation and presentation degrees");
    add_input(c_t);
    c_t->callback([&] { run = oi::engine::run_t0t1; });

    auto* c_shift = app.add_subcommand("shift", "presentation of the shift by r");
    c_shift->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);
    add_input(c_shift);
    c_shift->callback([&] {
        run = [&](const auto& d, const auto& o) { return oi::engine::run_shift(d, r, o); };
    });

    auto* c_vbar = app.add_subcommand("vbar", "presentation of V-bar");
    c_vbar->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);
    add_input(c_vbar);
    c_vbar->callback([&] {
        run = [&](const auto& d, const auto& o) { return oi::engine::run_vbar(d, r, o); };
    });

    auto* c_kappa = app.add_subcommand("check-kappa-vbar", "certify kappa(V-bar) = 0 on a window");
    c_kappa->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);
    c_kappa->add_option("--window", window)->required();
    add_input(c_kappa);
    c_kappa->callback([&] {
        run = [&](const auto& d, const auto& o) {
            return oi::engine::run_check_kappa_vbar(d, r, window, o);
        };
    });

    auto* c_span = app.add_subcommand("verify-what-span",
                                      "compare hat generator spans with the projected shift");
    c_span->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);
    c_span->add_option("--window", window)->required();
    add_input(c_span);
    c_span->callback([&] {
        run = [&](const auto& d, const auto& o) {
            return oi::engine::run_verify_what_span(d, r, window, o);
        };
    });

    auto* c_bound = app.add_subcommand("bound", "regularity and onset bounds");
    add_input(c_bound);
    c_bound->callback([&] { run = oi::engine::run_bound; });

    auto* c_fit = app.add_subcommand("fit", "exact polynomial fit of the Hilbert function");
    c_fit->add_option("--from", from)->required();
    c_fit->add_option("--to", to)->required();
    add_input(c_fit);
    c_fit->callback([&] {
        run = [&](const auto& d, const auto& o) { return oi::engine::run_fit(d, from, to, o); };
    });

    auto* c_semi = app.add_subcommand("semi-induced", "complete semi-inducedness certificate");
    add_input(c_semi);
    c_semi->callback([&] { run = oi::engine::run_semi_induced; });

    auto* c_filt = app.add_subcommand("filtration", "induced filtration multiplicities");
    add_input(c_filt);
    c_filt->callback([&] { run = oi::engine::run_filtration; });

    auto* c_h = app.add_subcommand("h", "windowed higher homology table");
    c_h->add_option("--i", homology_index)->required()->check(CLI::NonNegativeNumber);
    c_h->add_option("--bound", bound)->required();
    add_input(c_h);
    c_h->callback([&] {
        run = [&](const auto& d, const auto& o) {
            return oi::engine::run_h(d, homology_index, bound, o);
        };
    });

    auto* c_std = app.add_subcommand("std", "empirical stable degree probe");
    c_std->add_option("--max-shift", max_shift)->required()->check(CLI::NonNegativeNumber);
    add_input(c_std);
    c_std->callback([&] {
        run = [&](const auto& d, const auto& o) { return oi::engine::run_std(d, max_shift, o); };
    });

    auto* c_fix = app.add_subcommand("fixtures", "write the bundled example presentations");
    c_fix->add_option("--dir", fixtures_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        oi::set_degree_cap(cap);
        if (c_fix->parsed()) return write_fixtures(fixtures_dir);
        oi::engine::Options opt;
        opt.force = force;
        opt.exec = serial ? oi::Exec::serial : oi::Exec::parallel;
        const auto data = oi::load_presentation(input);
        const auto report = run(data, opt);
        std::cout << (machine ? report.machine : report.table);
        return report.exit_code;
    } catch (const oi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

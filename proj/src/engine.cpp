#include "oi/engine.hpp"

#include <sstream>

#include <json.hpp>

#include "oi/bounds.hpp"

namespace oi::engine {

namespace {

using nlohmann::json;

json table_json(const HomologyTable& t) {
    json dims = json::object();
    for (const auto& [deg, dim] : t.dims) dims[std::to_string(deg)] = dim;
    return json{{"i", t.index}, {"dims", dims}, {"certified_through", t.certified_through}};
}

std::string table_text(const HomologyTable& t) {
    std::ostringstream os;
    os << "i=" << t.index << " certified_through=" << t.certified_through << "\n";
    if (t.dims.empty()) os << "(zero)\n";
    for (const auto& [deg, dim] : t.dims) os << deg << ": " << dim << "\n";
    return os.str();
}

json certificate_json(const Certificate& c) {
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    json j{{"check", c.check},
           {"params", params},
           {"window", c.window},
           {"pass", c.pass},
           {"first_failure", nullptr}};
    if (c.first_failure) j["first_failure"] = *c.first_failure;
    if (c.exploratory) j["exploratory"] = "hypothesis unmet";
    return j;
}

Report certificate_report(const Certificate& c) {
    Report rep;
    std::ostringstream os;
    os << "check=" << c.check;
    for (const auto& [k, v] : c.params) os << " " << k << "=" << v;
    os << " window=" << c.window << " " << (c.pass ? "pass" : "FAIL");
    if (c.first_failure) os << " first_failure=" << *c.first_failure;
    if (c.exploratory) os << " (exploratory: hypothesis unmet)";
    os << "\n";
    rep.table = os.str();
    rep.machine = certificate_json(c).dump() + "\n";
    rep.exit_code = c.pass ? 0 : 1;
    return rep;
}

std::string polynomial_text(const std::vector<Rational>& coeffs) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0 && coeffs.size() > 1) continue;
        if (!first) os << " + ";
        os << coeffs[k].get_str();
        if (k >= 1) os << "*n";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

Report presentation_report(const PresentationData& out) {
    Report rep;
    std::ostringstream os;
    os << "generators:";
    for (int d : out.generators) os << " " << d;
    os << "\nrelations: " << out.relations.size() << "\n";
    rep.table = os.str();
    rep.machine = serialize_presentation(out) + "\n";
    return rep;
}

template <class Fn>
decltype(auto) dispatch(const PresentationData& data, Fn&& fn) {
    return with_field(data.field, [&](auto field) {
        auto pres = instantiate(field, data);
        return fn(std::move(pres));
    });
}

} // namespace

Report run_dims(const PresentationData& data, int from, int to, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto dims = window_dims(p, from, to, opt.exec);
        Report rep;
        std::ostringstream os;
        for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
        os << "\n";
        rep.table = os.str();
        rep.machine = json{{"from", from}, {"to", to}, {"dims", dims}}.dump() + "\n";
        return rep;
    });
}

Report run_h0(const PresentationData& data, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto t = h0_dims(p, opt.exec);
        return Report{table_text(t), table_json(t).dump() + "\n", 0};
    });
}

Report run_h1(const PresentationData& data, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto t = h1_dims(p, opt.exec);
        return Report{table_text(t), table_json(t).dump() + "\n", 0};
    });
}

Report run_t0t1(const PresentationData& data, const Options& opt) {
    return dispatch(data, [&](auto p) {
        const int d0 = t0(p, opt.exec);
        const int d1 = t1(p, opt.exec);
        Report rep;
        std::ostringstream os;
        os << "t0=" << d0 << " t1=" << d1 << " prd=" << std::max(d0, d1) << "\n";
        rep.table = os.str();
        rep.machine = json{{"t0", d0}, {"t1", d1}, {"prd", std::max(d0, d1)}}.dump() + "\n";
        return rep;
    });
}

Report run_shift(const PresentationData& data, int r, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto [shifted, dec] = shift_presentation(p, r);
        (void)dec;
        (void)opt;
        return presentation_report(to_data(shifted));
    });
}

Report run_vbar(const PresentationData& data, int r, const Options& opt) {
    return dispatch(data, [&](auto p) {
        if (r < prd(p, opt.exec) && !opt.force)
            throw HypothesisError("vbar: r is below prd; pass --force for an exploratory run");
        auto vbar = vbar_presentation(p, r, opt.exec);
        return presentation_report(to_data(vbar));
    });
}

Report run_check_kappa_vbar(const PresentationData& data, int r, int window, const Options& opt) {
    return dispatch(data, [&](auto p) {
        return certificate_report(check_kappa_vbar(p, r, window, opt.exec, opt.force));
    });
}

Report run_verify_what_span(const PresentationData& data, int r, int window, const Options& opt) {
    return dispatch(data, [&](auto p) {
        if (r < prd(p, opt.exec) && !opt.force)
            throw HypothesisError(
                "verify-what-span: r is below prd; pass --force for an exploratory run");
        return certificate_report(verify_what_span(p, r, window, opt.exec));
    });
}

Report run_bound(const PresentationData& data, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto b = reg_bound(p, opt.exec);
        Report rep;
        std::ostringstream os;
        if (b.degenerate) {
            os << "zero module: reg=-1\n";
        } else {
            os << "t0=" << b.t0 << " t1=" << b.t1 << " prd=" << b.prd
               << " reg_bound=" << b.reg_bound.get_str() << " c_bound=" << b.c_bound.get_str()
               << " filtration=" << b.filtration_size_bound.get_str() << "\n";
        }
        rep.table = os.str();
        rep.machine = json{{"t0", b.t0},
                           {"t1", b.t1},
                           {"prd", b.prd},
                           {"degenerate", b.degenerate},
                           {"c_bound", b.c_bound.get_str()},
                           {"reg_bound", b.reg_bound.get_str()},
                           {"onset_bound", b.onset_bound.get_str()},
                           {"filtration_size_bound", b.filtration_size_bound.get_str()}}
                          .dump() +
                      "\n";
        return rep;
    });
}

Report run_fit(const PresentationData& data, int from, int to, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto fit = hilbert_poly_fit(p, from, to, opt.exec);
        Report rep;
        std::ostringstream os;
        os << "window=[" << fit.from << "," << fit.to << "]";
        if (fit.found)
            os << " onset=" << fit.empirical_onset << " P(n) = " << polynomial_text(fit.polynomial);
        else
            os << " no polynomial tail found (window may precede the onset)";
        os << "\n";
        rep.table = os.str();
        json coeffs = json::array();
        for (const auto& c : fit.polynomial) coeffs.push_back(c.get_str());
        rep.machine = json{{"from", fit.from},
                           {"to", fit.to},
                           {"values", fit.values},
                           {"found", fit.found},
                           {"empirical_onset", fit.empirical_onset},
                           {"polynomial", coeffs}}
                          .dump() +
                      "\n";
        return rep;
    });
}

Report run_semi_induced(const PresentationData& data, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto cert = is_semi_induced(p, opt.exec);
        Report rep;
        std::ostringstream os;
        os << "semi-induced: " << (cert.verdict ? "yes" : "no");
        if (cert.witness_degree) os << " (witness degree " << *cert.witness_degree << ")";
        os << "\n";
        rep.table = os.str();
        json j{{"verdict", cert.verdict},
               {"h1", table_json(cert.h1_table)},
               {"witness_degree", nullptr}};
        if (cert.witness_degree) j["witness_degree"] = *cert.witness_degree;
        rep.machine = j.dump() + "\n";
        rep.exit_code = cert.verdict ? 0 : 1;
        return rep;
    });
}

Report run_filtration(const PresentationData& data, const Options& opt) {
    return dispatch(data, [&](auto p) {
        const bool semi = is_semi_induced(p, opt.exec).verdict;
        if (!semi && !opt.force)
            throw HypothesisError(
                "filtration: module is not semi-induced; pass --force for an exploratory run");
        auto mult = filtration_multiplicities(p, opt.exec, true);
        Report rep;
        std::ostringstream os;
        for (const auto& [deg, m] : mult) os << deg << ": " << m << "\n";
        if (!semi) os << "(exploratory: hypothesis unmet)\n";
        rep.table = os.str();
        json dims = json::object();
        for (const auto& [deg, m] : mult) dims[std::to_string(deg)] = m;
        json j{{"multiplicities", dims}};
        if (!semi) j["exploratory"] = "hypothesis unmet";
        rep.machine = j.dump() + "\n";
        return rep;
    });
}

Report run_h(const PresentationData& data, int i, int bound, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto t = h_dims(p, i, bound, opt.exec);
        return Report{table_text(t), table_json(t).dump() + "\n", 0};
    });
}

Report run_std(const PresentationData& data, int max_shift, const Options& opt) {
    return dispatch(data, [&](auto p) {
        auto [seq, best] = std_empirical(p, max_shift, opt.exec);
        Report rep;
        std::ostringstream os;
        os << "t0 per shift:";
        for (int v : seq) os << " " << v;
        os << "\nmin=" << best << "\n";
        rep.table = os.str();
        rep.machine = json{{"max_shift", max_shift}, {"t0_sequence", seq}, {"min", best}}.dump() + "\n";
        return rep;
    });
}

} // namespace oi::engine

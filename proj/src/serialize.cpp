#include "densepart/serialize.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace densepart {

using json = nlohmann::ordered_json;

namespace {

json optional_number(const std::optional<double>& x) {
    if (!x || !std::isfinite(*x)) return nullptr;
    return *x;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const SubsetDensity& s) {
    json vertices = json::array();
    for (int v : s.subset) vertices.push_back(v + 1);
    return {{"vertices", vertices},
            {"spanned_edges", s.spanned_edges},
            {"pairs", s.pairs},
            {"density", s.sigma()}};
}

json to_json(const ApproxResult& res, const std::optional<SubsetDensity>& subset) {
    json j;
    j["mode"] = to_string(res.mode);
    j["n"] = res.n;
    j["m"] = res.m;
    j["gamma"] = res.gamma;
    j["alpha"] = optional_number(res.alpha);
    j["order_used"] = res.mode == Mode::Exact ? json(nullptr) : json(res.order_used);
    j["ln_den"] = finite_or_null(res.ln_den);
    j["certified_density"] = finite_or_null(res.certified_density);
    j["error_bound"] = optional_number(res.error_bound);
    j["budget_limited"] = res.budget_limited;
    if (res.mode == Mode::Rigorous) j["zero_free_certified"] = res.zero_free_certified;
    if (subset) j["subset"] = to_json(*subset);
    return j;
}

json to_json(const ZeroFreeParams& p) {
    json j = {{"delta", p.delta}, {"theta", p.theta}, {"eta", p.eta},
              {"lambda", p.lambda}, {"omega", p.omega}, {"m", p.m}};
    j["rho"] = optional_number(p.rho);
    return j;
}

json to_json(const ZeroExperimentSummary& s) {
    return {{"n", s.n},
            {"m", s.m},
            {"r", s.r_param},
            {"tau", s.tau},
            {"trials", s.trials},
            {"disc_radius", s.disc_radius},
            {"threshold_n", s.threshold_n},
            {"above_threshold", s.above_threshold},
            {"in_disc", s.in_disc_count},
            {"failures", s.failures},
            {"frequency", s.frequency},
            {"bound", s.bound}};
}

json to_json(const ZeroExperimentRecord& r, bool with_timing) {
    json roots = json::array();
    for (const auto& z : r.roots) roots.push_back({z.real(), z.imag()});
    json j = {{"trial", r.trial},
              {"trial_seed", r.trial_seed},
              {"n", r.n},
              {"m", r.m},
              {"r", r.r_param},
              {"tau", r.tau},
              {"min_root_modulus", finite_or_null(r.min_root_modulus)},
              {"in_disc", r.in_disc},
              {"converged", r.converged},
              {"roots", roots}};
    if (with_timing) j["wall_time"] = r.wall_time;
    return j;
}

json to_json(const SweepRecord& r) {
    json j = {{"graph_seed", r.graph_seed}, {"n", r.n},         {"m", r.m},
              {"p", r.p},                   {"alpha", r.alpha}, {"gamma", r.gamma},
              {"order", r.order}};
    if (r.failure) {
        j["failure"] = *r.failure;
    } else {
        j["estimate"] = r.estimate;
        j["oracle"] = r.oracle;
        j["abs_error"] = r.abs_error;
    }
    return j;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_zero_csv(std::ostream& out, const std::vector<ZeroExperimentRecord>& records, bool with_timing) {
    out << "trial,trial_seed,n,m,r,tau,min_root_modulus,in_disc,converged,roots";
    if (with_timing) out << ",wall_time";
    out << "\r\n";
    for (const auto& r : records) {
        std::string roots;
        for (std::size_t k = 0; k < r.roots.size(); ++k) {
            if (k) roots += ';';
            roots += format_double(r.roots[k].real()) + (r.roots[k].imag() < 0 ? "" : "+") +
                     format_double(r.roots[k].imag()) + "i";
        }
        out << r.trial << ',' << r.trial_seed << ',' << r.n << ',' << r.m << ',' << format_double(r.r_param) << ','
            << format_double(r.tau) << ',' << format_double(r.min_root_modulus) << ',' << (r.in_disc ? 1 : 0)
            << ',' << (r.converged ? 1 : 0) << ',' << csv_field(roots);
        if (with_timing) out << ',' << format_double(r.wall_time);
        out << "\r\n";
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << "graph_seed,n,m,p,alpha,gamma,order,estimate,oracle,abs_error,failure\r\n";
    for (const auto& r : records) {
        out << r.graph_seed << ',' << r.n << ',' << r.m << ',' << format_double(r.p) << ','
            << format_double(r.alpha) << ',' << format_double(r.gamma) << ',' << r.order << ',';
        if (r.failure) {
            out << ",,," << csv_field(*r.failure);
        } else {
            out << format_double(r.estimate) << ',' << format_double(r.oracle) << ','
                << format_double(r.abs_error) << ',';
        }
        out << "\r\n";
    }
}

}  // namespace densepart

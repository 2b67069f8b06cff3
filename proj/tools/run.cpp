#include "run.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>

#include "tpjc/compare.hpp"
#include "tpjc/evolve.hpp"
#include "tpjc/operators.hpp"
#include "tpjc/pg_series.hpp"

namespace tpjc::cli {

namespace {

// All numeric output goes through snprintf in the "C" locale so identical
// configs produce byte-identical files.
std::string num12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string num17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> make_linspace(double lo, double hi, int count) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    return grid;
}

double parse_config_double(const std::string& key, const std::string& text) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty()) {
        throw std::invalid_argument("config value for '" + key +
                                    "' is not a number: '" + text + "'");
    }
    return v;
}

int parse_config_int(const std::string& key, const std::string& text) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty()) {
        throw std::invalid_argument("config value for '" + key +
                                    "' is not an integer: '" + text + "'");
    }
    return static_cast<int>(v);
}

std::vector<double> parse_eta_list(const std::string& text) {
    std::vector<double> out;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        out.push_back(parse_config_double("eta-list", piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) {
        throw std::invalid_argument("eta-list must contain at least one value");
    }
    return out;
}

// Bound targets plus the option handles needed to tell an explicit flag from
// a still-default value when overlaying the config file.
struct VerbOptions {
    RunConfig cfg;
    double r_ratio = 1.0;
    std::string config_path;

    CLI::Option* model = nullptr;
    CLI::Option* nu = nullptr;
    CLI::Option* omega_c = nullptr;
    CLI::Option* delta = nullptr;
    CLI::Option* g1 = nullptr;
    CLI::Option* g2 = nullptr;
    CLI::Option* eta = nullptr;
    CLI::Option* r_ratio_opt = nullptr;
    CLI::Option* alpha = nullptr;
    CLI::Option* fock_m = nullptr;
    CLI::Option* beta = nullptr;
    CLI::Option* fock_p = nullptr;
    CLI::Option* tau_min = nullptr;
    CLI::Option* tau_max = nullptr;
    CLI::Option* tau_points = nullptr;
    CLI::Option* eps = nullptr;
    CLI::Option* out = nullptr;
};

void add_run_options(CLI::App* cmd, VerbOptions& o, const std::string& model_default) {
    o.cfg.model = model_default;
    o.model = cmd->add_option("--model", o.cfg.model,
                              "Model tier: effective, carrier, full (pg) or compare");
    o.nu = cmd->add_option("--nu", o.cfg.nu, "Trap frequency");
    o.omega_c = cmd->add_option("--omega-c", o.cfg.omega_c, "Cavity frequency");
    o.delta = cmd->add_option("--delta", o.cfg.delta, "Intermediate-level detuning");
    o.g1 = cmd->add_option("--g1", o.cfg.g1, "Lower-leg coupling");
    o.g2 = cmd->add_option("--g2", o.cfg.g2, "Upper-leg coupling");
    o.eta = cmd->add_option("--eta", o.cfg.eta, "Lamb-Dicke parameter");
    o.r_ratio_opt = cmd->add_option("--r-ratio", o.r_ratio,
                                    "Coupling ratio g1/g2; sets g1 = r * g2");
    o.alpha = cmd->add_option("--alpha", o.cfg.alpha,
                              "Motion prepared coherent with this amplitude");
    o.fock_m = cmd->add_option("--fock-m", o.cfg.fock_m,
                               "Motion prepared in this Fock level");
    o.beta = cmd->add_option("--beta", o.cfg.beta,
                             "Field prepared coherent with this amplitude");
    o.fock_p = cmd->add_option("--fock-p", o.cfg.fock_p,
                               "Field prepared in this Fock level");
    o.tau_min = cmd->add_option("--tau-min", o.cfg.tau_min, "Grid start (dimensionless)");
    o.tau_max = cmd->add_option("--tau-max", o.cfg.tau_max, "Grid end (dimensionless)");
    o.tau_points = cmd->add_option("--tau-points", o.cfg.tau_points, "Grid size");
    o.eps = cmd->add_option("--eps", o.cfg.eps, "Truncation tolerance");
    o.out = cmd->add_option("--out", o.cfg.output_path, "Output file (default: stdout)");
    cmd->add_option("--config", o.config_path, "key=value config file; flags win");

    // Same-layer contradictions are rejected outright.
    o.alpha->excludes(o.fock_m);
    o.beta->excludes(o.fock_p);
    o.r_ratio_opt->excludes(o.g1);
}

// Applies the config file underneath whatever the flags already set and
// resolves the preparation / coupling-ratio shorthands. `consumed` tracking
// turns leftover keys into diagnostics instead of silent ignores.
RunConfig resolve_run_config(const VerbOptions& o) {
    RunConfig cfg = o.cfg;
    std::map<std::string, std::string> file;
    if (!o.config_path.empty()) {
        file = read_config_file(o.config_path);
    }
    std::set<std::string> consumed;

    const auto file_value = [&](const char* key) -> const std::string* {
        const auto it = file.find(key);
        if (it == file.end()) return nullptr;
        consumed.insert(key);
        return &it->second;
    };
    const auto overlay_double = [&](CLI::Option* opt, const char* key, double& target) {
        const std::string* v = file_value(key);
        if (v && opt->count() == 0) target = parse_config_double(key, *v);
    };
    const auto overlay_int = [&](CLI::Option* opt, const char* key, int& target) {
        const std::string* v = file_value(key);
        if (v && opt->count() == 0) target = parse_config_int(key, *v);
    };

    if (const std::string* v = file_value("model"); v && o.model->count() == 0) {
        cfg.model = *v;
    }
    overlay_double(o.nu, "nu", cfg.nu);
    overlay_double(o.omega_c, "omega-c", cfg.omega_c);
    overlay_double(o.delta, "delta", cfg.delta);
    overlay_double(o.g2, "g2", cfg.g2);
    overlay_double(o.eta, "eta", cfg.eta);
    overlay_double(o.tau_min, "tau-min", cfg.tau_min);
    overlay_double(o.tau_max, "tau-max", cfg.tau_max);
    overlay_int(o.tau_points, "tau-points", cfg.tau_points);
    overlay_double(o.eps, "eps", cfg.eps);
    if (const std::string* v = file_value("out"); v && o.out->count() == 0) {
        cfg.output_path = *v;
    }

    // Couplings: an explicit g1 and the ratio shorthand are alternatives.
    // Within one layer both is a contradiction; across layers flags win.
    const std::string* g1_file = file_value("g1");
    const std::string* r_file = file_value("r-ratio");
    if (o.r_ratio_opt->count() > 0) {
        cfg.g1 = o.r_ratio * cfg.g2;
    } else if (o.g1->count() > 0) {
        // keep the flag value already in cfg.g1
    } else if (g1_file && r_file) {
        throw std::invalid_argument("config file sets both g1 and r-ratio");
    } else if (r_file) {
        cfg.g1 = parse_config_double("r-ratio", *r_file) * cfg.g2;
    } else if (g1_file) {
        cfg.g1 = parse_config_double("g1", *g1_file);
    }

    // Preparation, one mode at a time: a coherent amplitude and a Fock level
    // are alternatives in the same way.
    const std::string* alpha_file = file_value("alpha");
    const std::string* fock_m_file = file_value("fock-m");
    if (o.alpha->count() > 0) {
        cfg.motion_coherent = true;
    } else if (o.fock_m->count() > 0) {
        cfg.motion_coherent = false;
    } else if (alpha_file && fock_m_file) {
        throw std::invalid_argument("config file sets both alpha and fock-m");
    } else if (alpha_file) {
        cfg.motion_coherent = true;
        cfg.alpha = parse_config_double("alpha", *alpha_file);
    } else if (fock_m_file) {
        cfg.fock_m = parse_config_int("fock-m", *fock_m_file);
    }

    const std::string* beta_file = file_value("beta");
    const std::string* fock_p_file = file_value("fock-p");
    if (o.beta->count() > 0) {
        cfg.field_coherent = true;
    } else if (o.fock_p->count() > 0) {
        cfg.field_coherent = false;
    } else if (beta_file && fock_p_file) {
        throw std::invalid_argument("config file sets both beta and fock-p");
    } else if (beta_file) {
        cfg.field_coherent = true;
        cfg.beta = parse_config_double("beta", *beta_file);
    } else if (fock_p_file) {
        cfg.fock_p = parse_config_int("fock-p", *fock_p_file);
    }

    for (const auto& [key, value] : file) {
        if (!consumed.count(key)) {
            throw std::invalid_argument("unknown config key: '" + key + "'");
        }
    }
    return cfg;
}

void write_preamble(std::ostream& os, const std::string& verb_line,
                    const RunConfig& cfg) {
    os << "# tpjc " << verb_line << "\n";
    os << "# model=" << cfg.model << "\n";
    os << "# nu=" << num17(cfg.nu) << "\n";
    os << "# omega-c=" << num17(cfg.omega_c) << "\n";
    os << "# delta=" << num17(cfg.delta) << "\n";
    os << "# g1=" << num17(cfg.g1) << "\n";
    os << "# g2=" << num17(cfg.g2) << "\n";
    os << "# eta=" << num17(cfg.eta) << "\n";
    if (cfg.motion_coherent) {
        os << "# alpha=" << num17(cfg.alpha) << "\n";
    } else {
        os << "# fock-m=" << cfg.fock_m << "\n";
    }
    if (cfg.field_coherent) {
        os << "# beta=" << num17(cfg.beta) << "\n";
    } else {
        os << "# fock-p=" << cfg.fock_p << "\n";
    }
    os << "# tau-min=" << num17(cfg.tau_min) << "\n";
    os << "# tau-max=" << num17(cfg.tau_max) << "\n";
    os << "# tau-points=" << cfg.tau_points << "\n";
    os << "# eps=" << num17(cfg.eps) << "\n";
}

// Run target resolution: an explicit --out opens a file, otherwise the
// stream handed to run_cli is used.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            m_os = &fallback;
            return;
        }
        m_file.open(path, std::ios::binary);
        if (!m_file) {
            throw std::invalid_argument("cannot open output file: " + path);
        }
        m_os = &m_file;
    }

    std::ostream& stream() { return *m_os; }

    void finish() {
        m_os->flush();
        if (!*m_os) {
            throw std::runtime_error("failed while writing output");
        }
    }

private:
    std::ofstream m_file;
    std::ostream* m_os = nullptr;
};

// The numeric tiers evolve a prepared state from tau = 0 even when the
// requested grid starts later, so a positive tau-min only changes which
// samples are reported, not the trajectory.
struct NumericGrid {
    std::vector<double> tau;  // integration grid
    size_t skip = 0;          // leading samples not reported
};

NumericGrid integration_grid(const RunConfig& cfg) {
    NumericGrid grid;
    grid.tau = cfg.tau_grid();
    if (grid.tau.front() > 0.0) {
        grid.tau.insert(grid.tau.begin(), 0.0);
        grid.skip = 1;
    }
    return grid;
}

void run_pg(const RunConfig& cfg, std::ostream& fallback_out) {
    cfg.validate();
    if (cfg.model == "compare") {
        throw std::invalid_argument("model=compare is served by the compare verb");
    }
    const SystemParams params = cfg.system();
    const Preparation prep = cfg.preparation();
    OutputTarget target(cfg.output_path, fallback_out);
    std::ostream& os = target.stream();

    if (cfg.model == "effective") {
        const PgSeries series = pg_series(params, prep, cfg.tau_grid(), cfg.eps);
        write_preamble(os, "pg", cfg);
        os << "# solver: " << series.model_tag << "\n";
        os << "# truncation deficit " << num12(series.truncation_deficit) << "\n";
        if (series.truncation_warning) {
            os << "# warning: truncation deficit exceeds eps\n";
        }
        os << "tau,p_g\n";
        for (size_t i = 0; i < series.tau.size(); ++i) {
            os << num12(series.tau[i]) << ',' << num12(series.values[i]) << "\n";
        }
        target.finish();
        return;
    }

    // Numeric tiers: carrier or full, propagated in the lab frame on the
    // preparation's truncation plus motional headroom for the standing wave.
    const NumericGrid grid = integration_grid(cfg);
    FockCutoffs cutoffs = truncation_bounds(prep, cfg.eps);
    if (params.eta > 0.0) {
        cutoffs.m_max += 8;
    }

    const bool coupled = params.g1 > 0.0 && params.g2 > 0.0;
    const double g_eff = coupled ? params.two_photon_coupling() : 0.0;
    std::vector<double> t_grid(grid.tau.size());
    for (size_t i = 0; i < grid.tau.size(); ++i) {
        t_grid[i] = (g_eff != 0.0) ? grid.tau[i] / g_eff : grid.tau[i];
    }

    double deficit = 0.0;
    const CompositeState psi0 =
        prepare_initial_state(prep, cutoffs, std::min(1.0, 2.0 * cfg.eps), &deficit);
    const Operator h = (cfg.model == "carrier")
                           ? build_carrier_hamiltonian(params, cutoffs)
                           : build_full_hamiltonian(params, cutoffs);
    const Trajectory traj = integrate_schrodinger(h, psi0, t_grid, {}, params.nu);

    write_preamble(os, "pg", cfg);
    os << "# solver: " << cfg.model << "-numeric\n";
    os << "# truncation deficit " << num12(deficit) << "\n";
    if (deficit > cfg.eps) {
        os << "# warning: truncation deficit exceeds eps\n";
    }
    os << "tau,p_g,p_r,p_e\n";
    for (size_t i = grid.skip; i < grid.tau.size(); ++i) {
        os << num12(grid.tau[i]) << ',' << num12(traj.population(i, Level::g))
           << ',' << num12(traj.population(i, Level::r)) << ','
           << num12(traj.population(i, Level::e)) << "\n";
    }
    target.finish();
}

void run_compare(const RunConfig& cfg, std::ostream& fallback_out) {
    cfg.validate();
    if (cfg.model != "compare") {
        throw std::invalid_argument("the compare verb requires model=compare");
    }
    const NumericGrid grid = integration_grid(cfg);
    const ComparisonReport report =
        compare_models(cfg.system(), cfg.preparation(), grid.tau, {}, cfg.eps);

    OutputTarget target(cfg.output_path, fallback_out);
    std::ostream& os = target.stream();
    write_preamble(os, "compare", cfg);
    if (report.truncation_deficit > cfg.eps) {
        os << "# warning: truncation deficit exceeds eps\n";
    }
    os << "metric,value\n";
    os << "ratio_delta_g," << num12(report.ratio_delta_g) << "\n";
    os << "ratio_nu_delta," << num12(report.ratio_nu_delta) << "\n";
    os << "max_dev_full_effective," << num12(report.max_dev_full_effective) << "\n";
    os << "max_dev_carrier_effective," << num12(report.max_dev_carrier_effective)
       << "\n";
    os << "max_dev_full_carrier," << num12(report.max_dev_full_carrier) << "\n";
    os << "max_pr_full," << num12(report.max_pr_full) << "\n";
    os << "max_pr_carrier," << num12(report.max_pr_carrier) << "\n";
    os << "truncation_deficit," << num12(report.truncation_deficit) << "\n";
    os << "m_max," << report.cutoffs.m_max << "\n";
    os << "n_max," << report.cutoffs.n_max << "\n";
    target.finish();
}

struct FigureOptions {
    std::string name;
    std::string eta_list_text;
    std::string out_dir = ".";
    double eps = 1e-10;
    double tau_min = 0.0;
    double tau_max = 0.0;
    int tau_points = 0;
    std::string config_path;

    CLI::Option* eta_list = nullptr;
    CLI::Option* out_dir_opt = nullptr;
    CLI::Option* eps_opt = nullptr;
    CLI::Option* tau_min_opt = nullptr;
    CLI::Option* tau_max_opt = nullptr;
    CLI::Option* tau_points_opt = nullptr;
};

std::string eta_tag(double eta) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", eta);
    std::string tag(buf);
    for (char& c : tag) {
        if (c == '.') c = 'p';
    }
    return tag;
}

void run_figure(const FigureOptions& o, std::ostream& err) {
    std::map<std::string, std::string> file;
    if (!o.config_path.empty()) {
        file = read_config_file(o.config_path);
    }
    std::set<std::string> consumed;
    const auto file_value = [&](const char* key) -> const std::string* {
        const auto it = file.find(key);
        if (it == file.end()) return nullptr;
        consumed.insert(key);
        return &it->second;
    };

    RunConfig base;
    base.model = "effective";
    base.eps = o.eps;
    if (const std::string* v = file_value("eps"); v && o.eps_opt->count() == 0) {
        base.eps = parse_config_double("eps", *v);
    }

    std::string out_dir = o.out_dir;
    if (const std::string* v = file_value("out-dir");
        v && o.out_dir_opt->count() == 0) {
        out_dir = *v;
    }

    std::string eta_text = o.eta_list_text;
    if (const std::string* v = file_value("eta-list");
        v && o.eta_list->count() == 0) {
        eta_text = *v;
    }
    const std::vector<double> etas = eta_text.empty()
                                         ? std::vector<double>{0.0, 0.05, 0.1,
                                                               0.2, 0.3, 0.5}
                                         : parse_eta_list(eta_text);
    for (double eta : etas) {
        if (!(eta >= 0.0) || !std::isfinite(eta)) {
            throw std::invalid_argument("eta-list entries must be >= 0");
        }
    }

    // Preparations and time spans the published traces use.
    if (o.name == "cv") {
        base.motion_coherent = true;
        base.alpha = 2.0;
        base.fock_p = 0;
        base.tau_max = 25.0;
        base.tau_points = 2000;
    } else if (o.name == "cc" || o.name == "sr") {
        base.motion_coherent = true;
        base.alpha = 2.0;
        base.field_coherent = true;
        base.beta = 2.0;
        if (o.name == "cc") {
            base.tau_max = 25.0;
            base.tau_points = 2000;
        } else {
            base.tau_max = 250.0;
            base.tau_points = 20000;
        }
    } else {
        throw std::invalid_argument("unknown figure name: '" + o.name +
                                    "' (expected cv, cc or sr)");
    }

    const auto overlay_double = [&](CLI::Option* opt, const char* key, double& target) {
        const std::string* v = file_value(key);
        if (opt->count() > 0) return;  // flag already wrote the struct field
        if (v) target = parse_config_double(key, *v);
    };
    if (o.tau_min_opt->count() > 0) base.tau_min = o.tau_min;
    if (o.tau_max_opt->count() > 0) base.tau_max = o.tau_max;
    if (o.tau_points_opt->count() > 0) base.tau_points = o.tau_points;
    overlay_double(o.tau_min_opt, "tau-min", base.tau_min);
    overlay_double(o.tau_max_opt, "tau-max", base.tau_max);
    if (const std::string* v = file_value("tau-points");
        v && o.tau_points_opt->count() == 0) {
        base.tau_points = parse_config_int("tau-points", *v);
    }

    for (const auto& [key, value] : file) {
        if (!consumed.count(key)) {
            throw std::invalid_argument("unknown config key: '" + key + "'");
        }
    }

    std::error_code dir_error;
    std::filesystem::create_directories(out_dir, dir_error);
    if (dir_error) {
        throw std::invalid_argument("cannot create output directory: " + out_dir);
    }

    for (double eta : etas) {
        RunConfig cfg = base;
        cfg.eta = eta;
        cfg.output_path = out_dir + "/" + o.name + "_eta" + eta_tag(eta) + ".csv";
        // The figure label rides along in the first comment line; everything
        // below it is the plain pg config that regenerates the file.
        const PgSeries series =
            pg_series(cfg.system(), cfg.preparation(), cfg.tau_grid(), cfg.eps);
        OutputTarget target(cfg.output_path, err);
        std::ostream& os = target.stream();
        write_preamble(os, "figure " + o.name, cfg);
        os << "# solver: " << series.model_tag << "\n";
        os << "# truncation deficit " << num12(series.truncation_deficit) << "\n";
        if (series.truncation_warning) {
            os << "# warning: truncation deficit exceeds eps\n";
        }
        os << "tau,p_g\n";
        for (size_t i = 0; i < series.tau.size(); ++i) {
            os << num12(series.tau[i]) << ',' << num12(series.values[i]) << "\n";
        }
        target.finish();
    }
}

} // namespace

void RunConfig::validate() const {
    if (model != "effective" && model != "carrier" && model != "full" &&
        model != "compare") {
        throw std::invalid_argument(
            "model must be one of effective, carrier, full, compare");
    }
    if (!std::isfinite(tau_min) || !std::isfinite(tau_max) || !(tau_min >= 0.0)) {
        throw std::invalid_argument("tau-min must be finite and >= 0");
    }
    if (!(tau_max > tau_min)) {
        throw std::invalid_argument("tau-max must exceed tau-min");
    }
    if (tau_points < 2) {
        throw std::invalid_argument("tau-points must be at least 2");
    }
    if (!(eps > 0.0) || !(eps < 1.0)) {
        throw std::invalid_argument("eps must lie in (0, 1)");
    }
    system().validate();  // finiteness / sign constraints on the parameters
    if (delta == 0.0 && g1 > 0.0 && g2 > 0.0) {
        throw std::invalid_argument(
            "delta must be non-zero when both couplings act");
    }
    if (motion_coherent && !std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be finite");
    }
    if (field_coherent && !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be finite");
    }
    if (!motion_coherent && fock_m < 0) {
        throw std::invalid_argument("fock-m must be >= 0");
    }
    if (!field_coherent && fock_p < 0) {
        throw std::invalid_argument("fock-p must be >= 0");
    }
}

SystemParams RunConfig::system() const {
    SystemParams p;
    p.nu = nu;
    p.omega_c = omega_c;
    p.delta = delta;
    p.g1 = g1;
    p.g2 = g2;
    p.eta = eta;
    return p;
}

Preparation RunConfig::preparation() const {
    Preparation prep;
    prep.motion = motion_coherent ? ModePrep::coherent_state(alpha)
                                  : ModePrep::fock_state(fock_m);
    prep.field = field_coherent ? ModePrep::coherent_state(beta)
                                : ModePrep::fock_state(fock_p);
    prep.level = Level::e;
    return prep;
}

std::vector<double> RunConfig::tau_grid() const {
    return make_linspace(tau_min, tau_max, tau_points);
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read config file: " + path);
    }
    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Trim whitespace from both ends.
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);
        if (body[0] == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("config file " + path + " line " +
                                        std::to_string(lineno) +
                                        ": expected key=value");
        }
        std::string key = body.substr(0, eq);
        std::string value = body.substr(eq + 1);
        const auto key_end = key.find_last_not_of(" \t");
        key = key.substr(0, key_end + 1);
        const auto value_begin = value.find_first_not_of(" \t");
        value = (value_begin == std::string::npos) ? "" : value.substr(value_begin);
        if (values.count(key)) {
            throw std::invalid_argument("config file " + path +
                                        ": duplicate key '" + key + "'");
        }
        values.emplace(std::move(key), std::move(value));
    }
    return values;
}

int run_cli(int argc, const char* const* argv, std::ostream& fallback_out,
            std::ostream& err) {
    CLI::App app{"Trapped-ion two-photon cavity dynamics toolkit"};
    app.name("tpjc");
    app.require_subcommand(1);

    VerbOptions pg_opts;
    CLI::App* pg = app.add_subcommand(
        "pg", "Emit a P_g(tau) dataset for one model tier");
    add_run_options(pg, pg_opts, "effective");

    VerbOptions cmp_opts;
    CLI::App* cmp = app.add_subcommand(
        "compare", "Audit the carrier / adiabatic-elimination approximations");
    add_run_options(cmp, cmp_opts, "compare");

    FigureOptions fig_opts;
    CLI::App* fig = app.add_subcommand(
        "figure", "Emit the dataset family behind one published figure");
    fig->add_option("name", fig_opts.name, "Figure name: cv, cc or sr")->required();
    fig_opts.eta_list =
        fig->add_option("--eta-list", fig_opts.eta_list_text,
                        "Comma-separated Lamb-Dicke sweep (default "
                        "0,0.05,0.1,0.2,0.3,0.5)");
    fig_opts.out_dir_opt =
        fig->add_option("--out-dir", fig_opts.out_dir, "Output directory");
    fig_opts.eps_opt = fig->add_option("--eps", fig_opts.eps, "Truncation tolerance");
    fig_opts.tau_min_opt =
        fig->add_option("--tau-min", fig_opts.tau_min, "Override the grid start");
    fig_opts.tau_max_opt =
        fig->add_option("--tau-max", fig_opts.tau_max, "Override the grid end");
    fig_opts.tau_points_opt =
        fig->add_option("--tau-points", fig_opts.tau_points, "Override the grid size");
    fig->add_option("--config", fig_opts.config_path,
                    "key=value config file; flags win");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, fallback_out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pg->parsed()) {
            run_pg(resolve_run_config(pg_opts), fallback_out);
        } else if (cmp->parsed()) {
            run_compare(resolve_run_config(cmp_opts), fallback_out);
        } else if (fig->parsed()) {
            run_figure(fig_opts, err);
        }
    } catch (const IntegrationError& e) {
        err << "error: " << e.what() << " (t = " << num12(e.time()) << ")\n";
        return 3;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << " (deficit " << num12(e.deficit()) << ")\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace tpjc::cli

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "../vendor/CLI11.hpp"
#include "contestlab/equilibrium.hpp"
#include "contestlab/errors.hpp"
#include "contestlab/feasible.hpp"
#include "contestlab/io.hpp"
#include "contestlab/optimal.hpp"
#include "contestlab/outcome.hpp"
#include "contestlab/simulate.hpp"
#include "contestlab/statics.hpp"

namespace cl = contestlab;

namespace {

constexpr const char* kVersion = "0.1.0";

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value) {
    if (opt != nullptr && opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("CONTESTLAB_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw cl::ValidationError("CONTESTLAB_SEED must be an unsigned integer");
        return v;
    }
    return 42;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cl::ValidationError("cannot open output file: " + path);
    out << content;
    if (!out) throw cl::ValidationError("failed writing output file: " + path);
}

// 64-bit hashes as hex strings: emitting them as JSON numbers invites
// silent truncation in consumers that read numbers as doubles.
std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string manifest_json(const std::string& command, std::uint64_t config_hash,
                          std::uint64_t seed, const std::vector<std::string>& outputs) {
    cl::JsonWriter w;
    w.begin_object();
    w.key("command").value(command);
    w.key("config_hash").value(hash_hex(config_hash));
    w.key("seed").value(seed);
    w.key("version").value(std::string(kVersion));
    w.key("outputs").begin_array();
    for (const auto& p : outputs) w.value(p);
    w.end_array();
    w.end_object();
    return w.str();
}

// Resolves the allocation either from explicit components (--v) or a named
// mechanism (--mechanism). Exactly one may be given; default is "standard".
cl::AllocationVector resolve_vector(const std::string& v_text, const std::string& mech_text,
                                    const cl::ContestConfig& config) {
    if (!v_text.empty() && !mech_text.empty())
        throw cl::ValidationError("give either --v or --mechanism, not both");
    if (!v_text.empty()) return cl::parse_allocation(v_text, config);
    return cl::parse_mechanism(mech_text.empty() ? "standard" : mech_text, config);
}

std::string intervals_json(const cl::FeasibleSet& set) {
    cl::JsonWriter w;
    w.begin_object();
    w.key("intervals").begin_array();
    for (const auto& iv : set.intervals) {
        w.begin_array();
        w.value(iv.first);
        w.value(iv.second);
        w.end_array();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

cl::MechanismFamily family_by_name(const std::string& name, const cl::ContestConfig& config) {
    if (name == "quota") return cl::quota_family(config);
    if (name == "blind") return cl::blind_eye_family(config);
    if (name == "interpolated") return cl::interpolated_family(config);
    throw cl::ValidationError("unknown family '" + name +
                              "' (expected quota, blind, or interpolated)");
}

void emit_line(const std::string& s) { std::fwrite((s + "\n").data(), 1, s.size() + 1, stdout); }

// ---- subcommand bodies ----

void cmd_phi(const std::string& config_path, const std::string& v_text,
             const std::string& mech_text, double s) {
    const cl::Instance inst = cl::load_config(config_path);
    const cl::AllocationVector v = resolve_vector(v_text, mech_text, inst.config);
    const double val = cl::phi(s, v, inst.config, inst.F, inst.c);
    cl::JsonWriter w;
    w.begin_object();
    w.key("s").value(s);
    w.key("phi").value(val);
    w.end_object();
    emit_line(w.str());
}

void cmd_equilibria(const std::string& config_path, const std::string& v_text,
                    const std::string& mech_text, int grid) {
    const cl::Instance inst = cl::load_config(config_path);
    const cl::AllocationVector v = resolve_vector(v_text, mech_text, inst.config);
    cl::FindOptions opts;
    opts.grid = grid;
    std::vector<std::string> warnings;
    const auto eqs = cl::find_equilibria(v, inst.config, inst.F, inst.c, opts, &warnings);
    for (const auto& msg : warnings) std::fprintf(stderr, "warning: %s\n", msg.c_str());
    cl::JsonWriter w;
    w.begin_object();
    w.key("equilibria").begin_array();
    for (const auto& eq : eqs) {
        w.begin_object();
        w.key("s").value(eq.s);
        w.key("kind").value(cl::to_string(eq.kind));
        w.end_object();
    }
    w.end_array();
    w.end_object();
    emit_line(w.str());
}

void cmd_feasible(const std::string& config_path, const std::string& vmin_text,
                  const std::string& vmax_text, int grid) {
    const cl::Instance inst = cl::load_config(config_path);
    cl::FeasibleSet set;
    if (vmin_text.empty() != vmax_text.empty())
        throw cl::ValidationError("--vmin and --vmax must be given together");
    if (vmin_text.empty()) {
        set = cl::feasible_set_default(inst.config, inst.F, inst.c, grid);
    } else {
        const auto v_min = cl::parse_mechanism(vmin_text, inst.config);
        const auto v_max = cl::parse_mechanism(vmax_text, inst.config);
        set = cl::feasible_set(v_min, v_max, inst.config, inst.F, inst.c, grid);
    }
    emit_line(intervals_json(set));
}

void cmd_curve(const std::string& config_path, const std::string& out_path, int grid,
               std::uint64_t seed) {
    const cl::Instance inst = cl::load_config(config_path);
    const cl::FrontierCurve curve = cl::frontier(inst.config, inst.F, inst.c, grid);
    std::string csv = "s,C,eta,dEta_dC\n";
    for (const auto& fs : curve.samples()) {
        double slope = std::numeric_limits<double>::quiet_NaN();
        if (fs.s > 0.0 && fs.s < 1.0)
            slope = cl::budget_derivative(fs.s, inst.config, inst.F, inst.c);
        csv += cl::format_double(fs.s);
        csv += ',';
        csv += cl::format_double(fs.C);
        csv += ',';
        csv += cl::format_double(fs.eta);
        csv += ',';
        csv += cl::format_double(slope);
        csv += '\n';
    }
    write_text(out_path, csv);
    emit_line(manifest_json("curve", cl::config_hash(cl::read_file(config_path)), seed,
                            {out_path}));
}

void cmd_optimize(const std::string& config_path, const std::string& family, int grid) {
    const cl::Instance inst = cl::load_config(config_path);
    const cl::FeasibleSet set = cl::feasible_set_default(inst.config, inst.F, inst.c);
    cl::SolveOptions opts;
    opts.grid = grid;
    opts.family = family;
    const cl::OptimalSolution sol = cl::solve(inst.config, inst.F, inst.c, set, opts);
    cl::JsonWriter w;
    w.begin_object();
    w.key("C_star").value(sol.C_star);
    w.key("s_star").value(sol.s_star);
    w.key("payoff").value(sol.payoff);
    w.key("t");
    if (sol.mechanism_hint.has_value())
        w.value(sol.mechanism_hint->second);
    else
        w.value_raw("null");
    w.end_object();
    emit_line(w.str());
}

void cmd_mechanism(const std::string& config_path, const std::string& family, double target_s) {
    const cl::Instance inst = cl::load_config(config_path);
    const cl::MechanismFamily fam = family_by_name(family, inst.config);
    const double t = cl::synthesize_mechanism(target_s, fam, inst.config, inst.F, inst.c);
    cl::JsonWriter w;
    w.begin_object();
    w.key("t").value(t);
    w.end_object();
    emit_line(w.str());
}

void cmd_simulate(const std::string& config_path, const std::string& v_text,
                  const std::string& mech_text, double s, long trials, std::uint64_t seed,
                  int threads, const std::string& audit_path) {
    const cl::Instance inst = cl::load_config(config_path);
    const cl::AllocationVector v = resolve_vector(v_text, mech_text, inst.config);
    const cl::SimulationReport rep =
        cl::run(v, s, inst.config, inst.F, inst.c, trials, seed, threads);
    if (!audit_path.empty()) {
        const cl::DeviationAudit audit =
            cl::deviation_audit(v, s, inst.config, inst.F, inst.c, trials, seed);
        std::string csv = "theta,prescribed_high,gain,se\n";
        for (const auto& row : audit.rows) {
            csv += cl::format_double(row.theta);
            csv += ',';
            csv += row.prescribed_high ? '1' : '0';
            csv += ',';
            csv += cl::format_double(row.gain);
            csv += ',';
            csv += cl::format_double(row.se);
            csv += '\n';
        }
        write_text(audit_path, csv);
    }
    cl::JsonWriter w;
    w.begin_object();
    w.key("trials").value(static_cast<long long>(rep.trials));
    w.key("C_hat").value(rep.C_hat);
    w.key("C_se").value(rep.C_se);
    w.key("eta_hat").value(rep.eta_hat);
    w.key("eta_se").value(rep.eta_se);
    w.key("q_high_hat").value(rep.q_high_hat);
    w.key("q_high_se").value(rep.q_high_se);
    w.key("q_low_hat").value(rep.q_low_hat);
    w.key("q_low_se").value(rep.q_low_se);
    w.key("exact_m_violations").value(static_cast<long long>(rep.exact_m_violations));
    w.key("bound_violations").value(static_cast<long long>(rep.bound_violations));
    w.key("seed").value(rep.seed);
    w.end_object();
    emit_line(w.str());
}

void cmd_sweep(const std::string& family_text, const std::string& over_text,
               const std::string& out_path, int n, int m, double lambda, std::uint64_t seed) {
    cl::PowerFamily base;
    if (!family_text.empty()) {
        std::size_t pos = 0;
        while (pos <= family_text.size()) {
            const std::size_t next = family_text.find(',', pos);
            const std::string tok = family_text.substr(
                pos, next == std::string::npos ? std::string::npos : next - pos);
            const std::size_t eq = tok.find('=');
            if (eq == std::string::npos)
                throw cl::ValidationError("family entry must look like key=value: '" + tok + "'");
            const std::string key = tok.substr(0, eq);
            std::size_t used = 0;
            double val = 0.0;
            try {
                val = std::stod(tok.substr(eq + 1), &used);
            } catch (const std::exception&) {
                throw cl::ValidationError("family value is not a number: '" + tok + "'");
            }
            if (used != tok.size() - eq - 1)
                throw cl::ValidationError("family value is not a number: '" + tok + "'");
            if (key == "alpha")
                base.alpha = val;
            else if (key == "gamma")
                base.gamma = val;
            else if (key == "eps")
                base.eps = val;
            else
                throw cl::ValidationError("unknown family key '" + key +
                                          "' (expected alpha, gamma, or eps)");
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    std::string param;
    double lo = 0.0, hi = 0.0;
    int count = 33;
    {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (pos <= over_text.size()) {
            const std::size_t next = over_text.find(':', pos);
            parts.push_back(over_text.substr(
                pos, next == std::string::npos ? std::string::npos : next - pos));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (parts.size() != 4)
            throw cl::ValidationError("--over must look like param:lo:hi:count");
        param = parts[0];
        try {
            lo = std::stod(parts[1]);
            hi = std::stod(parts[2]);
            count = std::stoi(parts[3]);
        } catch (const std::exception&) {
            throw cl::ValidationError("--over must look like param:lo:hi:count");
        }
    }
    cl::ContestConfig cfg{n, m, lambda};
    const cl::SweepTable table = cl::sweep(base, cfg, param, lo, hi, count);

    std::string csv = "value,s_star_raw,s_star,s_max,s_solution,C,eta,payoff\n";
    for (const auto& row : table.rows) {
        csv += cl::format_double(row.value);
        csv += ',';
        csv += cl::format_double(row.s_star_raw);
        csv += ',';
        csv += cl::format_double(row.s_star);
        csv += ',';
        csv += cl::format_double(row.s_max);
        csv += ',';
        csv += cl::format_double(row.s_solution);
        csv += ',';
        csv += cl::format_double(row.C);
        csv += ',';
        csv += cl::format_double(row.eta);
        csv += ',';
        csv += cl::format_double(row.payoff);
        csv += '\n';
    }
    write_text(out_path, csv);

    const std::string descr = "{\"family\":\"" + family_text + "\",\"over\":\"" + over_text +
                              "\",\"n\":" + std::to_string(n) + ",\"m\":" + std::to_string(m) +
                              ",\"lambda\":" + cl::format_double(lambda) + "}";
    cl::JsonWriter w;
    w.begin_object();
    w.key("command").value(std::string("sweep"));
    w.key("config_hash").value(hash_hex(cl::config_hash(descr)));
    w.key("seed").value(seed);
    w.key("version").value(std::string(kVersion));
    w.key("expected_trend").value(table.expected_trend);
    w.key("trend_holds").value_raw(table.trend_holds ? "true" : "false");
    w.key("outputs").begin_array().value(out_path).end_array();
    w.end_object();
    emit_line(w.str());
}

void cmd_fig1(const std::string& out_dir, std::uint64_t seed) {
    cl::ContestConfig cfg{3, 2, 1.0};
    const cl::TypeDistribution F = cl::TypeDistribution::power(4.0);
    const cl::CostFunction c = cl::CostFunction::affine(0.5, 1.0 / 9.0);
    const cl::AllocationVector v_hi = cl::standard_vector(cfg);
    const cl::AllocationVector v_lo = cl::reversed_vector(cfg);

    std::string csv = "s,phi_standard,phi_reversed\n";
    for (int i = 0; i <= 1000; ++i) {
        const double s = i / 1000.0;
        csv += cl::format_double(s);
        csv += ',';
        csv += cl::format_double(cl::phi(s, v_hi, cfg, F, c));
        csv += ',';
        csv += cl::format_double(cl::phi(s, v_lo, cfg, F, c));
        csv += '\n';
    }
    const std::string phi_path = out_dir + "/fig1_phi.csv";
    write_text(phi_path, csv);

    const cl::FeasibleSet set = cl::feasible_set(v_lo, v_hi, cfg, F, c);
    const std::string set_path = out_dir + "/fig1_feasible.json";
    write_text(set_path, intervals_json(set) + "\n");

    const std::string descr =
        std::string("{\"F\":{\"alpha\":4,\"kind\":\"power\"},\"c\":{\"a\":0.5,\"b\":") +
        cl::format_double(1.0 / 9.0) + ",\"kind\":\"affine\"},\"lambda\":1,\"m\":2,\"n\":3}";
    emit_line(manifest_json("reproduce-fig1", cl::config_hash(descr), seed,
                            {phi_path, set_path}));
}

// Closed-form payoff curve used by the packaged envelope demo: a quintic
// with two concave arcs separated by a dip, plus a feasibility gap.
double demo_eta(double C) {
    return ((((16.0 * C - 55.0) * C + 63.0) * C - 30.0) * C + 6.0) * C;
}

bool demo_feasible(double C) {
    return (C >= 0.0 && C <= 0.05 + 1e-15) || (C >= 0.15 - 1e-15 && C <= 1.0);
}

void cmd_fig2(const std::string& out_dir, std::uint64_t seed) {
    std::vector<cl::ConcaveEnvelope::Vertex> pts;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i <= 256; ++i) {
        const double C = 0.05 * i / 256.0;
        pts.push_back({C, demo_eta(C), nan});
    }
    for (int i = 0; i <= 3840; ++i) {
        const double C = 0.15 + 0.85 * i / 3840.0;
        pts.push_back({C, demo_eta(C), nan});
    }
    const cl::ConcaveEnvelope env = cl::refine_envelope(pts, demo_eta, demo_feasible, 2);

    std::string csv = "C,eta,eta_restricted,envelope\n";
    auto emit_row = [&](double C, bool feasible) {
        const double eta = demo_eta(C);
        csv += cl::format_double(C);
        csv += ',';
        csv += cl::format_double(eta);
        csv += ',';
        csv += cl::format_double(feasible ? eta : 0.0);
        csv += ',';
        csv += cl::format_double(env.value(C));
        csv += '\n';
    };
    for (int i = 0; i <= 256; ++i) emit_row(0.05 * i / 256.0, true);
    for (int i = 1; i < 100; ++i) emit_row(0.05 + 0.1 * i / 100.0, false);
    for (int i = 0; i <= 3840; ++i) emit_row(0.15 + 0.85 * i / 3840.0, true);
    const std::string curve_path = out_dir + "/fig2_envelope.csv";
    write_text(curve_path, csv);

    // The hull has two chords: one spanning the feasibility gap and one
    // bridging the quintic's dip; locate them by interior probe points.
    auto segment_at = [&](double C, double& lo, double& hi, double& slope) {
        const auto& verts = env.vertices();
        for (std::size_t j = 0; j + 1 < verts.size(); ++j) {
            if (verts[j].C <= C && C <= verts[j + 1].C) {
                lo = verts[j].C;
                hi = verts[j + 1].C;
                slope = env.slopes()[j];
                return;
            }
        }
        throw cl::NumericalError("probe point outside the envelope domain");
    };
    cl::JsonWriter w;
    w.begin_object();
    w.key("vertices").begin_array();
    for (const auto& vx : env.vertices()) {
        w.begin_array();
        w.value(vx.C);
        w.value(vx.eta);
        w.end_array();
    }
    w.end_array();
    w.key("slopes").begin_array();
    for (double sl : env.slopes()) w.value(sl);
    w.end_array();
    for (const char* name : {"gap_bridge", "dip_bridge"}) {
        double lo = 0.0, hi = 0.0, slope = 0.0;
        segment_at(name[0] == 'g' ? 0.10 : 0.43, lo, hi, slope);
        w.key(name).begin_object();
        w.key("lo").value(lo);
        w.key("hi").value(hi);
        w.key("slope").value(slope);
        w.end_object();
    }
    w.end_object();
    const std::string hull_path = out_dir + "/fig2_hull.json";
    write_text(hull_path, w.str() + "\n");

    emit_line(manifest_json("reproduce-fig2",
                            cl::config_hash("{\"demo\":\"quintic\",\"gap\":[0.05,0.15]}"), seed,
                            {curve_path, hull_path}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contestlab: equilibrium cutoffs, efficiency frontiers, and optimal "
                 "selective contests"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, v_text, mech_text, vmin_text, vmax_text, family, out_path,
        out_dir = ".", audit_path, family_text, over_text;
    double s = 0.0, target_s = 0.0, lambda = 1.0;
    int grid_eq = 2048, grid_feas = 2048, grid_curve = 4096, grid_opt = 4096;
    int n = 2, m = 1, threads = 0;
    long trials = 100000;
    std::uint64_t seed_flag = 42;

    auto* c_phi = app.add_subcommand("phi", "Evaluate the marginal gain from high effort");
    c_phi->add_option("--config", config_path, "instance JSON")->required();
    c_phi->add_option("--v", v_text, "allocation components v1,...,v_{n-1}");
    c_phi->add_option("--mechanism", mech_text, "named mechanism");
    c_phi->add_option("--s", s, "cutoff")->required();

    auto* c_eq = app.add_subcommand("equilibria", "Enumerate equilibrium cutoffs");
    c_eq->add_option("--config", config_path, "instance JSON")->required();
    c_eq->add_option("--v", v_text, "allocation components");
    c_eq->add_option("--mechanism", mech_text, "named mechanism (default standard)");
    c_eq->add_option("--grid", grid_eq, "scan grid size (default 2048)");

    auto* c_feas = app.add_subcommand("feasible", "Implementable cutoffs for a mechanism range");
    c_feas->add_option("--config", config_path, "instance JSON")->required();
    c_feas->add_option("--vmin", vmin_text, "weakest mechanism (default: full range)");
    c_feas->add_option("--vmax", vmax_text, "strongest mechanism");
    c_feas->add_option("--grid", grid_feas, "scan grid size (default 2048)");

    auto* c_curve = app.add_subcommand("curve", "Tabulate the cost/efficiency frontier");
    c_curve->add_option("--config", config_path, "instance JSON")->required();
    c_curve->add_option("--out", out_path, "CSV path")->required();
    c_curve->add_option("--grid", grid_curve, "cutoff grid size (default 4096)");
    auto* curve_seed = c_curve->add_option("--seed", seed_flag, "manifest seed");

    auto* c_opt = app.add_subcommand("optimize", "Solve for the designer's optimum");
    c_opt->add_option("--config", config_path, "instance JSON")->required();
    c_opt->add_option("--family", family, "attach a mechanism parameter (quota|blind)");
    c_opt->add_option("--grid", grid_opt, "frontier grid size (default 4096)");

    auto* c_mech = app.add_subcommand("mechanism", "Find the family parameter inducing a cutoff");
    c_mech->add_option("--config", config_path, "instance JSON")->required();
    c_mech->add_option("--family", family, "quota|blind|interpolated")->required();
    c_mech->add_option("--target-s", target_s, "cutoff to induce")->required();

    auto* c_sim = app.add_subcommand("simulate", "Monte Carlo check of a cutoff equilibrium");
    c_sim->add_option("--config", config_path, "instance JSON")->required();
    c_sim->add_option("--v", v_text, "allocation components");
    c_sim->add_option("--mechanism", mech_text, "named mechanism (default standard)");
    c_sim->add_option("--s", s, "cutoff")->required();
    c_sim->add_option("--trials", trials, "trial count (default 100000)");
    auto* sim_seed = c_sim->add_option("--seed", seed_flag, "RNG seed");
    c_sim->add_option("--threads", threads, "worker threads, 0 = auto (default 0)");
    c_sim->add_option("--audit", audit_path, "also write a deviation-gain CSV here");

    auto* c_sweep = app.add_subcommand("sweep", "Closed-form family solution over a parameter");
    c_sweep->add_option("--family", family_text, "alpha=..,gamma=..,eps=.. (defaults 1)");
    c_sweep->add_option("--over", over_text, "param:lo:hi:count")->required();
    c_sweep->add_option("--out", out_path, "CSV path")->required();
    c_sweep->add_option("--n", n, "agents (default 2)");
    c_sweep->add_option("--m", m, "prizes (default 1)");
    c_sweep->add_option("--lambda", lambda, "cost weight (default 1)");
    auto* sweep_seed = c_sweep->add_option("--seed", seed_flag, "manifest seed");

    auto* c_f1 = app.add_subcommand("reproduce-fig1", "Packaged gain-curve and feasibility demo");
    c_f1->add_option("--out-dir", out_dir, "output directory (default .)");
    auto* f1_seed = c_f1->add_option("--seed", seed_flag, "manifest seed");

    auto* c_f2 = app.add_subcommand("reproduce-fig2", "Packaged concave-envelope demo");
    c_f2->add_option("--out-dir", out_dir, "output directory (default .)");
    auto* f2_seed = c_f2->add_option("--seed", seed_flag, "manifest seed");

    c_phi->callback([&] { cmd_phi(config_path, v_text, mech_text, s); });
    c_eq->callback([&] { cmd_equilibria(config_path, v_text, mech_text, grid_eq); });
    c_feas->callback([&] { cmd_feasible(config_path, vmin_text, vmax_text, grid_feas); });
    c_curve->callback(
        [&] { cmd_curve(config_path, out_path, grid_curve, resolve_seed(curve_seed, seed_flag)); });
    c_opt->callback([&] { cmd_optimize(config_path, family, grid_opt); });
    c_mech->callback([&] { cmd_mechanism(config_path, family, target_s); });
    c_sim->callback([&] {
        cmd_simulate(config_path, v_text, mech_text, s, trials, resolve_seed(sim_seed, seed_flag),
                     threads, audit_path);
    });
    c_sweep->callback([&] {
        cmd_sweep(family_text, over_text, out_path, n, m, lambda,
                  resolve_seed(sweep_seed, seed_flag));
    });
    c_f1->callback([&] { cmd_fig1(out_dir, resolve_seed(f1_seed, seed_flag)); });
    c_f2->callback([&] { cmd_fig2(out_dir, resolve_seed(f2_seed, seed_flag)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cl::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const cl::NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 2;
    }
    return 0;
}

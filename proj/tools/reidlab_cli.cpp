// reidlab command-line front end.
//
// Grammar:
//   reidlab (check|fuzz) <name> [--dim N|A..B] [--trials N] [--seed N]
//           [--mode classic|normal|co-hyponormal|none] [--alpha R]
//           [--commuting BOOL] [--vectors N] [--chain-depth N]
//           [--A file] [--B file] [--K file] [--x file] [--out file] [--tol-* R]
//   reidlab counterexample (quasinormal-shift|squaring-noncommuting) [--dim N] [--out file]
//   reidlab spectral-radius --K file [--tol-* R]
//
// Exit codes: 0 pass, 1 violation found, 2 usage or hypothesis error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reidlab/campaign.hpp"

namespace {

std::vector<std::size_t> parse_dims(const std::string& spec) {
    auto parse_one = [](const std::string& s) {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 1) throw reidlab::ValueError("bad dimension: " + s);
        return static_cast<std::size_t>(v);
    };
    auto dots = spec.find("..");
    if (dots == std::string::npos) return {parse_one(spec)};
    std::size_t lo = parse_one(spec.substr(0, dots));
    std::size_t hi = parse_one(spec.substr(dots + 2));
    if (hi < lo) throw reidlab::ValueError("bad dimension range: " + spec);
    std::vector<std::size_t> dims;
    for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
    return dims;
}

void emit(const reidlab::Json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw reidlab::ValueError("cannot write file: " + out_path);
        out << text << "\n";
    }
}

struct CommonOpts {
    std::string dim_spec = "4";
    std::string mode = "classic";
    std::string a_file, b_file, k_file, x_file, out_file;
    reidlab::CheckConfig cfg;
};

void add_tolerance_flags(CLI::App* cmd, reidlab::ToleranceProfile& tol) {
    cmd->add_option("--tol-predicate", tol.predicate_tol, "predicate tolerance");
    cmd->add_option("--tol-rank", tol.rank_tol, "pseudoinverse rank tolerance");
    cmd->add_option("--tol-gelfand", tol.gelfand_tol, "Gelfand iterate stopping tolerance");
    cmd->add_option("--tol-jacobi", tol.jacobi_tol, "Jacobi off-diagonal tolerance");
    cmd->add_option("--gelfand-max-squarings", tol.gelfand_max_squarings, "max squarings");
    cmd->add_option("--jacobi-max-sweeps", tol.jacobi_max_sweeps, "max Jacobi sweeps");
}

void add_campaign_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("name", o.cfg.check, "registered check name")->required();
    cmd->add_option("--dim", o.dim_spec, "dimension N or range A..B");
    cmd->add_option("--trials", o.cfg.trials, "number of instances");
    cmd->add_option("--seed", o.cfg.seed, "master seed");
    cmd->add_option("--mode", o.mode, "hypothesis mode: classic|normal|co-hyponormal|none");
    cmd->add_option("--alpha", o.cfg.alpha, "power exponent (alpha > 0)");
    cmd->add_option("--commuting", o.cfg.commuting, "require commuting inputs (power-monotone)");
    cmd->add_option("--vectors", o.cfg.vectors_per_instance, "probe vectors per instance");
    cmd->add_option("--chain-depth", o.cfg.chain_depth, "induction chain depth (1..20)");
    cmd->add_option("--A", o.a_file, "matrix JSON file for A");
    cmd->add_option("--B", o.b_file, "matrix JSON file for B");
    cmd->add_option("--K", o.k_file, "matrix JSON file for K");
    cmd->add_option("--x", o.x_file, "vector JSON file for x");
    cmd->add_option("--out", o.out_file, "also write the report to this file");
    add_tolerance_flags(cmd, o.cfg.tol);
}

int run_campaign_command(CommonOpts& o, bool fuzz) {
    o.cfg.dims = parse_dims(o.dim_spec);
    o.cfg.mode = reidlab::hypothesis_mode_from_string(o.mode);
    if (!o.a_file.empty()) o.cfg.a_in = reidlab::matrix_from_json(reidlab::load_json_file(o.a_file));
    if (!o.b_file.empty()) o.cfg.b_in = reidlab::matrix_from_json(reidlab::load_json_file(o.b_file));
    if (!o.k_file.empty()) o.cfg.k_in = reidlab::matrix_from_json(reidlab::load_json_file(o.k_file));
    if (!o.x_file.empty()) o.cfg.x_in = reidlab::vector_from_json(reidlab::load_json_file(o.x_file));
    reidlab::CheckReport report = fuzz ? reidlab::run_fuzz(o.cfg) : reidlab::run_check(o.cfg);
    emit(reidlab::to_json(report), o.out_file);
    return report.verdict == reidlab::Verdict::pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator-inequality laboratory: Reid / Halmos-Reid / Kittaneh checks, "
                 "Loewner monotonicity certificates, and counterexample search"};
    app.require_subcommand(1);

    CommonOpts check_opts, fuzz_opts;
    CLI::App* check_cmd = app.add_subcommand("check", "run a theorem-backed campaign");
    add_campaign_flags(check_cmd, check_opts);
    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "run a counterexample search campaign");
    add_campaign_flags(fuzz_cmd, fuzz_opts);

    std::string ce_name;
    std::size_t ce_dim = 4;
    std::string ce_out;
    reidlab::ToleranceProfile ce_tol;
    CLI::App* ce_cmd = app.add_subcommand("counterexample", "reproduce a gallery counterexample");
    ce_cmd->add_option("name", ce_name, "quasinormal-shift | squaring-noncommuting")->required();
    ce_cmd->add_option("--dim", ce_dim, "dimension (quasinormal-shift)");
    ce_cmd->add_option("--out", ce_out, "also write the report to this file");
    add_tolerance_flags(ce_cmd, ce_tol);

    std::string sr_k_file, sr_out;
    reidlab::ToleranceProfile sr_tol;
    CLI::App* sr_cmd = app.add_subcommand("spectral-radius", "Gelfand iterate table for K");
    sr_cmd->add_option("--K", sr_k_file, "matrix JSON file for K")->required();
    sr_cmd->add_option("--out", sr_out, "also write the trace to this file");
    add_tolerance_flags(sr_cmd, sr_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors are exit code 2
    }

    try {
        if (check_cmd->parsed()) return run_campaign_command(check_opts, false);
        if (fuzz_cmd->parsed()) return run_campaign_command(fuzz_opts, true);
        if (ce_cmd->parsed()) {
            reidlab::CheckReport report = reidlab::run_counterexample(ce_name, ce_dim, ce_tol);
            emit(reidlab::to_json(report), ce_out);
            return report.verdict == reidlab::Verdict::pass ? 0 : 1;
        }
        if (sr_cmd->parsed()) {
            reidlab::ComplexMatrix k =
                reidlab::matrix_from_json(reidlab::load_json_file(sr_k_file));
            reidlab::GelfandTrace trace = reidlab::spectral_radius_gelfand(k, sr_tol);
            emit(reidlab::to_json(trace), sr_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

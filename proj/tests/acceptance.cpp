// Acceptance suite: one pass/fail line per criterion. Takes the CLI binary
// path as argv[1] (criteria 1, 3 and 12 exercise the command-line surface).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "reidlab/campaign.hpp"

using namespace reidlab;

namespace {

std::string g_cli;
int g_failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int run_cli(const std::string& args, const std::string& stdout_path = "/dev/null") {
    std::string cmd = "\"" + g_cli + "\" " + args + " > " + stdout_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion(int idx, const std::string& what, const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    if (!ok) ++g_failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << what;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << std::endl;
}

ComplexMatrix gen_upper_triangular(std::size_t n, SeededSource& src, bool strict) {
    ComplexMatrix g = gen_matrix(n, src);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < (strict ? i + 1 : i); ++j) g(i, j) = 0.0;
    return g;
}

std::vector<std::size_t> dims_2_to_10() {
    return {2, 3, 4, 5, 6, 7, 8, 9, 10};
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-reidlab-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion(1, "quasinormal-shift reproduces lhs=2, rhs=1, margin=-1 exactly at n=3,8,64, <1s",
              [](std::string& note) {
                  for (std::size_t n : {3, 8, 64}) {
                      double t0 = now_seconds();
                      int rc = run_cli("counterexample quasinormal-shift --dim " + std::to_string(n) +
                                       " --out acceptance_c1.json");
                      double dt = now_seconds() - t0;
                      if (rc != 1) { note = "unexpected exit code"; return false; }
                      Json j = load_json_file("acceptance_c1.json");
                      if (j.at("worst_lhs").get<double>() != 2.0 ||
                          j.at("worst_rhs").get<double>() != 1.0 ||
                          j.at("worst_margin").get<double>() != -1.0 ||
                          j.at("verdict").get<std::string>() != "violation") {
                          note = "values not exact at n=" + std::to_string(n);
                          return false;
                      }
                      if (dt >= 1.0) { note = "runtime >= 1s"; return false; }
                  }
                  return true;
              });

    criterion(2, "Reid suites, classic+normal, dims 2-10, 1e4 x 10 vectors, zero violations, <2min",
              [](std::string& note) {
                  double t0 = now_seconds();
                  for (HypothesisMode mode : {HypothesisMode::classic, HypothesisMode::normal}) {
                      CheckConfig cfg;
                      cfg.check = "reid";
                      cfg.mode = mode;
                      cfg.dims = dims_2_to_10();
                      cfg.trials = 10000;
                      cfg.vectors_per_instance = 10;
                      cfg.seed = 42;
                      CheckReport r = run_check(cfg);
                      if (r.verdict != Verdict::pass) {
                          note = std::string("violation in mode ") + to_string(mode);
                          return false;
                      }
                  }
                  double dt = now_seconds() - t0;
                  std::ostringstream ss;
                  ss << "runtime " << dt << "s";
                  note = ss.str();
                  return dt < 120.0;
              });

    criterion(3, "unconstrained-K fuzz at dim 3 finds a Reid violation within 1e5 trials (exit 1)",
              [](std::string&) {
                  return run_cli("fuzz reid --mode none --dim 3 --trials 100000 --seed 1") == 1;
              });

    criterion(4, "sqrt monotonicity on 1e4 Loewner pairs, dims 2-10",
              [](std::string&) {
                  CheckConfig cfg;
                  cfg.check = "sqrt-monotone";
                  cfg.dims = dims_2_to_10();
                  cfg.trials = 10000;
                  cfg.seed = 4242;
                  return run_check(cfg).verdict == Verdict::pass;
              });

    criterion(5, "Douglas-route and direct sqrt-monotonicity certificates agree on 1e3 pairs",
              [](std::string& note) {
                  std::vector<std::size_t> dims = dims_2_to_10();
                  for (long t = 0; t < 1000; ++t) {
                      std::size_t dim = dims[static_cast<std::size_t>(t) % dims.size()];
                      SeededSource src(5, static_cast<std::uint64_t>(t));
                      auto [a, b] = gen_loewner_pair(dim, src);
                      ComplexMatrix sa = sqrt_psd(a), sb = sqrt_psd(b);

                      HermitianEigen eig = eig_hermitian(hermitize(sb - sa));
                      bool direct = eig.values.front() >= -1e-7 * std::max(1.0, operator_norm(sb));

                      bool douglas_route = true;
                      try {
                          Factorization f = douglas_contraction(sa, sb);
                          if (!is_self_adjoint(f.factor * sb).holds) douglas_route = false;
                          ComplexMatrix k_star = adjoint(f.factor);
                          for (int v = 0; douglas_route && v < 10; ++v) {
                              Vector x = gen_unit_vector(dim, src);
                              Margin m = reid_margin(sb, k_star, x, HypothesisMode::classic);
                              if (m.margin < -1e-7 * std::max(m.rhs, 0.0)) douglas_route = false;
                          }
                      } catch (const std::exception&) {
                          douglas_route = false;
                      }
                      if (direct != douglas_route) {
                          note = "verdicts disagree at pair " + std::to_string(t);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "inverse antitonicity on 1e4 draws with A = gen_psd + 0.1 I",
              [](std::string&) {
                  CheckConfig cfg;
                  cfg.check = "inverse-antitone";
                  cfg.dims = dims_2_to_10();
                  cfg.trials = 10000;
                  cfg.seed = 6;
                  return run_check(cfg).verdict == Verdict::pass;
              });

    criterion(7, "commuting power monotonicity (alpha in {0.3,0.5,2,3,7.5}) + exact squaring failure",
              [](std::string& note) {
                  for (double alpha : {0.3, 0.5, 2.0, 3.0, 7.5}) {
                      CheckConfig cfg;
                      cfg.check = "power-monotone";
                      cfg.alpha = alpha;
                      cfg.dims = dims_2_to_10();
                      cfg.trials = 1000;
                      cfg.seed = 7;
                      if (run_check(cfg).verdict != Verdict::pass) {
                          note = "violation at alpha " + std::to_string(alpha);
                          return false;
                      }
                  }
                  // fixed pair: min eigenvalue of B^2 - A^2 is (3 - sqrt(13))/2,
                  // verified against a closed-form 2x2 oracle
                  SquaringCounterexample c = squaring_nonmonotone_pair();
                  double tr = 3.0, det = -1.0; // B^2 - A^2 = [[3,1],[1,0]]
                  double oracle = (tr - std::sqrt(tr * tr - 4.0 * det)) / 2.0;
                  if (std::abs(c.margin.margin - oracle) > 1e-12) {
                      note = "min eigenvalue does not match the 2x2 oracle";
                      return false;
                  }
                  if (!(c.margin.margin <= -0.3)) {
                      note = "min eigenvalue not <= -0.3";
                      return false;
                  }
                  return true;
              });

    criterion(8, "||A^alpha|| = ||A||^alpha to 1e-8 relative on 1e3 PSD draws per alpha",
              [](std::string& note) {
                  for (double alpha : {0.3, 0.5, 1.0, 2.0, 3.7}) {
                      CheckConfig cfg;
                      cfg.check = "norm-power";
                      cfg.alpha = alpha;
                      cfg.dims = dims_2_to_10();
                      cfg.trials = 1000;
                      cfg.seed = 8;
                      if (run_check(cfg).verdict != Verdict::pass) {
                          note = "identity fails at alpha " + std::to_string(alpha);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "Kittaneh on 1e4 random normal T, 10 vectors each",
              [](std::string&) {
                  CheckConfig cfg;
                  cfg.check = "kittaneh";
                  cfg.dims = dims_2_to_10();
                  cfg.trials = 10000;
                  cfg.vectors_per_instance = 10;
                  cfg.seed = 9;
                  return run_check(cfg).verdict == Verdict::pass;
              });

    criterion(10, "Gelfand radius: triangular within 1e-4, nilpotent exactly 0, r(K) <= ||K||",
              [](std::string& note) {
                  for (long t = 0; t < 1000; ++t) {
                      std::size_t dim = 2 + static_cast<std::size_t>(t) % 7; // 2..8
                      SeededSource src(10, static_cast<std::uint64_t>(t));
                      ComplexMatrix k = gen_upper_triangular(dim, src, false);
                      double max_diag = 0.0;
                      for (std::size_t i = 0; i < dim; ++i)
                          max_diag = std::max(max_diag, std::abs(k(i, i)));
                      GelfandTrace trace = spectral_radius_gelfand(k);
                      if (std::abs(trace.radius - max_diag) > 1e-4 * std::max(1.0, max_diag)) {
                          note = "triangular radius off at trial " + std::to_string(t);
                          return false;
                      }
                      if (trace.radius > operator_norm(k)) {
                          note = "radius exceeds operator norm at trial " + std::to_string(t);
                          return false;
                      }
                      ComplexMatrix nil = gen_upper_triangular(dim, src, true);
                      GelfandTrace nil_trace = spectral_radius_gelfand(nil);
                      if (nil_trace.radius != 0.0 || !nil_trace.converged) {
                          note = "nilpotent radius not exactly 0 at trial " + std::to_string(t);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(11, "induction chain on 1e3 classic instances: margins >= -1e-6 rhs_n, rhs_n non-increasing",
              [](std::string& note) {
                  std::vector<std::size_t> dims = dims_2_to_10();
                  bool margins_ok = true, monotone_ok = true;
                  for (long t = 0; t < 1000 && (margins_ok || monotone_ok); ++t) {
                      std::size_t dim = dims[static_cast<std::size_t>(t) % dims.size()];
                      SeededSource src(11, static_cast<std::uint64_t>(t));
                      ReidInstance inst = gen_reid_instance(dim, HypothesisMode::classic, src);
                      Vector x = gen_unit_vector(dim, src);
                      std::vector<Margin> chain = induction_chain(inst.a, inst.k, x, 10);
                      for (std::size_t n = 0; n < chain.size(); ++n) {
                          if (chain[n].margin < -1e-6 * std::max(chain[n].rhs, 0.0)) margins_ok = false;
                          if (n > 0 && chain[n].rhs > chain[n - 1].rhs + 1e-9 * std::max(1.0, chain[n - 1].rhs))
                              monotone_ok = false;
                      }
                  }
                  std::ostringstream ss;
                  ss << "margins " << (margins_ok ? "ok" : "FAIL") << "; rhs_n non-increasing "
                     << (monotone_ok ? "ok" : "FAIL — rhs_n = <A K^(2^n) x,x>^(1/2^n) <Ax,x>^(1-1/2^n) "
                                              "is a power mean in 2^n and increases toward r(K)<Ax,x>");
                  note = ss.str();
                  return margins_ok && monotone_ok;
              });

    criterion(12, "byte-identical reports when repeating a command with the same seed",
              [](std::string& note) {
                  const std::string commands[] = {
                      "counterexample quasinormal-shift --dim 8",
                      "check reid --mode classic --dim 4 --trials 200 --seed 42",
                      "check norm-power --alpha 2.5 --dim 6 --trials 100 --seed 7",
                      "check sqrt-monotone --dim 2..8 --trials 500 --seed 9",
                      "fuzz reid --mode none --dim 3 --trials 2000 --seed 1",
                  };
                  for (const std::string& cmd : commands) {
                      run_cli(cmd + " --out acceptance_c12_a.json");
                      run_cli(cmd + " --out acceptance_c12_b.json");
                      std::string a = slurp("acceptance_c12_a.json");
                      std::string b = slurp("acceptance_c12_b.json");
                      if (a.empty() || a != b) {
                          note = "reports differ for: " + cmd;
                          return false;
                      }
                  }
                  return true;
              });

    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criterion(s) failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}

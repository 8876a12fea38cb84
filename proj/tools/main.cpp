// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

// Command-line front door: parse matrices and parameters, dispatch to the
// library, report human-readable or JSON results. Exit codes: 0 evaluated,
// 2 input/usage error, 3 internal consistency failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "entcert/bipartite.hpp"
#include "entcert/choi.hpp"
#include "entcert/hakye.hpp"
#include "entcert/serialization.hpp"
#include "entcert/spa.hpp"

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

std::string fmt(entcert::Complex v) { return "(" + fmt(v.real()) + ", " + fmt(v.imag()) + ")"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw entcert::ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

double r12(double v) { return entcert::round_significant(v); }

struct Options {
  std::string input_path;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::size_t mc_samples = 0;
  unsigned threads = 1;
  double epsilon = 0.1;
  bool json = false;
  bool allow_normalize = false;
};

int run_check(const Options& opt) {
  const auto state = entcert::bipartite_from_json(read_file(opt.input_path));
  const auto report = entcert::necessary_separability_check(state, opt.tol);
  const bool ppt = entcert::ppt_check(state, opt.tol);
  if (opt.json) {
    Json doc;
    doc["S"] = r12(report.s_value);
    doc["T"] = r12(report.t_value);
    doc["ppt"] = ppt;
    doc["verdict"] = entcert::to_string(report.verdict);
    doc["schema"] = "v1";
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "S = " << fmt(report.s_value) << "\n"
              << "T = " << fmt(report.t_value) << "\n"
              << "ppt = " << (ppt ? "yes" : "no") << "\n"
              << "verdict = " << entcert::to_string(report.verdict) << "\n";
  }
  return 0;
}

int run_twirl(const Options& opt) {
  const auto state = entcert::bipartite_from_json(read_file(opt.input_path));
  const auto werner = entcert::twirl(state);
  const auto verdict = entcert::werner_separability(state, opt.tol);
  double deviation = 0.0;
  if (opt.mc_samples > 0) {
    const auto mc = entcert::twirl_monte_carlo(state, opt.mc_samples, opt.seed, opt.threads);
    deviation = entcert::max_abs_diff(entcert::reconstruct(werner, state.n).mat, mc.mat);
  }
  if (opt.json) {
    Json doc;
    doc["alpha"] = Json::array({r12(werner.alpha.real()), r12(werner.alpha.imag())});
    doc["beta"] = Json::array({r12(werner.beta.real()), r12(werner.beta.imag())});
    doc["verdict"] = entcert::to_string(verdict);
    if (opt.mc_samples > 0) doc["mc_deviation"] = r12(deviation);
    doc["schema"] = "v1";
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "alpha = " << fmt(werner.alpha) << "\n"
              << "beta = " << fmt(werner.beta) << "\n"
              << "verdict = " << entcert::to_string(verdict) << "\n";
    if (opt.mc_samples > 0) std::cout << "mc_deviation = " << fmt(deviation) << "\n";
  }
  return 0;
}

int run_spa(const Options& opt) {
  auto phi = entcert::map_from_json(read_file(opt.input_path));
  if (!entcert::is_unital(phi)) {
    if (!opt.allow_normalize) {
      throw entcert::NotUnital("map is not unital (pass --allow-normalize for scalar-unital maps)");
    }
    phi = entcert::normalize_scalar_unital(phi);
  }
  const auto result = entcert::spa(phi);
  const auto cert = entcert::spa_entanglement_certificate(phi, opt.tol);
  const double spa_trace = entcert::trace(result.spa_state.mat).real();
  if (opt.json) {
    Json doc;
    doc["S"] = r12(cert.s_value);
    doc["T"] = r12(cert.t_value);
    doc["neg_norm"] = r12(cert.neg_norm);
    doc["bound"] = r12(cert.bound);
    doc["margin"] = r12(cert.margin);
    doc["t_star"] = r12(result.t_star);
    doc["spa_trace"] = r12(spa_trace);
    doc["verdict"] = entcert::to_string(cert.verdict);
    doc["schema"] = "v1";
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "t_star = " << fmt(result.t_star) << "\n"
              << "neg_norm = " << fmt(cert.neg_norm) << "\n"
              << "spa_trace = " << fmt(spa_trace) << "\n"
              << "S = " << fmt(cert.s_value) << "\n"
              << "T = " << fmt(cert.t_value) << "\n"
              << "bound = " << fmt(cert.bound) << "\n"
              << "margin = " << fmt(cert.margin) << "\n"
              << "verdict = " << entcert::to_string(cert.verdict) << "\n";
  }
  return 0;
}

int run_hakye(const Options& opt) {
  const auto report = entcert::counterexample(opt.epsilon);
  if (opt.json) {
    std::cout << entcert::counterexample_to_json(report) << "\n";
  } else {
    std::cout << "epsilon = " << fmt(report.epsilon) << "\n"
              << "delta = " << fmt(report.delta) << "\n"
              << "a = " << fmt(report.params.a) << "\n"
              << "b = " << fmt(report.params.b) << "\n"
              << "c = " << fmt(report.params.c) << "\n"
              << "theta = " << fmt(report.params.theta) << "\n"
              << "p_theta = " << fmt(report.p_theta) << "\n"
              << "p_theta_pi3_variant = " << fmt(report.p_theta_pi3_variant) << "\n"
              << "k = " << fmt(report.k) << "\n"
              << "S_psi = " << fmt(report.s_psi) << "\n"
              << "T_psi = " << fmt(report.t_psi) << "\n"
              << "neg_norm_phi = " << fmt(report.neg_norm_phi) << "\n"
              << "neg_norm_psi = " << fmt(report.neg_norm_psi) << "\n"
              << "bound = " << fmt(report.bound) << "\n";
    for (const auto& entry : report.chain) {
      std::cout << "chain " << entry.name << ": lhs = " << fmt(entry.lhs)
                << ", rhs = " << fmt(entry.rhs) << ", holds = " << (entry.holds ? "yes" : "no")
                << "\n";
    }
    std::cout << "verdict = " << entcert::to_string(report.verdict) << "\n";
  }
  return report.verdict == entcert::Verdict::Failed ? 3 : 0;
}

int run_choi(const Options& opt) {
  const auto phi = entcert::map_from_json(read_file(opt.input_path));
  const auto c = entcert::choi(phi);
  if (opt.json) {
    Json doc = Json::parse(entcert::matrix_to_json(c.mat));
    doc["input_dim"] = c.input_dim;
    doc["output_dim"] = c.output_dim;
    doc["schema"] = "v1";
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "input_dim = " << c.input_dim << "\n"
              << "output_dim = " << c.output_dim << "\n";
    for (std::size_t i = 0; i < c.mat.rows(); ++i) {
      for (std::size_t j = 0; j < c.mat.cols(); ++j) {
        std::cout << (j == 0 ? "" : "  ") << fmt(c.mat(i, j));
      }
      std::cout << "\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifies entanglement of bipartite states and of structural "
               "physical approximations of positive maps"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Necessary separability conditions for a state file");
  check->add_option("state-file", opt.input_path, "bipartite state JSON")->required();
  check->add_option("--tol", opt.tol, "state/verdict tolerance");
  check->add_flag("--json", opt.json, "emit a JSON document");

  auto* twirl = app.add_subcommand("twirl", "Project a state onto the span of 1(x)1 and the flip");
  twirl->add_option("state-file", opt.input_path, "bipartite state JSON")->required();
  twirl->add_option("--mc-samples", opt.mc_samples, "verify by Monte-Carlo averaging");
  twirl->add_option("--seed", opt.seed, "sampling seed");
  twirl->add_option("--threads", opt.threads, "sampling worker count (result-invariant)");
  twirl->add_option("--tol", opt.tol, "state/verdict tolerance");
  twirl->add_flag("--json", opt.json, "emit a JSON document");

  auto* spa = app.add_subcommand("spa", "Structural physical approximation and its certificate");
  spa->add_option("map-file", opt.input_path, "matrix map JSON")->required();
  spa->add_flag("--allow-normalize", opt.allow_normalize,
                "rescale scalar-unital maps to unital before processing");
  spa->add_option("--tol", opt.tol, "certificate tolerance");
  spa->add_flag("--json", opt.json, "emit a JSON document");

  auto* hakye = app.add_subcommand("hakye", "Optimal positive map whose approximation is entangled");
  hakye->add_option("--epsilon", opt.epsilon, "construction parameter in (0, 1/4]")->required();
  hakye->add_flag("--json", opt.json, "emit a JSON document");

  auto* choi = app.add_subcommand("choi", "Print the Choi matrix of a map file");
  choi->add_option("map-file", opt.input_path, "matrix map JSON")->required();
  choi->add_flag("--json", opt.json, "emit a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(opt);
    if (twirl->parsed()) return run_twirl(opt);
    if (spa->parsed()) return run_spa(opt);
    if (hakye->parsed()) return run_hakye(opt);
    if (choi->parsed()) return run_choi(opt);
  } catch (const entcert::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}

// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "steerlab/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "steerlab/analysis.h"
#include "steerlab/assemblage.h"
#include "steerlab/covariant.h"
#include "steerlab/jm.h"
#include "steerlab/json_io.h"
#include "steerlab/lossy.h"
#include "steerlab/random.h"

namespace steerlab {
namespace {

struct Options {
  int d = 2;
  double eta = 1.0;
  double p = 1.0;
  double t = 0.5;
  int grid = 200;
  std::string out_path;
  std::string emit_path;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  int atoms = 2000;
  std::string targets = "builtin:mubs";
  double tol = 1e-6;
  bool emit_conditionals = false;
  int trials = 100;
};

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int cmd_thresholds(const Options& o, std::ostream& out) {
  write_json(out, to_json(thresholds(o.d)));
  return kExitOk;
}

int cmd_phase_diagram(const Options& o, std::ostream& out) {
  const auto cells = phase_diagram(o.d, o.grid);
  std::ofstream file(o.out_path);
  if (!file) throw std::invalid_argument("cannot open output file '" + o.out_path + "'");
  write_phase_csv(file, cells);
  const auto unlimited = std::count_if(cells.begin(), cells.end(),
                                       [](const PhaseCell& c) { return c.label == RegionLabel::kUnlimitedOneWay; });
  write_json(out, Json{{"d", o.d}, {"grid", o.grid}, {"cells", cells.size()}, {"unlimited_cells", unlimited},
                       {"out", o.out_path}});
  return kExitOk;
}

int cmd_state(const Options& o, std::ostream& out) {
  const DensityOperator rho = one_way_state(o.d, o.eta, o.p);
  const std::array<int, 2> dims{rho.dims()[0], rho.dims()[1]};
  const DensityOperator reduced_a(partial_trace(rho.matrix(), dims, 0), {dims[0]});
  const DensityOperator reduced_b(partial_trace(rho.matrix(), dims, 1), {dims[1]});
  const Json doc = to_json(rho);
  if (!o.emit_path.empty()) {
    std::ofstream file(o.emit_path);
    if (!file) throw std::invalid_argument("cannot open output file '" + o.emit_path + "'");
    write_json(file, doc);
  }
  write_json(out, Json{{"d", o.d},
                       {"eta", o.eta},
                       {"p", o.p},
                       {"label", to_string(classify(o.d, o.eta, o.p))},
                       {"validity",
                        {{"hermitian_deviation", hermitian_deviation(rho.matrix())},
                         {"min_eigenvalue", min_eigenvalue(rho.matrix())},
                         {"trace", rho.matrix().trace().real()},
                         {"valid", true}}},
                       {"reduced_A", to_json(reduced_a)},
                       {"reduced_B", to_json(reduced_b)},
                       {"state", doc}});
  return kExitOk;
}

int cmd_simulate_povm(const Options& o, std::ostream& out) {
  // Uniform superposition, so the report exercises off-diagonal entries.
  const CVector phi = CVector::Constant(o.d, 1.0 / std::sqrt(static_cast<double>(std::max(o.d, 1))));
  const McEffect effect = mc_effect(o.d, o.t, PureState(phi, {o.d}), o.samples, o.seed);
  Json doc = mc_report(o.d, o.t, o.samples, effect);
  doc["abar"] = abar(o.d, o.t);
  doc["tbar"] = tbar(o.d, o.t);
  write_json(out, doc);
  return kExitOk;
}

std::vector<Povm> load_targets(const Options& o) {
  if (o.targets == "builtin:mubs") {
    auto [z, x] = mub_pair(o.d);
    return {z, x};
  }
  std::ifstream file(o.targets);
  if (!file) throw std::invalid_argument("cannot open targets file '" + o.targets + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("targets file is not valid JSON: ") + e.what());
  }
  const Json& list = doc.is_object() && doc.contains("povms") ? doc.at("povms") : doc;
  std::vector<Povm> povms;
  if (list.is_array()) {
    for (const auto& p : list) povms.push_back(povm_from_json(p));
  } else {
    povms.push_back(povm_from_json(list));
  }
  if (povms.empty()) throw std::invalid_argument("targets file holds no POVMs");
  return povms;
}

int cmd_jm_certify(const Options& o, std::ostream& out) {
  const NoiseParams params = NoiseParams::make(o.d, o.eta, o.p);
  std::vector<Povm> targets;
  for (const auto& m : load_targets(o)) targets.push_back(noisify_povm(m, params));
  const DiscreteParent parent = discretize_parent(o.d, o.atoms, o.seed);
  const JmCertificate cert = lp_feasibility(targets, parent, o.tol);
  Json doc = to_json(cert, o.seed, o.emit_conditionals);
  doc["eta"] = o.eta;
  doc["p"] = o.p;
  doc["covariant_model_applies"] = o.d >= 2 && o.eta <= std::pow(1.0 - o.p, o.d - 1);
  doc["note"] = cert.status == JmStatus::kFeasible
                    ? "the sampled parent reproduces every target within tol: jointly measurable"
                    : "this fixed parent does not reach tol; this is not evidence of incompatibility";
  write_json(out, doc);
  return kExitOk;
}

int cmd_lemma1_roundtrip(const Options& o, std::ostream& out) {
  if (o.trials < 1) throw std::invalid_argument("trials must be positive");
  Rng rng = make_rng(o.seed);
  double worst = 0.0;
  for (int trial = 0; trial < o.trials; ++trial) {
    const Assemblage sigma = random_assemblage(o.d, 2, o.d, rng);
    const Assemblage back = filter_loss(apply_loss_to_assemblage(sigma, o.eta), o.eta);
    for (int x = 0; x < sigma.settings(); ++x) {
      for (int a = 0; a < sigma.outcomes(x); ++a) worst = std::max(worst, frobenius_distance(back(a, x), sigma(a, x)));
    }
  }
  write_json(out, Json{{"d", o.d}, {"eta", o.eta}, {"seed", o.seed}, {"trials", o.trials}, {"max_residual", worst}});
  return kExitOk;
}

int cmd_appendix_c(const Options& o, std::ostream& out) {
  if (o.trials < 1) throw std::invalid_argument("trials must be positive");
  const NoiseParams params = NoiseParams::make(o.d, o.eta, o.p);
  const Channel chain = Channel::compose({Channel::white_noise(o.p, o.d), Channel::loss(o.eta, o.d)});
  const std::vector<CMatrix> kraus = chain.kraus_operators();
  Rng rng = make_rng(o.seed);
  std::uniform_int_distribution<int> outcomes(2, o.d + 2);
  double worst = 0.0;
  double worst_kraus = 0.0;
  for (int trial = 0; trial < o.trials; ++trial) {
    const Povm m_prime = random_povm(o.d + 1, outcomes(rng), rng);
    const LossyDecomposition dec = reduce_through_loss_dual(m_prime, params);
    worst = std::max(worst, dec.decomposition_residual);
    for (std::size_t a = 0; a < m_prime.size(); ++a) {
      CMatrix via_kraus = CMatrix::Zero(o.d, o.d);
      for (const auto& k : kraus) via_kraus += k.adjoint() * m_prime[a].op * k;
      worst_kraus = std::max(worst_kraus, frobenius_distance(via_kraus, dec.reconstructed[a].op));
    }
  }
  write_json(out, Json{{"d", o.d},
                       {"eta", o.eta},
                       {"p", o.p},
                       {"trials", o.trials},
                       {"seed", o.seed},
                       {"max_residual", worst},
                       {"max_kraus_residual", worst_kraus}});
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"steerlab: one-way steering thresholds, lossy measurement simulation and JM certification"};
  app.require_subcommand(1);
  Options o;

  auto* thresholds_cmd = app.add_subcommand("thresholds", "threshold visibilities for dimension d");
  thresholds_cmd->add_option("--d", o.d, "local dimension")->required();

  auto* phase_cmd = app.add_subcommand("phase-diagram", "classify the (eta, p) grid and write CSV");
  phase_cmd->add_option("--d", o.d)->required();
  phase_cmd->add_option("--grid", o.grid, "grid subdivisions per axis")->required();
  phase_cmd->add_option("--out", o.out_path, "CSV output path")->required();

  auto* state_cmd = app.add_subcommand("state", "build the one-way state and report its validity");
  state_cmd->add_option("--d", o.d)->required();
  state_cmd->add_option("--eta", o.eta)->required();
  state_cmd->add_option("--p", o.p)->required();
  state_cmd->add_option("--emit", o.emit_path, "also write the state document here");

  auto* sim_cmd = app.add_subcommand("simulate-povm", "Monte Carlo check of the covariant simulated effect");
  sim_cmd->add_option("--d", o.d)->required();
  sim_cmd->add_option("--t", o.t)->required();
  sim_cmd->add_option("--samples", o.samples)->required();
  sim_cmd->add_option("--seed", o.seed)->required();

  auto* jm_cmd = app.add_subcommand("jm-certify", "LP joint-measurability certificate on a sampled parent");
  jm_cmd->add_option("--d", o.d)->required();
  jm_cmd->add_option("--eta", o.eta)->required();
  jm_cmd->add_option("--p", o.p)->required();
  jm_cmd->add_option("--atoms", o.atoms)->required();
  jm_cmd->add_option("--targets", o.targets, "POVM JSON file or builtin:mubs")->required();
  jm_cmd->add_option("--tol", o.tol)->required();
  jm_cmd->add_option("--seed", o.seed, "parent sampling seed");
  jm_cmd->add_flag("--emit-conditionals", o.emit_conditionals);

  auto* lemma_cmd = app.add_subcommand("lemma1-roundtrip", "loss then filtering on random assemblages");
  lemma_cmd->add_option("--d", o.d)->required();
  lemma_cmd->add_option("--eta", o.eta)->required();
  lemma_cmd->add_option("--seed", o.seed)->required();
  lemma_cmd->add_option("--trials", o.trials);

  auto* appc_cmd = app.add_subcommand("appendixC-check", "decomposition of pulled-back (d+1)-level POVMs");
  appc_cmd->add_option("--d", o.d)->required();
  appc_cmd->add_option("--eta", o.eta)->required();
  appc_cmd->add_option("--p", o.p)->required();
  appc_cmd->add_option("--trials", o.trials)->required();
  appc_cmd->add_option("--seed", o.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (thresholds_cmd->parsed()) return cmd_thresholds(o, out);
    if (phase_cmd->parsed()) return cmd_phase_diagram(o, out);
    if (state_cmd->parsed()) return cmd_state(o, out);
    if (sim_cmd->parsed()) return cmd_simulate_povm(o, out);
    if (jm_cmd->parsed()) return cmd_jm_certify(o, out);
    if (lemma_cmd->parsed()) return cmd_lemma1_roundtrip(o, out);
    if (appc_cmd->parsed()) return cmd_appendix_c(o, out);
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace steerlab

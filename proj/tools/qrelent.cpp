// Copyright 2026 The qrelent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qrelent: command-line front end. One subcommand per module; reports go to
// stdout as JSON (default) or CSV, diagnostics to stderr.
// Exit status: 0 success, 1 internal failure, 2 bad input.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrelent/acceptance.hpp"
#include "qrelent/capacity.hpp"
#include "qrelent/coherent.hpp"
#include "qrelent/cost.hpp"
#include "qrelent/distinguish.hpp"
#include "qrelent/entangle.hpp"
#include "qrelent/json_io.hpp"
#include "qrelent/locc.hpp"
#include "qrelent/qcode.hpp"

namespace {

using namespace qrelent;
using json_io::json;
using json_io::number;

struct Shared {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  bool json = false;
  bool csv = false;
};

[[noreturn]] void invalid(const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::ValidationError, field + ": " + msg);
}

json load(const std::string& path) { return json_io::load_file(path); }

DensityOperator load_state(const std::string& path) { return json_io::state_from_json(load(path), path); }

QuantumChannel load_channel(const std::string& path) { return json_io::channel_from_json(load(path), path); }

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(item, &used);
      if (used != item.size() || d < 1) throw std::invalid_argument(item);
      dims.push_back(d);
    } catch (const std::logic_error&) {
      invalid("--dims", "expected positive integers separated by commas, got \"" + text + "\"");
    }
  }
  if (dims.empty()) invalid("--dims", "empty");
  return dims;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

/// CSV: a report carrying a "rows" table prints it with a header; anything
/// else prints one key,value line per leaf.
void emit(const json& report, const Shared& sh) {
  if (!sh.csv) {
    std::cout << report.dump(2) << '\n';
    return;
  }
  if (report.contains("rows") && report["rows"].is_array() && !report["rows"].empty()) {
    const auto& rows = report["rows"];
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
    std::cout << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << r[keys[i]].dump();
      std::cout << '\n';
    }
    return;
  }
  std::cout << "key,value\n";
  flatten(report, "", std::cout);
}

json ledger_json(const EntropyLedger& l) {
  return {{"before", l.before}, {"after_avg", l.after_avg}, {"asserted", l.asserted}, {"holds", l.holds}};
}

json ledger_json(const ErLedger& l) {
  return {{"before", number(l.before)},
          {"after_avg", number(l.after_avg)},
          {"entropy_drop", l.entropy_drop},
          {"holds", l.holds}};
}

json record_json(const std::vector<RecordEntry>& rec) {
  json out = json::array();
  for (const auto& r : rec) {
    out.push_back({{"step", r.step}, {"party", r.party}, {"op", r.op}, {"outcome", r.outcome}});
  }
  return out;
}

json run_json(const ProtocolRun& run) {
  json events = json::array();
  for (const auto& ev : run.events) {
    json e{{"step", ev.step},
           {"parent_record", record_json(ev.parent.record)},
           {"parent_probability", ev.parent.probability},
           {"branch_probs", ev.measurement.branch_probs},
           {"pruned_mass", ev.measurement.pruned_mass}};
    json ent = json::array();
    for (const auto& l : ev.entropy) ent.push_back(ledger_json(l));
    e["entropy"] = ent;
    json er = json::array();
    for (const auto& [pair, l] : ev.er) {
      json x = ledger_json(l);
      x["pair"] = {pair.first, pair.second};
      er.push_back(x);
    }
    e["er"] = er;
    events.push_back(e);
  }
  json leaves = json::array();
  for (const auto& leaf : run.leaves) {
    json ent = json::array();
    for (int p = 0; p < leaf.state.parties(); ++p) {
      const int one[] = {p};
      ent.push_back(leaf.state.entropy(one));
    }
    leaves.push_back({{"probability", leaf.probability},
                      {"record", record_json(leaf.record)},
                      {"entropies", ent},
                      {"state", json_io::to_json(leaf.state.psi)}});
  }
  return {{"events", events}, {"leaves", leaves}, {"pruned_mass", run.pruned_mass}};
}

SignalEnsemble signal_ensemble(const WeightedStates& ens) {
  SignalEnsemble s;
  s.probs = ens.probs;
  s.outputs = ens.states;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrelent: relative-entropy experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Shared sh;
  app.add_option("--seed", sh.seed, "RNG seed for randomized searches");
  app.add_option("--tol", sh.tol, "tolerance override for the selected command");
  app.add_flag("--json", sh.json, "JSON report (default)");
  app.add_flag("--csv", sh.csv, "CSV report");

  std::function<json()> action;

  // entropy
  std::string state_path;
  auto* c_entropy = app.add_subcommand("entropy", "von Neumann entropy S(rho)");
  c_entropy->add_option("--state", state_path, "state JSON")->required();
  c_entropy->callback([&] {
    action = [&] {
      const auto rho = load_state(state_path);
      return json{{"S", entropy(rho)}, {"dim", rho.dim()}, {"eigenvalues", std::vector<double>(rho.eigenvalues().begin(), rho.eigenvalues().end())}};
    };
  });

  // relent
  std::string rho_path, sigma_path;
  auto* c_relent = app.add_subcommand("relent", "relative entropy D(rho||sigma)");
  c_relent->add_option("--rho", rho_path, "state JSON")->required();
  c_relent->add_option("--sigma", sigma_path, "state JSON")->required();
  c_relent->callback([&] {
    action = [&] {
      const auto rho = load_state(rho_path);
      const auto sigma = load_state(sigma_path);
      if (rho.dim() != sigma.dim()) invalid("--sigma", "dimension differs from --rho");
      return json{{"D", number(relative_entropy(rho, sigma))}, {"S_rho", entropy(rho)}, {"S_sigma", entropy(sigma)}};
    };
  });

  // donald
  std::string ensemble_path;
  auto* c_donald = app.add_subcommand("donald", "sum_k p_k D(rho_k||sigma) split through the mean");
  c_donald->add_option("--ensemble", ensemble_path, "ensemble JSON")->required();
  c_donald->add_option("--sigma", sigma_path, "state JSON")->required();
  c_donald->callback([&] {
    action = [&] {
      const auto ens = json_io::ensemble_from_json(load(ensemble_path), ensemble_path);
      const auto sigma = load_state(sigma_path);
      const auto t = donald_decompose(ens, sigma);
      return json{{"lhs", number(t.lhs)},
                  {"avg_to_mean", number(t.avg_to_mean)},
                  {"mean_to_sigma", number(t.mean_to_sigma)},
                  {"residual", number(t.residual())}};
    };
  });

  // chi
  std::string channel_path;
  auto* c_chi = app.add_subcommand("chi", "Holevo chi of an ensemble, optionally sent through a channel");
  c_chi->add_option("--ensemble", ensemble_path, "ensemble JSON")->required();
  c_chi->add_option("--channel", channel_path, "channel JSON applied to every member");
  c_chi->callback([&] {
    action = [&] {
      auto ens = json_io::ensemble_from_json(load(ensemble_path), ensemble_path);
      if (!channel_path.empty()) {
        const auto ch = load_channel(channel_path);
        for (auto& s : ens.states) {
          if (s.dim() != ch.in_dim()) invalid(ensemble_path, "member dimension differs from channel input");
          s = apply(ch, s);
        }
      }
      const auto sig = signal_ensemble(ens);
      return json{{"chi", holevo_chi(sig)}, {"chi_divergence_form", holevo_chi_divergence(sig)}};
    };
  });

  // chi-star
  int grid = 0;
  auto* c_star = app.add_subcommand("chi-star", "optimal signal ensemble and certificate for a channel");
  c_star->add_option("--channel", channel_path, "channel JSON")->required();
  c_star->add_option("--grid", grid, "probe grid size (0 = default)");
  c_star->callback([&] {
    action = [&] {
      const auto ch = load_channel(channel_path);
      if (grid < 0) invalid("--grid", "must be >= 0");
      EnsembleConfig cfg;
      cfg.grid = grid;
      cfg.seed = sh.seed;
      const double tol = sh.tol.value_or(1e-6);
      const auto res = optimize_ensemble(ch, cfg);
      json ens = json::array();
      for (std::size_t a = 0; a < res.ensemble.probs.size(); ++a) {
        ens.push_back({{"p", res.ensemble.probs[a]},
                       {"input", json_io::to_json(res.ensemble.inputs[a])},
                       {"output", json_io::to_json(res.ensemble.outputs[a])}});
      }
      const auto& c = res.certificate;
      return json{{"chi_star", c.chi_star},
                  {"ensemble", ens},
                  {"certificate",
                   {{"max_distance_violation", c.max_distance_violation},
                    {"equal_distance_spread", c.equal_distance_spread},
                    {"support_ok", c.support_ok},
                    {"grid_size", c.grid_size},
                    {"tol", tol},
                    {"passes", c.passes(tol)}}},
                  {"converged", res.converged},
                  {"sweeps", res.sweeps},
                  {"trace", res.trace}};
    };
  });

  // thermo
  std::string hamiltonian_path;
  double kT = 1.0;
  double boltzmann = 1.0;
  auto* c_thermo = app.add_subcommand("thermo", "thermal state, free-energy gap and bits per unit free energy");
  c_thermo->add_option("--hamiltonian", hamiltonian_path, "Hermitian matrix JSON")->required();
  c_thermo->add_option("--kT", kT, "k T (natural units)");
  c_thermo->add_option("--boltzmann", boltzmann, "Boltzmann constant k; T = kT / k");
  c_thermo->add_option("--state", state_path, "signal state rho1");
  c_thermo->add_option("--ensemble", ensemble_path, "signal ensemble");
  c_thermo->callback([&] {
    action = [&] {
      if (!(kT > 0)) invalid("--kT", "must be positive");
      if (!(boltzmann > 0)) invalid("--boltzmann", "must be positive");
      ThermalModel tm{json_io::matrix_from_json(load(hamiltonian_path), hamiltonian_path), kT / boltzmann, boltzmann};
      tm.validate();
      const auto th = thermal_state(tm);
      json out{{"kT", tm.kT()},
               {"partition_function", th.partition_function},
               {"thermal_state", json_io::to_json(th.state)},
               {"F0", free_energy(th.state, tm)}};
      if (!state_path.empty()) {
        const auto rho1 = load_state(state_path);
        if (rho1.dim() != th.state.dim()) invalid("--state", "dimension differs from the Hamiltonian");
        const auto gap = free_energy_gap(rho1, tm);
        out["F1"] = free_energy(rho1, tm);
        out["gap_via_relative_entropy"] = number(gap.via_relative_entropy);
        out["gap_via_free_energies"] = gap.via_free_energies;
        out["D_rho1_rho0"] = number(relative_entropy(rho1, th.state));
      }
      if (!ensemble_path.empty()) {
        const auto ens = json_io::ensemble_from_json(load(ensemble_path), ensemble_path);
        out["bits_per_free_energy"] = number(bits_per_free_energy(ens, tm));
      }
      return out;
    };
  });

  // coherent
  std::string input_path;
  bool maximize = false;
  int restarts = 16;
  auto* c_coh = app.add_subcommand("coherent", "coherent information of a channel");
  c_coh->add_option("--channel", channel_path, "channel JSON")->required();
  auto* in_opt = c_coh->add_option("--input", input_path, "input state JSON");
  auto* max_opt = c_coh->add_flag("--maximize", maximize, "maximize over inputs");
  c_coh->add_option("--restarts", restarts, "restarts for --maximize");
  in_opt->excludes(max_opt);
  c_coh->callback([&] {
    action = [&] {
      const auto ch = load_channel(channel_path);
      CoherentConfig cfg;
      cfg.seed = sh.seed;
      cfg.restarts = restarts;
      if (sh.tol) cfg.equality_tol = *sh.tol;
      if (restarts < 1) invalid("--restarts", "must be >= 1");
      if (!maximize) {
        const auto rho = input_path.empty() ? DensityOperator::maximally_mixed(ch.in_dim()) : load_state(input_path);
        if (rho.dim() != ch.in_dim()) invalid("--input", "dimension differs from channel input");
        const auto setup = TransmissionSetup::make(ch, rho);
        const auto ci = coherent_information(setup);
        return json{{"IQ", ci.value},
                    {"IQ_via_environment", ci.via_environment},
                    {"entanglement_fidelity", entanglement_fidelity(setup)},
                    {"input", json_io::to_json(rho)}};
      }
      const auto best = maximize_coherent_information(ch, cfg);
      const auto& c = best.certificate;
      return json{{"IQ_max", best.iq_max},
                  {"argmax", json_io::to_json(best.argmax)},
                  {"certificate",
                   {{"max_excess", c.max_excess},
                    {"equality_spread", c.equality_spread},
                    {"probes", c.probes},
                    {"skipped", c.skipped},
                    {"passes", c.passes}}}};
    };
  });

  // qcode
  std::string omega_path;
  auto* c_qcode = app.add_subcommand("qcode", "indeterminate-length code ledger l = S + D - log K");
  c_qcode->add_option("--rho", rho_path, "source state JSON")->required();
  c_qcode->add_option("--design-for", omega_path, "design the code for this state instead of rho");
  c_qcode->callback([&] {
    action = [&] {
      const auto rho = load_state(rho_path);
      const auto design = omega_path.empty() ? rho : load_state(omega_path);
      if (design.dim() != rho.dim()) invalid("--design-for", "dimension differs from --rho");
      const auto code = shannon_fano_lengths(design);
      const auto led = average_length(code, rho);
      return json{{"average_length", led.average_length},
                  {"S", led.entropy},
                  {"D", number(led.divergence)},
                  {"K", kraft_sum(code)},
                  {"log2_K", led.log_kraft},
                  {"residual", number(led.residual())},
                  {"lengths", code.lengths()},
                  {"register_len", code.register_len()}};
    };
  });

  // er
  std::string dims_text;
  int er_restarts = 64;
  auto* c_er = app.add_subcommand("er", "relative entropy of entanglement of a bipartite state");
  c_er->add_option("--state", state_path, "state JSON")->required();
  c_er->add_option("--dims", dims_text, "dA,dB")->required();
  c_er->add_option("--restarts", er_restarts, "random restarts");
  c_er->callback([&] {
    action = [&] {
      const auto dims = parse_dims(dims_text);
      if (dims.size() != 2) invalid("--dims", "expected two dimensions dA,dB");
      if (er_restarts < 1) invalid("--restarts", "must be >= 1");
      const auto rho = load_state(state_path);
      if (rho.dim() != dims[0] * dims[1]) invalid("--dims", "product differs from the state dimension");
      ErConfig cfg;
      cfg.restarts = er_restarts;
      cfg.seed = sh.seed;
      if (sh.tol) cfg.tol = *sh.tol;
      const auto res = relative_entropy_of_entanglement(rho, dims[0], dims[1], cfg);
      return json{{"Er", res.value},
                  {"label", "E_r (ansatz upper bound)"},
                  {"converged", res.converged},
                  {"restarts_used", res.restarts_used},
                  {"best_by_restart", res.best_by_restart},
                  {"closest_separable", json_io::to_json(res.argmin.state())}};
    };
  });

  // locc
  std::string demo_name, protocol_path;
  bool no_er = false;
  auto* c_locc = app.add_subcommand("locc", "LOCC protocol tree with entropy and E_r ledgers");
  c_locc->add_option("--demo", demo_name, "built-in demo: ghz-to-epr");
  c_locc->add_option("--state", state_path, "pure multiparty state vector JSON");
  c_locc->add_option("--dims", dims_text, "local dimensions, e.g. 2,2,2");
  c_locc->add_option("--protocol", protocol_path, "protocol JSON");
  c_locc->add_flag("--no-er", no_er, "skip E_r ledgers");
  c_locc->callback([&] {
    action = [&] {
      ErConfig cfg;
      cfg.seed = sh.seed;
      cfg.restarts = 8;
      if (sh.tol) cfg.tol = *sh.tol;
      if (!demo_name.empty()) {
        if (demo_name != "ghz-to-epr") invalid("--demo", "unknown demo \"" + demo_name + "\"");
        const auto demo = ghz_to_epr_demo(cfg);
        json out = run_json(demo.run);
        out["demo"] = demo_name;
        out["Er_BC"] = ledger_json(demo.bc_ledger);
        out["S_A"] = ledger_json(demo.a_ledger);
        out["epr_fidelity"] = demo.epr_fidelity;
        return out;
      }
      if (state_path.empty()) invalid("--state", "required unless --demo is given");
      if (dims_text.empty()) invalid("--dims", "required with --state");
      if (protocol_path.empty()) invalid("--protocol", "required with --state");
      const auto dims = parse_dims(dims_text);
      const auto psi = json_io::vector_from_json(load(state_path), state_path);
      const auto initial = MultipartyState::make(dims, psi);
      const auto steps = json_io::protocol_from_json(load(protocol_path), protocol_path);
      return run_json(run_protocol(initial, steps, !no_er, cfg));
    };
  });

  // stein
  int nmax = 6;
  double alpha = 0.05;
  auto* c_stein = app.add_subcommand("stein", "Stein exponents -log2(beta_N)/N against D(rho||sigma)");
  c_stein->add_option("--rho", rho_path, "state JSON")->required();
  c_stein->add_option("--sigma", sigma_path, "state JSON")->required();
  c_stein->add_option("--nmax", nmax, "largest number of copies");
  c_stein->add_option("--alpha", alpha, "type-I error bound");
  c_stein->callback([&] {
    action = [&] {
      const auto rho = load_state(rho_path);
      const auto sigma = load_state(sigma_path);
      if (rho.dim() != sigma.dim()) invalid("--sigma", "dimension differs from --rho");
      if (nmax < 1) invalid("--nmax", "must be >= 1");
      if (!(alpha > 0 && alpha < 1)) invalid("--alpha", "must lie in (0,1)");
      const auto rep = exponent_trend(rho, sigma, nmax, alpha);
      json rows = json::array();
      for (std::size_t k = 0; k < rep.copies.size(); ++k) {
        rows.push_back({{"N", rep.copies[k]},
                        {"beta", rep.betas[k]},
                        {"exponent", number(rep.exponents[k])},
                        {"classical_exponent", number(rep.classical_exponents[k])},
                        {"D", number(rep.target)},
                        {"finite_size", static_cast<bool>(rep.finite_size_flags[k])}});
      }
      json sens = json::array();
      for (const auto& [a, e] : rep.alpha_sensitivity) sens.push_back({{"alpha", a}, {"exponent", number(e)}});
      return json{{"D", number(rep.target)},
                  {"alpha", rep.alpha},
                  {"approaches", rep.approaches},
                  {"alpha_sensitivity", sens},
                  {"rows", rows}};
    };
  });

  // demo
  bool no_replay = false;
  int exit_status = 0;
  auto* c_demo = app.add_subcommand("demo", "acceptance suite: one pass/fail line per criterion");
  c_demo->add_flag("--no-replay", no_replay, "skip the seed-replay criterion");
  c_demo->callback([&] {
    action = [&] {
      std::vector<std::uint64_t> replay;
      if (!no_replay) replay = {sh.seed + 1, sh.seed + 2};
      const auto results = run_acceptance(sh.seed, replay, [](const CriterionResult& r) {
        std::cerr << format_line(r) << '\n';
      });
      json rows = json::array();
      int passed = 0;
      for (const auto& r : results) {
        passed += r.passed;
        rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
      }
      if (passed != static_cast<int>(results.size())) exit_status = 1;
      return json{{"passed", passed}, {"total", results.size()}, {"rows", rows}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (sh.json && sh.csv) {
    std::cerr << "qrelent: ValidationError: --json and --csv are exclusive\n";
    return 2;
  }
  try {
    emit(action(), sh);
  } catch (const Error& e) {
    std::cerr << "qrelent: " << e.what() << '\n';
    return e.kind() == ErrorKind::ConvergenceFailure ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "qrelent: internal error: " << e.what() << '\n';
    return 1;
  }
  return exit_status;
}

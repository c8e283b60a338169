// Copyright 2026 The bmgame Authors
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

// Command-line front end. Exit codes: 0 = in core / nothing unstable /
// verified / solved, 1 = not in core / unstable coalition / verification
// failed, 2 = usage or input error.

#ifndef BMGAME_CLI_HPP
#define BMGAME_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bmgame/bmgame.hpp"

namespace bmgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string payoff_path_for(const std::string& out, const std::string& payoff_out) {
  if (!payoff_out.empty()) return payoff_out;
  const std::string ext = ".json";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + ".payoff.json";
  }
  return out + ".payoff.json";
}

inline void print_witness(std::ostream& out, const Coalition& s, const Rational& deficit) {
  out << "witness: " << format_coalition(s) << "\n";
  out << "deficit: " << format_rational(deficit) << "\n";
}

inline void write_pair(std::ostream& out, const GameWithPayoff& made, const std::string& path,
                       const std::string& payoff_out) {
  const std::string payoff_path = payoff_path_for(path, payoff_out);
  write_file(path, serialize_instance(made.game));
  write_file(payoff_path, serialize_payoff(made.payoff, &made.game));
  out << "instance: " << path << "\n";
  out << "payoff: " << payoff_path << "\n";
}

}  // namespace detail

/// Runs one command line (arguments after the program name). Errors go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for bipartite b-matching (transportation) games", "bmgame"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string payoff_path;
  std::string coalition_path;
  std::string knapsack_path;
  std::string out_path;
  std::string payoff_out;
  std::string method;
  std::size_t max_agents = kDefaultMaxAgents;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  bool allow_profit_share = false;
  bool check_diminishing = false;
  bool no_brute_force = false;

  auto add_instance = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--instance", instance_path, "Instance file");
    if (required) opt->required();
  };
  auto add_payoff = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--payoff", payoff_path, "Payoff file");
    if (required) opt->required();
  };
  auto add_max_agents = [&](CLI::App* sub) {
    sub->add_option("--max-agents", max_agents, "Coalition enumeration guard");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate input files");
  add_instance(validate_cmd, false);
  add_payoff(validate_cmd, false);
  validate_cmd->add_option("--coalition", coalition_path, "Coalition file");
  validate_cmd->add_option("--knapsack", knapsack_path, "Knapsack file");

  auto* solve_cmd = app.add_subcommand("solve", "Maximum-weight b-matching");
  add_instance(solve_cmd);
  method = "flow";
  solve_cmd->add_option("--method", method, "flow | greedy | brute")
      ->check(CLI::IsMember({"flow", "greedy", "brute"}));

  auto* worth_cmd = app.add_subcommand("worth", "Worth of a coalition");
  add_instance(worth_cmd);
  worth_cmd->add_option("--coalition", coalition_path, "Coalition file")->required();

  auto* marginals_cmd = app.add_subcommand("marginals", "Marginal utility of every agent");
  add_instance(marginals_cmd);
  marginals_cmd->add_flag("--check-diminishing", check_diminishing,
                          "On stars, also test diminishing leaf marginals");
  marginals_cmd->add_option("--trials", trials, "Sampled triples when not exhaustive");
  marginals_cmd->add_option("--seed", seed, "Random seed");

  auto* core_cmd = app.add_subcommand("check-core", "Core membership of a payoff vector");
  add_instance(core_cmd);
  add_payoff(core_cmd);
  core_cmd->add_option("--method", method, "auto | brute | star")
      ->check(CLI::IsMember({"auto", "brute", "star"}));
  core_cmd->add_flag("--allow-profit-share", allow_profit_share,
                     "Accept payoffs that do not sum to the grand worth (brute only)");
  add_max_agents(core_cmd);

  auto* unstable_cmd = app.add_subcommand("find-unstable", "Maximum-deficit coalition");
  add_instance(unstable_cmd);
  add_payoff(unstable_cmd);
  unstable_cmd->add_option("--method", method, "brute | star-dp")
      ->check(CLI::IsMember({"brute", "star-dp"}));
  add_max_agents(unstable_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "Generate a reduction instance");
  reduce_cmd->require_subcommand(1);
  auto* k2s = reduce_cmd->add_subcommand("knapsack-to-star", "Knapsack -> star game");
  k2s->add_option("--knapsack", knapsack_path, "Knapsack file")->required();
  auto* s2b = reduce_cmd->add_subcommand("star-to-bipartite", "Star game -> x/y gadget");
  add_instance(s2b);
  add_payoff(s2b);
  auto* partner_cmd = reduce_cmd->add_subcommand("partner", "Partner duplication");
  add_instance(partner_cmd);
  add_payoff(partner_cmd);
  for (auto* sub : {k2s, s2b, partner_cmd}) {
    sub->add_option("--out", out_path, "Output instance file")->required();
    sub->add_option("--payoff-out", payoff_out,
                    "Output payoff file (default: <out>.payoff.json)");
  }

  auto* knapsack_cmd = app.add_subcommand("knapsack", "Solve a 0-1 knapsack instance");
  knapsack_cmd->add_option("--knapsack", knapsack_path, "Knapsack file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the report for a generated instance");
  add_instance(verify_cmd);
  add_payoff(verify_cmd);
  verify_cmd->add_flag("--no-brute-force", no_brute_force,
                       "Gadget: skip coalition enumeration");
  verify_cmd->add_option("--out", out_path, "Also write the report here");
  verify_cmd->add_option("--max-agents", max_agents, "Enumeration guard");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    auto load_instance = [&] { return parse_instance(read_file(instance_path)); };
    auto load_payoff = [&] { return parse_payoff(read_file(payoff_path)); };

    if (validate_cmd->parsed()) {
      if (instance_path.empty() && knapsack_path.empty()) {
        err << "validate: give --instance and/or --knapsack\n";
        return kExitUsage;
      }
      if (!knapsack_path.empty()) {
        const auto k = parse_knapsack(read_file(knapsack_path));
        out << "knapsack OK: " << k.items.size() << " items\n";
      }
      if (instance_path.empty()) return kExitOk;
      const auto g = load_instance();
      out << "instance OK: |U|=" << g.u_side().size() << " |V|=" << g.v_side().size()
          << " |E|=" << g.edges().size() << "\n";
      if (!payoff_path.empty()) {
        const auto p = load_payoff();
        (void)aligned_payoffs(g, p);
        out << "payoff OK: imputation " << (is_imputation(g, p) ? "yes" : "no") << "\n";
      }
      if (!coalition_path.empty()) {
        const auto s = parse_coalition(read_file(coalition_path));
        (void)membership(g, s);
        out << "coalition OK: " << format_coalition(s) << "\n";
      }
      return kExitOk;
    }

    if (solve_cmd->parsed()) {
      const auto g = load_instance();
      BMatching m;
      if (method == "greedy") {
        m = greedy_star_matching(g);
      } else if (method == "brute") {
        m = brute_force_matching(g);
      } else {
        m = max_weight_b_matching(g);
      }
      out << "value: " << format_rational(m.total_weight) << "\n";
      for (std::size_t k = 0; k < g.edges().size(); ++k) {
        if (m.multiplicities[k] == 0) continue;
        const auto& e = g.edges()[k];
        out << g.id(e.u) << " " << g.id(e.v) << " x" << m.multiplicities[k] << "\n";
      }
      return kExitOk;
    }

    if (worth_cmd->parsed()) {
      const auto g = load_instance();
      const auto s = parse_coalition(read_file(coalition_path));
      out << "worth: " << format_rational(worth(g, s)) << "\n";
      return kExitOk;
    }

    if (marginals_cmd->parsed()) {
      const auto g = load_instance();
      for (const auto& id : g.agents()) {
        out << id << " " << format_rational(marginal_utility(g, id)) << "\n";
      }
      if (!check_diminishing) return kExitOk;
      const auto result = verify_diminishing_marginals(g, trials, seed);
      out << "diminishing marginals: " << (result.holds ? "hold" : "VIOLATED") << " ("
          << result.triples_checked << " triples, "
          << (result.exhaustive ? "exhaustive" : "sampled") << ")\n";
      if (result.violation) {
        const auto& v = *result.violation;
        out << "S: " << format_coalition(v.base) << " v: " << v.added << " v': " << v.other
            << " gain alone: " << format_rational(v.gain_alone)
            << " gain with v': " << format_rational(v.gain_with) << "\n";
      }
      return result.holds ? kExitOk : kExitNegative;
    }

    if (core_cmd->parsed()) {
      const auto g = load_instance();
      const auto p = load_payoff();
      if (method.empty() || method == "flow") method = "auto";
      if (method == "auto") {
        method = (star_center(g) && is_imputation(g, p)) ? "star" : "brute";
      }
      CoreVerdict verdict;
      if (method == "star") {
        verdict = check_core_star(g, p);
      } else {
        verdict = check_core_bruteforce(g, p, {allow_profit_share, max_agents});
      }
      out << "method: " << method << "\n";
      if (verdict.in_core) {
        out << "IN CORE\n";
        return kExitOk;
      }
      out << "NOT IN CORE\n";
      detail::print_witness(out, verdict.witness->coalition, verdict.witness->deficit);
      return kExitNegative;
    }

    if (unstable_cmd->parsed()) {
      const auto g = load_instance();
      const auto p = load_payoff();
      std::optional<DeficitResult> found;
      if (method == "star-dp") {
        found = star_unstable_coalition_dp(g, p);
      } else {
        auto best = max_deficit(g, p, max_agents);
        if (best.deficit > 0) found = std::move(best);
      }
      if (!found) {
        out << "NO UNSTABLE COALITION\nmax deficit: 0\n";
        return kExitOk;
      }
      out << "UNSTABLE COALITION\n";
      detail::print_witness(out, found->coalition, found->deficit);
      return kExitNegative;
    }

    if (k2s->parsed()) {
      const auto k = parse_knapsack(read_file(knapsack_path));
      detail::write_pair(out, knapsack_to_star(k), out_path, payoff_out);
      return kExitOk;
    }
    if (s2b->parsed()) {
      detail::write_pair(out, star_to_bipartite_gadget(load_instance(), load_payoff()), out_path,
                         payoff_out);
      return kExitOk;
    }
    if (partner_cmd->parsed()) {
      detail::write_pair(out, partner_duplication(load_instance(), load_payoff()), out_path,
                         payoff_out);
      return kExitOk;
    }

    if (knapsack_cmd->parsed()) {
      const auto k = parse_knapsack(read_file(knapsack_path));
      const auto r = solve_knapsack(k);
      out << "best value: " << r.best_value.str() << "\n";
      out << "answer: " << (r.yes ? "YES" : "NO") << " (best value "
          << (r.yes ? ">" : "<=") << " A = " << k.goal.str() << ")\n";
      out << "items:";
      for (const auto i : r.witness) out << " " << i + 1;
      out << "\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto g = load_instance();
      const auto p = load_payoff();
      const Json& prov = g.provenance();
      const std::string kind = prov.is_object() && prov.contains("reduction") &&
                                       prov.at("reduction").is_string()
                                   ? prov.at("reduction").get<std::string>()
                                   : std::string();
      ReductionReport report;
      if (kind == "knapsack-to-star") {
        report = verify_fully_matched_lemmas(g, p, std::min<std::size_t>(max_agents, 20));
      } else if (kind == "star-to-bipartite") {
        report = verify_gadget(g, p, {!no_brute_force, std::min<std::size_t>(max_agents, 20)});
      } else if (kind == "partner") {
        const auto source = partner_source(g);
        report = verify_partner_equivalence(source.game, source.payoff, g, p,
                                            std::min<std::size_t>(max_agents / 2, 10));
      } else {
        err << "verify: instance has no recognised provenance block\n";
        return kExitUsage;
      }
      const std::string text = serialize_report(report);
      out << text;
      if (!out_path.empty()) write_file(out_path, text);
      return report.passed() ? kExitOk : kExitNegative;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bmgame::cli

#endif  // BMGAME_CLI_HPP

// Copyright 2026 The gmrule Authors. All rights reserved.
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "gmrule/codec.hpp"
#include "gmrule/fastpath.hpp"
#include "gmrule/gm_core.hpp"
#include "gmrule/grid.hpp"
#include "gmrule/nash.hpp"
#include "gmrule/nim.hpp"
#include "gmrule/periodicity.hpp"
#include "gmrule/smith.hpp"
#include "gmrule/service/http_server.hpp"
#include "gmrule/service/session_store.hpp"

namespace gmrule::cli {

namespace {

using codec::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string vector;
  long ell = 2;
  std::string steps = "0";
  std::size_t d = 2;
  std::string level = "0";
  std::size_t column = 1;
  std::vector<std::size_t> grid_n{3};
  std::int64_t grid_max = 6;
  int players = 2;
  std::string format = "text";
  bool trace = false;
  bool settle_first = false;
  std::string host = "127.0.0.1";
  int port = 8080;
};

std::size_t budget_from_env(std::size_t fallback) {
  const char* raw = std::getenv("GM_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(raw));
  } catch (const std::exception&) {
    throw UsageError(std::string("GM_BUDGET: not a non-negative integer: ") + raw);
  }
}

PileVector vector_arg(const Options& o) {
  if (o.vector.empty()) throw UsageError("--vector/-x is required");
  try {
    return PileVector::parse(o.vector);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--vector: ") + e.what());
  }
}

BigInt big_arg(const std::string& text, const char* flag) {
  try {
    return parse_big(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::uint64_t u64_arg(const std::string& text, const char* flag) {
  const BigInt v = big_arg(text, flag);
  if (!fits_u64(v)) throw UsageError(std::string(flag) + ": must be a non-negative 64-bit count");
  return to_u64(v);
}

RuleParams rule_arg(const Options& o) {
  if (o.ell < 2) throw UsageError("--ell: must be at least 2");
  return RuleParams(o.ell);
}

void emit_vector(std::ostream& out, const Options& o, const PileVector& x) {
  if (o.format == "json") {
    out << json{{"vector", codec::to_json(x)}}.dump() << "\n";
  } else {
    out << x.str() << "\n";
  }
}

int cmd_step(const Options& o, std::ostream& out) {
  const PileVector x = vector_arg(o);
  const MoveResult m = gm_move(x, rule_arg(o));
  if (o.format == "json") {
    json j = codec::to_json(m.step);
    j["input"] = codec::to_json(x);
    j["next"] = codec::to_json(m.next);
    out << j.dump() << "\n";
  } else {
    out << m.next.str() << " kept=" << m.step.kept << (m.step.fallback ? " fallback" : "") << "\n";
  }
  return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  emit_vector(out, o, simulate(vector_arg(o), rule_arg(o), u64_arg(o.steps, "--steps")));
  return 0;
}

int cmd_forward(const Options& o, std::ostream& out) {
  const PileVector x = vector_arg(o);
  const BigInt j = big_arg(o.steps, "--steps");
  if (sgn(j) < 0) throw UsageError("--steps: must be non-negative");
  const RuleParams params = rule_arg(o);
  emit_vector(out, o, o.settle_first ? position_at(x, params, j) : fast_forward(x, params, j));
  return 0;
}

int cmd_settle(const Options& o, std::ostream& out) {
  const SettleResult r = settle(vector_arg(o), rule_arg(o));
  if (o.format == "json") {
    out << codec::to_json(r).dump() << "\n";
    return 0;
  }
  out << "N=" << (r.last_unsettled ? r.last_unsettled->get_str() : std::string("none"))
      << " first=" << r.first_absorbed.str() << "\n";
  if (o.trace) out << codec::to_json(r)["trace"].dump() << "\n";
  return 0;
}

int cmd_finish(const Options& o, std::ostream& out) {
  const FinishSpec spec{o.d, big_arg(o.level, "--level")};
  const FinishResult r = moves_to_finish_traced(vector_arg(o), rule_arg(o), spec);
  if (o.format == "json") {
    out << codec::to_json(r).dump() << "\n";
    return 0;
  }
  out << r.moves.get_str() << "\n";
  if (o.trace) out << codec::to_json(r).dump() << "\n";
  return 0;
}

int cmd_word(const Options& o, std::ostream& out) {
  const PeriodSummary p = period_word(vector_arg(o), rule_arg(o), o.column);
  if (o.format == "json") {
    out << codec::to_json(p).dump() << "\n";
  } else {
    out << p.run_length() << "\n";
  }
  return 0;
}

int cmd_remoteness(const Options& o, std::ostream& out) {
  const nim::GamePosition x{vector_arg(o)};
  const nim::RemotenessResult r = nim::remoteness(x);
  if (o.format == "json") {
    json j = codec::to_json(r);
    j["piles"] = codec::to_json(x.piles());
    out << j.dump() << "\n";
  } else if (o.format == "csv") {
    out << codec::csv_header(x.size()) << "\n" << codec::csv_row(x, r) << "\n";
  } else {
    out << "R=" << r.remoteness.get_str() << " outcome=" << nim::to_string(r.outcome);
    if (r.best_move) out << " keep=" << *r.best_move;
    out << "\n";
  }
  return 0;
}

nim::GamePosition position_of(const std::vector<std::int64_t>& v) {
  std::vector<BigInt> big;
  for (std::int64_t p : v) big.push_back(to_big(p));
  return nim::GamePosition(PileVector(std::move(big)));
}

void check_grid_args(const Options& o) {
  if (o.grid_max < 0) throw UsageError("--max: must be non-negative");
  for (std::size_t n : o.grid_n) {
    if (n < 2) throw UsageError("--n: games need at least two piles");
  }
}

int cmd_sweep(const Options& o, std::ostream& out) {
  check_grid_args(o);
  json rows = json::array();
  for (std::size_t n : o.grid_n) {
    if (o.format != "json") out << codec::csv_header(n) << "\n";
    for_each_sorted_grid(n, o.grid_max, [&](const std::vector<std::int64_t>& v) {
      const nim::GamePosition x = position_of(v);
      const nim::RemotenessResult r = nim::remoteness(x);
      if (o.format == "json") {
        json j = codec::to_json(r);
        j["piles"] = codec::to_json(x.piles());
        rows.push_back(std::move(j));
      } else {
        out << codec::csv_row(x, r) << "\n";
      }
    });
  }
  if (o.format == "json") out << rows.dump() << "\n";
  return 0;
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  check_grid_args(o);
  SmithOracle oracle(budget_from_env(SmithOracle::kDefaultBudget));
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (std::size_t n : o.grid_n) {
    for_each_sorted_grid(n, o.grid_max, [&](const std::vector<std::int64_t>& v) {
      const nim::GamePosition x = position_of(v);
      const BigInt fast = nim::remoteness(x).remoteness;
      const std::uint64_t slow = oracle.remoteness(v);
      ++checked;
      if (fast != BigInt(static_cast<unsigned long>(slow))) {
        ++mismatches;
        out << "mismatch " << x.str() << " solver=" << fast.get_str() << " oracle=" << slow << "\n";
      }
    });
  }
  if (o.format == "json") {
    out << json{{"checked", checked}, {"mismatches", mismatches}, {"oracle_states", oracle.states()}}
               .dump()
        << "\n";
  } else {
    out << "checked=" << checked << " mismatches=" << mismatches
        << " oracle_states=" << oracle.states() << "\n";
  }
  return mismatches == 0 ? 0 : 1;
}

int cmd_nash(const Options& o, std::ostream& out) {
  if (o.players < 2) throw UsageError("--players: must be at least 2");
  const std::size_t budget = budget_from_env(2'000'000);
  std::vector<std::vector<std::int64_t>> starts;
  if (!o.vector.empty()) {
    std::vector<std::int64_t> v;
    for (const BigInt& p : vector_arg(o).entries()) v.push_back(to_i64(p));
    starts.push_back(std::move(v));
  } else {
    check_grid_args(o);
    for (std::size_t n : o.grid_n) {
      for_each_sorted_grid(n, o.grid_max,
                           [&](const std::vector<std::int64_t>& v) { starts.push_back(v); });
    }
  }
  std::size_t profitable = 0;
  std::size_t states = 0;
  json found = json::array();
  for (const auto& v : starts) {
    const NashReport r = check_nash({o.players, std::nullopt, v}, budget);
    states += r.states_explored;
    if (!r.profitable_deviation()) continue;
    ++profitable;
    if (o.format == "json") {
      found.push_back(codec::to_json(r));
    } else {
      out << "counterexample " << codec::to_json(r).dump() << "\n";
    }
  }
  if (o.format == "json") {
    out << json{{"players", o.players},
                {"instances", starts.size()},
                {"profitable", profitable},
                {"states_explored", states},
                {"counterexamples", found}}
               .dump()
        << "\n";
  } else {
    out << "players=" << o.players << " instances=" << starts.size()
        << " profitable=" << profitable << " states=" << states << "\n";
  }
  return 0;
}

int cmd_serve(const Options& o, std::ostream& out) {
  service::SessionStore store;
  service::HttpServer server(store);
  out << "serving on http://" << o.host << ":" << o.port << "\n" << std::flush;
  if (!server.listen(o.host, o.port)) {
    throw DomainError("could not listen on " + o.host + ":" + std::to_string(o.port));
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"GM-rule dynamics and exact slow NIM(n, n-1) solver", "gmrule"};
  app.require_subcommand(1);
  Options o;

  auto add_vector = [&o](CLI::App* c) {
    c->add_option("-x,--vector", o.vector, "comma-separated integers, e.g. 16,17,20,20,21")
        ->required();
  };
  auto add_ell = [&o](CLI::App* c) { c->add_option("-l,--ell", o.ell, "modulus ell >= 2"); };
  auto add_format = [&o](CLI::App* c) {
    c->add_option("--format", o.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_grid = [&o](CLI::App* c) {
    c->add_option("--n", o.grid_n, "pile counts (repeatable)");
    c->add_option("--max", o.grid_max, "largest pile in the grid [0..max]^n");
  };

  auto* step = app.add_subcommand("step", "one GM-move");
  add_vector(step);
  add_ell(step);
  add_format(step);

  auto* sim = app.add_subcommand("simulate", "x^j by naive moves");
  add_vector(sim);
  add_ell(sim);
  sim->add_option("-j,--steps", o.steps, "number of moves")->required();
  add_format(sim);

  auto* fwd = app.add_subcommand("forward", "x^j of a settled vector via the period");
  add_vector(fwd);
  add_ell(fwd);
  fwd->add_option("-j,--steps", o.steps, "number of moves (any size)")->required();
  fwd->add_flag("--settle-first", o.settle_first, "accept unsettled vectors");
  add_format(fwd);

  auto* set = app.add_subcommand("settle", "first vector of range <= ell");
  add_vector(set);
  add_ell(set);
  set->add_flag("--trace", o.trace, "print the leader trace as JSON");
  add_format(set);

  auto* fin = app.add_subcommand("finish", "moves until d entries are <= level");
  add_vector(fin);
  add_ell(fin);
  fin->add_option("-d", o.d, "entries that must reach the level");
  fin->add_option("-c,--level", o.level, "finish level");
  fin->add_flag("--trace", o.trace, "print the walk trace as JSON");
  add_format(fin);

  auto* word = app.add_subcommand("word", "period word of one column");
  add_vector(word);
  add_ell(word);
  word->add_option("--column", o.column, "1-based column");
  add_format(word);

  auto* rem = app.add_subcommand("remoteness", "remoteness, outcome and best keep");
  add_vector(rem);
  add_format(rem);

  auto* sweep = app.add_subcommand("sweep", "remoteness table over a grid");
  add_grid(sweep);
  sweep->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* oracle = app.add_subcommand("oracle-check", "compare the solver with retrograde search");
  add_grid(oracle);
  add_format(oracle);

  auto* nash = app.add_subcommand("nash-check", "search deviations from the GM-strategies");
  nash->add_option("--players", o.players, "number of players (= ell)");
  nash->add_option("-x,--vector", o.vector, "single initial position");
  add_grid(nash);
  add_format(nash);

  auto* serve = app.add_subcommand("serve", "run the play service");
  serve->add_option("--host", o.host, "bind address");
  serve->add_option("--port", o.port, "TCP port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*step) return cmd_step(o, out);
    if (*sim) return cmd_simulate(o, out);
    if (*fwd) return cmd_forward(o, out);
    if (*set) return cmd_settle(o, out);
    if (*fin) return cmd_finish(o, out);
    if (*word) return cmd_word(o, out);
    if (*rem) return cmd_remoteness(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*oracle) return cmd_oracle_check(o, out);
    if (*nash) return cmd_nash(o, out);
    if (*serve) return cmd_serve(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace gmrule::cli

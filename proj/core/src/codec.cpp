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

#include "gmrule/codec.hpp"

namespace gmrule::codec {

json big(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

BigInt big_from(const json& j) {
  if (j.is_number_integer()) return to_big(j.get<std::int64_t>());
  if (j.is_string()) return parse_big(j.get<std::string>());
  throw DomainError("expected an integer or a decimal string");
}

json to_json(const PileVector& x) {
  json out = json::array();
  for (const BigInt& v : x.entries()) out.push_back(big(v));
  return out;
}

PileVector vector_from(const json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("expected a non-empty integer array");
  std::vector<BigInt> entries;
  entries.reserve(j.size());
  for (const auto& e : j) entries.push_back(big_from(e));
  return PileVector(std::move(entries));
}

json to_json(const StepRecord& s) { return {{"kept", s.kept}, {"fallback", s.fallback}}; }

json to_json(const WalkSegment& s) {
  json out{{"leaders", s.leaders}, {"steps", big(s.steps)}, {"kind", s.jump ? "jump" : "moves"}};
  if (s.finish_bound) out["finish_bound"] = big(*s.finish_bound);
  if (s.join_bound) out["join_bound"] = big(*s.join_bound);
  return out;
}

namespace {

json trace_json(const std::vector<WalkSegment>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back(to_json(s));
  return out;
}

}  // namespace

json to_json(const SettleResult& r) {
  return {{"prefix_len", big(r.prefix_len)},
          {"N", r.last_unsettled ? big(*r.last_unsettled) : json(nullptr)},
          {"first_absorbed", to_json(r.first_absorbed)},
          {"trace", trace_json(r.trace)}};
}

json to_json(const FinishResult& r) {
  return {{"moves", big(r.moves)},
          {"d0", r.initial_finished},
          {"m0", r.initial_leaders},
          {"trace", trace_json(r.trace)}};
}

json to_json(const PeriodSummary& p) {
  return {{"column", p.column},
          {"period_length", p.period_length},
          {"word", p.word},
          {"runs", p.run_length()},
          {"s_count", p.s_count},
          {"r_count", p.r_count},
          {"drop_per_period", big(p.drop_per_period)}};
}

json to_json(const nim::RemotenessResult& r) {
  return {{"remoteness", big(r.remoteness)},
          {"outcome", nim::to_string(r.outcome)},
          {"best_move", r.best_move ? json(*r.best_move) : json(nullptr)}};
}

json to_json(const NashReport& r) {
  json devs = json::array();
  for (const auto& d : r.deviations) {
    json dev{{"player", d.player},
             {"gm_payoff", d.gm_payoff.str()},
             {"best_payoff", d.best_payoff.str()},
             {"profitable", d.profitable}};
    if (d.profitable) dev["line"] = d.line;
    devs.push_back(std::move(dev));
  }
  return {{"initial", r.initial},
          {"players", r.players},
          {"payoff_constant", r.payoff_constant},
          {"gm_play_length", r.gm_play_length},
          {"gm_loser", r.gm_loser},
          {"profitable_deviation", r.profitable_deviation()},
          {"states_explored", r.states_explored},
          {"deviations", devs}};
}

std::string csv_header(std::size_t n) {
  std::string out;
  for (std::size_t i = 1; i <= n; ++i) out += "p" + std::to_string(i) + ",";
  return out + "remoteness,outcome,best_move";
}

std::string csv_row(const nim::GamePosition& x, const nim::RemotenessResult& r) {
  std::string out = x.str() + "," + r.remoteness.get_str() + "," + nim::to_string(r.outcome) + ",";
  if (r.best_move) out += std::to_string(*r.best_move);
  return out;
}

}  // namespace gmrule::codec

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

#ifndef GMRULE_CODEC_HPP_
#define GMRULE_CODEC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmrule/fastpath.hpp"
#include "gmrule/gm_core.hpp"
#include "gmrule/nash.hpp"
#include "gmrule/nim.hpp"
#include "gmrule/periodicity.hpp"
#include "gmrule/pile_vector.hpp"

// JSON and CSV forms shared by the CLI and the play service.
//
// Integers that can exceed 64 bits (entries, step counts, remoteness) are
// written as JSON numbers when they fit in int64 and as decimal strings
// otherwise; readers accept both.
namespace gmrule::codec {

using nlohmann::json;

json big(const BigInt& v);
BigInt big_from(const json& j);

json to_json(const PileVector& x);
PileVector vector_from(const json& j);

json to_json(const StepRecord& s);
json to_json(const WalkSegment& s);
json to_json(const SettleResult& r);
json to_json(const FinishResult& r);
json to_json(const PeriodSummary& p);
json to_json(const nim::RemotenessResult& r);
json to_json(const NashReport& r);

// Header and rows of the sweep table: p1..pn,remoteness,outcome,best_move.
std::string csv_header(std::size_t n);
std::string csv_row(const nim::GamePosition& x, const nim::RemotenessResult& r);

}  // namespace gmrule::codec

#endif  // GMRULE_CODEC_HPP_

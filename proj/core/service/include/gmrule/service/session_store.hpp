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

#ifndef GMRULE_SERVICE_SESSION_STORE_HPP_
#define GMRULE_SERVICE_SESSION_STORE_HPP_

#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmrule/nim.hpp"

namespace gmrule::service {

enum class SessionStatus { kActive, kHumanLost, kHumanWon };

const char* to_string(SessionStatus s);

struct HistoryEntry {
  bool by_human = false;
  std::size_t keep_index = 0;  // 1-based, into the piles before the move
  BigInt kept_value;
  nim::GamePosition position;  // after the move
};

struct GameSession {
  std::string id;
  nim::GamePosition initial;
  nim::GamePosition position;
  bool human_to_move = true;
  std::vector<HistoryEntry> history;
  SessionStatus status = SessionStatus::kActive;
};

// Error carrying the HTTP status the service answers with.
class SessionError : public std::runtime_error {
 public:
  enum class Kind { kBadRequest, kNotFound, kConflict, kIllegalMove };

  SessionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }
  int http_status() const;

 private:
  Kind kind_;
};

struct Hint {
  std::size_t keep_index = 0;
  BigInt remoteness;
  nim::Outcome outcome = nim::Outcome::kN;
};

// In-memory games against the M-rule engine. Different sessions may be
// driven concurrently; a second move on a session that is still
// processing one fails with kConflict instead of queueing.
class SessionStore {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionStore(std::chrono::seconds ttl = std::chrono::hours(1),
                        std::function<Clock::time_point()> now = Clock::now);

  GameSession create(const std::vector<BigInt>& piles, bool human_first);
  GameSession get(const std::string& id);
  // Applies the human's keep, then the engine's reply if the game goes on.
  GameSession move(const std::string& id, std::size_t keep_index);
  Hint hint(const std::string& id);

  // Drops sessions idle for longer than the TTL; returns how many.
  std::size_t evict_expired();
  std::size_t size() const;

 private:
  struct Slot {
    explicit Slot(GameSession s) : session(std::move(s)) {}
    std::mutex mu;
    GameSession session;
    Clock::time_point last_used;
  };

  std::shared_ptr<Slot> find(const std::string& id);
  std::string fresh_id();

  std::chrono::seconds ttl_;
  std::function<Clock::time_point()> now_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t counter_ = 0;
};

// Replays the history from the initial position; true iff it reproduces
// the current position with alternating movers and legal keeps.
bool history_consistent(const GameSession& s);

// Wire form: id, piles, status, human_to_move, remoteness, outcome, hint,
// initial, history.
nlohmann::json to_json(const GameSession& s);
nlohmann::json to_json(const Hint& h);

}  // namespace gmrule::service

#endif  // GMRULE_SERVICE_SESSION_STORE_HPP_

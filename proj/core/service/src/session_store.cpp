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

#include "gmrule/service/session_store.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include "gmrule/codec.hpp"

namespace gmrule::service {

const char* to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::kActive:
      return "active";
    case SessionStatus::kHumanLost:
      return "human_lost";
    case SessionStatus::kHumanWon:
      return "human_won";
  }
  return "unknown";
}

int SessionError::http_status() const {
  switch (kind_) {
    case Kind::kBadRequest:
      return 400;
    case Kind::kNotFound:
      return 404;
    case Kind::kConflict:
      return 409;
    case Kind::kIllegalMove:
      return 422;
  }
  return 500;
}

namespace {

void refresh_status(GameSession& s) {
  if (!s.position.terminal()) {
    s.status = SessionStatus::kActive;
  } else {
    // Whoever has to move at a terminal position loses.
    s.status = s.human_to_move ? SessionStatus::kHumanLost : SessionStatus::kHumanWon;
  }
}

void engine_reply(GameSession& s) {
  if (s.human_to_move || s.position.terminal()) return;
  nim::KeptMove reply = nim::m_rule_move(s.position);
  s.history.push_back({false, reply.kept, s.position.piles()[reply.kept - 1], reply.next});
  s.position = reply.next;
  s.human_to_move = true;
}

}  // namespace

SessionStore::SessionStore(std::chrono::seconds ttl, std::function<Clock::time_point()> now)
    : ttl_(ttl), now_(std::move(now)) {}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << rng() << std::setw(8) << ++counter_;
  return os.str();
}

GameSession SessionStore::create(const std::vector<BigInt>& piles, bool human_first) {
  if (piles.size() < 2) throw SessionError(SessionError::Kind::kBadRequest, "need at least two piles");
  for (const BigInt& p : piles) {
    if (sgn(p) < 0) throw SessionError(SessionError::Kind::kBadRequest, "piles must be non-negative");
  }
  evict_expired();

  const nim::GamePosition start{PileVector(piles)};
  auto slot =
      std::make_shared<Slot>(GameSession{"", start, start, human_first, {}, SessionStatus::kActive});
  engine_reply(slot->session);
  refresh_status(slot->session);
  slot->last_used = now_();

  std::lock_guard<std::mutex> lock(mu_);
  slot->session.id = fresh_id();
  sessions_.emplace(slot->session.id, slot);
  return slot->session;
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw SessionError(SessionError::Kind::kNotFound, "no session '" + id + "'");
  }
  return it->second;
}

GameSession SessionStore::get(const std::string& id) {
  auto slot = find(id);
  std::lock_guard<std::mutex> lock(slot->mu);
  slot->last_used = now_();
  return slot->session;
}

GameSession SessionStore::move(const std::string& id, std::size_t keep_index) {
  auto slot = find(id);
  std::unique_lock<std::mutex> lock(slot->mu, std::try_to_lock);
  if (!lock.owns_lock()) {
    throw SessionError(SessionError::Kind::kConflict, "another move on this session is in flight");
  }
  GameSession& s = slot->session;
  slot->last_used = now_();
  if (s.status != SessionStatus::kActive) {
    throw SessionError(SessionError::Kind::kConflict, "game is over");
  }
  if (keep_index < 1 || keep_index > s.position.size()) {
    throw SessionError(SessionError::Kind::kIllegalMove,
                       "keep_index must be in 1.." + std::to_string(s.position.size()));
  }
  if (!s.position.can_keep(keep_index)) {
    throw SessionError(SessionError::Kind::kIllegalMove, "move would drive a pile negative");
  }
  nim::GamePosition next = s.position.after_keep(keep_index);
  s.history.push_back({true, keep_index, s.position.piles()[keep_index - 1], next});
  s.position = std::move(next);
  s.human_to_move = false;
  engine_reply(s);
  refresh_status(s);
  return s;
}

Hint SessionStore::hint(const std::string& id) {
  auto slot = find(id);
  std::lock_guard<std::mutex> lock(slot->mu);
  slot->last_used = now_();
  const GameSession& s = slot->session;
  if (s.status != SessionStatus::kActive) {
    throw SessionError(SessionError::Kind::kConflict, "game is over, no move to hint");
  }
  const nim::RemotenessResult r = nim::remoteness(s.position);
  return {*r.best_move, r.remoteness, r.outcome};
}

std::size_t SessionStore::evict_expired() {
  const auto cutoff = now_() - ttl_;
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock<std::mutex> slot_lock(it->second->mu, std::try_to_lock);
    if (slot_lock.owns_lock() && it->second->last_used < cutoff) {
      slot_lock.unlock();
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::size_t SessionStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

bool history_consistent(const GameSession& s) {
  nim::GamePosition cur = s.initial;
  // The engine only opens when the human did not.
  bool human_turn = s.history.empty() ? s.human_to_move : s.history.front().by_human;
  for (const HistoryEntry& h : s.history) {
    if (h.by_human != human_turn) return false;
    if (!cur.can_keep(h.keep_index) || cur.terminal()) return false;
    if (cur.piles()[h.keep_index - 1] != h.kept_value) return false;
    cur = cur.after_keep(h.keep_index);
    if (!(cur == h.position)) return false;
    human_turn = !human_turn;
  }
  return cur == s.position && human_turn == s.human_to_move;
}

nlohmann::json to_json(const GameSession& s) {
  using nlohmann::json;
  json history = json::array();
  for (const HistoryEntry& h : s.history) {
    history.push_back({{"actor", h.by_human ? "human" : "engine"},
                       {"keep_index", h.keep_index},
                       {"kept_value", codec::big(h.kept_value)},
                       {"piles", codec::to_json(h.position.piles())}});
  }
  const nim::RemotenessResult r = nim::remoteness(s.position);
  return {{"id", s.id},
          {"piles", codec::to_json(s.position.piles())},
          {"initial", codec::to_json(s.initial.piles())},
          {"status", to_string(s.status)},
          {"human_to_move", s.human_to_move},
          {"remoteness", codec::big(r.remoteness)},
          {"outcome", nim::to_string(r.outcome)},
          {"hint", r.best_move ? json(*r.best_move) : json(nullptr)},
          {"legal_keeps", s.position.legal_keeps()},
          {"history", history}};
}

nlohmann::json to_json(const Hint& h) {
  return {{"keep_index", h.keep_index},
          {"remoteness", codec::big(h.remoteness)},
          {"outcome", nim::to_string(h.outcome)}};
}

}  // namespace gmrule::service

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

#include "gmrule/service/http_server.hpp"

#include <httplib.h>

#include "gmrule/codec.hpp"

namespace gmrule::service {

using nlohmann::json;

struct HttpServer::Impl {
  explicit Impl(SessionStore& s) : store(s) {}

  SessionStore& store;
  httplib::Server server;
};

namespace {

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
  try {
    fn();
  } catch (const SessionError& e) {
    reply(res, e.http_status(), {{"error", e.what()}});
  } catch (const json::exception& e) {
    reply(res, 400, {{"error", std::string("malformed JSON: ") + e.what()}});
  } catch (const DomainError& e) {
    reply(res, 400, {{"error", e.what()}});
  } catch (const std::exception& e) {
    reply(res, 500, {{"error", e.what()}});
  }
}

std::vector<BigInt> piles_from(const json& body) {
  if (!body.contains("piles") || !body["piles"].is_array()) {
    throw SessionError(SessionError::Kind::kBadRequest, "body needs a 'piles' array");
  }
  std::vector<BigInt> piles;
  for (const auto& p : body["piles"]) piles.push_back(codec::big_from(p));
  return piles;
}

}  // namespace

HttpServer::HttpServer(SessionStore& store) : impl_(std::make_unique<Impl>(store)) {
  auto& srv = impl_->server;
  SessionStore& st = impl_->store;

  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Headers", "Content-Type"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  srv.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  srv.Post("/sessions", [&st](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = json::parse(req.body);
      const bool human_first = body.value("human_first", true);
      reply(res, 201, to_json(st.create(piles_from(body), human_first)));
    });
  });

  srv.Get(R"(/sessions/([0-9a-f]+))", [&st](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { reply(res, 200, to_json(st.get(req.matches[1]))); });
  });

  srv.Post(R"(/sessions/([0-9a-f]+)/move)",
           [&st](const httplib::Request& req, httplib::Response& res) {
             guarded(res, [&] {
               const json body = json::parse(req.body);
               if (!body.contains("keep_index") || !body["keep_index"].is_number_integer()) {
                 throw SessionError(SessionError::Kind::kBadRequest,
                                    "body needs an integer 'keep_index'");
               }
               const auto keep = body["keep_index"].get<long long>();
               if (keep < 1) {
                 throw SessionError(SessionError::Kind::kIllegalMove, "keep_index must be >= 1");
               }
               GameSession s = st.move(req.matches[1], static_cast<std::size_t>(keep));
               json out = to_json(s);
               // The human's keep and, if the game went on, the engine's reply.
               std::size_t first = s.history.size();
               while (first > 0 && !s.history[first - 1].by_human) --first;
               json moves = json::array();
               for (std::size_t i = first == 0 ? 0 : first - 1; i < s.history.size(); ++i) {
                 moves.push_back(out["history"][i]);
               }
               out["moves"] = std::move(moves);
               reply(res, 200, out);
             });
           });

  srv.Get(R"(/sessions/([0-9a-f]+)/hint)",
          [&st](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] { reply(res, 200, to_json(st.hint(req.matches[1]))); });
          });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

bool HttpServer::listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace gmrule::service

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

#ifndef GMRULE_SERVICE_HTTP_SERVER_HPP_
#define GMRULE_SERVICE_HTTP_SERVER_HPP_

#include <memory>
#include <string>

#include "gmrule/service/session_store.hpp"

namespace gmrule::service {

// JSON over HTTP:
//   POST /sessions              {"piles": [...], "human_first": bool}
//   GET  /sessions/{id}
//   POST /sessions/{id}/move    {"keep_index": k}
//   GET  /sessions/{id}/hint
// Errors come back as {"error": "..."} with 400, 404, 409 or 422.
class HttpServer {
 public:
  explicit HttpServer(SessionStore& store);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds an ephemeral port and returns it; call listen_after_bind() next.
  int bind_any_port(const std::string& host = "127.0.0.1");
  bool listen_after_bind();
  // Blocking bind + serve.
  bool listen(const std::string& host, int port);
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace gmrule::service

#endif  // GMRULE_SERVICE_HTTP_SERVER_HPP_

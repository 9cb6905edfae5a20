// Copyright 2026 The cfgkb Authors
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

#ifndef CFGKB_SERVER_HPP_
#define CFGKB_SERVER_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cfgkb/configure.hpp"
#include "json.hpp"

namespace cfgkb {

struct ServiceOptions {
  std::string presets_dir;  // *.cfg files, addressed by file stem
  double timeout_seconds = 10.0;
};

// Stateless request handler: every request carries the problem reference and
// the full choice list. Knowledge bases are cached by problem source.
class Service {
 public:
  explicit Service(ServiceOptions options = {});

  nlohmann::json Handle(const nlohmann::json& request);
  std::string HandleText(const std::string& body);
  nlohmann::json Presets() const;

  void AddPreset(const std::string& name, const std::string& source);

 private:
  std::shared_ptr<const KnowledgeBase> Resolve(const nlohmann::json& problem);

  ServiceOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> presets_;
  std::map<std::size_t, std::pair<std::string, std::shared_ptr<const KnowledgeBase>>> cache_;
};

// JSON views of the configuration results.
nlohmann::json ToJson(const Vocabulary& voc, const Assignment& a);
nlohmann::json ToJson(const Vocabulary& voc, const Explanation& e);

// HTTP front end: POST /api/v1/infer and GET /api/v1/presets.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds to a free port and returns it.
  int BindToAnyPort(const std::string& host);
  void Bind(const std::string& host, int port);
  // Blocks until Stop.
  void Listen();
  void Stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Blocks serving the HTTP API.
void Serve(Service& service, const std::string& host, int port);

}  // namespace cfgkb

#endif  // CFGKB_SERVER_HPP_

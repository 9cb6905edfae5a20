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

#include "cfgkb/server.hpp"
#include "httplib.h"

namespace cfgkb {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>()) {
  impl_->server.Post("/api/v1/infer", [&service](const httplib::Request& req,
                                                  httplib::Response& res) {
    res.set_content(service.HandleText(req.body), "application/json");
  });
  impl_->server.Get("/api/v1/presets", [&service](const httplib::Request&,
                                                   httplib::Response& res) {
    res.set_content(service.Presets().dump(), "application/json");
  });
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::BindToAnyPort(const std::string& host) {
  int port = impl_->server.bind_to_any_port(host);
  if (port < 0) throw Error(ErrorKind::kUsage, "cannot bind " + host);
  return port;
}

void HttpServer::Bind(const std::string& host, int port) {
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorKind::kUsage, "cannot listen on " + host + ":" + std::to_string(port));
  }
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

void Serve(Service& service, const std::string& host, int port) {
  HttpServer server(service);
  server.Bind(host, port);
  server.Listen();
}

}  // namespace cfgkb

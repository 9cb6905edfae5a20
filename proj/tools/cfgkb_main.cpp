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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfgkb/ground.hpp"
#include "cfgkb/lang.hpp"
#include "cfgkb/server.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUsage = 2;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cfgkb::Error(cfgkb::ErrorKind::kUsage, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void PrintExplanation(const json& e) {
  std::cout << "inconsistent; minimal conflicting set:\n";
  for (const json& s : e["sentences"]) {
    std::cout << "  sentence " << s["id"].get<std::string>() << ": "
              << s["formula"].get<std::string>() << "\n";
  }
  for (const json& d : e["data"]) {
    std::cout << "  data " << d["term"].get<std::string>() << (d["positive"].get<bool>() ? " = " : " != ")
              << d["value"].get<std::string>() << "\n";
  }
  for (const json& c : e["choices"]) {
    std::cout << "  choice " << c["term"].get<std::string>() << " = "
              << c["value"].get<std::string>() << "\n";
  }
}

void PrintAssignments(const json& list) {
  for (const json& a : list) {
    std::cout << "  " << a["term"].get<std::string>() << " = " << a["value"].get<std::string>()
              << "\n";
  }
}

int Report(const std::string& op, const json& response) {
  const std::string status = response["status"];
  if (status == "error") {
    const json& e = response["error"];
    std::cout << "error (" << e["kind"].get<std::string>() << "): "
              << e["message"].get<std::string>() << "\n";
    if (e.contains("diagnostics")) {
      for (const json& d : e["diagnostics"]) {
        std::cout << "  " << d["line"] << ":" << d["column"] << ": "
                  << d["message"].get<std::string>() << "\n";
      }
    }
  } else if (status == "unsat") {
    PrintExplanation(response["payload"]["explanation"]);
  } else {
    const json& p = response["payload"];
    if (op == "check") {
      if (p.contains("model")) {
        std::cout << (p["model"].get<bool>() ? "model\n" : "not a model\n");
      } else {
        std::cout << (p["consistent"].get<bool>() ? "consistent\n" : "inconsistent\n");
      }
    } else if (op == "expand" || op == "minimize") {
      std::cout << "model:\n";
      PrintAssignments(p["assignments"]);
      if (p.contains("objective")) {
        std::cout << "objective " << p["objective"]["term"].get<std::string>() << " = "
                  << p["objective"]["value"].get<std::string>() << "\n";
      }
    } else if (op == "propagate") {
      std::cout << "derived:\n";
      for (const json& d : p["derived"]) {
        std::cout << "  " << d["term"].get<std::string>() << (d["truth"].get<bool>() ? " = " : " != ")
                  << d["value"].get<std::string>() << "\n";
      }
    } else if (op == "explain") {
      if (p.contains("explanations")) {
        for (std::size_t i = 0; i < p["explanations"].size(); ++i) {
          std::cout << "explanation " << i + 1 << ":\n";
          PrintExplanation(p["explanations"][i]);
        }
      } else if (p.contains("explanation")) {
        PrintExplanation(p["explanation"]);
      } else if (p.contains("structure")) {
        std::cout << p["structure"].get<std::string>();
      } else {
        std::cout << "consistent\n";
      }
    }
  }
  std::cout << response.dump() << "\n";
  if (status == "error") return kExitUsage;
  if (status == "unsat") return kExitUnsat;
  const json& p = response["payload"];
  if (p.contains("model") && p["model"].is_boolean() && !p["model"].get<bool>()) return kExitUnsat;
  if (op == "check" && p.contains("consistent") && !p["consistent"].get<bool>()) return kExitUnsat;
  if (op == "explain" && p.contains("consistent") && !p["consistent"].get<bool>()) return kExitUnsat;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge-base configuration tool"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> choose;
  std::string objective;
  std::string total;
  std::string dimacs;
  std::vector<std::string> background;
  bool minimum = false;
  bool substructure = false;
  std::size_t count = 0;
  double timeout = 10.0;
  long long seed = -1;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string presets = "presets";

  auto add_batch = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Problem file")->required();
    cmd->add_option("--choose", choose, "Choice TERM=VALUE (repeatable)");
    cmd->add_option("--timeout", timeout, "Wall-clock budget in seconds");
    cmd->add_option("--seed", seed, "Solver seed");
    cmd->add_option("--dimacs", dimacs, "Write the ground CNF to this path");
  };
  CLI::App* check = app.add_subcommand("check", "Check consistency, or model-check --total");
  add_batch(check);
  check->add_option("--total", total, "Structure file to model-check");
  CLI::App* expand = app.add_subcommand("expand", "Find a model extending the choices");
  add_batch(expand);
  CLI::App* minimize = app.add_subcommand("minimize", "Find a model minimizing --objective");
  add_batch(minimize);
  minimize->add_option("--objective", objective, "Integer term to minimize")->required();
  CLI::App* propagate = app.add_subcommand("propagate", "Derive all consequences of the choices");
  add_batch(propagate);
  CLI::App* explain = app.add_subcommand("explain", "Explain an inconsistent state");
  add_batch(explain);
  explain->add_option("--background", background, "Sentence label kept as background");
  explain->add_flag("--minimum", minimum, "Cardinality-minimum instead of subset-minimal");
  explain->add_flag("--substructure", substructure, "Report a minimal inconsistent substructure");
  explain->add_option("--count", count, "Enumerate up to N subset-minimal explanations");
  CLI::App* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--port", port, "Port");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--presets", presets, "Preset directory");
  serve->add_option("--timeout", timeout, "Default per-request budget in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (serve->parsed()) {
      cfgkb::Service service({presets, timeout});
      std::cout << "listening on http://" << host << ":" << port << "\n" << std::flush;
      cfgkb::Serve(service, host, port);
      return kExitOk;
    }
    CLI::App* cmd = app.get_subcommands().front();
    std::string op = cmd->get_name();
    std::string source = ReadFile(file);
    json request{{"problem", {{"source", source}}}, {"op", op}, {"timeout", timeout}};
    if (seed >= 0) request["seed"] = seed;
    json choices = json::array();
    for (const std::string& c : choose) {
      std::size_t depth = 0;
      std::size_t eq = std::string::npos;
      for (std::size_t i = 0; i < c.size() && eq == std::string::npos; ++i) {
        if (c[i] == '(') ++depth;
        if (c[i] == ')' && depth > 0) --depth;
        if (c[i] == '=' && depth == 0) eq = i;
      }
      if (eq == std::string::npos) {
        std::cerr << "--choose expects TERM=VALUE, got '" << c << "'\n";
        return kExitUsage;
      }
      choices.push_back({{"term", c.substr(0, eq)}, {"value", c.substr(eq + 1)}});
    }
    request["choices"] = choices;
    json args = json::object();
    if (op == "check" && !total.empty()) {
      request["op"] = "modelcheck";
      args["structure"] = ReadFile(total);
    }
    if (op == "minimize") args["objective"] = objective;
    if (op == "explain") {
      args["background"] = background;
      args["kind"] = substructure ? "substructure" : (minimum ? "minimum" : "minimal");
      if (count > 0) args["count"] = count;
    }
    request["args"] = args;
    if (!dimacs.empty()) {
      cfgkb::Problem p = cfgkb::Load(source);
      std::ofstream out(dimacs);
      out << cfgkb::ToDimacs(cfgkb::Ground(p.theory, p.structure));
    }
    cfgkb::Service service;
    return Report(op, service.Handle(request));
  } catch (const cfgkb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

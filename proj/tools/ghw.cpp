// Copyright 2026 The Authors.
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


// Command-line front end: ghw <info|circuits|ot|sr|betti|hilbert|verify> FILE

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghw/harness.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitInputError = 2;

std::vector<std::size_t> parse_order(const std::string& text, std::size_t n) {
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1 || static_cast<std::size_t>(v) > n) {
      throw ghw::Error(ghw::ErrorKind::kInput, "bad --order entry \"" + item + "\"");
    }
    order.push_back(static_cast<std::size_t>(v - 1));
  }
  try {
    ghw::check_permutation(order, n);
  } catch (const ghw::Error& e) {
    throw ghw::Error(ghw::ErrorKind::kInput, std::string("bad --order: ") + e.what());
  }
  return order;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hamming weights, Orlik-Terao ideals and graded Betti numbers"};
  app.require_subcommand(1);

  std::string file;
  std::string order_text;
  std::size_t jmax = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned degree = 10;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "Code file (JSON)")->required();
    sub->add_option("--order", order_text, "Variable priority, greatest first, e.g. 1,2,3,4,6,7,5");
    sub->add_option("--jmax", jmax, "Largest internal degree for Betti tables (default n + 2)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", seed, "Seed for sampled term orders");
  };
  auto* info = app.add_subcommand("info", "Code parameters and matrices");
  auto* circ = app.add_subcommand("circuits", "Circuits, components and broken circuits");
  auto* ot = app.add_subcommand("ot", "Orlik-Terao ideal, Groebner basis and Betti table");
  auto* sr = app.add_subcommand("sr", "Stanley-Reisner ideal of the circuit complex");
  auto* betti = app.add_subcommand("betti", "Betti tables of both ideals");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert functions and series");
  auto* verify = app.add_subcommand("verify", "Run every check and print a report");
  for (auto* sub : {info, circ, ot, sr, betti, hilbert, verify}) add_common(sub);
  hilbert->add_option("--degree", degree, "Last degree of the Hilbert function");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  const auto fmt = format == "json" ? ghw::OutputFormat::kJson : ghw::OutputFormat::kText;
  try {
    ghw::LoadedCode code = ghw::load_code_file(file);
    if (!order_text.empty()) code.order = parse_order(order_text, code.code.length());

    if (verify->parsed()) {
      ghw::VerifyOptions opts;
      opts.order = code.order;
      opts.j_max = jmax;
      opts.seed = seed;
      const auto report = ghw::verify(code.code, opts);
      std::cout << (fmt == ghw::OutputFormat::kJson ? ghw::report_to_json(report)
                                                    : ghw::report_to_text(report));
      return report.any_core_failure() ? kExitChecksFailed : 0;
    }
    if (info->parsed()) std::cout << ghw::render_info(code, fmt);
    if (circ->parsed()) std::cout << ghw::render_circuits(code, fmt);
    if (ot->parsed()) std::cout << ghw::render_ot(code, jmax, fmt);
    if (sr->parsed()) std::cout << ghw::render_sr(code, jmax, fmt);
    if (betti->parsed()) std::cout << ghw::render_betti(code, jmax, fmt);
    if (hilbert->parsed()) std::cout << ghw::render_hilbert(code, degree, fmt);
  } catch (const ghw::Error& e) {
    std::cerr << "ghw: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}

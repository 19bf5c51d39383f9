// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dmod/cli.hpp"

namespace {

bool read_input(const std::string& path, std::string& out) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

template <class T>
void bind_optional(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld modules over F_q[t]: invariants, endomorphism rings, isogenies"};
  app.require_subcommand(1);
  dmod::cli::CommandOptions opts;
  bind_optional(&app, "--degree-budget", opts.degree_budget, "coefficient degree budget (default 16)");
  bind_optional(&app, "--place-budget", opts.place_budget, "number of places scanned (default 64)");
  bind_optional(&app, "--step-budget", opts.step_budget, "race step budget (default 10000)");

  const std::map<std::string, std::string> help = {
      {"info", "rank, characteristic, height, ordinary and isotrivial flags"},
      {"end", "orthogonal basis and multiplication table of the endomorphism ring"},
      {"hom", "basis of Hom(phi, psi)"},
      {"isogeny", "decide whether phi and psi are isogenous"},
      {"frobenius", "Frobenius characteristic polynomials"},
      {"reduce", "reductions at good places"},
      {"galois-report", "classification of the Galois image"}};
  std::string path;
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : dmod::cli::kCommands) {
    CLI::App* s = app.add_subcommand(name, help.at(name));
    s->add_option("file", path, "module description, or - for stdin")->required();
    subs[name] = s;
  }
  subs["end"]->add_flag("--sep", opts.sep, "endomorphisms over the separable closure");
  bind_optional(subs["end"], "--budget", opts.budget, "place budget for F_q(x)");
  subs["hom"]->add_flag("--sep", opts.sep, "homomorphisms over the separable closure");
  subs["isogeny"]->add_flag("--sep", opts.sep, "decide over the separable closure");
  bind_optional(subs["isogeny"], "--witness-degree", opts.witness_degree, "witness degree bound over F_q(x)");
  bind_optional(subs["frobenius"], "--places", opts.places, "number of places over F_q(x)");
  bind_optional(subs["reduce"], "--survey", opts.survey, "number of places surveyed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : dmod::cli::kParse;
  }
  std::string cmd;
  for (auto& [name, s] : subs)
    if (s->parsed()) cmd = name;
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "cannot read " << path << "\n";
    return dmod::cli::kParse;
  }
  auto res = dmod::cli::run_command(cmd, text, opts);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}

// Copyright 2026 The g2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: info, verify, distort, pair and sample.
// Reports are JSON on stdout.  Exit codes: 0 ok, 1 a check failed,
// 2 usage or configuration error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "g2/error.hpp"
#include "g2/suites.hpp"

using namespace g2;

namespace {

struct ParamOptions {
  std::string family;
  std::string spec;
  std::optional<std::int64_t> p, m, a, b;
  unsigned work_degree = 0;
};

void add_param_options(CLI::App* cmd, ParamOptions& o) {
  cmd->add_option("family", o.family, "k4, k5, k6 or k12");
  cmd->add_option("--spec", o.spec, "file of key=value lines (family, p, m, A, b, work_degree)");
  cmd->add_option("--p", o.p, "characteristic (k4, k6)");
  cmd->add_option("--m", o.m, "extension degree (k5, k12)");
  cmd->add_option("--A", o.a, "constant term A (k4)");
  cmd->add_option("--b", o.b, "constant b (k5: +-1, k12: 0 or 1)");
  cmd->add_option("--work-degree", o.work_degree, "working field degree over F_q (0: family default)");
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const auto x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw DomainError("spec: " + key + " must be an integer, got '" + v + "'");
  }
}

void read_spec(ParamOptions& o) {
  std::ifstream in(o.spec);
  if (!in) throw DomainError("cannot read spec file " + o.spec);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("spec: expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    // Command-line flags take precedence over the file.
    if (key == "family") { if (o.family.empty()) o.family = val; }
    else if (key == "p") { if (!o.p) o.p = parse_int(key, val); }
    else if (key == "m") { if (!o.m) o.m = parse_int(key, val); }
    else if (key == "A") { if (!o.a) o.a = parse_int(key, val); }
    else if (key == "b") { if (!o.b) o.b = parse_int(key, val); }
    else if (key == "work_degree") { if (!o.work_degree) o.work_degree = static_cast<unsigned>(parse_int(key, val)); }
    else throw DomainError("spec: unknown key '" + key + "'");
  }
}

FamilyParams resolve(ParamOptions o) {
  if (!o.spec.empty()) read_spec(o);
  if (o.family.empty()) throw DomainError("a family (k4, k5, k6, k12) is required");
  FamilyParams f = preset(parse_tag(o.family));
  if (o.p) f.p = *o.p;
  if (o.m) f.m = *o.m;
  if (o.a) f.a = *o.a;
  if (o.b) f.b = *o.b;
  f.work_degree = o.work_degree;
  return f;
}

json params_json(const FamilyParams& f) {
  return {{"family", tag_name(f.tag)}, {"p", f.p}, {"m", f.m}, {"A", f.a}, {"b", f.b},
          {"work_degree", f.work_degree}, {"text", f.to_string()}};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

PairingKind parse_pairing(const std::string& s) {
  if (s == "tate") return PairingKind::Tate;
  if (s == "weil") return PairingKind::Weil;
  throw DomainError("pairing must be tate or weil");
}

int emit(json report) {
  const bool pass = report.value("pass", true);
  int passed = 0;
  for (const auto& c : report["checks"]) passed += c["pass"].get<bool>();
  report["summary"] = report["command"].get<std::string>() + " " + report["parameters"]["text"].get<std::string>() + ": " +
                      std::to_string(passed) + "/" + std::to_string(report["checks"].size()) + " checks passed";
  const std::string text = report.dump(2);
  std::cout << text << "\n";
  if (const char* dir = std::getenv("G2_REPORT_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    std::string name = report["command"].get<std::string>() + "-" + report["parameters"]["family"].get<std::string>();
    if (report.contains("seed")) name += "-seed" + std::to_string(report["seed"].get<std::uint64_t>());
    std::ofstream(std::filesystem::path(dir) / (name + ".json")) << text << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-2 supersingular Jacobians: pairings and distortion maps"};
  app.require_subcommand(1);
  ParamOptions po;
  std::uint64_t seed = 0;
  int samples = 50, pairs = 100;
  unsigned degree = 1;
  bool order_r = false, trace_zero = false;
  std::vector<std::string> suites;
  std::string pairing = "tate", d1_path, d2_path;

  auto* info = app.add_subcommand("info", "describe a family instance");
  add_param_options(info, po);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_param_options(verify, po);
  verify->add_option("--suite", suites, "suite name, repeatable (default: all that apply)");
  verify->add_option("--samples", samples, "samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");

  auto* distort = app.add_subcommand("distort", "search the distortion catalog for random pairs");
  add_param_options(distort, po);
  distort->add_option("--pairs", pairs, "number of pairs")->check(CLI::PositiveNumber);
  distort->add_option("--pairing", pairing, "tate or weil")->check(CLI::IsMember({"tate", "weil"}));
  distort->add_option("--seed", seed, "random seed");

  auto* pair = app.add_subcommand("pair", "pair two serialized divisor classes");
  add_param_options(pair, po);
  pair->add_option("--d1", d1_path, "first divisor (JSON)")->required();
  pair->add_option("--d2", d2_path, "second divisor (JSON)")->required();
  pair->add_option("--pairing", pairing, "tate or weil")->check(CLI::IsMember({"tate", "weil"}));
  pair->add_option("--seed", seed, "seed for representative randomization");

  auto* sample = app.add_subcommand("sample", "print a random divisor class as JSON");
  add_param_options(sample, po);
  sample->add_option("--degree", degree, "class rational over F_{q^degree}")->check(CLI::PositiveNumber);
  sample->add_flag("--order-r", order_r, "class of order r");
  sample->add_flag("--trace-zero", trace_zero, "order-r class over F_{q^k} with trivial trace");
  sample->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    const FamilyParams params = resolve(po);
    const FamilyInstance inst = build_family(params);
    const double build_ms = ms_since(t0);
    const auto t1 = std::chrono::steady_clock::now();
    json report = {{"command", app.get_subcommands().front()->get_name()}, {"parameters", params_json(params)}};

    if (*info) {
      report["info"] = info_json(inst);
      report["checks"] = json::array();
    } else if (*verify) {
      if (suites.empty())
        for (const auto& s : suite_names())
          if (suite_applies(s, params.tag)) suites.push_back(s);
      for (const auto& s : suites)
        if (!suite_applies(s, params.tag)) throw DomainError("suite " + s + " does not apply to " + tag_name(params.tag));
      report["seed"] = seed;
      report["samples"] = samples;
      json checks = json::array();
      json per_suite = json::object();
      bool all = true;
      for (const auto& s : suites) {
        const auto ts = std::chrono::steady_clock::now();
        for (const Check& c : run_suite(s, inst, samples, seed)) {
          json cj = to_json(c);
          cj["suite"] = s;
          checks.push_back(cj);
          all = all && c.pass;
        }
        per_suite[s] = ms_since(ts);
      }
      report["checks"] = checks;
      report["pass"] = all;
      report["timing"]["suites_ms"] = per_suite;
    } else if (*distort) {
      const DistortionRun run = distortion_run(inst, pairs, parse_pairing(pairing), seed);
      report["seed"] = seed;
      report["pairing"] = pairing;
      report["distortion"] = run.to_json();
      report["checks"] = json::array({to_json(Check{"distortion_found_for_every_pair", run.found == run.pairs,
                                                    {{"found", run.found}, {"pairs", run.pairs}}})});
      report["pass"] = run.found == run.pairs;
    } else if (*pair) {
      const Divisor d1 = divisor_from_json(read_json_file(d1_path), *inst.jac);
      const Divisor d2 = divisor_from_json(read_json_file(d2_path), *inst.jac);
      const json res = pairing_json(inst, d1, d2, parse_pairing(pairing), seed);
      report["seed"] = seed;
      report["result"] = res;
      report["checks"] = json::array({to_json(Check{"value_in_mu_r", res["in_mu_r"].get<bool>(), json::object()})});
      report["pass"] = res["in_mu_r"].get<bool>();
    } else if (*sample) {
      if (degree > inst.jac->max_degree())
        throw DomainError("degree exceeds the working field (max " + std::to_string(inst.jac->max_degree()) + ")");
      std::mt19937_64 rng(seed);
      const Divisor d = trace_zero ? random_trace_zero(inst, rng)
                        : order_r  ? random_torsion(inst, degree, rng)
                                   : inst.jac->random_divisor(degree, rng);
      std::cout << divisor_to_json(d).dump() << "\n";
      return 0;
    }
    report["timing"]["build_ms"] = build_ms;
    report["timing"]["run_ms"] = ms_since(t1);
    return emit(std::move(report));
  } catch (const g2::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

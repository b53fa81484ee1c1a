// Acceptance gate: runs the twelve headline criteria at their stated
// tolerances and time limits, one PASS/FAIL line each.
//
//   energylab_acceptance [--seed N] [--json PATH] [--only I,J,...]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "energylab/verify.hpp"

namespace el = energylab;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<const char*> suites;
  double limit_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "KM bound equality families", {"km-equality"}, 30},
    {2, "DHK bound equality and domain", {"dhk-equality"}, 60},
    {3, "perturbation and regularization energy bounds", {"prop2", "prop3"}, 120},
    {4, "regularization contract", {"regularize-contract"}, 60},
    {5, "order-extension energy budget", {"thm4"}, 300},
    {6, "dense regular construction end to end", {"thm2"}, 600},
    {7, "complement gap bounds", {"prop4", "thm5"}, 60},
    {8, "symplectic complement spectrum and inequality", {"prop5"}, 60},
    {9, "fixed-degree random regular energy (Kesten-McKay)", {"thm7"}, 900},
    {10, "sandwich inequality k=3..1000", {"sandwich"}, 1},
    {11, "growing-degree random regular energy (semicircle)", {"thm8"}, 600},
    {12, "eigensolver oracle equivalence", {"eigensolver"}, 60},
};

}  // namespace

int main(int argc, char** argv) {
  el::VerifyOptions opts;
  std::string json_path;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::stoull(argv[++i]);
    } else if (arg == "--json" && i + 1 < argc) {
      json_path = argv[++i];
    } else if (arg == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) only.insert(std::stoi(tok));
    } else {
      std::cerr << "usage: " << argv[0] << " [--seed N] [--json PATH] [--only I,J,...]\n";
      return 2;
    }
  }

  std::vector<el::SuiteResult> all;
  int failures = 0;
  for (const auto& c : kCriteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    bool ok = true;
    double seconds = 0.0;
    std::vector<std::string> failed;
    for (const char* suite : c.suites) {
      auto r = el::run_suite(suite, opts);
      seconds += r.seconds;
      for (const auto& cr : r.criteria)
        if (!cr.passed) failed.push_back(std::string(suite) + ": " + cr.name);
      ok = ok && r.passed();
      all.push_back(std::move(r));
    }
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = ok && in_time;
    failures += pass ? 0 : 1;
    char line[256];
    std::snprintf(line, sizeof line, "%s  %2d  %-52s %8.2fs (limit %gs)", pass ? "PASS" : "FAIL", c.id, c.title,
                  seconds, c.limit_seconds);
    std::cout << line << "\n";
    for (const auto& f : failed) std::cout << "        failed: " << f << "\n";
    if (!in_time) std::cout << "        over the time limit\n";
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";

  if (!json_path.empty()) {
    std::ofstream(json_path) << el::to_json(all) << "\n";
  }
  return failures == 0 ? 0 : 1;
}

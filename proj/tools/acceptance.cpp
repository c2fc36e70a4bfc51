#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latpoly/report.hpp"

namespace {

using namespace latpoly;

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Report(const SuiteOptions&)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "Table-1 reproduction (d <= 9)", 30, [](SuiteOptions o) { o.dmax = 9; return verify_table1(o); }},
      {2, "Table-2 reproduction (24 spanning polytopes)", 10, [](SuiteOptions o) { return verify_table2(o); }},
      {3, "Table-3 reproduction (k = 2..4)", 30, [](SuiteOptions o) { o.kmax = 4; return verify_table3(o); }},
      {4, "matrix identities (k = 2..5)", 60, [](SuiteOptions o) { o.kmax = 5; return verify_matrices(o); }},
      {5, "group δ against counting δ (500 simplices, d <= 5)", 120,
       [](SuiteOptions o) {
         o.samples = 500;
         o.dmax = 5;
         return verify_oracle(o);
       }},
      {6, "exhaustive simplex re-derivation (d <= 5, V <= 4)", 300,
       [](SuiteOptions o) { o.dmax = 5; return verify_enumeration(o); }},
      {7, "feasibility predicate (d <= 6)", 60, [](SuiteOptions o) { o.dmax = 6; return verify_feasibility(o); }},
      {8, "lemma suite", 180,
       [](SuiteOptions o) {
         o.dmax = 9;
         o.kmax = 4;
         o.samples = 200;
         return verify_lemmas(o);
       }},
      {9, "round-trip classification (k <= 4, d <= 9)", 300,
       [](SuiteOptions o) {
         o.dmax = 9;
         o.kmax = 4;
         return verify_roundtrip(o);
       }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  SuiteOptions opts;
  bool details = false;
  std::string json_path;
  std::vector<int> only;
  app.add_option("--seed", opts.seed, "random seed")->default_val(1);
  app.add_option("--workers", opts.workers, "worker threads (0 = all cores)");
  app.add_option("--only", only, "criterion numbers to run");
  app.add_flag("--details", details, "print each suite report");
  app.add_option("--json", json_path, "write every report to this file");
  CLI11_PARSE(app, argc, argv);

  nlohmann::json all = nlohmann::json::array();
  int failed = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    Report r;
    std::string problem;
    try {
      r = c.run(opts);
    } catch (const std::exception& e) {
      problem = std::string("error: ") + e.what();
    }
    const bool timely = r.seconds <= c.limit_seconds;
    const bool ok = problem.empty() && r.clean() && !r.checks.empty() && timely;
    if (!ok) ++failed;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << ": ";
    if (!problem.empty()) {
      line << problem;
    } else {
      line << r.count(CheckStatus::Pass) << "/" << r.checks.size() << " checks pass";
      if (r.count(CheckStatus::Indeterminate)) line << ", " << r.count(CheckStatus::Indeterminate) << " indeterminate";
      line << ", " << std::fixed << std::setprecision(2) << r.seconds << " s (limit " << static_cast<int>(c.limit_seconds) << " s)";
      const auto discrepancies = std::count_if(r.notes.begin(), r.notes.end(),
                                               [](const std::string& n) { return n.rfind("discrepancy", 0) == 0; });
      if (discrepancies) line << ", " << discrepancies << " discrepancy reported (see --details)";
      if (!timely) line << " over the time limit";
    }
    std::cout << line.str() << std::endl;
    if (details || (!ok && problem.empty())) std::cout << r.to_text(false);
    nlohmann::json j = r.to_json();
    j["criterion"] = c.number;
    j["title"] = c.title;
    j["accepted"] = ok;
    all.push_back(std::move(j));
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << all.dump(2) << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << std::endl;
  return failed ? 1 : 0;
}

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latpoly/latpoly.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitIndeterminate = 3;

struct PolytopeDeleter {
  void operator()(lp_polytope* p) const { lp_polytope_free(p); }
};
using Polytope = std::unique_ptr<lp_polytope, PolytopeDeleter>;

/// Failure of a library call, carrying the exit code it maps to.
struct CliError {
  int code;
  std::string message;
};

int exit_code_for(lp_status s) {
  switch (s) {
    case LP_OK: return kExitPass;
    case LP_ERR_OUT_OF_SCOPE:
    case LP_ERR_INTERNAL: return kExitFail;
    case LP_ERR_BUDGET: return kExitIndeterminate;
    default: return kExitInput;
  }
}

void check(lp_status s) {
  if (s != LP_OK) throw CliError{exit_code_for(s), std::string(lp_status_string(s)) + ": " + lp_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  lp_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw CliError{kExitInput, "cannot read " + path};
  os << in.rdbuf();
  return os.str();
}

Polytope load_polytope(const std::string& path) {
  lp_polytope* p = nullptr;
  check(lp_polytope_from_json(read_input(path).c_str(), &p));
  return Polytope(p);
}

std::string polytope_json(const lp_polytope* p) {
  char* s = nullptr;
  check(lp_polytope_to_json(p, &s));
  return take(s);
}

std::string pretty_polytope(const lp_polytope* p) {
  const Json j = Json::parse(polytope_json(p));
  std::ostringstream os;
  os << "{";
  if (j.contains("name")) os << "\"name\": " << j["name"].dump() << ", ";
  os << "\"dim\": " << j["dim"].dump() << ", \"vertices\": [";
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) os << (i ? ", " : "") << j["vertices"][i].dump();
  os << "]}";
  return os.str();
}

int cmd_invariants(const std::string& file, bool json) {
  const auto p = load_polytope(file);
  char* s = nullptr;
  check(lp_invariants_json(p.get(), &s));
  const Json j = Json::parse(take(s));
  if (json) {
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "delta: " << j["delta"]["polynomial"].get<std::string>() << ", vol: " << j["volume"]
            << ", spans: " << (j["spans"].get<bool>() ? "true" : "false") << ", pyramids: " << j["pyramids"]
            << ", half-sum: " << j["half_sum"] << "\n";
  return kExitPass;
}

int cmd_generate(const std::string& family, const std::map<std::string, std::int64_t>& given, std::size_t pyramids) {
  std::vector<std::int64_t> params;
  for (const char* name : {"i1", "i2", "i3"})
    if (given.count(name)) params.push_back(given.at(name));
  if (given.count("k")) {
    if (!params.empty()) throw CliError{kExitInput, "--k cannot be combined with --i1/--i2/--i3"};
    params.push_back(given.at("k"));
  }
  lp_polytope* p = nullptr;
  check(lp_generate(family.c_str(), params.data(), params.size(), pyramids, &p));
  const Polytope owned(p);
  std::cout << pretty_polytope(owned.get()) << "\n";
  return kExitPass;
}

std::string entry_label(const Json& entry) {
  return entry["label"].get<std::string>() + ", pyramids: " + std::to_string(entry["pyramids"].get<int>());
}

int cmd_classify(const std::string& file, bool json, std::size_t budget) {
  const auto p = load_polytope(file);
  char* s = nullptr;
  const lp_status st = lp_classify_json(p.get(), budget, &s);
  if (st != LP_OK && st != LP_ERR_OUT_OF_SCOPE) {
    lp_string_free(s);
    check(st);
  }
  const Json j = Json::parse(take(s));
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else if (st == LP_ERR_OUT_OF_SCOPE) {
    std::cout << "volume exceeds 4 (vol: " << j["volume"] << ")\n";
  } else {
    std::cout << entry_label(j["entry"]) << "\n";
    std::cout << "witness: " << j["witness"].dump() << "\n";
  }
  return st == LP_OK ? kExitPass : kExitFail;
}

int cmd_equiv(const std::string& a, const std::string& b, bool json, std::size_t budget) {
  const auto p = load_polytope(a);
  const auto q = load_polytope(b);
  char* s = nullptr;
  check(lp_equivalent_json(p.get(), q.get(), budget, &s));
  const Json j = Json::parse(take(s));
  const std::string status = j["status"];
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << status;
    if (!j["reason"].get<std::string>().empty()) std::cout << ": " << j["reason"].get<std::string>();
    std::cout << "\n";
    if (j.contains("witness")) std::cout << "witness: " << j["witness"].dump() << "\n";
  }
  if (status == "equivalent") return kExitPass;
  if (status == "indeterminate") return kExitIndeterminate;
  return kExitFail;
}

int cmd_verify(const std::string& suite, const Json& options, bool json, bool verbose) {
  char* s = nullptr;
  check(lp_verify_json(suite.c_str(), options.dump().c_str(), verbose ? 1 : 0, &s));
  Json j = Json::parse(take(s));
  if (json) {
    j.erase("text");
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j["text"].get<std::string>();
  }
  return j["status"] == "pass" ? kExitPass : kExitFail;
}

void exponent_tuples(std::int64_t d, std::size_t len, std::int64_t lo, std::vector<std::int64_t>& cur,
                     std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t e = lo; e <= d; ++e) {
    cur.push_back(e);
    exponent_tuples(d, len, e, cur, out);
    cur.pop_back();
  }
}

std::string tuple_label(const std::vector<std::int64_t>& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

int cmd_enumerate(std::size_t dmax, std::int64_t vmax, bool as_printed, bool json, std::size_t workers) {
  Json all = Json::array();
  std::set<std::vector<std::int64_t>> realized;
  Json mismatches = Json::array();
  std::size_t checked = 0;
  for (std::size_t d = 1; d <= dmax; ++d) {
    char* s = nullptr;
    check(lp_enumerate_json(d, vmax, workers, &s));
    Json j = Json::parse(take(s));
    for (const auto& c : j["classes"]) realized.insert(c["exponents"].get<std::vector<std::int64_t>>());
    if (!json) {
      std::cout << "d=" << d << ": " << j["classes"].size() << " classes (" << j["candidates"] << " HNF candidates)\n";
      for (const auto& c : j["classes"])
        std::cout << "  " << c["family"]["label"].get<std::string>() << "  δ=" << c["delta"]["polynomial"].get<std::string>()
                  << "  " << c["key"].get<std::string>() << "\n";
    }
    for (std::int64_t v = 2; v <= vmax; ++v) {
      std::vector<std::vector<std::int64_t>> tuples;
      std::vector<std::int64_t> cur;
      exponent_tuples(static_cast<std::int64_t>(d), static_cast<std::size_t>(v - 1), 1, cur, tuples);
      for (const auto& e : tuples) {
        int feasible = 0;
        check(lp_feasible(e.data(), e.size(), static_cast<std::int64_t>(d), as_printed ? 1 : 0, &feasible));
        ++checked;
        const bool truth = realized.count(e) > 0;
        if ((feasible != 0) != truth)
          mismatches.push_back("V=" + std::to_string(v) + " " + tuple_label(e) + " d=" + std::to_string(d) +
                               (truth ? " realized but predicate false" : " predicate true but not realized"));
      }
    }
    all.push_back(std::move(j));
  }
  const std::string form = as_printed ? "printed" : "derived";
  if (json) {
    std::cout << Json{{"dims", all}, {"predicate", form}, {"checked", checked}, {"mismatches", mismatches}}.dump(2) << "\n";
  } else {
    std::cout << "feasibility (" << form << " form): " << checked << " cases, " << mismatches.size() << " mismatches\n";
    for (const auto& m : mismatches) std::cout << "  " << m.get<std::string>() << "\n";
  }
  return mismatches.empty() ? kExitPass : kExitFail;
}

int cmd_apply(const std::string& map_file, const std::string& poly_file) {
  const std::string witness = read_input(map_file);
  const auto p = load_polytope(poly_file);
  lp_polytope* q = nullptr;
  check(lp_apply_json(witness.c_str(), p.get(), &q));
  const Polytope owned(q);
  std::cout << pretty_polytope(owned.get()) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice polytopes of small normalized volume: invariants, classification and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lp_version()));

  bool json = false;
  bool verbose = false;
  bool as_printed = false;
  std::uint64_t seed = 1;
  std::size_t dmax = 0;
  std::int64_t kmax = 0;
  std::size_t budget = 0;
  std::size_t workers = 0;
  std::size_t samples = 0;
  std::size_t pyramids = 0;
  std::int64_t vmax = 4;
  std::string file, file2, family, suite;
  std::map<std::string, std::int64_t> params;

  auto* inv = app.add_subcommand("invariants", "δ-vector, volume, spanning flag, pyramid layers and half-sum of a polytope");
  inv->add_option("file", file, "polytope JSON file ('-' for stdin)")->required();
  inv->add_flag("--json", json, "machine-readable output");

  auto* gen = app.add_subcommand("generate", "print a catalog polytope");
  gen->add_option("family", family, "family id, e.g. Δ3, D41, Q4_9, A4_1, B4")->required();
  for (const char* name : {"i1", "i2", "i3", "k"}) {
    gen->add_option_function<std::int64_t>(
        std::string("--") + name, [&params, name](const std::int64_t& v) { params[name] = v; }, "parameter");
  }
  gen->add_option("--pyramids", pyramids, "pyramid layers to add");

  auto* cls = app.add_subcommand("classify", "identify a polytope in the catalog with a replayable witness");
  cls->add_option("file", file, "polytope JSON file ('-' for stdin)")->required();
  cls->add_flag("--json", json, "machine-readable output");
  cls->add_option("--budget", budget, "equivalence search node budget");

  auto* eqv = app.add_subcommand("equiv", "decide unimodular equivalence of two polytopes");
  eqv->add_option("first", file, "polytope JSON file")->required();
  eqv->add_option("second", file2, "polytope JSON file")->required();
  eqv->add_flag("--json", json, "machine-readable output");
  eqv->add_option("--budget", budget, "search node budget");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "tables, table1, table2, table3, matrices, oracle, enumeration, feasibility, lemmas, roundtrip")
      ->required();
  ver->add_flag("--json", json, "machine-readable report");
  ver->add_flag("--verbose", verbose, "list passing checks too");
  ver->add_option("--dmax", dmax, "dimension bound");
  ver->add_option("--kmax", kmax, "k bound for the k-families and matrix identities");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--budget", budget, "equivalence search node budget");
  ver->add_option("--workers", workers, "worker threads (0 = all cores)");
  ver->add_option("--samples", samples, "sample count for randomized suites");

  auto* enu = app.add_subcommand("enumerate", "enumerate non-pyramid simplices and compare with the feasibility predicate");
  enu->add_option("--dmax", dmax, "largest dimension")->default_val(4);
  enu->add_option("--vmax", vmax, "largest normalized volume (2..4)")->default_val(4);
  enu->add_flag("--as-printed", as_printed, "use the V=3 condition exactly as printed");
  enu->add_flag("--json", json, "machine-readable output");
  enu->add_option("--workers", workers, "worker threads (0 = all cores)");

  auto* app_cmd = app.add_subcommand("apply", "apply a witness chain or unimodular map to a polytope");
  app_cmd->add_option("map", file2, "witness or map JSON file")->required();
  app_cmd->add_option("file", file, "polytope JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*inv) return cmd_invariants(file, json);
    if (*gen) return cmd_generate(family, params, pyramids);
    if (*cls) return cmd_classify(file, json, budget);
    if (*eqv) return cmd_equiv(file, file2, json, budget);
    if (*ver) {
      Json options{{"seed", seed}, {"workers", workers}};
      if (dmax) options["dmax"] = dmax;
      if (kmax) options["kmax"] = kmax;
      if (budget) options["budget"] = budget;
      if (samples) options["samples"] = samples;
      return cmd_verify(suite, options, json, verbose);
    }
    if (*enu) return cmd_enumerate(dmax, vmax, as_printed, json, workers);
    if (*app_cmd) return cmd_apply(file2, file);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}

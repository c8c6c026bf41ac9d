// qpsurf: command-line front end. Every verb prints one JSON report on
// standard output. Exit codes: 0 success, 1 malformed input, 2 precondition
// violation, 3 internal consistency failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "qpsurf/acceptance.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/invariants.hpp"
#include "qpsurf/json_io.hpp"

namespace {

using namespace qpsurf;

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

struct Inputs {
  Json digests = Json::object();

  Json load(const std::string& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path);
      if (!in) throw Error(ErrorKind::MalformedDocument, "cannot read " + path);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    digests[path] = "fnv1a64:" + fnv1a(text);
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::MalformedDocument, path + ": " + e.what());
    }
  }
};

std::set<int> parse_subset(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.insert(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedDocument, "bad subset entry '" + item + "'");
    }
  }
  return out;
}

Json invariants_report(const BandRepresentation& rep) {
  const BraidedSurface s(rep);
  const auto sum = summary(s);
  const auto word = beta(rep);
  Json out = to_json(sum);
  out["boundary"] = sum.boundary_circles();
  out["exponent_sum"] = exponent_sum(word);
  out["alexander"] = alexander_json(alexander_from_braid(word));
  out["alexander_seifert"] = alexander_json(alexander_from_seifert(seifert_matrix(rep)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braided Seifert surfaces, torus-link fibers and quasipositive band representations"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "include wall-clock duration in the report");

  int n = 0;
  std::string input;
  std::string subset;
  std::uint64_t seed = 20261019;

  auto* nabla_cmd = app.add_subcommand("nabla", "positive braidword of the O{n,n} fiber");
  nabla_cmd->add_option("--n", n)->required();
  auto* qrep_cmd = app.add_subcommand("qrep", "quasipositive band representation q_n");
  qrep_cmd->add_option("--n", n)->required();
  auto* pad_cmd = app.add_subcommand("pad", "embed S(p) for a positive word p into S(nabla_n)");
  pad_cmd->add_option("--input", input, "braid word JSON, or - for stdin")->required();
  auto* expand_cmd = app.add_subcommand("expand", "embed S(b) for quasipositive b into S(p), p positive");
  expand_cmd->add_option("--input", input, "band representation JSON, or - for stdin")->required();
  auto* inv_cmd = app.add_subcommand("invariants", "surface summary and Alexander polynomial of a band rep");
  inv_cmd->add_option("--input", input, "band representation JSON, or - for stdin")->required();
  auto* fiber_cmd = app.add_subcommand("verify-fiber", "compare S(q_n) with S(nabla_n) by invariants");
  fiber_cmd->add_option("--n", n)->required();
  auto* reduce_cmd = app.add_subcommand("reduce", "Whitehead-reduce a full combed graph");
  reduce_cmd->add_option("--input", input, "combed graph JSON, or - for stdin")->required();
  auto* qp_cmd = app.add_subcommand("quasipositize", "quasipositive band representation of a subsurface of S(q_n)");
  qp_cmd->add_option("--n", n)->required();
  qp_cmd->add_option("--input", input, "combed graph JSON on S(q_n), or - for stdin");
  qp_cmd->add_option("--subset", subset, "comma-separated fine 1-handles; replaces --input")->excludes(qp_cmd->get_option("--input"));
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance checks");
  self_cmd->add_option("--seed", seed, "seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  Json report;
  report["command"] = std::vector<std::string>(argv + 1, argv + argc);
  Inputs inputs;
  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    Json result;
    if (nabla_cmd->parsed()) {
      result = to_json(nabla(n));
    } else if (qrep_cmd->parsed()) {
      result = to_json(q_rep(n));
    } else if (pad_cmd->parsed()) {
      const auto pad = pad_into_nabla(word_from_json(inputs.load(input)));
      result = {{"n", pad.n}, {"marked", pad.marked}, {"graph", to_json(pad.graph)},
                {"full", is_full(pad.graph)}, {"summary", to_json(neighborhood_summary(pad.graph))}};
    } else if (expand_cmd->parsed()) {
      const auto ex = expand_bands(rep_from_json(inputs.load(input)));
      result = {{"word", to_json(ex.word)}, {"graph", to_json(ex.graph)}, {"full", is_full(ex.graph)},
                {"summary", to_json(neighborhood_summary(ex.graph))}};
    } else if (inv_cmd->parsed()) {
      result = invariants_report(rep_from_json(inputs.load(input)));
    } else if (fiber_cmd->parsed()) {
      result = to_json(verify_fiber(n));
    } else if (reduce_cmd->parsed()) {
      const auto g = graph_from_json(inputs.load(input));
      const auto red = reduce(g);
      Json trace = Json::array();
      for (const auto& s : red.trace) trace.push_back(to_json(s));
      result = {{"graph", to_json(red.graph)}, {"trace", trace}, {"summary", to_json(neighborhood_summary(red.graph))}};
    } else if (qp_cmd->parsed()) {
      if (qp_cmd->count("--subset") > 0) {
        result = to_json(quasipositize_handle_subsurface(n, parse_subset(subset)));
      } else if (!input.empty()) {
        result = to_json(quasipositize(n, graph_from_json(inputs.load(input))));
      } else {
        throw Error(ErrorKind::InvalidParameter, "quasipositize needs --input or --subset");
      }
    } else if (self_cmd->parsed()) {
      Json checks = Json::array();
      bool all = true;
      for (const auto& r : run_acceptance(seed)) {
        checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        all = all && r.passed;
      }
      result = {{"seed", seed}, {"checks", checks}, {"passed", all}};
      if (!all) code = 3;
    }
    report["result"] = result;
    report["status"] = code == 0 ? "ok" : "failed";
  } catch (const Error& e) {
    code = exit_code(e.kind());
    report["status"] = "error";
    report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = 3;
    report["status"] = "error";
    report["error"] = {{"kind", "Internal"}, {"message", e.what()}};
  }
  report["inputs"] = inputs.digests;
  if (timing) {
    report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  std::cout << report.dump(2) << "\n";
  return code;
}

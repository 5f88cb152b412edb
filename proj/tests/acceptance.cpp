// Acceptance run: one line per criterion, exact comparisons throughout.

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "random_ast.hpp"
#include "snc/parser.hpp"
#include "snc/verify_suite.hpp"

namespace {

constexpr std::uint64_t kSeed = 20240511;

const char* const kTitles[] = {"",
                               "relations and basis",
                               "mixed basis",
                               "filtration",
                               "module action",
                               "Fredholm index",
                               "componentwise index",
                               "theta group relations",
                               "psi' and chi'",
                               "corank-one factorization",
                               "automorphisms",
                               "command line"};

struct Outcome {
  bool ok = true;
  int cases = 0;
  std::vector<std::string> ids;
  std::vector<std::string> notes;
};

void report(int criterion, const Outcome& o) {
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << criterion << " (" << kTitles[criterion]
            << "): cases=" << o.cases << " tolerance=exact ids=";
  for (std::size_t k = 0; k < o.ids.size(); ++k) std::cout << (k ? "," : "") << o.ids[k];
  std::cout << "\n";
  for (const auto& note : o.notes) std::cout << "    " << note << "\n";
}

struct Shell {
  int code = -1;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string command = std::string("'") + SN_CALC_PATH + "' " + args + " 2>/dev/null";
  Shell r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect_run(Outcome& o, const std::string& args, const std::string& want_out, bool exact) {
  const Shell r = shell(args);
  ++o.cases;
  const bool out_ok = exact ? r.out == want_out : r.out.find(want_out) != std::string::npos;
  if (r.code != 0 || !out_ok) {
    o.ok = false;
    o.notes.push_back("sn-calc " + args + " -> exit " + std::to_string(r.code) + ", output " + r.out);
  }
}

Outcome cli_criterion(const std::vector<snc::SuiteEntry>& entries) {
  Outcome o;
  o.ids = {"parser-roundtrip", "cli-examples", "verify-suite"};

  sn::Sampler rng(kSeed);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform(1, 3);
    const snc::Ast a = sntest::random_ast(rng, n, 3);
    const std::string text = snc::to_text(a);
    ++o.cases;
    bool same = false;
    try {
      same = snc::parse_expression(text, n) == a;
    } catch (const std::exception& e) {
      o.notes.push_back(std::string("parse threw: ") + e.what());
    }
    if (!same) {
      o.ok = false;
      o.notes.push_back("round trip failed: " + text);
    }
  }

  expect_run(o, "--n 1 eval 'x*y'", "x1*y1\n", true);
  expect_run(o, "--n 1 mixed 'x*y'", "1 - E(0,0)\n", true);
  expect_run(o, "--n 2 index '1+(y1-1)*E[2](0|0)'", "\"index\":1", false);

  const Shell suite = shell("--n 2 verify-suite");
  ++o.cases;
  if (suite.code != 0) {
    o.ok = false;
    o.notes.push_back("verify-suite exited " + std::to_string(suite.code));
  }
  std::set<std::string> passed;
  std::istringstream lines(suite.out);
  for (std::string line; std::getline(lines, line);) {
    std::istringstream words(line);
    std::string status;
    std::string id;
    words >> status >> id;
    if (status == "PASS") passed.insert(id);
  }
  for (const auto& e : entries) {
    if (!passed.count(e.id)) {
      o.ok = false;
      o.notes.push_back("verify-suite did not report PASS for " + e.id);
    }
  }
  return o;
}

}  // namespace

int main() {
  const auto& entries = snc::suite_entries();
  std::map<int, Outcome> by_criterion;
  for (const auto& e : entries) by_criterion[e.criterion].ids.push_back(e.id);

  snc::SuiteOptions opts;
  opts.seed = kSeed;
  opts.full = true;
  snc::run_suite(opts, [&](const snc::SuiteResult& r) {
    Outcome& o = by_criterion[r.criterion];
    o.cases += r.check.cases;
    if (r.skipped || !r.check.passed() || r.check.cases == 0) {
      o.ok = false;
      o.notes.push_back(snc::result_line(r));
    }
  });

  bool all = true;
  for (int c = 1; c <= 10; ++c) {
    const Outcome& o = by_criterion[c];
    const bool ok = o.ok && !o.ids.empty();
    all = all && ok;
    Outcome shown = o;
    shown.ok = ok;
    report(c, shown);
  }
  const Outcome cli = cli_criterion(entries);
  all = all && cli.ok;
  report(11, cli);

  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}

// Acceptance run: one line per criterion, exit status 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "flagsh/corpus.hpp"
#include "flagsh/identities.hpp"

using namespace flagsh;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 0;
constexpr std::size_t kInstances = 200;
constexpr std::size_t kExhaustiveInstances = 500;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Line {
  bool passed = true;
  std::string detail;
};

void report(int number, const std::string& name, const Line& line) {
  std::printf("criterion %d %-28s %s  %s\n", number, name.c_str(), line.passed ? "PASS" : "FAIL",
              line.detail.c_str());
  std::fflush(stdout);
}

Line fixture_line(const std::string& fixture, double limit_seconds) {
  Line line;
  auto start = Clock::now();
  std::size_t checked = 0;
  for (const auto& f : corpus::fixtures()) {
    if (f.name != fixture) continue;
    for (const auto& a : f.assertions) {
      corpus::AssertionResult r;
      try {
        r = a.check();
      } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
      }
      ++checked;
      if (!r.passed) {
        line.passed = false;
        line.detail += a.id + " failed (" + r.detail + "); ";
      }
    }
  }
  double elapsed = seconds_since(start);
  if (checked == 0) {
    line.passed = false;
    line.detail += "fixture missing; ";
  }
  if (elapsed >= limit_seconds) {
    line.passed = false;
    line.detail += "too slow; ";
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "assertions=%zu time=%.3fs limit=%.0fs", checked, elapsed, limit_seconds);
  line.detail += buf;
  return line;
}

Line suite_line(const std::vector<std::string>& ids, std::size_t min_instances, std::size_t max_size,
                double limit_seconds) {
  SuiteConfig config;
  config.seed = kSeed;
  config.max_size = max_size;
  config.instances = min_instances;
  config.only = ids;
  Line line;
  auto start = Clock::now();
  auto reports = run_property_suite(config);
  double elapsed = seconds_since(start);
  std::size_t total = 0;
  for (const auto& r : reports) {
    total += r.instances;
    if (r.verdict != Verdict::Pass || r.instances < min_instances) {
      line.passed = false;
      line.detail += r.id + " " + std::string(to_string(r.verdict)) + " instances=" + std::to_string(r.instances) + "; ";
    }
  }
  if (reports.size() != ids.size()) {
    line.passed = false;
    line.detail += "missing properties; ";
  }
  if (elapsed >= limit_seconds) {
    line.passed = false;
    line.detail += "too slow; ";
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "properties=%zu instances=%zu min_each=%zu time=%.2fs limit=%.0fs", reports.size(),
                total, min_instances, elapsed, limit_seconds);
  line.detail += buf;
  return line;
}

}  // namespace

int main() {
  std::vector<bool> results;
  auto run = [&](int number, const std::string& name, const Line& line) {
    report(number, name, line);
    results.push_back(line.passed);
  };

  run(1, "appendix_graph", fixture_line("appendix_G", 1.0));
  run(2, "g1_s_collapsible", fixture_line("G1", 5.0));

  {
    Line fixture = fixture_line("edge_collapse_G", 5.0);
    Line single = suite_line({"collapse_without_s_move"}, 1, 8, 5.0);
    Line line{fixture.passed && single.passed, fixture.detail + "; " + single.detail};
    run(3, "edge_collapse_single_pair", line);
  }

  run(4, "constructive_replay",
      suite_line({"edge_deletion_replay", "neighborhood_deletion_replay", "prisner_collapse_replay",
                  "star_collapse_replay", "face_complement_dismantlable", "collapse_to_gamma_moves",
                  "subdivision_equivalence", "weak_point_cascade"},
                 kInstances, 8, 60.0));

  run(5, "equivalence_oracles",
      suite_line({"suspension_dismantlable", "suspension_s_collapsible", "weak_point_three_way", "join_dismantlable",
                  "triangle_identities", "ws_single_move_collapse", "s_implies_i_dismantlable"},
                 kInstances, 8, 120.0));

  run(6, "greedy_vs_exhaustive", suite_line({"greedy_vs_exhaustive"}, kExhaustiveInstances, 7, 60.0));

  std::size_t passed = 0;
  for (bool r : results) passed += r;
  std::printf("acceptance %zu/%zu passed\n", passed, results.size());
  return passed == results.size() ? 0 : 1;
}

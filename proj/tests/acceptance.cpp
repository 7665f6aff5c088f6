// Acceptance suite: runs every exit criterion end to end and prints one
// pass/fail line per criterion. All comparisons are exact; the only
// tolerance anywhere is the wall-clock budget on the counting sweep.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "corepath/corepath.hpp"

namespace {

using corepath::CoprimePair;
using corepath::GapIdeal;
using corepath::Int;
using corepath::LatticePath;
using corepath::Partition;
using corepath::PlaneCoord;

int failures = 0;

void report(int criterion, bool pass, const std::string& description,
            const std::string& detail) {
  std::printf("criterion %d [%s]: %s (%s)\n", criterion, description.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++failures;
}

std::string cli_path() {
  if (const char* env = std::getenv("COREPATH_CLI")) return env;
  return COREPATH_CLI_PATH;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string command = "\"" + cli_path() + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, "popen failed"};
  std::string output;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// 1. the number of distinct-part cores doubles with each step of s
void criterion_counts() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string counts;
  for (Int s = 1; s <= 13; s += 2) {
    const auto observed =
        static_cast<Int>(corepath::enumerate_distinct_cores(s).size());
    const Int expected = Int{1} << (s - 1);
    if (observed != expected) pass = false;
    if (!counts.empty()) counts += ",";
    counts += std::to_string(observed);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60.0) pass = false;
  char detail[160];
  std::snprintf(detail, sizeof(detail), "counts %s in %.2fs, budget 60s", counts.c_str(),
                seconds);
  report(1, pass, "distinct-part core counts are 1,4,...,2^12", detail);
}

// 2. the map to paths is injective, onto the positive-ending paths, and both
//    compositions are identities
void criterion_bijectivity() {
  bool pass = true;
  Int instances = 0;
  for (Int s = 1; s <= 13 && pass; s += 2) {
    const auto cores = corepath::enumerate_distinct_cores(s);
    std::vector<std::string> produced;
    for (const auto& p : cores) {
      const LatticePath path = corepath::partition_to_path(p, s);
      if (!(corepath::path_to_partition(path, s) == p)) pass = false;
      produced.push_back(path.steps());
      ++instances;
    }
    std::sort(produced.begin(), produced.end());
    if (std::adjacent_find(produced.begin(), produced.end()) != produced.end()) pass = false;
    std::vector<std::string> expected;
    for (const auto& path : corepath::positive_paths(s)) expected.push_back(path.steps());
    std::sort(expected.begin(), expected.end());
    if (produced != expected) pass = false;
    for (const auto& path : corepath::positive_paths(s)) {
      if (!(corepath::partition_to_path(corepath::path_to_partition(path, s), s) == path))
        pass = false;
    }
  }
  report(2, pass, "bijectivity and both roundtrips for s <= 13",
         std::to_string(instances) + " instances, zero tolerance");
}

// 3. a poset-free hook filter reproduces the same partition sets
void criterion_oracle_independence() {
  bool pass = true;
  std::string sizes;
  for (Int s : {1, 3, 5, 7}) {
    const Int bound = corepath::default_size_bound(s, s + 2);
    std::set<std::vector<Int>> via_ideals, via_hooks;
    for (const auto& p : corepath::enumerate_distinct_cores(s)) via_ideals.insert(p.parts());
    for (const auto& p : corepath::direct_core_filter(s, s + 2, bound, true))
      via_hooks.insert(p.parts());
    if (via_ideals != via_hooks) pass = false;
    if (!sizes.empty()) sizes += ",";
    sizes += std::to_string(via_hooks.size());
  }
  report(3, pass, "independent hook filter matches for s in {1,3,5,7}",
         "set sizes " + sizes);
}

// 4. ideal counts agree with the closed-form binomial expression
void criterion_ideal_counts() {
  const std::vector<std::tuple<Int, Int, Int>> cases = {
      {2, 3, 2}, {3, 4, 5}, {3, 5, 7}, {4, 5, 14}, {5, 6, 42}, {9, 11, 8398}};
  bool pass = true;
  std::string counts;
  for (const auto& [s, t, expected] : cases) {
    Int binom = 1;
    for (Int i = 1; i <= s; ++i) binom = binom * (t + i) / i;
    if (binom / (s + t) != expected) pass = false;
    const auto observed = static_cast<Int>(
        corepath::enumerate_ideals(CoprimePair::make(s, t), false).size());
    if (observed != expected) pass = false;
    if (!counts.empty()) counts += ",";
    counts += std::to_string(observed);
  }
  report(4, pass, "ideal counts 2,5,7,14,42,8398 across six pairs", "observed " + counts);
}

// 5. neighbouring-pair cores with distinct parts follow the Fibonacci numbers
void criterion_fibonacci() {
  const std::vector<Int> expected = {2, 3, 5, 8, 13, 21};
  bool pass = true;
  std::string counts;
  for (Int s = 2; s <= 7; ++s) {
    const auto report_s = corepath::fibonacci_crosscheck(s);
    if (!report_s.match || report_s.expected != expected[static_cast<std::size_t>(s - 2)])
      pass = false;
    if (!counts.empty()) counts += ",";
    counts += std::to_string(report_s.observed);
  }
  report(5, pass, "neighbouring-pair counts 2,3,5,8,13,21", "observed " + counts);
}

// 6. structural invariants of the height encoding and the block split
void criterion_structural() {
  bool pass = true;

  // parity, unit steps and the three balance conditions on every image
  for (Int s = 1; s <= 13; s += 2) {
    const Int k = (s - 1) / 2;
    for (const auto& ideal : corepath::enumerate_ideals(corepath::twin_pair(k), true)) {
      const auto balanced = corepath::to_balanced_ideal(ideal, k);
      const auto& h = balanced.heights;
      if (static_cast<Int>(h.size()) != 2 * k + 2) pass = false;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (((h[i] % 2) + 2) % 2 != static_cast<Int>((i + 1) % 2)) pass = false;
        if (i > 0 && std::abs(h[i] - h[i - 1]) != 1) pass = false;
      }
      if (!(h.front() < 0 && h.back() >= 0 && std::abs(h.front() + h.back()) == 1)) pass = false;
    }
  }

  // closed-form membership and the placement of the small gaps
  for (Int k = 0; k <= 10; ++k) {
    const CoprimePair pair = corepath::twin_pair(k);
    for (Int a = 0; a <= 2 * k + 2; ++a)
      for (Int b = 0; b <= 2 * k + 2; ++b)
        if (corepath::in_twin_region(PlaneCoord{a, b}, k) !=
            corepath::in_plane_poset(PlaneCoord{a, b}, pair))
          pass = false;
    for (Int x = 1; x <= 2 * k; ++x)
      if (!(corepath::small_gap_coord(x, k) == corepath::to_plane(x, pair))) pass = false;
  }

  // the minimal-pair characterization agrees with the beta gap test on
  // every ideal of the (9,11) poset
  for (const auto& ideal : corepath::enumerate_ideals(CoprimePair::make(9, 11), false)) {
    const bool via_coords = corepath::avoids_adjacent_minimal_pairs(ideal, 4);
    const bool via_beta =
        ideal.empty() || corepath::beta_gap_test(corepath::BetaSet(ideal.elements()));
    if (via_coords != via_beta) pass = false;
  }

  report(6, pass, "height-profile and block-split invariants", "exhaustive, exact");
}

// 7. the CLI reproduces the worked (9,11) example byte for byte
void criterion_worked_example() {
  bool pass = true;
  std::string detail = "beta set and white nodes match";

  const auto [map_code, map_out] = run_cli("map --s 9 --partition 15,7,6,3,1");
  if (map_code != 0) {
    pass = false;
    detail = "map exited with " + std::to_string(map_code);
  } else {
    try {
      const auto record = nlohmann::json::parse(map_out);
      const std::vector<Int> beta = record.at("beta_set").get<std::vector<Int>>();
      if (beta != std::vector<Int>{19, 10, 8, 4, 1}) {
        pass = false;
        detail = "unexpected beta set in " + map_out;
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("map output was not JSON: ") + e.what();
    }
  }

  const auto [render_code, render_out] = run_cli("render --s 9 --partition 15,7,6,3,1");
  if (render_code != 0) {
    pass = false;
    detail = "render exited with " + std::to_string(render_code);
  } else {
    std::set<std::string> white;
    std::istringstream lines(render_out);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find("fillcolor=\"white\"") == std::string::npos) continue;
      const auto open = line.find('"');
      const auto close = line.find('"', open + 1);
      white.insert(line.substr(open + 1, close - open - 1));
    }
    if (white != std::set<std::string>{"19", "10", "8", "4", "1"}) {
      pass = false;
      detail = "white node set mismatch";
    }
  }

  report(7, pass, "worked example through the CLI", detail);
}

}  // namespace

int main() {
  try {
    criterion_counts();
    criterion_bijectivity();
    criterion_oracle_independence();
    criterion_ideal_counts();
    criterion_fibonacci();
    criterion_structural();
    criterion_worked_example();
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("acceptance: %d/7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}

// Command line surface over the corepath library: counting, the bijection in
// both directions, full listings, verification sweeps, and Hasse diagram
// export. Exit codes: 0 success/match, 1 verification mismatch, 2 usage or
// validation error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "corepath/corepath.hpp"

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

corepath::Int enumeration_guard() {
  const char* env = std::getenv("COREPATH_GUARD");
  if (env == nullptr) return corepath::kDefaultIdealGuard;
  char* end = nullptr;
  const long long value = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || value < 1)
    corepath::raise(corepath::errc::invalid_argument,
                    "COREPATH_GUARD must be a positive integer");
  return static_cast<corepath::Int>(value);
}

void require_odd(corepath::Int s, const char* flag) {
  if (s < 1 || s % 2 == 0)
    corepath::raise(corepath::errc::invalid_argument,
                    std::string(flag) + " must be odd and positive");
}

int run_count(corepath::Int s) {
  require_odd(s, "--s");
  const auto cores = corepath::enumerate_distinct_cores(s, enumeration_guard());
  const auto observed = static_cast<corepath::Int>(cores.size());
  const corepath::Int expected = corepath::Int{1} << (s - 1);
  std::cout << observed << " / " << expected << "\n";
  return observed == expected ? kExitMatch : kExitMismatch;
}

int run_map(corepath::Int s, const std::string& partition_text) {
  require_odd(s, "--s");
  const corepath::Partition p = corepath::parse_partition(partition_text);
  std::cout << corepath::trace_json_line(corepath::map_trace(p, s)) << "\n";
  return kExitMatch;
}

int run_unmap(corepath::Int s, const std::string& path_text) {
  require_odd(s, "--s");
  const corepath::LatticePath path = corepath::LatticePath::parse(path_text);
  std::cout << corepath::format_partition(corepath::path_to_partition(path, s)) << "\n";
  return kExitMatch;
}

int run_list(corepath::Int s, const std::string& format) {
  require_odd(s, "--s");
  const auto cores = corepath::enumerate_distinct_cores(s, enumeration_guard());
  std::vector<std::pair<corepath::Partition, corepath::LatticePath>> rows;
  rows.reserve(cores.size());
  for (const auto& p : cores) rows.emplace_back(p, corepath::partition_to_path(p, s));
  std::sort(rows.begin(), rows.end(), [](const auto& lhs, const auto& rhs) {
    return corepath::path_lex_less(lhs.second, rhs.second);
  });
  if (format == "jsonl") {
    for (const auto& [p, path] : rows) {
      corepath::ordered_json record;
      record["partition"] = p.parts();
      record["path"] = path.steps();
      std::cout << record.dump() << "\n";
    }
    corepath::ordered_json tail;
    tail["count"] = rows.size();
    std::cout << tail.dump() << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& [p, path] : rows) width = std::max(width, corepath::format_partition(p).size());
    for (const auto& [p, path] : rows) {
      std::string text = corepath::format_partition(p);
      text.resize(width, ' ');
      std::cout << text << "  " << path.steps() << "\n";
    }
    std::cout << "count " << rows.size() << "\n";
  }
  return kExitMatch;
}

int run_verify(corepath::Int max_s, const std::string& format) {
  require_odd(max_s, "--max-s");
  const auto reports = corepath::verify_all(max_s, enumeration_guard());
  if (format == "jsonl") {
    for (const auto& r : reports) std::cout << corepath::report_json_line(r) << "\n";
  } else {
    std::cout << corepath::format_report_table(reports);
  }
  const bool all_match = std::all_of(reports.begin(), reports.end(),
                                     [](const corepath::CountReport& r) { return r.match; });
  return all_match ? kExitMatch : kExitMismatch;
}

int run_render(corepath::Int s, const std::string& partition_text, const std::string& format) {
  require_odd(s, "--s");
  const corepath::Partition p = corepath::parse_partition(partition_text);
  const corepath::MapTrace trace = corepath::map_trace(p, s);
  const corepath::CoprimePair pair = corepath::CoprimePair::make(s, s + 2);
  std::cout << (format == "tikz" ? corepath::render_hasse_tikz(pair, trace.ideal)
                                 : corepath::render_hasse_dot(pair, trace.ideal));
  return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(s, s+2)-core partitions with distinct parts <-> positive-ending lattice paths"};
  app.require_subcommand(1);

  corepath::Int s = 0;
  corepath::Int max_s = 13;
  std::string partition_text;
  std::string path_text;
  std::string list_format = "table";
  std::string verify_format = "table";
  std::string render_format = "dot";

  auto* count_cmd =
      app.add_subcommand("count", "count the distinct-part cores and compare with 2^(s-1)");
  count_cmd->add_option("--s", s, "odd modulus s")->required();

  auto* map_cmd = app.add_subcommand("map", "trace a partition through the bijection");
  map_cmd->add_option("--s", s, "odd modulus s")->required();
  map_cmd->add_option("--partition", partition_text, "comma-separated parts or \"empty\"")
      ->required();

  auto* unmap_cmd = app.add_subcommand("unmap", "recover the partition behind a path");
  unmap_cmd->add_option("--s", s, "odd modulus s")->required();
  unmap_cmd->add_option("--path", path_text, "U/D step string of length s")->required();

  auto* list_cmd = app.add_subcommand("list", "list every (partition, path) pair");
  list_cmd->add_option("--s", s, "odd modulus s")->required();
  list_cmd->add_option("--format", list_format, "jsonl or table")
      ->check(CLI::IsMember({"jsonl", "table"}));

  auto* verify_cmd = app.add_subcommand("verify", "run the counting and roundtrip sweeps");
  verify_cmd->add_option("--max-s", max_s, "largest odd s to verify (default 13)");
  verify_cmd->add_option("--format", verify_format, "table or jsonl")
      ->check(CLI::IsMember({"jsonl", "table"}));

  auto* render_cmd =
      app.add_subcommand("render", "Hasse diagram with the partition's ideal in white");
  render_cmd->add_option("--s", s, "odd modulus s")->required();
  render_cmd->add_option("--partition", partition_text, "comma-separated parts or \"empty\"")
      ->required();
  render_cmd->add_option("--format", render_format, "dot or tikz")
      ->check(CLI::IsMember({"dot", "tikz"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitMatch : kExitUsage;
  }

  try {
    if (count_cmd->parsed()) return run_count(s);
    if (map_cmd->parsed()) return run_map(s, partition_text);
    if (unmap_cmd->parsed()) return run_unmap(s, path_text);
    if (list_cmd->parsed()) return run_list(s, list_format);
    if (verify_cmd->parsed()) return run_verify(max_s, verify_format);
    if (render_cmd->parsed()) return run_render(s, partition_text, render_format);
  } catch (const corepath::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == corepath::errc::verification_failed ? kExitMismatch : kExitUsage;
  }
  return kExitUsage;
}

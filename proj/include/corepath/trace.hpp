#pragma once

#include <string>

#include <json.hpp>

#include "corepath/bijection.hpp"

namespace corepath {

using ordered_json = nlohmann::ordered_json;

/// Every intermediate of the partition-to-path pipeline, kept for reporting.
struct MapTrace {
  Partition partition;
  BetaSet beta;
  GapIdeal ideal;
  BalancedIdeal balanced;
  LatticePath path;
};

/// Runs the pipeline with the same validation as partition_to_path, retaining
/// all intermediates.
inline MapTrace map_trace(const Partition& p, Int s) {
  if (s < 1 || s % 2 == 0) raise(errc::invalid_argument, "s must be odd and positive");
  if (!has_distinct_parts(p)) raise(errc::parts_not_distinct, "parts not distinct");
  if (!is_simultaneous_core(p, {s, s + 2}))
    raise(errc::not_a_core, "not a (" + std::to_string(s) + "," + std::to_string(s + 2) +
                                ")-core: " + format_partition(p));
  MapTrace trace;
  trace.partition = p;
  trace.beta = beta_set(p);
  trace.ideal = GapIdeal(trace.beta.hooks());
  trace.balanced = to_balanced_ideal(trace.ideal, (s - 1) / 2);
  trace.path = to_path(trace.balanced);
  return trace;
}

inline ordered_json trace_to_json(const MapTrace& trace) {
  ordered_json record;
  record["partition"] = trace.partition.parts();
  record["beta_set"] = trace.beta.hooks();
  record["ideal"] = trace.ideal.elements();
  record["heights"] = trace.balanced.heights;
  record["path"] = trace.path.steps();
  return record;
}

inline std::string trace_json_line(const MapTrace& trace) { return trace_to_json(trace).dump(); }

/// One-line failure artifact: the instance with its plane coordinates, for
/// bisecting verification mismatches.
inline std::string instance_record(const Partition& p, Int s, const std::string& reason) {
  ordered_json record;
  record["reason"] = reason;
  record["s"] = s;
  record["partition"] = p.parts();
  try {
    const MapTrace trace = map_trace(p, s);
    record["beta_set"] = trace.beta.hooks();
    const CoprimePair pair = twin_pair((s - 1) / 2);
    ordered_json coords = ordered_json::array();
    for (Int x : trace.ideal.elements()) {
      const PlaneCoord c = to_plane(x, pair);
      coords.push_back({c.a, c.b});
    }
    record["coords"] = coords;
    record["heights"] = trace.balanced.heights;
    record["path"] = trace.path.steps();
  } catch (const error& e) {
    record["pipeline_error"] = e.what();
  }
  return record.dump();
}

}  // namespace corepath

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cdiffsim/engine.hpp"
#include "cdiffsim/metrics.hpp"

namespace cdiffsim {

// Shortest decimal representation that round-trips the value exactly
// ("0.5", "1", "0.068").
std::string format_double(double value);

// Results CSV: header plus one row per replica, '\n' newlines, UTF-8.
// Columns: experiment,combo_id,replica,seed,direct_infection,policy,
// ht_interval,ht_rate,lt_interval,lt_rate,random_count,infected_ht,
// infected_lt,infected_colonized,infected_diseased,spontaneous,
// total_contact_infections,admissions,discharges,deaths,horizon.
// Returns the number of data rows written.
int write_results_csv(std::span<const ReplicaResult> results, std::ostream& out);
int write_results_csv(std::span<const ReplicaResult> results, const std::string& path);

// Exact inverse of write_results_csv; throws CsvError on malformed input.
std::vector<ReplicaResult> read_results_csv(std::istream& in);
std::vector<ReplicaResult> read_results_csv_file(const std::string& path);

struct SummaryRow {
  int experiment_id = 0;
  std::string combo_id;
  std::string metric;
  SummaryStats stats;
};

// Per-combo descriptive statistics for every counter metric plus the four
// attribution shares (share rows cover only replicas where shares are
// defined). Rows come out sorted by (experiment, combo_id, metric order).
std::vector<SummaryRow> build_summary(std::span<const ReplicaResult> results);

// Summary CSV columns: experiment,combo_id,metric,n,mean,std,min,q1,median,
// q3,max. Returns the number of data rows written.
int write_summary_csv(std::span<const SummaryRow> rows, std::ostream& out);
int write_summary_csv(std::span<const SummaryRow> rows, const std::string& path);

// Per-tick time series emitted by the CLI when tracing is enabled.
void write_trace_header(std::ostream& out);
void write_trace_row(const SimulationState& state, std::ostream& out);

}  // namespace cdiffsim

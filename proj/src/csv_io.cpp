#include "cdiffsim/csv_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "cdiffsim/errors.hpp"

namespace cdiffsim {

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

namespace {

constexpr std::string_view kResultsHeader =
    "experiment,combo_id,replica,seed,direct_infection,policy,ht_interval,ht_rate,"
    "lt_interval,lt_rate,random_count,infected_ht,infected_lt,infected_colonized,"
    "infected_diseased,spontaneous,total_contact_infections,admissions,discharges,"
    "deaths,horizon";

constexpr std::string_view kSummaryHeader =
    "experiment,combo_id,metric,n,mean,std,min,q1,median,q3,max";

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw CsvError("malformed " + std::string(what) + " field: '" + std::string(field) + "'");
  }
  return value;
}

bool parse_bool(std::string_view field, const char* what) {
  if (field == "true") return true;
  if (field == "false") return false;
  throw CsvError("malformed " + std::string(what) + " field: '" + std::string(field) + "'");
}

CleaningPolicy::Mode parse_mode(std::string_view field) {
  if (field == "none") return CleaningPolicy::Mode::None;
  if (field == "total") return CleaningPolicy::Mode::Total;
  if (field == "random") return CleaningPolicy::Mode::Random;
  throw CsvError("unknown cleaning policy: '" + std::string(field) + "'");
}

void write_row(const ReplicaResult& r, std::ostream& out) {
  const AttributionCounters& c = r.counters;
  out << r.experiment_id << ',' << r.combo_id << ',' << r.replica_index << ',' << r.seed
      << ',' << (r.direct_infection ? "true" : "false") << ',' << to_string(r.cleaning.mode)
      << ',' << r.cleaning.ht_interval << ',' << format_double(r.cleaning.ht_rate) << ','
      << r.cleaning.lt_interval << ',' << format_double(r.cleaning.lt_rate) << ','
      << r.cleaning.count_per_type << ',' << c.infected_by_ht << ',' << c.infected_by_lt
      << ',' << c.infected_by_colonized << ',' << c.infected_by_diseased << ','
      << c.spontaneous_colonizations << ',' << c.total_contact_infections() << ','
      << c.admissions << ',' << c.discharges << ',' << c.deaths << ',' << r.horizon << '\n';
}

ReplicaResult parse_row(std::string_view line, std::size_t line_number) {
  const auto fields = split(line);
  if (fields.size() != 21) {
    throw CsvError("line " + std::to_string(line_number) + ": expected 21 fields, got " +
                   std::to_string(fields.size()));
  }
  ReplicaResult r;
  r.experiment_id = parse_number<int>(fields[0], "experiment");
  r.combo_id = std::string(fields[1]);
  r.replica_index = parse_number<int>(fields[2], "replica");
  r.seed = parse_number<std::uint64_t>(fields[3], "seed");
  r.direct_infection = parse_bool(fields[4], "direct_infection");
  r.cleaning.mode = parse_mode(fields[5]);
  r.cleaning.ht_interval = parse_number<int>(fields[6], "ht_interval");
  r.cleaning.ht_rate = parse_number<double>(fields[7], "ht_rate");
  r.cleaning.lt_interval = parse_number<int>(fields[8], "lt_interval");
  r.cleaning.lt_rate = parse_number<double>(fields[9], "lt_rate");
  r.cleaning.count_per_type = parse_number<int>(fields[10], "random_count");
  r.counters.infected_by_ht = parse_number<std::int64_t>(fields[11], "infected_ht");
  r.counters.infected_by_lt = parse_number<std::int64_t>(fields[12], "infected_lt");
  r.counters.infected_by_colonized =
      parse_number<std::int64_t>(fields[13], "infected_colonized");
  r.counters.infected_by_diseased =
      parse_number<std::int64_t>(fields[14], "infected_diseased");
  r.counters.spontaneous_colonizations = parse_number<std::int64_t>(fields[15], "spontaneous");
  const auto total = parse_number<std::int64_t>(fields[16], "total_contact_infections");
  if (total != r.counters.total_contact_infections()) {
    throw CsvError("line " + std::to_string(line_number) +
                   ": total_contact_infections does not match the attribution counters");
  }
  r.counters.admissions = parse_number<std::int64_t>(fields[17], "admissions");
  r.counters.discharges = parse_number<std::int64_t>(fields[18], "discharges");
  r.counters.deaths = parse_number<std::int64_t>(fields[19], "deaths");
  r.horizon = parse_number<int>(fields[20], "horizon");
  return r;
}

}  // namespace

int write_results_csv(std::span<const ReplicaResult> results, std::ostream& out) {
  out << kResultsHeader << '\n';
  for (const ReplicaResult& r : results) write_row(r, out);
  return static_cast<int>(results.size());
}

int write_results_csv(std::span<const ReplicaResult> results, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CsvError("cannot open '" + path + "' for writing");
  const int rows = write_results_csv(results, out);
  out.flush();
  if (!out) throw CsvError("failed writing '" + path + "'");
  return rows;
}

std::vector<ReplicaResult> read_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CsvError("empty results file");
  if (line != kResultsHeader) throw CsvError("unexpected results header: '" + line + "'");
  std::vector<ReplicaResult> results;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    results.push_back(parse_row(line, line_number));
  }
  return results;
}

std::vector<ReplicaResult> read_results_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("cannot open '" + path + "' for reading");
  return read_results_csv(in);
}

namespace {

struct MetricDef {
  const char* name;
  double (*value)(const ReplicaResult&);
};

constexpr MetricDef kCounterMetrics[] = {
    {"infected_ht", [](const ReplicaResult& r) { return double(r.counters.infected_by_ht); }},
    {"infected_lt", [](const ReplicaResult& r) { return double(r.counters.infected_by_lt); }},
    {"infected_colonized",
     [](const ReplicaResult& r) { return double(r.counters.infected_by_colonized); }},
    {"infected_diseased",
     [](const ReplicaResult& r) { return double(r.counters.infected_by_diseased); }},
    {"spontaneous",
     [](const ReplicaResult& r) { return double(r.counters.spontaneous_colonizations); }},
    {"total_contact_infections",
     [](const ReplicaResult& r) { return double(r.counters.total_contact_infections()); }},
    {"admissions", [](const ReplicaResult& r) { return double(r.counters.admissions); }},
    {"discharges", [](const ReplicaResult& r) { return double(r.counters.discharges); }},
    {"deaths", [](const ReplicaResult& r) { return double(r.counters.deaths); }},
};

struct ShareMetricDef {
  const char* name;
  double Shares::* field;
};

constexpr ShareMetricDef kShareMetrics[] = {
    {"share_ht", &Shares::high_touch},
    {"share_lt", &Shares::low_touch},
    {"share_colonized", &Shares::colonized},
    {"share_diseased", &Shares::diseased},
};

}  // namespace

std::vector<SummaryRow> build_summary(std::span<const ReplicaResult> results) {
  // Group independently of input order so aggregation is permutation-invariant.
  std::vector<const ReplicaResult*> sorted;
  sorted.reserve(results.size());
  for (const ReplicaResult& r : results) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const ReplicaResult* a, const ReplicaResult* b) {
    return std::tie(a->experiment_id, a->combo_id, a->replica_index) <
           std::tie(b->experiment_id, b->combo_id, b->replica_index);
  });

  std::vector<SummaryRow> rows;
  std::size_t group_start = 0;
  while (group_start < sorted.size()) {
    std::size_t group_end = group_start;
    while (group_end < sorted.size() &&
           sorted[group_end]->experiment_id == sorted[group_start]->experiment_id &&
           sorted[group_end]->combo_id == sorted[group_start]->combo_id) {
      ++group_end;
    }
    const int experiment_id = sorted[group_start]->experiment_id;
    const std::string& combo_id = sorted[group_start]->combo_id;

    std::vector<double> values;
    for (const MetricDef& metric : kCounterMetrics) {
      values.clear();
      for (std::size_t i = group_start; i < group_end; ++i) {
        values.push_back(metric.value(*sorted[i]));
      }
      rows.push_back({experiment_id, combo_id, metric.name, summarize(values)});
    }
    for (const ShareMetricDef& metric : kShareMetrics) {
      values.clear();
      for (std::size_t i = group_start; i < group_end; ++i) {
        if (const auto s = shares(sorted[i]->counters)) values.push_back((*s).*metric.field);
      }
      if (!values.empty()) {
        rows.push_back({experiment_id, combo_id, metric.name, summarize(values)});
      }
    }
    group_start = group_end;
  }
  return rows;
}

int write_summary_csv(std::span<const SummaryRow> rows, std::ostream& out) {
  out << kSummaryHeader << '\n';
  for (const SummaryRow& row : rows) {
    const SummaryStats& s = row.stats;
    out << row.experiment_id << ',' << row.combo_id << ',' << row.metric << ',' << s.n << ','
        << format_double(s.mean) << ',' << format_double(s.std_dev) << ','
        << format_double(s.min) << ',' << format_double(s.q1) << ',' << format_double(s.median)
        << ',' << format_double(s.q3) << ',' << format_double(s.max) << '\n';
  }
  return static_cast<int>(rows.size());
}

int write_summary_csv(std::span<const SummaryRow> rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CsvError("cannot open '" + path + "' for writing");
  const int count = write_summary_csv(rows, out);
  out.flush();
  if (!out) throw CsvError("failed writing '" + path + "'");
  return count;
}

void write_trace_header(std::ostream& out) {
  out << "tick,population,resistant,susceptible,colonized,diseased,contamination_ht,"
         "contamination_lt\n";
}

void write_trace_row(const SimulationState& state, std::ostream& out) {
  out << state.tick << ',' << state.patients.size() << ','
      << state.count_in_state(PatientState::Resistant) << ','
      << state.count_in_state(PatientState::Susceptible) << ','
      << state.count_in_state(PatientState::Colonized) << ','
      << state.count_in_state(PatientState::Diseased) << ','
      << format_double(state.grid.total_contamination(SurfaceKind::HighTouch)) << ','
      << format_double(state.grid.total_contamination(SurfaceKind::LowTouch)) << '\n';
}

}  // namespace cdiffsim

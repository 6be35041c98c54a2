#include "ahr/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace ahr {

std::string makespan_us_text(Cycle makespan) {
  // hundredths of a microsecond = makespan * 100 / 6 = makespan * 50 / 3
  uint64_t scaled = makespan * 50;
  uint64_t hundredths = scaled / 3;
  if (scaled % 3 == 2) hundredths += 1;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%llu.%02llu",
                static_cast<unsigned long long>(hundredths / 100),
                static_cast<unsigned long long>(hundredths % 100));
  return buf;
}

std::string utilization_text(double u) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", u);
  return buf;
}

namespace {

std::string busy_list_text(const std::vector<Cycle>& busy) {
  std::string out;
  for (size_t i = 0; i < busy.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(busy[i]);
  }
  return out;
}

}  // namespace

std::string format_metrics(const RunReport& report, ReportFormat format) {
  const Metrics& m = report.metrics;
  if (format == ReportFormat::Csv) {
    std::string out =
        "makespan,makespan_us,busy_cycles,utilization,nodes_executed,"
        "expansions,fifo_max_depth,bus_busy_cycles,total_work,critical_path\n";
    out += std::to_string(m.makespan);
    out += ',';
    out += makespan_us_text(m.makespan);
    out += ',';
    out += busy_list_text(m.busy_cycles);
    out += ',';
    out += utilization_text(m.utilization);
    out += ',';
    out += std::to_string(m.nodes_executed);
    out += ',';
    out += std::to_string(m.expansions);
    out += ',';
    out += std::to_string(m.fifo_max_depth);
    out += ',';
    out += std::to_string(m.bus_busy_cycles);
    out += ',';
    out += std::to_string(m.total_work);
    out += ',';
    out += std::to_string(m.critical_path);
    out += '\n';
    return out;
  }

  nlohmann::ordered_json j;
  j["makespan"] = m.makespan;
  j["makespan_us"] = makespan_us_text(m.makespan);
  j["busy_cycles"] = m.busy_cycles;
  j["utilization"] = utilization_text(m.utilization);
  j["nodes_executed"] = m.nodes_executed;
  j["expansions"] = m.expansions;
  j["fifo_max_depth"] = m.fifo_max_depth;
  j["bus_busy_cycles"] = m.bus_busy_cycles;
  j["total_work"] = m.total_work;
  j["critical_path"] = m.critical_path;
  return j.dump(2) + "\n";
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows, Cycle base_makespan) {
  std::string out = "p,makespan,makespan_us,speedup,utilization\n";
  for (const SweepRow& row : rows) {
    const Metrics& m = row.report.metrics;
    double speedup;
    if (m.makespan == 0) {
      speedup = base_makespan == 0 ? 1.0 : 0.0;
    } else {
      speedup = static_cast<double>(base_makespan) / static_cast<double>(m.makespan);
    }
    char num[32];
    std::snprintf(num, sizeof num, "%.4f", speedup);
    out += std::to_string(row.processors);
    out += ',';
    out += std::to_string(m.makespan);
    out += ',';
    out += makespan_us_text(m.makespan);
    out += ',';
    out += num;
    out += ',';
    out += utilization_text(m.utilization);
    out += '\n';
  }
  return out;
}

std::string format_trace(const std::vector<TraceRecord>& trace) {
  std::string out;
  for (const TraceRecord& r : trace) {
    out += to_line(r);
    out += '\n';
  }
  return out;
}

}  // namespace ahr

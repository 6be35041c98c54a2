#pragma once

#include <string>
#include <vector>

#include "ahr/engine.hpp"

namespace ahr {

enum class ReportFormat { Csv, Json };

// The machine runs at 6 cycles per microsecond; two decimals, ties to even
// (exact integer arithmetic, and with this clock no tie can occur).
std::string makespan_us_text(Cycle makespan);

std::string utilization_text(double u);

// One run's metrics. CSV is a header line plus one row; the per-processor
// busy cycle list is semicolon joined inside its cell. JSON keeps the same
// field order and renders the two fixed-point fields as strings.
std::string format_metrics(const RunReport& report, ReportFormat format);

struct SweepRow {
  int processors = 0;
  RunReport report;
};

// CSV with one row per processor count. Speedup is relative to the
// single-processor makespan of the same program and cost model.
std::string format_sweep_csv(const std::vector<SweepRow>& rows, Cycle base_makespan);

std::string format_trace(const std::vector<TraceRecord>& trace);

}  // namespace ahr

#include "doctest.h"

#include "json.hpp"

#include "ahr/report.hpp"

using namespace ahr;

namespace {

RunReport sample_report() {
  RunReport r;
  r.value = Value::integer(120);
  r.value_text = "120";
  r.metrics.makespan = 80;
  r.metrics.busy_cycles = {30, 25, 0};
  r.metrics.utilization = 55.0 / 240.0;
  r.metrics.nodes_executed = 4;
  r.metrics.expansions = 2;
  r.metrics.fifo_max_depth = 3;
  r.metrics.bus_busy_cycles = 17;
  r.metrics.total_work = 55;
  r.metrics.critical_path = 41;
  return r;
}

}  // namespace

TEST_CASE("microsecond conversion at six cycles per microsecond") {
  CHECK(makespan_us_text(0) == "0.00");
  CHECK(makespan_us_text(6) == "1.00");
  CHECK(makespan_us_text(3) == "0.50");
  CHECK(makespan_us_text(1) == "0.17");
  CHECK(makespan_us_text(2) == "0.33");
  CHECK(makespan_us_text(40) == "6.67");
  CHECK(makespan_us_text(80) == "13.33");
  CHECK(makespan_us_text(600) == "100.00");
  CHECK(makespan_us_text(601) == "100.17");
}

TEST_CASE("utilization prints with four decimals") {
  CHECK(utilization_text(0.0) == "0.0000");
  CHECK(utilization_text(1.0) == "1.0000");
  CHECK(utilization_text(0.229166666) == "0.2292");
}

TEST_CASE("CSV metrics are a header and one row") {
  std::string got = format_metrics(sample_report(), ReportFormat::Csv);
  CHECK(got ==
        "makespan,makespan_us,busy_cycles,utilization,nodes_executed,"
        "expansions,fifo_max_depth,bus_busy_cycles,total_work,critical_path\n"
        "80,13.33,30;25;0,0.2292,4,2,3,17,55,41\n");
}

TEST_CASE("JSON metrics keep field order and round-trip exactly") {
  std::string text = format_metrics(sample_report(), ReportFormat::Json);
  nlohmann::json j = nlohmann::json::parse(text);

  CHECK(j["makespan"] == 80);
  CHECK(j["makespan_us"] == "13.33");
  CHECK(j["busy_cycles"] == nlohmann::json({30, 25, 0}));
  CHECK(j["utilization"] == "0.2292");
  CHECK(j["nodes_executed"] == 4);
  CHECK(j["expansions"] == 2);
  CHECK(j["fifo_max_depth"] == 3);
  CHECK(j["bus_busy_cycles"] == 17);
  CHECK(j["total_work"] == 55);
  CHECK(j["critical_path"] == 41);

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  // nlohmann::json sorts keys; reparse with ordered_json to check order
  nlohmann::ordered_json oj = nlohmann::ordered_json::parse(text);
  std::vector<std::string> ordered;
  for (auto it = oj.begin(); it != oj.end(); ++it) ordered.push_back(it.key());
  CHECK(ordered == std::vector<std::string>{
                       "makespan", "makespan_us", "busy_cycles", "utilization",
                       "nodes_executed", "expansions", "fifo_max_depth",
                       "bus_busy_cycles", "total_work", "critical_path"});
}

TEST_CASE("CSV cells parse back to the same metrics") {
  RunReport r = sample_report();
  std::string got = format_metrics(r, ReportFormat::Csv);
  std::string row = got.substr(got.find('\n') + 1);
  row.pop_back();

  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    size_t comma = row.find(',', start);
    cells.push_back(row.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  REQUIRE(cells.size() == 10);
  CHECK(std::stoull(cells[0]) == r.metrics.makespan);
  CHECK(cells[1] == makespan_us_text(r.metrics.makespan));
  CHECK(cells[2] == "30;25;0");
  CHECK(cells[3] == utilization_text(r.metrics.utilization));
  CHECK(std::stoull(cells[4]) == r.metrics.nodes_executed);
  CHECK(std::stoull(cells[5]) == r.metrics.expansions);
  CHECK(std::stoull(cells[6]) == r.metrics.fifo_max_depth);
  CHECK(std::stoull(cells[7]) == r.metrics.bus_busy_cycles);
  CHECK(std::stoull(cells[8]) == r.metrics.total_work);
  CHECK(std::stoull(cells[9]) == r.metrics.critical_path);
}

TEST_CASE("sweep CSV rows and the speedup column") {
  RunReport slow = sample_report();
  slow.metrics.makespan = 80;
  RunReport fast = sample_report();
  fast.metrics.makespan = 40;

  std::vector<SweepRow> rows = {{1, slow}, {4, fast}};
  std::string csv = format_sweep_csv(rows, 80);
  CHECK(csv ==
        "p,makespan,makespan_us,speedup,utilization\n"
        "1,80,13.33,1.0000,0.2292\n"
        "4,40,6.67,2.0000,0.2292\n");
}

TEST_CASE("trace lines are tab-separated with dashes for absent fields") {
  TraceRecord dispatch{10, TraceRecord::Kind::Dispatch, 3, 1};
  TraceRecord ready{0, TraceRecord::Kind::Ready, 2, kNoProc};
  TraceRecord abort_rec{7, TraceRecord::Kind::Abort, kNoNode, kNoProc};
  CHECK(to_line(dispatch) == "10\tDISPATCH\t3\t1");
  CHECK(to_line(ready) == "0\tREADY\t2\t-");
  CHECK(to_line(abort_rec) == "7\tABORT\t-\t-");
  CHECK(format_trace({dispatch, ready}) == "10\tDISPATCH\t3\t1\n0\tREADY\t2\t-\n");
}

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ahr/engine.hpp"
#include "ahr/interp.hpp"
#include "ahr/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAbort = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCheckMismatch = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct RunArgs {
  std::string file;
  int processors = ahr::kDefaultProcessors;
  std::string cost_model_path;
  std::string trace_path;
  std::string metrics_format;
  bool check = false;
  size_t cells = ahr::kDefaultCellCapacity;
  size_t nodes = ahr::kDefaultNodeCapacity;
  size_t fifo_cap = 0;
};

struct SweepArgs {
  std::string file;
  std::vector<int> procs;
  std::string cost_model_path;
  std::string out_path;
  size_t cells = ahr::kDefaultCellCapacity;
  size_t nodes = ahr::kDefaultNodeCapacity;
  size_t fifo_cap = 0;
};

ahr::CostModel load_cost_model(const std::string& path) {
  if (path.empty()) return ahr::CostModel::defaults();
  return ahr::CostModel::load_file(path);
}

int do_run(const RunArgs& a) {
  std::string source = slurp(a.file);
  ahr::CostModel cm = load_cost_model(a.cost_model_path);
  ahr::Capacities caps;
  caps.cells = a.cells;
  caps.nodes = a.nodes;
  caps.fifo = a.fifo_cap;

  bool tracing = !a.trace_path.empty();
  ahr::RunReport report = ahr::run_program(source, a.processors, cm, caps, tracing);

  if (tracing) write_text(a.trace_path, ahr::format_trace(report.trace));

  if (a.check) {
    ahr::InterpRun oracle = ahr::run_interpreter(source, a.cells, caps.max_expansions);
    bool same = report.aborted()
                    ? (oracle.error && *oracle.error == *report.error)
                    : (oracle.value_text && *oracle.value_text == report.value_text);
    if (!same) {
      std::cerr << "check: simulator and oracle disagree on " << a.file << "\n";
      return kExitCheckMismatch;
    }
  }

  if (!report.aborted()) std::cout << report.value_text << "\n";
  if (!a.metrics_format.empty()) {
    auto fmt = a.metrics_format == "json" ? ahr::ReportFormat::Json : ahr::ReportFormat::Csv;
    std::cout << ahr::format_metrics(report, fmt);
  }

  if (report.aborted()) {
    std::cerr << "abort: " << ahr::to_string(*report.error) << " at cycle "
              << report.abort_cycle << "\n";
    return kExitAbort;
  }
  return kExitOk;
}

int do_sweep(const SweepArgs& a) {
  std::string source = slurp(a.file);
  ahr::CostModel cm = load_cost_model(a.cost_model_path);
  ahr::Capacities caps;
  caps.cells = a.cells;
  caps.nodes = a.nodes;
  caps.fifo = a.fifo_cap;

  std::set<int> procs(a.procs.begin(), a.procs.end());
  if (procs.empty()) throw UsageError("--procs needs at least one value");
  for (int p : procs) {
    if (p < ahr::kMinProcessors || p > ahr::kMaxProcessors) {
      throw UsageError("processor count " + std::to_string(p) + " out of range");
    }
  }

  std::vector<std::pair<int, std::future<ahr::RunReport>>> jobs;
  for (int p : procs) {
    jobs.emplace_back(p, std::async(std::launch::async, [&, p] {
                        return ahr::run_program(source, p, cm, caps, false);
                      }));
  }

  std::vector<ahr::SweepRow> rows;
  for (auto& [p, fut] : jobs) rows.push_back(ahr::SweepRow{p, fut.get()});

  for (const ahr::SweepRow& row : rows) {
    if (row.report.aborted()) {
      std::cerr << "abort: " << ahr::to_string(*row.report.error) << " at cycle "
                << row.report.abort_cycle << " (p=" << row.processors << ")\n";
      return kExitAbort;
    }
  }

  ahr::Cycle base = 0;
  if (procs.count(1)) {
    for (const auto& row : rows) {
      if (row.processors == 1) base = row.report.metrics.makespan;
    }
  } else {
    base = ahr::run_program(source, 1, cm, caps, false).metrics.makespan;
  }

  std::string csv = ahr::format_sweep_csv(rows, base);
  if (a.out_path.empty()) {
    std::cout << csv;
  } else {
    write_text(a.out_path, csv);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator of the AHR parallel LISP machine"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Simulate one program and print its value");
  run->add_option("file", run_args.file, "program file")->required();
  run->add_option("-p,--processors", run_args.processors, "processor count (1..64)");
  run->add_option("--cost-model", run_args.cost_model_path, "cycle cost table file");
  run->add_option("--trace", run_args.trace_path, "write the event trace here");
  run->add_option("--metrics", run_args.metrics_format, "print metrics in this format")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_flag("--check", run_args.check, "also run the reference evaluator and compare");
  run->add_option("--cells", run_args.cells, "passive memory capacity in cells");
  run->add_option("--nodes", run_args.nodes, "active memory capacity in nodes");
  run->add_option("--fifo-cap", run_args.fifo_cap, "ready FIFO capacity (0 = unbounded)");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Simulate across processor counts, emit CSV");
  sweep->add_option("file", sweep_args.file, "program file")->required();
  sweep->add_option("--procs", sweep_args.procs, "processor counts")
      ->required()
      ->delimiter(',');
  sweep->add_option("--cost-model", sweep_args.cost_model_path, "cycle cost table file");
  sweep->add_option("--out", sweep_args.out_path, "write the CSV here instead of stdout");
  sweep->add_option("--cells", sweep_args.cells, "passive memory capacity in cells");
  sweep->add_option("--nodes", sweep_args.nodes, "active memory capacity in nodes");
  sweep->add_option("--fifo-cap", sweep_args.fifo_cap, "ready FIFO capacity (0 = unbounded)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return do_run(run_args);
    return do_sweep(sweep_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ahr::LexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ahr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ahr::BuildError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

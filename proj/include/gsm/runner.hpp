#ifndef GSM_RUNNER_HPP
#define GSM_RUNNER_HPP

#include <gsm/dsl.hpp>
#include <gsm/json_report.hpp>

#include <cstdint>
#include <string>

namespace gsm {

struct RunOptions {
  std::string task_filter;  // empty: every task
  std::uint64_t seed = 0;
  Index max_dim = 256;      // largest algebra a task may build
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  Json report;
  int exit_code = kExitPass;
};

/// Builds every declaration in order, then runs the tasks. Validation failures
/// are recorded in the report (exit 1); names that only resolve against built
/// structures (morphisms, basis elements, points) exit 2 when missing.
RunResult run(const dsl::Document& doc, const RunOptions& options = {});

/// Parses and runs; parse errors become a report with exit code 2.
RunResult run_text(const std::string& text, const RunOptions& options = {});

}  // namespace gsm

#endif  // GSM_RUNNER_HPP

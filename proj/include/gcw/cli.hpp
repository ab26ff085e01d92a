#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcw/code.hpp"
#include "gcw/graphgroup.hpp"
#include "json.hpp"

namespace gcw {

using Report = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "gcw-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct JobSpec {
  std::string command;  // analyze, symmetry, classify, quotient, elusive, construct, verify-paper
  std::string code;     // catalog:NAME | construction:EXPR | file:PATH
  std::string graph;    // host spec; required for file: codes
  std::string group;    // builtin:NAME | file:PATH
  std::string normal;   // quotient: generators of N, same syntax as group
  std::string alpha;    // quotient: base vertex label
  int s = -1;           // -1: command default
  std::string only;     // verify-paper filter
  std::string format = "text";  // text | json
  std::string output;   // report or codeword file
  std::uint64_t budget = 10'000'000;  // ambient elements for brute-force Aut
  int threads = 1;

  // Canonical argument list: command first, then options in a fixed order,
  // defaults omitted. parse_job(format_args()) reproduces the job.
  std::vector<std::string> format_args() const;
  std::string str() const;
  bool operator==(const JobSpec&) const = default;
};

// UsageError on unknown commands or options.
JobSpec parse_job(const std::vector<std::string>& args);

Code load_code(const std::string& source, const std::string& graph);
GraphGroup load_group(const std::string& source, const Code& c);

// Each returns the report body; timing is added by run_job.
Report cmd_analyze(const JobSpec& job);
Report cmd_symmetry(const JobSpec& job);
Report cmd_classify(const JobSpec& job);
Report cmd_quotient(const JobSpec& job);
Report cmd_elusive(const JobSpec& job);
Report cmd_construct(const JobSpec& job);
Report cmd_verify_paper(const JobSpec& job, std::ostream* log);

// Human-readable rendering: one "key: value" line per leaf.
std::string render_text(const Report& r);

// Runs a job and writes the report; returns the exit code
// (0 ok, 1 failure, 2 usage, 3 precondition with witness).
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcw

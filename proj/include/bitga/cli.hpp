#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bitga/boolean_function.hpp"
#include "bitga/cartan.hpp"
#include "bitga/deutsch_jozsa.hpp"

namespace bitga::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxRunInputs = 20;
inline constexpr int kMaxMatrixInputs = 3;
inline constexpr int kMaxSweepAllInputs = 3;
inline constexpr int kMaxBenchFullInputs = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Function specs: "const0", "const1", "parity", "table:<bits>",
// "file:<path>", or a bare path to a truth-table file. Tables must hold
// exactly 2^n characters.
BooleanFunction parse_function_spec(const std::string& spec, int n);

// Truth-table file: '#' comment lines and blank lines, then one line of
// 2^n '0'/'1' characters.
BooleanFunction read_truth_table(std::istream& in, int n);

// "pauli" / "cartan" / empty for the default.
RepKind parse_rep(const std::optional<std::string>& rep, int m);

struct RunReport {
  int n = 0;
  int m = 0;
  std::int64_t N = 0;
  RepKind rep = RepKind::CartanGeneral;
  PipelineMode mode = PipelineMode::ScalarOnly;
  double scalar = 0.0;
  double trace_value = 0.0;
  Classification classification = Classification::Neither;
  int sign = 0;
  std::optional<double> quantum_amplitude;
  std::optional<bool> ga_quantum_agreement;
  std::int64_t wall_time_ns = 0;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

RunReport make_report(const BooleanFunction& f, RepKind rep, PipelineMode mode,
                      bool cross_check);

struct RunOptions {
  int n = 1;
  std::string function = "const0";
  std::optional<std::string> rep;
  PipelineMode mode = PipelineMode::ScalarOnly;
  bool show_matrix = false;
  bool json = false;
  bool cross_check = false;
};
int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

struct SweepOptions {
  int n = 1;
  bool all = false;
  bool promise = false;
  int samples = 16;  // balanced functions drawn in --promise mode
  std::uint64_t seed = 0;
  bool json = false;
  unsigned threads = 0;  // 0: hardware concurrency
};
struct SweepSummary {
  std::size_t total = 0;
  std::size_t constant = 0;
  std::size_t balanced = 0;
  std::size_t neither = 0;
  std::size_t disagreements = 0;
};
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err,
              SweepSummary* summary = nullptr);

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};
struct VerifyReport {
  std::vector<CheckTally> checks;
  bool ok() const;
};
// Randomized algebra checks: sign oracle, associativity, anticommutation,
// reverse-by-products, reverse anti-automorphism, Cartan homomorphism.
VerifyReport run_verification(int m, std::size_t trials, std::uint64_t seed);

struct VerifyOptions {
  int m = 8;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  bool json = false;
};
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  int n = 10;
  std::string mode = "scalar-only";  // or "full"
  std::string function = "parity";
  bool json = false;
};
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace bitga::cli

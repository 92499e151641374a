#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include "bitga/cli.hpp"
#include "bitga/quantum_ref.hpp"
#include "json_number.hpp"

namespace bitga::cli {

namespace {

constexpr double kAgreementTolerance = 1e-9;

struct SweepRecord {
  std::size_t index = 0;
  BooleanFunction f;
  DjResult result;
  double quantum = 0.0;
  std::optional<double> matrix_trace;
  bool agrees = false;
};

SweepRecord evaluate(std::size_t index, BooleanFunction f) {
  SweepRecord rec;
  rec.index = index;
  rec.result = run(f);
  rec.quantum = quantum::dj_reference(f);
  bool agrees = std::abs(rec.quantum - std::ldexp(rec.result.scalar,
                                                  -rec.result.n)) <=
                kAgreementTolerance;
  if (rec.result.n + 1 <= kMaxCartanGenerators) {
    rec.matrix_trace = trace_projection(matrix_pipeline(f, rec.result.rep));
    agrees = agrees &&
             std::abs(*rec.matrix_trace - rec.result.trace_value) <=
                 kAgreementTolerance;
  }
  rec.agrees = agrees;
  rec.f = std::move(f);
  return rec;
}

std::vector<BooleanFunction> promise_family(int n, int samples,
                                            std::uint64_t seed) {
  std::vector<BooleanFunction> family;
  family.push_back(BooleanFunction::constant(n, false));
  family.push_back(BooleanFunction::constant(n, true));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    family.push_back(BooleanFunction::random_balanced(n, rng));
  }
  return family;
}

std::vector<BooleanFunction> full_family(int n) {
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  std::vector<BooleanFunction> family;
  family.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    family.push_back(BooleanFunction::from_index(n, i));
  }
  return family;
}

// Records land in their own slot, so output order is the function index
// regardless of which worker finished first.
std::vector<SweepRecord> evaluate_all(std::vector<BooleanFunction> family,
                                      unsigned threads) {
  std::vector<SweepRecord> records(family.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < family.size(); i = next++) {
      records[i] = evaluate(i, std::move(family[i]));
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, family.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return records;
}

}  // namespace

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err,
              SweepSummary* summary_out) {
  std::vector<BooleanFunction> family;
  try {
    if (opts.all == opts.promise) {
      throw UsageError("sweep needs exactly one of --all or --promise");
    }
    if (opts.n < 1 || opts.n > kMaxRunInputs) {
      throw UsageError("--n must be in [1, " + std::to_string(kMaxRunInputs) +
                       "]");
    }
    if (opts.all && opts.n > kMaxSweepAllInputs) {
      throw UsageError("--all enumerates 2^(2^n) functions; needs n <= " +
                       std::to_string(kMaxSweepAllInputs));
    }
    if (opts.samples < 0) throw UsageError("--samples must be >= 0");
    family = opts.all ? full_family(opts.n)
                      : promise_family(opts.n, opts.samples, opts.seed);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::vector<SweepRecord> records =
      evaluate_all(std::move(family), opts.threads);

  SweepSummary summary;
  for (const SweepRecord& rec : records) {
    ++summary.total;
    switch (rec.result.classification) {
      case Classification::Constant:
        ++summary.constant;
        break;
      case Classification::Balanced:
        ++summary.balanced;
        break;
      case Classification::Neither:
        ++summary.neither;
        break;
    }
    if (!rec.agrees) ++summary.disagreements;

    if (opts.json) {
      nlohmann::json j;
      j["index"] = rec.index;
      j["table"] = rec.f.str();
      j["scalar"] = json_number(rec.result.scalar);
      j["trace_value"] = json_number(rec.result.trace_value);
      j["N"] = rec.result.N;
      j["classification"] = std::string(to_string(rec.result.classification));
      j["sign"] = rec.result.sign;
      j["quantum_amplitude"] = json_number(rec.quantum);
      j["matrix_trace_value"] =
          rec.matrix_trace ? json_number(*rec.matrix_trace) : nlohmann::json(nullptr);
      j["agreement"] = rec.agrees;
      out << j.dump() << '\n';
    } else {
      out << rec.index << ' ' << rec.f.str() << ' '
          << to_string(rec.result.classification) << " scalar="
          << json_number(rec.result.scalar).dump()
          << " trace=" << json_number(rec.result.trace_value).dump()
          << " quantum=" << json_number(rec.quantum).dump()
          << (rec.agrees ? " agree" : " DISAGREE") << '\n';
    }
  }

  if (opts.json) {
    nlohmann::json j;
    j["summary"] = {{"total", summary.total},
                    {"constant", summary.constant},
                    {"balanced", summary.balanced},
                    {"neither", summary.neither},
                    {"disagreements", summary.disagreements}};
    out << j.dump() << '\n';
  } else {
    out << "total=" << summary.total << " constant=" << summary.constant
        << " balanced=" << summary.balanced << " neither=" << summary.neither
        << " disagreements=" << summary.disagreements << '\n';
  }
  if (summary_out != nullptr) *summary_out = summary;
  return summary.disagreements == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace bitga::cli

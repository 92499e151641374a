#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "bitga/cli.hpp"
#include "bitga/quantum_ref.hpp"
#include "json_number.hpp"

namespace bitga::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Stage {
  std::string name;
  std::int64_t nanos = 0;
  std::uint64_t pairings = 0;  // blade products evaluated, 0 if not applicable
};

template <typename Fn>
auto timed(std::vector<Stage>& stages, std::string name, std::uint64_t pairings,
           Fn&& fn) {
  const auto start = Clock::now();
  auto value = fn();
  const auto stop = Clock::now();
  stages.push_back(
      {std::move(name),
       std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(),
       pairings});
  return value;
}

}  // namespace

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  const bool full = opts.mode == "full";
  BooleanFunction f;
  try {
    if (opts.mode != "scalar-only" && opts.mode != "full") {
      throw UsageError("--mode must be scalar-only or full");
    }
    if (full && opts.n > kMaxBenchFullInputs) {
      throw UsageError("--mode full needs n <= " +
                       std::to_string(kMaxBenchFullInputs));
    }
    f = parse_function_spec(opts.function, opts.n);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const int n = opts.n;
  const std::uint64_t blades = std::uint64_t{1} << (n + 1);
  std::vector<Stage> stages;

  const Multivector spread = timed(stages, "superposition", 0, [&] {
    return build_superposition(n);
  });
  const Multivector seeded = timed(stages, "seed-product", blades, [&] {
    return geometric_product(spread, Multivector::from_blade(seed_blade(n)));
  });
  const Multivector z = timed(stages, "oracle", 0, [&] {
    return apply_oracle(f, seeded);
  });
  const Multivector reversal = timed(stages, "reversal-operator", 0, [&] {
    return build_reversal_operator(n);
  });
  const double fast = timed(stages, "scalar-only", std::min(reversal.size(), z.size()),
                            [&] { return scalar_of_product(reversal, z); });
  std::optional<double> slow;
  if (full) {
    slow = timed(stages, "full-product",
                 static_cast<std::uint64_t>(reversal.size()) * z.size(),
                 [&] { return scalar_part(geometric_product(reversal, z)); });
  }
  const double amplitude = timed(stages, "quantum-ref", 0,
                                 [&] { return quantum::dj_reference(f); });

  const double expected = static_cast<double>(f.signed_sum());
  const bool modes_agree = !slow || *slow == fast;
  const bool quantum_agrees =
      std::abs(amplitude - std::ldexp(fast, -n)) <= 1e-9;
  const bool ok = modes_agree && quantum_agrees && fast == expected;

  if (opts.json) {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = n + 1;
    j["mode"] = opts.mode;
    j["scalar"] = json_number(fast);
    j["full_scalar"] = slow ? json_number(*slow) : nlohmann::json(nullptr);
    j["quantum_amplitude"] = json_number(amplitude);
    j["ok"] = ok;
    for (const Stage& s : stages) {
      j["stages"].push_back(
          {{"stage", s.name}, {"time_ns", s.nanos}, {"pairings", s.pairings}});
    }
    out << j.dump() << '\n';
  } else {
    out << "bench n=" << n << " (m=" << n + 1 << ") mode=" << opts.mode
        << " f=" << opts.function << '\n';
    out << std::left << std::setw(20) << "stage" << std::right << std::setw(14)
        << "time_us" << std::setw(16) << "pairings" << '\n';
    for (const Stage& s : stages) {
      out << std::left << std::setw(20) << s.name << std::right << std::setw(14)
          << std::fixed << std::setprecision(1)
          << static_cast<double>(s.nanos) / 1000.0 << std::setw(16);
      if (s.pairings > 0) {
        out << s.pairings;
      } else {
        out << "-";
      }
      out << '\n';
    }
    out << "scalar=" << json_number(fast).dump();
    if (slow) out << " full_scalar=" << json_number(*slow).dump();
    out << " quantum=" << json_number(amplitude).dump()
        << (ok ? " ok" : " MISMATCH") << '\n';
  }
  if (!ok) err << "error: pipeline modes disagree\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace bitga::cli

// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bitga/cli.hpp"
#include "bitga/deutsch_jozsa.hpp"
#include "bitga/quantum_ref.hpp"

using namespace bitga;

namespace {

using Clock = std::chrono::steady_clock;
using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long long brute_force_sum(const BooleanFunction& f) {
  long long sum = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) sum += f(x) ? -1 : 1;
  return sum;
}

ComplexMatrix mat2(cd a, cd b, cd c, cd d) {
  ComplexMatrix M(2, 2);
  M << a, b, c, d;
  return M;
}

std::vector<BooleanFunction> all_functions(int n) {
  std::vector<BooleanFunction> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << (1U << n)); ++i) {
    out.push_back(BooleanFunction::from_index(n, i));
  }
  return out;
}

Outcome golden_two_bit() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::pair<const char*, double>> cases{
      {"00", 4.0}, {"11", -4.0}, {"01", 0.0}, {"10", 0.0}};
  std::vector<double> got;
  for (const auto& [table, expected] : cases) {
    got.push_back(run(BooleanFunction::parse(table), RepKind::PauliPlane).trace_value);
  }
  const double elapsed = seconds_since(start);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    o.require(got[i] == cases[i].second,
              std::string("f=") + cases[i].first + " trace " + std::to_string(got[i]));
  }
  o.require(elapsed < 1e-3, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "traces 4 -4 0 0 in " + std::to_string(elapsed * 1e6) + " us";
  return o;
}

Outcome golden_three_bit() {
  Outcome o;
  const DjResult c0 = run(BooleanFunction::constant(2, false), RepKind::PauliSpace);
  const DjResult c1 = run(BooleanFunction::constant(2, true), RepKind::PauliSpace);
  const DjResult bal = run(BooleanFunction::parse("0101"), RepKind::PauliSpace);
  o.require(c0.trace_value == 8.0, "f=0 trace " + std::to_string(c0.trace_value));
  o.require(c1.trace_value == -8.0, "f=1 trace " + std::to_string(c1.trace_value));
  o.require(bal.trace_value == 0.0, "balanced trace " + std::to_string(bal.trace_value));
  o.require(c0.N == 2 && c1.N == 2 && bal.N == 2, "N != 2");
  if (o.pass) o.detail = "traces 8 -8 0 with N = 2";
  return o;
}

Outcome golden_matrices() {
  Outcome o;
  const Multivector e2 = build_superposition(1);
  const Multivector e3 = build_superposition(2);
  const Multivector seed2 = Multivector::from_blade(seed_blade(1));
  const Multivector seed3 = Multivector::from_blade(seed_blade(2));
  const struct {
    const char* name;
    ComplexMatrix got;
    ComplexMatrix expected;
  } cases[] = {
      {"E2", represent(e2, RepKind::PauliPlane),
       mat2(1.0 + I, 1.0 - I, 1.0 + I, 1.0 - I)},
      {"F2", represent(build_reversal_operator(1), RepKind::PauliPlane),
       mat2(1, 1, 1, 1)},
      {"E3", represent(e3, RepKind::PauliSpace), 2.0 * mat2(1.0 + I, 0, 1.0 + I, 0)},
      {"F3", represent(build_reversal_operator(2), RepKind::PauliSpace),
       mat2(1.0 - I, 1.0 - I, 1.0 + I, 1.0 + I)},
      {"E2e10", represent(e2 * seed2, RepKind::PauliPlane),
       mat2(1.0 - I, 1.0 + I, 1.0 - I, 1.0 + I)},
      {"E3e010", represent(e3 * seed3, RepKind::PauliSpace),
       2.0 * mat2(0, 1.0 - I, 0, 1.0 - I)},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const double err = (c.got - c.expected).cwiseAbs().maxCoeff();
    worst = std::max(worst, err);
    o.require(err <= 1e-12, std::string(c.name) + " off by " + std::to_string(err));
  }
  if (o.pass) {
    std::ostringstream os;
    os << "6 matrices, max error " << worst;
    o.detail = os.str();
  }
  return o;
}

Outcome closed_form() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(20240501);
  std::size_t checked = 0;
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto f = BooleanFunction::random(n, rng);
      const double scalar = run(f).scalar;
      o.require(scalar == static_cast<double>(brute_force_sum(f)),
                "n=" + std::to_string(n) + " table " + f.str());
      ++checked;
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(checked) + " functions exact in " +
               std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome promise_dichotomy() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t total = 0, misclassified = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : all_functions(n)) {
      ++total;
      const DjResult r = run(f);
      std::size_t ones = 0;
      for (std::uint64_t x = 0; x < f.size(); ++x) ones += f(x);
      const bool constant = ones == 0 || ones == f.size();
      const bool balanced = 2 * ones == f.size();
      bool ok = (r.classification == Classification::Constant) == constant &&
                (r.classification == Classification::Balanced) == balanced;
      if (constant) ok = ok && r.sign == (f(0) ? -1 : 1);
      if (!ok) ++misclassified;
    }
  }
  const double elapsed = seconds_since(start);
  o.require(total == 276, "enumerated " + std::to_string(total));
  o.require(misclassified == 0, std::to_string(misclassified) + " misclassified");
  o.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = "276 functions, 0 misclassified in " + std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome backend_triangle() {
  Outcome o;
  double worst_quantum = 0.0, worst_matrix = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : all_functions(n)) {
      const DjResult r = run(f);
      const double q = quantum::dj_reference(f);
      const double dq = std::abs(std::ldexp(r.scalar, -n) - q);
      const double dm =
          std::abs(trace_projection(matrix_pipeline(f, r.rep)) -
                   static_cast<double>(r.N) * r.scalar);
      worst_quantum = std::max(worst_quantum, dq);
      worst_matrix = std::max(worst_matrix, dm);
      o.require(dq <= 1e-9, "quantum mismatch on " + f.str());
      o.require(dm <= 1e-9, "matrix mismatch on " + f.str());
    }
  }
  if (o.pass) {
    std::ostringstream os;
    os << "max |GA - quantum| " << worst_quantum << ", max |GA - matrix| "
       << worst_matrix;
    o.detail = os.str();
  }
  return o;
}

Outcome algebra_properties() {
  Outcome o;
  const auto start = Clock::now();
  const cli::VerifyReport report = cli::run_verification(12, 10000, 7);
  const double elapsed = seconds_since(start);
  std::size_t failures = 0;
  for (const auto& c : report.checks) {
    failures += c.failed;
    o.require(c.passed == 10000 && c.failed == 0,
              c.name + " failed " + std::to_string(c.failed));
  }
  o.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(report.checks.size()) + " checks x 10^4, 0 failures in " +
               std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome order_caveat() {
  Outcome o;
  const auto f = BooleanFunction::parse("01");
  const Blade a = Blade::parse("e_10", 2);
  const Multivector F = build_reversal_operator(1);
  const Multivector ea = Multivector::from_blade(a);
  const Multivector oracle_first = F * apply_oracle(f, ea);
  const Multivector oracle_last = apply_oracle(f, F * ea);
  o.require(oracle_first ==
                F * (ea * Multivector::from_blade(oracle_factor(f, a))),
            "oracle is not the blade-wise right factor");
  o.require(oracle_first != oracle_last, "no inequality on witness");
  if (o.pass) {
    o.detail = "f=01, " + a.str() + ": F(E_f e) = " + oracle_first.str() +
               " but E_f(F e) = " + oracle_last.str();
  }
  return o;
}

Outcome fast_path() {
  Outcome o;
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 10; ++n) {
    std::vector<BooleanFunction> fs{BooleanFunction::constant(n, false),
                                    BooleanFunction::constant(n, true),
                                    BooleanFunction::random_balanced(n, rng)};
    for (int k = 0; k < 3; ++k) fs.push_back(BooleanFunction::random(n, rng));
    for (const auto& f : fs) {
      o.require(run(f, PipelineMode::ScalarOnly).scalar ==
                    run(f, PipelineMode::FullProduct).scalar,
                "mode mismatch at n=" + std::to_string(n));
    }
  }
  const auto f20 = BooleanFunction::random_balanced(20, rng);
  const auto start = Clock::now();
  const DjResult r = run(f20, PipelineMode::ScalarOnly);
  const double elapsed = seconds_since(start);
  o.require(r.classification == Classification::Balanced, "n=20 not balanced");
  o.require(elapsed < 5.0, "n=20 took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = "modes equal for n<=10; n=20 scalar-only in " +
               std::to_string(elapsed) + " s";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 golden two-bit traces", golden_two_bit},
      {"AC2 golden three-bit traces", golden_three_bit},
      {"AC3 golden matrices", golden_matrices},
      {"AC4 closed-form property", closed_form},
      {"AC5 exhaustive promise dichotomy", promise_dichotomy},
      {"AC6 backend triangle", backend_triangle},
      {"AC7 algebra property suite", algebra_properties},
      {"AC8 order-caveat witness", order_caveat},
      {"AC9 fast-path equivalence and performance", fast_path},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "bitga/cli.hpp"
#include "bitga/quantum_ref.hpp"
#include "json_number.hpp"

namespace bitga::cli {

namespace {

constexpr double kCrossCheckTolerance = 1e-9;

std::string format_number(double v) { return json_number(v).dump(); }

std::string_view to_string(PipelineMode mode) {
  return mode == PipelineMode::ScalarOnly ? "scalar-only" : "full";
}

nlohmann::json matrix_json(const ComplexMatrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      row.push_back({json_number(M(r, c).real()), json_number(M(r, c).imag())});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["m"] = m;
  j["N"] = N;
  j["rep_kind"] = std::string(bitga::to_string(rep));
  j["mode"] = std::string(cli::to_string(mode));
  j["scalar"] = json_number(scalar);
  j["trace_value"] = json_number(trace_value);
  j["classification"] = std::string(bitga::to_string(classification));
  j["sign"] = sign;
  j["quantum_amplitude"] =
      quantum_amplitude ? nlohmann::json(json_number(*quantum_amplitude)) : nullptr;
  j["ga_quantum_agreement"] =
      ga_quantum_agreement ? nlohmann::json(*ga_quantum_agreement) : nullptr;
  j["wall_time_ns"] = wall_time_ns;
  return j;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "n              " << n << " input bits (m = " << m << " generators)\n"
     << "representation " << bitga::to_string(rep) << " (N = " << N << ")\n"
     << "mode           " << cli::to_string(mode) << '\n'
     << "scalar         " << format_number(scalar) << '\n'
     << "trace_value    " << format_number(trace_value) << '\n'
     << "classification " << bitga::to_string(classification);
  if (classification == Classification::Constant) {
    os << " (sign " << (sign > 0 ? "+1" : "-1") << ")";
  }
  os << '\n';
  if (ga_quantum_agreement) {
    os << "quantum        " << format_number(*quantum_amplitude)
       << (*ga_quantum_agreement ? " (agrees)" : " (DISAGREES)") << '\n';
  }
  os << "wall_time_ns   " << wall_time_ns << '\n';
  return os.str();
}

RunReport make_report(const BooleanFunction& f, RepKind rep, PipelineMode mode,
                      bool cross_check) {
  const auto start = std::chrono::steady_clock::now();
  const DjResult result = run(f, rep, mode);
  const auto stop = std::chrono::steady_clock::now();

  RunReport report;
  report.n = result.n;
  report.m = result.n + 1;
  report.N = result.N;
  report.rep = result.rep;
  report.mode = mode;
  report.scalar = result.scalar;
  report.trace_value = result.trace_value;
  report.classification = result.classification;
  report.sign = result.sign;
  report.wall_time_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  if (cross_check) {
    const double amplitude = quantum::dj_reference(f);
    report.quantum_amplitude = amplitude;
    report.ga_quantum_agreement =
        std::abs(amplitude - std::ldexp(result.scalar, -result.n)) <=
        kCrossCheckTolerance;
  }
  return report;
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const BooleanFunction f = parse_function_spec(opts.function, opts.n);
    const RepKind rep = parse_rep(opts.rep, opts.n + 1);
    if (opts.show_matrix && opts.n > kMaxMatrixInputs) {
      throw UsageError("--show-matrix needs n <= " +
                       std::to_string(kMaxMatrixInputs));
    }
    const RunReport report = make_report(f, rep, opts.mode, opts.cross_check);

    std::optional<ComplexMatrix> matrix;
    if (opts.show_matrix) matrix = matrix_pipeline(f, rep);

    if (opts.json) {
      nlohmann::json j = report.to_json();
      if (matrix) {
        j["matrix"] = matrix_json(*matrix);
        j["matrix_trace_value"] = json_number(trace_projection(*matrix));
      }
      out << j.dump() << '\n';
    } else {
      out << report.to_text();
      if (matrix) {
        out << "matrix F E_f E e_seed:\n"
            << format_matrix(*matrix) << "Re Tr          "
            << format_number(trace_projection(*matrix)) << '\n';
      }
    }
    if (report.ga_quantum_agreement && !*report.ga_quantum_agreement) {
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace bitga::cli

#include <fstream>
#include <istream>
#include <string>

#include "bitga/cli.hpp"

namespace bitga::cli {

namespace {

void require_run_inputs(int n) {
  if (n < 1 || n > kMaxRunInputs) {
    throw UsageError("--n must be in [1, " + std::to_string(kMaxRunInputs) +
                     "], got " + std::to_string(n));
  }
}

BooleanFunction table_for(std::string_view bits, int n) {
  const std::size_t expected = std::size_t{1} << n;
  if (bits.size() != expected) {
    throw UsageError("truth table has " + std::to_string(bits.size()) +
                     " entries, n = " + std::to_string(n) + " needs " +
                     std::to_string(expected));
  }
  try {
    return BooleanFunction::parse(bits);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

BooleanFunction read_truth_table(std::istream& in, int n) {
  std::string line;
  std::optional<std::string> table;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (table) throw UsageError("truth-table file has more than one table line");
    table = std::string(body);
  }
  if (!table) throw UsageError("truth-table file has no table line");
  return table_for(*table, n);
}

BooleanFunction parse_function_spec(const std::string& spec, int n) {
  require_run_inputs(n);
  if (spec == "const0") return BooleanFunction::constant(n, false);
  if (spec == "const1") return BooleanFunction::constant(n, true);
  if (spec == "parity") return BooleanFunction::parity(n);
  if (spec.starts_with("table:")) {
    return table_for(std::string_view(spec).substr(6), n);
  }
  const std::string path = spec.starts_with("file:") ? spec.substr(5) : spec;
  std::ifstream in(path);
  if (!in) {
    throw UsageError("unknown function '" + spec +
                     "' (expected const0, const1, parity, table:<bits> or a "
                     "readable file)");
  }
  return read_truth_table(in, n);
}

RepKind parse_rep(const std::optional<std::string>& rep, int m) {
  RepKind kind = default_rep_kind(m);
  if (rep) {
    if (*rep == "pauli") {
      if (m == 2) {
        kind = RepKind::PauliPlane;
      } else if (m == 3) {
        kind = RepKind::PauliSpace;
      } else {
        throw UsageError("--rep pauli needs n in {1, 2} (2 or 3 generators)");
      }
    } else if (*rep == "cartan") {
      kind = RepKind::CartanGeneral;
    } else {
      throw UsageError("--rep must be pauli or cartan, got '" + *rep + "'");
    }
  }
  return kind;
}

}  // namespace bitga::cli

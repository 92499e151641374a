#include "bitga/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bitga {

namespace {

void require_inputs(int n, int max) {
  if (n < 0 || n > max) {
    throw std::invalid_argument("input bit count " + std::to_string(n) +
                                " outside [0, " + std::to_string(max) + "]");
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)) {
  require_inputs(n, kMaxInputs);
  if (table_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("truth table needs 2^" + std::to_string(n) +
                                " entries, got " +
                                std::to_string(table_.size()));
  }
  for (std::uint8_t v : table_) {
    if (v > 1) throw std::invalid_argument("truth table entries must be 0/1");
  }
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  require_inputs(n, kMaxInputs);
  return {n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0)};
}

BooleanFunction BooleanFunction::parity(int n) {
  require_inputs(n, kMaxInputs);
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) {
    table[x] = static_cast<std::uint8_t>(std::popcount(x) & 1);
  }
  return {n, std::move(table)};
}

BooleanFunction BooleanFunction::from_index(int n, std::uint64_t index) {
  require_inputs(n, 5);
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::size_t x = 0; x < table.size(); ++x) {
    table[x] = static_cast<std::uint8_t>((index >> x) & 1U);
  }
  return {n, std::move(table)};
}

BooleanFunction BooleanFunction::random_balanced(int n, std::mt19937_64& rng) {
  require_inputs(n, kMaxInputs);
  if (n == 0) throw std::invalid_argument("no balanced function on 0 inputs");
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  std::fill(table.begin(), table.begin() + table.size() / 2, 1);
  std::shuffle(table.begin(), table.end(), rng);
  return {n, std::move(table)};
}

BooleanFunction BooleanFunction::random(int n, std::mt19937_64& rng) {
  require_inputs(n, kMaxInputs);
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  std::bernoulli_distribution coin(0.5);
  for (auto& v : table) v = coin(rng) ? 1 : 0;
  return {n, std::move(table)};
}

BooleanFunction BooleanFunction::parse(std::string_view bits) {
  if (bits.empty() || !std::has_single_bit(bits.size())) {
    throw std::invalid_argument("truth table length " +
                                std::to_string(bits.size()) +
                                " is not a power of two");
  }
  std::vector<std::uint8_t> table;
  table.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string("truth table character '") + c +
                                  "' is not 0 or 1");
    }
    table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  const int n = std::countr_zero(bits.size());
  return {n, std::move(table)};
}

std::size_t BooleanFunction::ones() const {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), 1));
}

bool BooleanFunction::is_constant() const {
  const std::size_t k = ones();
  return k == 0 || k == table_.size();
}

bool BooleanFunction::is_balanced() const {
  return table_.size() >= 2 && 2 * ones() == table_.size();
}

long long BooleanFunction::signed_sum() const {
  return static_cast<long long>(table_.size()) -
         2 * static_cast<long long>(ones());
}

std::string BooleanFunction::str() const {
  std::string out;
  out.reserve(table_.size());
  for (std::uint8_t v : table_) out.push_back(static_cast<char>('0' + v));
  return out;
}

}  // namespace bitga

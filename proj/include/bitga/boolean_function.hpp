#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace bitga {

// Truth table of f: {0,1}^n -> {0,1}. Entry x is f at the input whose bits
// A_1...A_n read as a big-endian integer equal x.
class BooleanFunction {
 public:
  inline static constexpr int kMaxInputs = 30;

  BooleanFunction() = default;
  BooleanFunction(int n, std::vector<std::uint8_t> table);

  static BooleanFunction constant(int n, bool value);
  static BooleanFunction parity(int n);
  // Function index i of the 2^{2^n} family: bit x of i is f(x). n <= 5.
  static BooleanFunction from_index(int n, std::uint64_t index);
  // Exactly 2^{n-1} ones at uniformly random inputs.
  static BooleanFunction random_balanced(int n, std::mt19937_64& rng);
  // Each entry an independent fair coin.
  static BooleanFunction random(int n, std::mt19937_64& rng);
  // 2^n characters '0'/'1'; n is inferred from the length.
  static BooleanFunction parse(std::string_view bits);

  int inputs() const { return n_; }
  std::size_t size() const { return table_.size(); }
  bool operator()(std::uint64_t x) const { return table_[x] != 0; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  std::size_t ones() const;
  bool is_constant() const;
  bool is_balanced() const;
  // sum_x (-1)^{f(x)} = 2^n - 2 |f^{-1}(1)|.
  long long signed_sum() const;

  std::string str() const;

  friend bool operator==(const BooleanFunction&,
                         const BooleanFunction&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> table_;
};

}  // namespace bitga

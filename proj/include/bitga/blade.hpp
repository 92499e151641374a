#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bitga {

using Mask = std::uint64_t;

inline constexpr int kMaxGenerators = 63;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Basis blade of the Euclidean algebra on m generators.
//
// Bit convention: generator A_j (1-indexed) lives at machine bit (m - j), so
// A_1 is the most significant bit of the m-bit window and the printed string
// e_{A_1...A_m} reads left to right exactly like the mask in binary.
class Blade {
 public:
  constexpr Blade() = default;

  // Throws std::invalid_argument if m is out of [0, 63] or mask has bits
  // outside the m-bit window.
  Blade(Mask mask, int m);

  static Blade scalar(int m) { return Blade(0, m); }
  // Single generator e_j, 1 <= j <= m.
  static Blade generator(int j, int m);
  // Parses "e_0101" or "1" (the scalar; needs explicit m).
  static Blade parse(std::string_view text, int m);

  constexpr Mask mask() const { return mask_; }
  constexpr int generators() const { return m_; }
  constexpr int grade() const { return std::popcount(mask_); }
  // Whether generator A_j is present.
  constexpr bool has(int j) const { return (mask_ >> (m_ - j)) & 1U; }

  // "e_" followed by the m-character bit string; the scalar prints as "1".
  std::string str() const;

  friend constexpr bool operator==(const Blade&, const Blade&) = default;

 private:
  Mask mask_ = 0;
  int m_ = 0;
};

struct SignedBlade {
  int sign = 1;
  Blade blade;

  SignedBlade operator-() const { return {-sign, blade}; }
  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

// Mask of the m-bit window.
constexpr Mask window(int m) {
  return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1;
}

// Parity of D = sum_{k<l} B_k A_l for the product (left bits A)(right bits B):
// each set bit of the right operand jumps over the left operand's bits that sit
// further right in the string, i.e. at lower machine positions.
constexpr int product_sign(Mask left, Mask right) {
  int jumps = 0;
  for (Mask r = right; r != 0; r &= r - 1) {
    const Mask below = (r & -r) - 1;
    jumps += std::popcount(left & below);
  }
  return (jumps & 1) ? -1 : 1;
}

// (-1)^{k(k-1)/2}: +1 for k mod 4 in {0,1}, -1 for {2,3}.
constexpr int reverse_sign_for_grade(int k) { return (k & 2) ? -1 : 1; }

SignedBlade blade_product(const Blade& a, const Blade& b);

int reverse_sign(const Blade& a);

// Brute-force transposition counter. Expands both blades into ordered
// generator-index lists, bubble-sorts the concatenation, cancels adjacent
// equal pairs, and returns (-1)^swaps. Independent of product_sign; used
// only to check it.
int sign_oracle(const Blade& a, const Blade& b);

}  // namespace bitga

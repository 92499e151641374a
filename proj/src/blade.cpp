#include "bitga/blade.hpp"

#include <algorithm>
#include <vector>

namespace bitga {

Blade::Blade(Mask mask, int m) : mask_(mask), m_(m) {
  if (m < 0 || m > kMaxGenerators) {
    throw std::invalid_argument("generator count " + std::to_string(m) +
                                " outside [0, 63]");
  }
  if ((mask & ~window(m)) != 0) {
    throw std::invalid_argument("blade mask has bits beyond generator " +
                                std::to_string(m));
  }
}

Blade Blade::generator(int j, int m) {
  if (j < 1 || j > m) {
    throw std::invalid_argument("generator index " + std::to_string(j) +
                                " outside [1, " + std::to_string(m) + "]");
  }
  return Blade(Mask{1} << (m - j), m);
}

Blade Blade::parse(std::string_view text, int m) {
  if (text == "1") return scalar(m);
  if (!text.starts_with("e_")) {
    throw std::invalid_argument("blade text must start with e_: " +
                                std::string(text));
  }
  text.remove_prefix(2);
  if (static_cast<int>(text.size()) != m) {
    throw std::invalid_argument("blade string length does not match m");
  }
  Mask mask = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("blade string must be 0/1 characters");
    }
    mask = (mask << 1) | static_cast<Mask>(c - '0');
  }
  return Blade(mask, m);
}

std::string Blade::str() const {
  if (mask_ == 0) return "1";
  std::string out = "e_";
  out.reserve(2 + m_);
  for (int j = 1; j <= m_; ++j) out.push_back(has(j) ? '1' : '0');
  return out;
}

namespace {

void require_same_algebra(const Blade& a, const Blade& b) {
  if (a.generators() != b.generators()) {
    throw DimensionMismatch("blades from algebras with " +
                            std::to_string(a.generators()) + " and " +
                            std::to_string(b.generators()) + " generators");
  }
}

}  // namespace

SignedBlade blade_product(const Blade& a, const Blade& b) {
  require_same_algebra(a, b);
  int sign = product_sign(a.mask(), b.mask());
#ifdef BITGA_INJECT_SIGN_FAULT
  // Mutation build for the verify harness: corrupt bivector-by-bivector signs.
  if (a.grade() >= 2 && b.grade() >= 2) sign = -sign;
#endif
  return {sign, Blade(a.mask() ^ b.mask(), a.generators())};
}

int reverse_sign(const Blade& a) { return reverse_sign_for_grade(a.grade()); }

int sign_oracle(const Blade& a, const Blade& b) {
  require_same_algebra(a, b);
  std::vector<int> word;
  for (int j = 1; j <= a.generators(); ++j) {
    if (a.has(j)) word.push_back(j);
  }
  for (int j = 1; j <= b.generators(); ++j) {
    if (b.has(j)) word.push_back(j);
  }

  // Bubble sort, one adjacent transposition at a time. Whenever two equal
  // neighbours meet they square to +1 and are removed.
  long swaps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size();) {
      if (word[i] == word[i + 1]) {
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i),
                   word.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        if (i > 0) --i;
        continue;
      }
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        ++swaps;
        changed = true;
      }
      ++i;
    }
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace bitga

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bitga/blade.hpp"

namespace bitga {

struct Term {
  Mask mask = 0;
  double coeff = 0.0;

  friend bool operator==(const Term&, const Term&) = default;
};

// Real linear combination of blades over m generators.
//
// Storage is either a mask-sorted list of nonzero terms or, once more than
// half of the 2^m blades are populated, a dense array of 2^m coefficients.
// The switch is automatic and invisible: iteration always visits nonzero
// terms in ascending mask order. Exact zeros are never reported as terms.
class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(int m);

  // Duplicate masks are summed; resulting zeros are dropped.
  static Multivector from_terms(int m, std::vector<Term> terms);
  static Multivector from_blade(const Blade& b, double coeff = 1.0);
  static Multivector from_signed_blade(const SignedBlade& b);
  static Multivector scalar(int m, double value);
  // Takes ownership of a 2^m coefficient array indexed by mask.
  static Multivector from_dense(int m, std::vector<double> coeffs);

  int generators() const { return m_; }
  std::size_t size() const { return nnz_; }
  bool empty() const { return nnz_ == 0; }
  bool is_dense() const { return dense_active_; }

  double coefficient(Mask mask) const;
  std::vector<Term> terms() const;

  template <typename Fn>
  void for_each_term(Fn&& fn) const {
    if (dense_active_) {
      for (std::size_t i = 0; i < dense_.size(); ++i) {
        if (dense_[i] != 0.0) fn(static_cast<Mask>(i), dense_[i]);
      }
    } else {
      for (const Term& t : sparse_) fn(t.mask, t.coeff);
    }
  }

  // "+1·e_00 −1·e_11"; the zero multivector prints as "0".
  std::string str() const;

  friend bool operator==(const Multivector& x, const Multivector& y);

 private:
  void adopt_sparse(std::vector<Term> sorted_nonzero);
  void adopt_dense(std::vector<double> coeffs);

  int m_ = 0;
  std::size_t nnz_ = 0;
  bool dense_active_ = false;
  std::vector<Term> sparse_;
  std::vector<double> dense_;
};

Multivector add(const Multivector& x, const Multivector& y);
Multivector scale(const Multivector& x, double factor);
Multivector geometric_product(const Multivector& x, const Multivector& y);
Multivector reverse(const Multivector& x);
double scalar_part(const Multivector& x);
// Scalar part of x*y without forming the product: only equal masks meet at
// the scalar blade.
double scalar_of_product(const Multivector& x, const Multivector& y);

inline Multivector operator+(const Multivector& x, const Multivector& y) {
  return add(x, y);
}
inline Multivector operator-(const Multivector& x) { return scale(x, -1.0); }
inline Multivector operator-(const Multivector& x, const Multivector& y) {
  return add(x, scale(y, -1.0));
}
inline Multivector operator*(const Multivector& x, const Multivector& y) {
  return geometric_product(x, y);
}
inline Multivector operator*(double s, const Multivector& x) {
  return scale(x, s);
}

}  // namespace bitga

#include "bitga/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bitga {

namespace {

constexpr int kMaxDenseAccumulator = 24;

bool prefers_dense(int m, std::size_t nnz) {
  return m < 63 && 2 * static_cast<Mask>(nnz) > (Mask{1} << m);
}

void require_same_algebra(const Multivector& x, const Multivector& y) {
  if (x.generators() != y.generators()) {
    throw DimensionMismatch("multivectors from algebras with " +
                            std::to_string(x.generators()) + " and " +
                            std::to_string(y.generators()) + " generators");
  }
}

std::vector<Term> merge_sorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mask < b.mask; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mask == t.mask) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0.0; });
  return out;
}

std::string format_coeff(double c) {
  std::ostringstream os;
  if (std::nearbyint(c) == c && std::abs(c) < 1e15) {
    os << static_cast<long long>(c);
  } else {
    os.precision(6);
    os << c;
  }
  return os.str();
}

}  // namespace

Multivector::Multivector(int m) : m_(m) {
  if (m < 0 || m > kMaxGenerators) {
    throw std::invalid_argument("generator count " + std::to_string(m) +
                                " outside [0, 63]");
  }
}

Multivector Multivector::from_terms(int m, std::vector<Term> terms) {
  Multivector out(m);
  for (const Term& t : terms) {
    if ((t.mask & ~window(m)) != 0) {
      throw std::invalid_argument("term mask has bits beyond generator " +
                                  std::to_string(m));
    }
  }
  out.adopt_sparse(merge_sorted(std::move(terms)));
  return out;
}

Multivector Multivector::from_blade(const Blade& b, double coeff) {
  return from_terms(b.generators(), {{b.mask(), coeff}});
}

Multivector Multivector::from_signed_blade(const SignedBlade& b) {
  return from_blade(b.blade, static_cast<double>(b.sign));
}

Multivector Multivector::scalar(int m, double value) {
  return from_terms(m, {{0, value}});
}

Multivector Multivector::from_dense(int m, std::vector<double> coeffs) {
  Multivector out(m);
  if (m > kMaxDenseAccumulator + 8 || coeffs.size() != (std::size_t{1} << m)) {
    throw std::invalid_argument("dense coefficient array must have 2^m entries");
  }
  out.adopt_dense(std::move(coeffs));
  return out;
}

void Multivector::adopt_sparse(std::vector<Term> sorted_nonzero) {
  nnz_ = sorted_nonzero.size();
  if (prefers_dense(m_, nnz_)) {
    std::vector<double> coeffs(std::size_t{1} << m_, 0.0);
    for (const Term& t : sorted_nonzero) coeffs[t.mask] = t.coeff;
    dense_ = std::move(coeffs);
    dense_active_ = true;
    sparse_.clear();
  } else {
    sparse_ = std::move(sorted_nonzero);
    dense_active_ = false;
    dense_.clear();
  }
}

void Multivector::adopt_dense(std::vector<double> coeffs) {
  nnz_ = static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(),
                    [](double c) { return c != 0.0; }));
  if (prefers_dense(m_, nnz_)) {
    dense_ = std::move(coeffs);
    dense_active_ = true;
    sparse_.clear();
    return;
  }
  std::vector<Term> terms;
  terms.reserve(nnz_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0.0) terms.push_back({static_cast<Mask>(i), coeffs[i]});
  }
  sparse_ = std::move(terms);
  dense_active_ = false;
  dense_.clear();
}

double Multivector::coefficient(Mask mask) const {
  if (dense_active_) {
    return mask < dense_.size() ? dense_[mask] : 0.0;
  }
  auto it = std::lower_bound(
      sparse_.begin(), sparse_.end(), mask,
      [](const Term& t, Mask key) { return t.mask < key; });
  return (it != sparse_.end() && it->mask == mask) ? it->coeff : 0.0;
}

std::vector<Term> Multivector::terms() const {
  if (!dense_active_) return sparse_;
  std::vector<Term> out;
  out.reserve(nnz_);
  for_each_term([&](Mask mask, double c) { out.push_back({mask, c}); });
  return out;
}

std::string Multivector::str() const {
  if (empty()) return "0";
  std::string out;
  for_each_term([&](Mask mask, double c) {
    if (!out.empty()) out.push_back(' ');
    out += (c < 0 ? "-" : "+");
    out += format_coeff(std::abs(c));
    out += "·";
    out += Blade(mask, m_).str();
  });
  return out;
}

bool operator==(const Multivector& x, const Multivector& y) {
  if (x.m_ != y.m_ || x.nnz_ != y.nnz_) return false;
  if (!x.dense_active_ && !y.dense_active_) return x.sparse_ == y.sparse_;
  return x.terms() == y.terms();
}

Multivector add(const Multivector& x, const Multivector& y) {
  require_same_algebra(x, y);
  std::vector<Term> all;
  all.reserve(x.size() + y.size());
  x.for_each_term([&](Mask mask, double c) { all.push_back({mask, c}); });
  y.for_each_term([&](Mask mask, double c) { all.push_back({mask, c}); });
  return Multivector::from_terms(x.generators(), std::move(all));
}

Multivector scale(const Multivector& x, double factor) {
  std::vector<Term> out;
  out.reserve(x.size());
  x.for_each_term([&](Mask mask, double c) {
    out.push_back({mask, c * factor});
  });
  return Multivector::from_terms(x.generators(), std::move(out));
}

Multivector geometric_product(const Multivector& x, const Multivector& y) {
  require_same_algebra(x, y);
  const int m = x.generators();
  if (x.empty() || y.empty()) return Multivector(m);

  const std::vector<Term> right = y.terms();
  const double pairings =
      static_cast<double>(x.size()) * static_cast<double>(y.size());
  const bool dense_acc =
      m <= kMaxDenseAccumulator &&
      static_cast<double>(Mask{1} << m) <= 4.0 * pairings;

  if (dense_acc) {
    std::vector<double> acc(std::size_t{1} << m, 0.0);
    x.for_each_term([&](Mask a, double ca) {
      for (const Term& t : right) {
        acc[a ^ t.mask] += product_sign(a, t.mask) * ca * t.coeff;
      }
    });
    return Multivector::from_dense(m, std::move(acc));
  }

  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(pairings));
  x.for_each_term([&](Mask a, double ca) {
    for (const Term& t : right) {
      out.push_back({a ^ t.mask, product_sign(a, t.mask) * ca * t.coeff});
    }
  });
  return Multivector::from_terms(m, std::move(out));
}

Multivector reverse(const Multivector& x) {
  std::vector<Term> out;
  out.reserve(x.size());
  x.for_each_term([&](Mask mask, double c) {
    const int grade = std::popcount(mask);
    out.push_back({mask, reverse_sign_for_grade(grade) * c});
  });
  return Multivector::from_terms(x.generators(), std::move(out));
}

double scalar_part(const Multivector& x) { return x.coefficient(0); }

double scalar_of_product(const Multivector& x, const Multivector& y) {
  require_same_algebra(x, y);
  const Multivector& small = x.size() <= y.size() ? x : y;
  const Multivector& large = x.size() <= y.size() ? y : x;
  double sum = 0.0;
  small.for_each_term([&](Mask mask, double c) {
    const double other = large.coefficient(mask);
    if (other != 0.0) sum += product_sign(mask, mask) * c * other;
  });
  return sum;
}

}  // namespace bitga

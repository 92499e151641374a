#include "bitga/cartan.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

namespace bitga {

namespace {

using cd = std::complex<double>;

int cartan_factors(int m) { return (m + 1) / 2; }

// Matrices built from Pauli tensor products have exactly one nonzero per row,
// so products and sums of blade images can be formed in O(N) per factor.
struct Monomial {
  std::vector<int> col;
  std::vector<cd> val;

  static Monomial identity(int dim) {
    Monomial out;
    out.col.resize(dim);
    out.val.assign(dim, cd{1.0, 0.0});
    for (int r = 0; r < dim; ++r) out.col[r] = r;
    return out;
  }

  static Monomial from_dense(const ComplexMatrix& M) {
    Monomial out;
    const int dim = static_cast<int>(M.rows());
    out.col.assign(dim, -1);
    out.val.assign(dim, cd{});
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        if (M(r, c) == cd{}) continue;
        if (out.col[r] != -1) {
          throw std::logic_error("generator matrix is not monomial");
        }
        out.col[r] = c;
        out.val[r] = M(r, c);
      }
    }
    return out;
  }

  // (this * rhs)(r, c) = val[r] * rhs(col[r], c)
  Monomial times(const Monomial& rhs) const {
    Monomial out;
    const std::size_t dim = col.size();
    out.col.resize(dim);
    out.val.resize(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      out.col[r] = rhs.col[col[r]];
      out.val[r] = val[r] * rhs.val[col[r]];
    }
    return out;
  }
};

std::vector<Monomial> generator_monomials(int m, RepKind kind) {
  std::vector<Monomial> gens;
  gens.reserve(m);
  for (int j = 1; j <= m; ++j) {
    gens.push_back(Monomial::from_dense(generator_matrix(j, m, kind)));
  }
  return gens;
}

Monomial blade_monomial(Mask mask, int m, const std::vector<Monomial>& gens,
                        int dim) {
  Monomial acc = Monomial::identity(dim);
  for (int j = 1; j <= m; ++j) {
    if ((mask >> (m - j)) & 1U) acc = acc.times(gens[j - 1]);
  }
  return acc;
}

}  // namespace

std::string_view to_string(RepKind kind) {
  switch (kind) {
    case RepKind::CartanGeneral:
      return "cartan";
    case RepKind::PauliPlane:
      return "pauli-plane";
    case RepKind::PauliSpace:
      return "pauli-space";
  }
  return "unknown";
}

bool is_valid(RepKind kind, int m) {
  switch (kind) {
    case RepKind::CartanGeneral:
      return m >= 0 && m <= kMaxGenerators;
    case RepKind::PauliPlane:
      return m == 2;
    case RepKind::PauliSpace:
      return m == 3;
  }
  return false;
}

void require_valid(RepKind kind, int m) {
  if (!is_valid(kind, m)) {
    throw InvalidRepresentation("representation " + std::string(to_string(kind)) +
                                " is not defined for " + std::to_string(m) +
                                " generators");
  }
}

void require_buildable(RepKind kind, int m) {
  require_valid(kind, m);
  if (kind == RepKind::CartanGeneral && m > kMaxCartanGenerators) {
    throw InvalidRepresentation("Cartan matrices are only built for up to " +
                                std::to_string(kMaxCartanGenerators) +
                                " generators");
  }
}

RepKind default_rep_kind(int m) {
  if (m == 2) return RepKind::PauliPlane;
  if (m == 3) return RepKind::PauliSpace;
  return RepKind::CartanGeneral;
}

std::int64_t dimension(RepKind kind, int m) {
  require_valid(kind, m);
  if (kind != RepKind::CartanGeneral) return 2;
  return std::int64_t{1} << cartan_factors(m);
}

const ComplexMatrix& pauli(int index) {
  static const std::array<ComplexMatrix, 4> table = [] {
    std::array<ComplexMatrix, 4> t;
    const cd i{0.0, 1.0};
    t[0] = ComplexMatrix::Identity(2, 2);
    t[1] = ComplexMatrix(2, 2);
    t[1] << 0.0, 1.0, 1.0, 0.0;
    t[2] = ComplexMatrix(2, 2);
    t[2] << 0.0, -i, i, 0.0;
    t[3] = ComplexMatrix(2, 2);
    t[3] << 1.0, 0.0, 0.0, -1.0;
    return t;
  }();
  return table.at(index);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

ComplexMatrix generator_matrix(int j, int m, RepKind kind) {
  require_buildable(kind, m);
  if (j < 1 || j > m) {
    throw std::invalid_argument("generator index " + std::to_string(j) +
                                " outside [1, " + std::to_string(m) + "]");
  }
  if (kind != RepKind::CartanGeneral) return pauli(j);

  // e_{2k}   = sigma_1^{(n-k)} x sigma_2 x 1^{(k-1)}
  // e_{2k-1} = sigma_1^{(n-k)} x sigma_3 x 1^{(k-1)}
  const int n = cartan_factors(m);
  const int k = (j + 1) / 2;
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int f = 0; f < n - k; ++f) out = kron(out, pauli(1));
  out = kron(out, pauli(j % 2 == 0 ? 2 : 3));
  for (int f = 0; f < k - 1; ++f) out = kron(out, pauli(0));
  return out;
}

ComplexMatrix blade_matrix(const Blade& b, RepKind kind) {
  const int m = b.generators();
  require_buildable(kind, m);
  const auto dim = static_cast<int>(dimension(kind, m));
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (int j = 1; j <= m; ++j) {
    if (b.has(j)) out = out * generator_matrix(j, m, kind);
  }
  return out;
}

ComplexMatrix represent(const Multivector& x, RepKind kind) {
  const int m = x.generators();
  require_buildable(kind, m);
  const auto dim = static_cast<int>(dimension(kind, m));
  const std::vector<Monomial> gens = generator_monomials(m, kind);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  x.for_each_term([&](Mask mask, double coeff) {
    const Monomial b = blade_monomial(mask, m, gens, dim);
    for (int r = 0; r < dim; ++r) out(r, b.col[r]) += coeff * b.val[r];
  });
  return out;
}

double trace_projection(const ComplexMatrix& M) { return M.trace().real(); }

std::string format_matrix(const ComplexMatrix& M) {
  std::ostringstream os;
  os.precision(6);
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      if (c > 0) os << "  ";
      const double re = M(r, c).real() == 0.0 ? 0.0 : M(r, c).real();
      const double im = M(r, c).imag() == 0.0 ? 0.0 : M(r, c).imag();
      os << re << (std::signbit(im) ? "-" : "+") << std::abs(im) << "i";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bitga

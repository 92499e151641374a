#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>

#include "bitga/multivector.hpp"

namespace bitga {

using ComplexMatrix = Eigen::MatrixXcd;

// Matrix realizations of the algebra.
//   CartanGeneral: tensor products of Pauli matrices, dimension 2^ceil(m/2).
//   PauliPlane:    m = 2, e_1 = sigma_1, e_2 = sigma_2 (2x2).
//   PauliSpace:    m = 3, e_1..e_3 = sigma_1..sigma_3 (2x2, e_123 = i).
enum class RepKind { CartanGeneral, PauliPlane, PauliSpace };

inline constexpr int kMaxCartanGenerators = 12;

class InvalidRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view to_string(RepKind kind);

bool is_valid(RepKind kind, int m);
// Throws InvalidRepresentation when kind cannot represent m generators.
void require_valid(RepKind kind, int m);
// As require_valid, and additionally enforces the dense-matrix cap of
// kMaxCartanGenerators for CartanGeneral.
void require_buildable(RepKind kind, int m);
// The Pauli table when m is 2 or 3, Cartan otherwise.
RepKind default_rep_kind(int m);

// Matrix size N, which is also Tr(1). Defined for every valid m even when the
// matrices themselves are too large to build.
std::int64_t dimension(RepKind kind, int m);

const ComplexMatrix& pauli(int index);  // 0 = identity, 1..3 = sigma_1..3

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix generator_matrix(int j, int m, RepKind kind);

// Blade matrix: generator matrices multiplied in ascending index order.
ComplexMatrix blade_matrix(const Blade& b, RepKind kind);

ComplexMatrix represent(const Multivector& x, RepKind kind);

// Re Tr M. For an image of x this is N * scalar_part(x): every non-scalar
// blade maps to a matrix whose trace is zero or purely imaginary.
double trace_projection(const ComplexMatrix& M);

// Rows of "a+bi" entries, 6 significant digits.
std::string format_matrix(const ComplexMatrix& M);

}  // namespace bitga

#pragma once

#include <string_view>

#include "bitga/boolean_function.hpp"
#include "bitga/cartan.hpp"
#include "bitga/multivector.hpp"

namespace bitga {

// Deutsch-Jozsa as a geometric-product computation in the algebra of
// m = n + 1 generators. No 1/sqrt(2) normalisation anywhere: every
// intermediate coefficient is an integer and the readout is exact.
//
//   E   = sum of all 2^{n+1} blades
//   Z   = E_f (E * e_{0...010})        E_f flips the last bit by f(first n)
//   F   = sum over last-bit-zero blades b of reverse(b)
//   out = scalar part of F * Z = sum_x (-1)^{f(x)}

enum class Classification { Constant, Balanced, Neither };

enum class PipelineMode {
  ScalarOnly,   // scalar_of_product(F, Z): O(2^{n+1})
  FullProduct,  // scalar_part(F * Z): O(2^{2n+1})
};

struct DjResult {
  int n = 0;
  double scalar = 0.0;
  double trace_value = 0.0;  // N * scalar
  std::int64_t N = 0;
  RepKind rep = RepKind::CartanGeneral;
  Classification classification = Classification::Neither;
  int sign = 0;  // (-1)^{f(0)} when Constant, else 0
};

std::string_view to_string(Classification c);

Multivector build_superposition(int n);
Blade seed_blade(int n);
Multivector build_reversal_operator(int n);

// E_f as a blade-wise linear map. This is not multiplication by any fixed
// multivector: the factor e_{0...0,f(A)} depends on the blade it acts on.
Multivector apply_oracle(const BooleanFunction& f, const Multivector& x);

// The blade e_{0...0,f(A_1...A_n)} with apply_oracle(f, b) == b * factor.
Blade oracle_factor(const BooleanFunction& f, const Blade& b);

// Z = E_f E_{n+1} e_{0...010}.
Multivector oracle_state(const BooleanFunction& f);

Classification classify(double scalar, int n, int* sign = nullptr);

// Throws std::logic_error if the pipeline disagrees with sum_x (-1)^{f(x)}.
DjResult run(const BooleanFunction& f, RepKind kind,
             PipelineMode mode = PipelineMode::ScalarOnly);
DjResult run(const BooleanFunction& f,
             PipelineMode mode = PipelineMode::ScalarOnly);

// Matrix image of the pipeline, represent(F) * represent(Z). Its
// trace_projection equals N times the GA scalar.
ComplexMatrix matrix_pipeline(const BooleanFunction& f, RepKind kind);

}  // namespace bitga

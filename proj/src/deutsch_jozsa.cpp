#include "bitga/deutsch_jozsa.hpp"

#include <cmath>
#include <stdexcept>

namespace bitga {

namespace {

void require_input_count(int n) {
  if (n < 1 || n + 1 > kMaxGenerators) {
    throw std::invalid_argument("input bit count " + std::to_string(n) +
                                " outside [1, 62]");
  }
}

void require_matching(const BooleanFunction& f, int m) {
  if (f.inputs() + 1 != m) {
    throw DimensionMismatch("oracle on " + std::to_string(f.inputs()) +
                            " inputs needs " + std::to_string(f.inputs() + 1) +
                            " generators, multivector has " +
                            std::to_string(m));
  }
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Constant:
      return "constant";
    case Classification::Balanced:
      return "balanced";
    case Classification::Neither:
      return "neither";
  }
  return "unknown";
}

Multivector build_superposition(int n) {
  require_input_count(n);
  const int m = n + 1;
  return Multivector::from_dense(m,
                                 std::vector<double>(std::size_t{1} << m, 1.0));
}

Blade seed_blade(int n) {
  require_input_count(n);
  return Blade(Mask{0b10}, n + 1);
}

Multivector build_reversal_operator(int n) {
  require_input_count(n);
  const std::size_t count = std::size_t{1} << n;
  std::vector<Term> terms;
  terms.reserve(count);
  for (std::size_t x = 0; x < count; ++x) {
    const Mask mask = static_cast<Mask>(x) << 1;
    terms.push_back(
        {mask, static_cast<double>(reverse_sign_for_grade(std::popcount(mask)))});
  }
  return Multivector::from_terms(n + 1, std::move(terms));
}

Multivector apply_oracle(const BooleanFunction& f, const Multivector& x) {
  require_matching(f, x.generators());
  std::vector<Term> out;
  out.reserve(x.size());
  x.for_each_term([&](Mask mask, double c) {
    out.push_back({mask ^ static_cast<Mask>(f(mask >> 1)), c});
  });
  return Multivector::from_terms(x.generators(), std::move(out));
}

Blade oracle_factor(const BooleanFunction& f, const Blade& b) {
  require_matching(f, b.generators());
  return Blade(static_cast<Mask>(f(b.mask() >> 1)), b.generators());
}

Multivector oracle_state(const BooleanFunction& f) {
  const int n = f.inputs();
  const Multivector spread = geometric_product(
      build_superposition(n), Multivector::from_blade(seed_blade(n)));
  return apply_oracle(f, spread);
}

Classification classify(double scalar, int n, int* sign) {
  const double full = std::ldexp(1.0, n);
  int s = 0;
  Classification c = Classification::Neither;
  if (scalar == full) {
    c = Classification::Constant;
    s = 1;
  } else if (scalar == -full) {
    c = Classification::Constant;
    s = -1;
  } else if (scalar == 0.0) {
    c = Classification::Balanced;
  }
  if (sign != nullptr) *sign = s;
  return c;
}

DjResult run(const BooleanFunction& f, RepKind kind, PipelineMode mode) {
  const int n = f.inputs();
  require_input_count(n);
  const int m = n + 1;
  require_valid(kind, m);

  const Multivector z = oracle_state(f);
  const Multivector reversal = build_reversal_operator(n);
  const double scalar = mode == PipelineMode::ScalarOnly
                            ? scalar_of_product(reversal, z)
                            : scalar_part(geometric_product(reversal, z));

  if (scalar != static_cast<double>(f.signed_sum())) {
    throw std::logic_error("pipeline scalar disagrees with sum_x (-1)^f(x)");
  }

  DjResult out;
  out.n = n;
  out.scalar = scalar;
  out.N = dimension(kind, m);
  out.trace_value = static_cast<double>(out.N) * scalar;
  out.rep = kind;
  out.classification = classify(scalar, n, &out.sign);
  return out;
}

DjResult run(const BooleanFunction& f, PipelineMode mode) {
  return run(f, default_rep_kind(f.inputs() + 1), mode);
}

ComplexMatrix matrix_pipeline(const BooleanFunction& f, RepKind kind) {
  const int n = f.inputs();
  require_input_count(n);
  require_buildable(kind, n + 1);
  return represent(build_reversal_operator(n), kind) *
         represent(oracle_state(f), kind);
}

}  // namespace bitga

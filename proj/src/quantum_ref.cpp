#include "bitga/quantum_ref.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace bitga::quantum {

namespace {

void require_qubits(int q) {
  if (q < 1 || q > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(q) +
                                " outside [1, " + std::to_string(kMaxQubits) +
                                "]");
  }
}

}  // namespace

StateVector::StateVector(int qubits, std::vector<Amplitude> amps)
    : q_(qubits), amps_(std::move(amps)) {
  require_qubits(qubits);
  if (amps_.size() != (std::size_t{1} << qubits)) {
    throw std::invalid_argument("state vector needs 2^q amplitudes");
  }
}

StateVector StateVector::basis(int qubits, std::uint64_t label) {
  require_qubits(qubits);
  std::vector<Amplitude> amps(std::size_t{1} << qubits);
  amps.at(label) = 1.0;
  return {qubits, std::move(amps)};
}

double StateVector::norm_squared() const {
  return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                         [](double acc, const Amplitude& a) {
                           return acc + std::norm(a);
                         });
}

StateVector hadamard_all(StateVector s) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::size_t size = s.amps_.size();
  for (std::size_t stride = 1; stride < size; stride <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const Amplitude a = s.amps_[i];
        const Amplitude b = s.amps_[i + stride];
        s.amps_[i] = h * (a + b);
        s.amps_[i + stride] = h * (a - b);
      }
    }
  }
  return s;
}

StateVector apply_uf(const BooleanFunction& f, StateVector s) {
  if (s.q_ != f.inputs() + 1) {
    throw std::invalid_argument("oracle on " + std::to_string(f.inputs()) +
                                " inputs needs " +
                                std::to_string(f.inputs() + 1) + " qubits");
  }
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (f(x)) std::swap(s.amps_[x << 1], s.amps_[(x << 1) | 1U]);
  }
  return s;
}

double dj_reference(const BooleanFunction& f) {
  const int q = f.inputs() + 1;
  if (f.inputs() < 1) throw std::invalid_argument("need at least one input bit");
  StateVector s = StateVector::basis(q, 1);
  s = hadamard_all(std::move(s));
  s = apply_uf(f, std::move(s));
  s = hadamard_all(std::move(s));
  return s[1].real();
}

}  // namespace bitga::quantum

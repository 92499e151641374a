#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bitga/boolean_function.hpp"

namespace bitga::quantum {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;

// State of q qubits. Basis label bits follow the algebra's convention:
// qubit 1 is the most significant bit of the label.
class StateVector {
 public:
  StateVector() = default;
  StateVector(int qubits, std::vector<Amplitude> amps);

  static StateVector basis(int qubits, std::uint64_t label);

  int qubits() const { return q_; }
  std::size_t size() const { return amps_.size(); }
  const Amplitude& operator[](std::uint64_t label) const { return amps_[label]; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  double norm_squared() const;

 private:
  friend StateVector hadamard_all(StateVector s);
  friend StateVector apply_uf(const BooleanFunction& f, StateVector s);

  int q_ = 0;
  std::vector<Amplitude> amps_;
};

// H on every qubit, one in-place butterfly pass per qubit.
StateVector hadamard_all(StateVector s);

// |x>|y> -> |x>|y xor f(x)>, with the last qubit as y.
StateVector apply_uf(const BooleanFunction& f, StateVector s);

// Real part of the amplitude at |0...0>|1> after H, U_f, H applied to
// |0...0>|1>; equals 2^{-n} sum_x (-1)^{f(x)}.
double dj_reference(const BooleanFunction& f);

}  // namespace bitga::quantum

// Copyright 2026 The vqbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqbench/circuit.hpp"
#include "vqbench/hamiltonian.hpp"
#include "vqbench/rng.hpp"

// Noiseless statevector execution of base-set circuits, with multinomial
// shot sampling. Amplitudes are little-endian (qubit 0 = least significant
// index bit); sampled bitstrings are printed MSB-first.

namespace vqbench {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

inline constexpr std::uint32_t kDefaultQubitCap = 20;

/// Shot histogram: outcome bitstring (MSB-first) -> count.
struct Histogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
};

/// Timed circuit execution: histogram plus the wall-clock duration of the
/// combined simulate-and-sample call.
struct JobResult {
  Histogram histogram;
  double duration_ms = 0.0;
};

inline std::string index_to_bitstring(std::size_t index, std::uint32_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::uint32_t q = 0; q < n_qubits; ++q) {
    if ((index >> q) & 1) s[n_qubits - 1 - q] = '1';
  }
  return s;
}

namespace detail {

inline void apply_1q(StateVector& s, std::uint32_t q, Amplitude u00, Amplitude u01, Amplitude u10,
                     Amplitude u11) {
  const std::size_t step = std::size_t(1) << q;
  for (std::size_t base = 0; base < s.size(); base += 2 * step) {
    for (std::size_t i = base; i < base + step; ++i) {
      const Amplitude a = s[i], b = s[i + step];
      s[i] = u00 * a + u01 * b;
      s[i + step] = u10 * a + u11 * b;
    }
  }
}

// Single-qubit rotation applied only where the control bit is set.
inline void apply_ctrl_1q(StateVector& s, std::uint32_t c, std::uint32_t q, Amplitude u00,
                          Amplitude u01, Amplitude u10, Amplitude u11) {
  const std::size_t step = std::size_t(1) << q;
  const std::size_t cbit = std::size_t(1) << c;
  for (std::size_t base = 0; base < s.size(); base += 2 * step) {
    for (std::size_t i = base; i < base + step; ++i) {
      if (!(i & cbit)) continue;
      const Amplitude a = s[i], b = s[i + step];
      s[i] = u00 * a + u01 * b;
      s[i + step] = u10 * a + u11 * b;
    }
  }
}

inline void apply_cnot(StateVector& s, std::uint32_t c, std::uint32_t t) {
  const std::size_t cbit = std::size_t(1) << c;
  const std::size_t tbit = std::size_t(1) << t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(s[i], s[i | tbit]);
  }
}

inline void apply_toffoli(StateVector& s, std::uint32_t c0, std::uint32_t c1, std::uint32_t t) {
  const std::size_t cbits = (std::size_t(1) << c0) | (std::size_t(1) << c1);
  const std::size_t tbit = std::size_t(1) << t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (((i & cbits) == cbits) && !(i & tbit)) std::swap(s[i], s[i | tbit]);
  }
}

}  // namespace detail

/// Applies one base-set gate in place.
inline void apply_gate(StateVector& s, const Gate& g) {
  using std::cos;
  using std::sin;
  const double half = g.angle / 2;
  constexpr Amplitude I{0, 1};
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      detail::apply_1q(s, g.qubits[0], r, r, r, -r);
      break;
    }
    case GateKind::X:
      detail::apply_1q(s, g.qubits[0], 0, 1, 1, 0);
      break;
    case GateKind::Rx:
      detail::apply_1q(s, g.qubits[0], cos(half), -I * sin(half), -I * sin(half), cos(half));
      break;
    case GateKind::Ry:
      detail::apply_1q(s, g.qubits[0], cos(half), -sin(half), sin(half), cos(half));
      break;
    case GateKind::Rz:
      detail::apply_1q(s, g.qubits[0], std::exp(-I * half), 0, 0, std::exp(I * half));
      break;
    case GateKind::CNOT:
      detail::apply_cnot(s, g.qubits[0], g.qubits[1]);
      break;
    case GateKind::Toffoli:
      detail::apply_toffoli(s, g.qubits[0], g.qubits[1], g.qubits[2]);
      break;
    case GateKind::CRy:
      detail::apply_ctrl_1q(s, g.qubits[0], g.qubits[1], cos(half), -sin(half), sin(half),
                            cos(half));
      break;
    case GateKind::CRz:
      detail::apply_ctrl_1q(s, g.qubits[0], g.qubits[1], std::exp(-I * half), 0, 0,
                            std::exp(I * half));
      break;
    default:
      throw std::invalid_argument(std::string("simulate() handles base-set gates only; found ") +
                                  kind_name(g.kind) + " (decompose the circuit first)");
  }
}

/// Runs a decomposed circuit on |0...0> and returns the final state.
/// Registers wider than `qubit_cap` are refused up front.
inline StateVector simulate(const Circuit& c, std::uint32_t qubit_cap = kDefaultQubitCap) {
  if (c.n_qubits() > qubit_cap) {
    throw std::runtime_error("circuit needs " + std::to_string(c.n_qubits()) +
                             " qubits but the simulator cap is " + std::to_string(qubit_cap));
  }
  StateVector s(std::size_t(1) << c.n_qubits(), Amplitude{0, 0});
  s[0] = 1;
  for (const Gate& g : c.gates()) apply_gate(s, g);
  return s;
}

/// Multinomial sampling of `shots` measurement outcomes in the computational
/// basis. Identical seed and state give an identical histogram on every
/// platform.
inline Histogram sample_counts(const StateVector& state, std::uint32_t n_qubits,
                               std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample_counts needs at least one shot");
  if (state.size() != (std::size_t(1) << n_qubits)) {
    throw std::invalid_argument("state dimension does not match the qubit count");
  }
  std::vector<double> cumulative(state.size());
  double acc = 0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    acc += std::norm(state[i]);
    cumulative[i] = acc;
  }
  if (std::abs(acc - 1.0) > 1e-6) {
    throw std::invalid_argument("sample_counts expects a normalized state (norm^2 = " +
                                std::to_string(acc) + ")");
  }

  Rng rng(seed);
  std::map<std::size_t, std::uint64_t> index_counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.next_double() * acc;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= state.size()) idx = state.size() - 1;
    ++index_counts[idx];
  }
  Histogram h;
  h.shots = shots;
  for (const auto& [idx, count] : index_counts) {
    h.counts.emplace(index_to_bitstring(idx, n_qubits), count);
  }
  return h;
}

/// simulate + sample under one wall-clock measurement (the recorded job
/// duration of a quantum job, state allocation included).
inline JobResult run_job(const Circuit& c, std::uint64_t shots, std::uint64_t seed,
                         std::uint32_t qubit_cap = kDefaultQubitCap) {
  const auto t0 = std::chrono::steady_clock::now();
  const StateVector state = simulate(c, qubit_cap);
  Histogram h = sample_counts(state, c.n_qubits(), shots, seed);
  const auto t1 = std::chrono::steady_clock::now();
  JobResult r;
  r.histogram = std::move(h);
  r.duration_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

/// <state|H|state>, exact. The state must be normalized; the result of a
/// Hermitian observable is real, and a nonvanishing imaginary residue is
/// reported as an internal error.
inline double exact_expectation(const StateVector& state, const Hamiltonian& h) {
  const std::size_t dim = std::size_t(1) << h.n_qubits();
  if (state.size() != dim) {
    throw std::invalid_argument("state dimension does not match the observable register");
  }
  double norm2 = 0;
  for (const Amplitude& a : state) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-6) {
    throw std::invalid_argument("exact_expectation expects a normalized state");
  }
  StateVector hs(dim, Amplitude{0, 0});
  accumulate_apply(h, state, hs);
  Amplitude e{0, 0};
  for (std::size_t i = 0; i < dim; ++i) e += std::conj(state[i]) * hs[i];
  if (std::abs(e.imag()) > 1e-9) {
    throw std::runtime_error("expectation of a Hermitian observable came out complex");
  }
  return e.real();
}

}  // namespace vqbench

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

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vqbench {

/// One weighted Pauli string. `paulis[q]` is the operator acting on qubit q,
/// one of 'I', 'X', 'Y', 'Z'.
struct PauliTerm {
  double coeff;
  std::string paulis;
};

/// A sum of weighted Pauli strings. Coefficients are real, which makes every
/// representable observable Hermitian by construction; validation therefore
/// only needs to reject malformed labels and non-finite weights.
class Hamiltonian {
 public:
  Hamiltonian() : n_qubits_(0) {}
  explicit Hamiltonian(std::uint32_t n_qubits) : n_qubits_(n_qubits) {}

  std::uint32_t n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(double coeff, std::string paulis) {
    if (!std::isfinite(coeff)) {
      throw std::invalid_argument("observable term has a non-finite coefficient");
    }
    if (paulis.size() != n_qubits_) {
      throw std::invalid_argument("observable term \"" + paulis + "\" does not cover a " +
                                  std::to_string(n_qubits_) + "-qubit register");
    }
    for (char c : paulis) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw std::invalid_argument("observable term \"" + paulis +
                                    "\" contains a label other than I/X/Y/Z");
      }
    }
    terms_.push_back({coeff, std::move(paulis)});
  }

  /// Convenience: a term acting nontrivially on the listed qubits only.
  void add_term_on(double coeff, const std::vector<std::pair<std::uint32_t, char>>& ops) {
    std::string paulis(n_qubits_, 'I');
    for (auto [q, c] : ops) {
      if (q >= n_qubits_) {
        throw std::invalid_argument("observable term qubit index " + std::to_string(q) +
                                    " out of range");
      }
      paulis[q] = c;
    }
    add_term(coeff, paulis);
  }

 private:
  std::uint32_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// out += H * in, with amplitudes in little-endian order. `in` and `out` must
/// both have dimension 2^n.
inline void accumulate_apply(const Hamiltonian& h, const std::vector<std::complex<double>>& in,
                             std::vector<std::complex<double>>& out) {
  const std::size_t dim = std::size_t(1) << h.n_qubits();
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("state dimension does not match the observable register");
  }
  for (const PauliTerm& term : h.terms()) {
    std::size_t flip = 0;  // X and Y flip the bit
    std::size_t zmask = 0, ymask = 0;
    for (std::uint32_t q = 0; q < h.n_qubits(); ++q) {
      switch (term.paulis[q]) {
        case 'X': flip |= std::size_t(1) << q; break;
        case 'Y': flip |= std::size_t(1) << q; ymask |= std::size_t(1) << q; break;
        case 'Z': zmask |= std::size_t(1) << q; break;
        default: break;
      }
    }
    const int ny = std::popcount(ymask);
    // i^ny, the fixed phase every Y contributes on top of its sign
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> yphase = ipow[ny & 3];
    for (std::size_t i = 0; i < dim; ++i) {
      // Y|b> = i(-1)^b |1-b>,  Z|b> = (-1)^b |b>
      const int signbits = std::popcount(i & (zmask | ymask));
      const double sign = (signbits & 1) ? -1.0 : 1.0;
      out[i ^ flip] += term.coeff * sign * yphase * in[i];
    }
  }
}

}  // namespace vqbench

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

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqbench/circuit.hpp"
#include "vqbench/problems.hpp"
#include "vqbench/simulator.hpp"

// Parameterized circuits for the six problems, and the estimators that turn
// shot histograms back into energies.
//
// Angle convention: a cost or mixer term exp(-i * angle_param * c * P) is
// emitted as the rotation R_P(2 * angle_param * c), since R_P(theta) =
// exp(-i * theta/2 * P). The dominating-set clause banks are the exception:
// they phase-tag the cost ancilla with Rz(gamma) / CRz(gamma) directly.

namespace vqbench {

enum class Basis { Z, X };

struct MeasuredCircuit {
  Circuit circuit;
  Basis basis;
};

/// The circuits one objective evaluation must execute: a single Z-basis
/// circuit everywhere except IC, which measures in both bases.
struct CircuitSet {
  std::vector<MeasuredCircuit> circuits;
};

/// Number of variational parameters: 2 for the QAOA problems (gamma, beta),
/// N for RH, 4N for the two-block SU2 ansatz of IC.
inline std::size_t param_count(const ProblemInstance& inst) {
  switch (inst.kind) {
    case ProblemKind::MCP:
    case ProblemKind::DSP:
    case ProblemKind::MIS:
    case ProblemKind::TSP:
      return 2;
    case ProblemKind::RH:
      return static_cast<std::size_t>(inst.size);
    case ProblemKind::IC:
      return static_cast<std::size_t>(4 * inst.size);
  }
  throw std::invalid_argument("unknown problem kind");
}

namespace detail {

inline Circuit build_mcp(const ProblemInstance& inst, double gamma, double beta) {
  Circuit c(static_cast<std::uint32_t>(inst.n_qubits));
  for (int q = 0; q < inst.size; ++q) c.h(static_cast<std::uint32_t>(q));
  for (auto [u, v] : inst.edges) {
    c.add({GateKind::Rzz, 2 * gamma,
           {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)}});
  }
  for (int q = 0; q < inst.size; ++q) c.rx(2 * beta, static_cast<std::uint32_t>(q));
  return c;
}

inline Circuit build_dsp(const ProblemInstance& inst, double gamma, double beta) {
  const auto n = static_cast<std::uint32_t>(inst.size);
  const std::uint32_t cost = n;  // phase-tag ancilla
  const std::uint32_t chain0 = n + 1, chain1 = n + 2, chain2 = n + 3, result = n + 4;
  Circuit c(static_cast<std::uint32_t>(inst.n_qubits));
  for (std::uint32_t q = 0; q < n; ++q) c.h(q);
  c.h(cost);
  // Coverage clauses: Rz on the cost ancilla when node k or a neighbor is chosen.
  for (int k = 0; k < inst.size; ++k) {
    std::vector<std::uint32_t> operands;
    operands.push_back(static_cast<std::uint32_t>(k));
    for (int nb : neighbors(inst, k)) operands.push_back(static_cast<std::uint32_t>(nb));
    if (operands.size() != 5) {
      throw std::runtime_error("dominating-set ansatz expects 4-regular graphs");
    }
    operands.insert(operands.end(), {chain0, chain1, chain2, result, cost});
    c.add({GateKind::ORCtrlRz, gamma, std::move(operands)});
  }
  // Count clauses: Rz on the cost ancilla when node k is not chosen.
  for (std::uint32_t k = 0; k < n; ++k) {
    c.x(k);
    c.crz(gamma, k, cost);
    c.x(k);
  }
  for (std::uint32_t q = 0; q < n; ++q) c.rx(2 * beta, q);
  return c;
}

inline Circuit build_mis(const ProblemInstance& inst, double gamma, double beta) {
  const auto n = static_cast<std::uint32_t>(inst.size);
  const std::uint32_t chain0 = n, chain1 = n + 1, result = n + 2;
  Circuit c(static_cast<std::uint32_t>(inst.n_qubits));
  for (std::uint32_t q = 0; q < n; ++q) c.h(q);
  for (std::uint32_t q = 0; q < n; ++q) c.rz(2 * gamma, q);
  // Constrained mixer: rotate node k only when no neighbor is occupied.
  for (int k = 0; k < inst.size; ++k) {
    std::vector<std::uint32_t> operands;
    for (int nb : neighbors(inst, k)) operands.push_back(static_cast<std::uint32_t>(nb));
    if (operands.size() != 4) {
      throw std::runtime_error("independent-set mixer expects 4-regular graphs");
    }
    operands.insert(operands.end(), {chain0, chain1, result, static_cast<std::uint32_t>(k)});
    c.add({GateKind::NORCtrlRx, 2 * beta, std::move(operands)});
  }
  return c;
}

inline Circuit build_tsp(const ProblemInstance& inst, double gamma, double beta) {
  const int n = inst.size;
  auto entry = [n](int i, int j) { return static_cast<std::uint32_t>(i * n + j); };
  Circuit c(static_cast<std::uint32_t>(inst.n_qubits));
  // Each adjacency-matrix row starts in its weight-2 Dicke state.
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> row;
    for (int j = 0; j < n; ++j) row.push_back(entry(i, j));
    c.add({GateKind::DickeRow, std::move(row)});
  }
  // Soft cost: selected entries pay their distance, exp(+i gamma D_ij/2 Z).
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c.rz(-gamma * inst.distances[i][j], entry(i, j));
    }
  }
  // Hard cost: symmetric selections are rewarded, exp(+i gamma w ZZ).
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      c.add({GateKind::Rzz, -2.0 * gamma * kTspSymmetryWeight, {entry(i, j), entry(j, i)}});
    }
  }
  // Row-preserving mixer on adjacent in-row pairs.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      c.add({GateKind::Rxx, beta, {entry(i, j), entry(i, j + 1)}});
      c.add({GateKind::Ryy, beta, {entry(i, j), entry(i, j + 1)}});
    }
  }
  return c;
}

inline Circuit build_rh(const ProblemInstance& inst, std::span<const double> params) {
  Circuit c(static_cast<std::uint32_t>(inst.n_qubits));
  for (int i = 0; i < inst.size; ++i) c.rx(params[i], static_cast<std::uint32_t>(i));
  return c;
}

inline Circuit build_ic(const ProblemInstance& inst, std::span<const double> params) {
  const auto n = static_cast<std::uint32_t>(inst.size);
  Circuit c(n);
  for (std::uint32_t i = 0; i < n; ++i) c.ry(params[i], i);
  for (std::uint32_t i = 0; i < n; ++i) c.rz(params[n + i], i);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) c.cnot(i, j);
  }
  for (std::uint32_t i = 0; i < n; ++i) c.ry(params[2 * n + i], i);
  for (std::uint32_t i = 0; i < n; ++i) c.rz(params[3 * n + i], i);
  return c;
}

}  // namespace detail

/// Builds the measured circuits for one parameter point. The returned
/// circuits still contain composite gates; decompose before simulating.
inline CircuitSet build_circuits(const ProblemInstance& inst, std::span<const double> params) {
  if (params.size() != param_count(inst)) {
    throw std::invalid_argument(std::string(kind_name(inst.kind)) + " size " +
                                std::to_string(inst.size) + " takes " +
                                std::to_string(param_count(inst)) + " parameters, got " +
                                std::to_string(params.size()));
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite variational parameter");
  }
  CircuitSet set;
  switch (inst.kind) {
    case ProblemKind::MCP:
      set.circuits.push_back({detail::build_mcp(inst, params[0], params[1]), Basis::Z});
      break;
    case ProblemKind::DSP:
      set.circuits.push_back({detail::build_dsp(inst, params[0], params[1]), Basis::Z});
      break;
    case ProblemKind::MIS:
      set.circuits.push_back({detail::build_mis(inst, params[0], params[1]), Basis::Z});
      break;
    case ProblemKind::TSP:
      set.circuits.push_back({detail::build_tsp(inst, params[0], params[1]), Basis::Z});
      break;
    case ProblemKind::RH:
      set.circuits.push_back({detail::build_rh(inst, params), Basis::Z});
      break;
    case ProblemKind::IC: {
      set.circuits.push_back({detail::build_ic(inst, params), Basis::Z});
      Circuit xb = detail::build_ic(inst, params);
      for (std::uint32_t q = 0; q < static_cast<std::uint32_t>(inst.size); ++q) xb.h(q);
      set.circuits.push_back({std::move(xb), Basis::X});
      break;
    }
  }
  return set;
}

namespace detail {

// +1/-1 value of bit q in a packed outcome.
inline double zval(std::uint32_t bits, int q) { return ((bits >> q) & 1u) ? -1.0 : 1.0; }

inline double diagonal_weight_value(const ProblemInstance& inst, std::uint32_t bits) {
  double v = 0;
  for (int i = 0; i < inst.size; ++i) v += inst.diagonal_weights[i] * zval(bits, i);
  return v;
}

}  // namespace detail

/// Shot-estimated energy from the histograms of one evaluation, in the order
/// build_circuits emitted the circuits. Ancilla bits are discarded; only the
/// logical register enters the estimate.
inline double expectation_from_counts(const ProblemInstance& inst,
                                      const std::vector<Histogram>& histograms) {
  const std::size_t expected = (inst.kind == ProblemKind::IC) ? 2 : 1;
  if (histograms.size() != expected) {
    throw std::invalid_argument(std::string(kind_name(inst.kind)) + " expects " +
                                std::to_string(expected) + " histogram(s), got " +
                                std::to_string(histograms.size()));
  }
  for (const Histogram& h : histograms) {
    if (h.counts.empty() || h.shots == 0) {
      throw std::invalid_argument("cannot estimate an expectation from an empty histogram");
    }
  }
  const std::uint32_t logical_mask =
      (inst.n_logical >= 32) ? 0xffffffffu : ((std::uint32_t(1) << inst.n_logical) - 1);

  switch (inst.kind) {
    case ProblemKind::MCP:
    case ProblemKind::DSP:
    case ProblemKind::MIS:
    case ProblemKind::TSP: {
      double total = 0;
      std::uint64_t shots = 0;
      for (const auto& [key, count] : histograms[0].counts) {
        if (key.size() != static_cast<std::size_t>(inst.n_qubits)) {
          throw std::invalid_argument("outcome \"" + key + "\" does not cover the full register");
        }
        const std::uint32_t bits = pack_bitstring(key) & logical_mask;
        total += static_cast<double>(count) * detail::cost_from_bits(inst, bits);
        shots += count;
      }
      return total / static_cast<double>(shots);
    }
    case ProblemKind::RH: {
      double total = 0;
      std::uint64_t shots = 0;
      for (const auto& [key, count] : histograms[0].counts) {
        const std::uint32_t bits = pack_bitstring(key);
        total += static_cast<double>(count) * detail::diagonal_weight_value(inst, bits);
        shots += count;
      }
      return total / static_cast<double>(shots);
    }
    case ProblemKind::IC: {
      // Z histogram -> sum_i <Z_i>; X histogram -> sum_i <X_i X_{i+1}>.
      double zsum = 0;
      std::uint64_t zshots = 0;
      for (const auto& [key, count] : histograms[0].counts) {
        const std::uint32_t bits = pack_bitstring(key);
        double v = 0;
        for (int i = 0; i < inst.size; ++i) v += detail::zval(bits, i);
        zsum += static_cast<double>(count) * v;
        zshots += count;
      }
      double xsum = 0;
      std::uint64_t xshots = 0;
      for (const auto& [key, count] : histograms[1].counts) {
        const std::uint32_t bits = pack_bitstring(key);
        double v = 0;
        for (int i = 0; i + 1 < inst.size; ++i) {
          v += detail::zval(bits, i) * detail::zval(bits, i + 1);
        }
        xsum += static_cast<double>(count) * v;
        xshots += count;
      }
      return -kIsingJ * xsum / static_cast<double>(xshots) -
             kIsingH * zsum / static_cast<double>(zshots);
    }
  }
  throw std::invalid_argument("unknown problem kind");
}

/// Noise-free energy at a parameter point: the statevector is simulated once
/// and the objective is taken exactly (diagonal cost for the bitstring
/// problems, observable expectation for RH and IC). This is the reference
/// path the baseline optimization runs on.
inline double exact_energy(const ProblemInstance& inst, std::span<const double> params,
                           std::uint32_t qubit_cap = kDefaultQubitCap) {
  const CircuitSet set = build_circuits(inst, params);
  const StateVector state = simulate(decompose(set.circuits[0].circuit), qubit_cap);
  switch (inst.kind) {
    case ProblemKind::MCP:
    case ProblemKind::DSP:
    case ProblemKind::MIS:
    case ProblemKind::TSP: {
      const std::uint32_t logical_mask = (std::uint32_t(1) << inst.n_logical) - 1;
      double e = 0;
      for (std::size_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state[i]);
        if (p > 0) e += p * detail::cost_from_bits(inst, static_cast<std::uint32_t>(i) & logical_mask);
      }
      return e;
    }
    case ProblemKind::RH:
    case ProblemKind::IC:
      return exact_expectation(state, inst.observable);
  }
  throw std::invalid_argument("unknown problem kind");
}

}  // namespace vqbench

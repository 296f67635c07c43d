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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqbench/hamiltonian.hpp"
#include "vqbench/rng.hpp"

// The six benchmark problems and their classical reference values.
//
// Graph problems (MCP, DSP, MIS) use 4-regular circulant graphs: node i is
// joined to i +- 1 and i +- 2 (mod n). TSP uses a complete graph with a
// seeded integer distance matrix. RH draws per-qubit Z weights from the
// instance seed; IC is the transverse-field Ising chain with open ends and
// unit couplings.

namespace vqbench {

enum class ProblemKind { MCP, DSP, MIS, TSP, RH, IC };

inline const char* kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::MCP: return "MCP";
    case ProblemKind::DSP: return "DSP";
    case ProblemKind::MIS: return "MIS";
    case ProblemKind::TSP: return "TSP";
    case ProblemKind::RH: return "RH";
    case ProblemKind::IC: return "IC";
  }
  return "?";
}

inline ProblemKind parse_kind(const std::string& name) {
  if (name == "MCP") return ProblemKind::MCP;
  if (name == "DSP") return ProblemKind::DSP;
  if (name == "MIS") return ProblemKind::MIS;
  if (name == "TSP") return ProblemKind::TSP;
  if (name == "RH") return ProblemKind::RH;
  if (name == "IC") return ProblemKind::IC;
  throw std::invalid_argument("unknown problem kind \"" + name + "\"");
}

inline constexpr int kTspSymmetryWeight = 5;  // penalty weight on asymmetric selections
inline constexpr double kIsingJ = 1.0;
inline constexpr double kIsingH = 1.0;

/// Total register width (problem qubits plus the ancillas the ansatz needs).
inline int qubits_required(ProblemKind kind, int size) {
  switch (kind) {
    case ProblemKind::MCP: return size;
    case ProblemKind::DSP: return size + 5;  // cost ancilla + OR chain of a 5-control clause
    case ProblemKind::MIS: return size + 3;  // OR chain of a 4-control clause
    case ProblemKind::TSP: return size * size;
    case ProblemKind::RH: return size;
    case ProblemKind::IC: return size;
  }
  throw std::invalid_argument("unknown problem kind");
}

struct ProblemInstance {
  ProblemKind kind{};
  int size = 0;
  std::uint64_t seed = 0;
  int n_logical = 0;  // measured problem qubits
  int n_qubits = 0;   // full register incl. ancillas
  std::vector<std::pair<int, int>> edges;       // graph problems
  std::vector<std::uint32_t> closed_masks;      // bit i of closed_masks[k]: i in N[k] (DSP)
  std::vector<std::vector<int>> distances;      // TSP
  std::vector<double> diagonal_weights;         // RH coefficients r_i
  Hamiltonian observable;                       // RH and IC
};

namespace detail {

inline void check_size_range(ProblemKind kind, int size) {
  int lo = 0, hi = 0;
  switch (kind) {
    case ProblemKind::MCP:
    case ProblemKind::DSP:
    case ProblemKind::MIS:
      lo = 5; hi = 15; break;
    case ProblemKind::TSP:
      lo = 3; hi = 4; break;
    case ProblemKind::RH:
    case ProblemKind::IC:
      lo = 2; hi = 15; break;
  }
  if (size < lo || size > hi) {
    throw std::invalid_argument(std::string(kind_name(kind)) + " supports sizes " +
                                std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                                std::to_string(size));
  }
}

inline std::vector<std::pair<int, int>> circulant_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int offset : {1, 2}) {
    for (int i = 0; i < n; ++i) {
      const int j = (i + offset) % n;
      edges.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  return edges;
}

}  // namespace detail

inline ProblemInstance make_instance(ProblemKind kind, int size, std::uint64_t seed) {
  detail::check_size_range(kind, size);
  ProblemInstance inst;
  inst.kind = kind;
  inst.size = size;
  inst.seed = seed;
  inst.n_qubits = qubits_required(kind, size);
  inst.n_logical = (kind == ProblemKind::TSP) ? size * size : size;
  switch (kind) {
    case ProblemKind::MCP:
    case ProblemKind::DSP:
    case ProblemKind::MIS:
      inst.edges = detail::circulant_edges(size);
      inst.closed_masks.assign(size, 0);
      for (int k = 0; k < size; ++k) inst.closed_masks[k] = std::uint32_t(1) << k;
      for (auto [u, v] : inst.edges) {
        inst.closed_masks[u] |= std::uint32_t(1) << v;
        inst.closed_masks[v] |= std::uint32_t(1) << u;
      }
      break;
    case ProblemKind::TSP: {
      Rng rng(derive_seed(seed, {0x75D, static_cast<std::uint64_t>(size)}));
      inst.distances.assign(size, std::vector<int>(size, 0));
      for (int i = 0; i < size; ++i) {
        inst.distances[i][i] = 10;  // self-loops are made expensive
        for (int j = i + 1; j < size; ++j) {
          const int d = rng.uniform_int(1, 9);
          inst.distances[i][j] = d;
          inst.distances[j][i] = d;
        }
      }
      break;
    }
    case ProblemKind::RH: {
      Rng rng(derive_seed(seed, {0x4A, static_cast<std::uint64_t>(size)}));
      inst.observable = Hamiltonian(static_cast<std::uint32_t>(size));
      for (int i = 0; i < size; ++i) {
        const double r = rng.uniform(-1.0, 1.0);
        inst.diagonal_weights.push_back(r);
        inst.observable.add_term_on(r, {{static_cast<std::uint32_t>(i), 'Z'}});
      }
      break;
    }
    case ProblemKind::IC: {
      inst.observable = Hamiltonian(static_cast<std::uint32_t>(size));
      for (int i = 0; i + 1 < size; ++i) {
        inst.observable.add_term_on(-kIsingJ, {{static_cast<std::uint32_t>(i), 'X'},
                                            {static_cast<std::uint32_t>(i + 1), 'X'}});
      }
      for (int i = 0; i < size; ++i) {
        inst.observable.add_term_on(-kIsingH, {{static_cast<std::uint32_t>(i), 'Z'}});
      }
      break;
    }
  }
  return inst;
}

/// Sorted neighbor list of a node in a graph instance.
inline std::vector<int> neighbors(const ProblemInstance& inst, int node) {
  std::vector<int> out;
  for (auto [u, v] : inst.edges) {
    if (u == node) out.push_back(v);
    if (v == node) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

/// Classical objective on a packed bit assignment (bit i = node/entry i).
/// Lower is better for every kind.
inline double cost_from_bits(const ProblemInstance& inst, std::uint32_t bits) {
  switch (inst.kind) {
    case ProblemKind::MCP: {
      int cut = 0;
      for (auto [u, v] : inst.edges) {
        cut += (((bits >> u) ^ (bits >> v)) & 1u) ? 1 : 0;
      }
      return -static_cast<double>(cut);
    }
    case ProblemKind::DSP: {
      // -(covered nodes) + (chosen nodes), equal unit weights: a node is
      // covered when it or one of its neighbors is chosen.
      int covered = 0;
      for (std::uint32_t mask : inst.closed_masks) {
        if (bits & mask) ++covered;
      }
      const int ones = std::popcount(bits);
      return static_cast<double>(ones - covered);
    }
    case ProblemKind::MIS:
      return -static_cast<double>(std::popcount(bits));
    case ProblemKind::TSP: {
      const int n = inst.size;
      double cost = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if ((bits >> (i * n + j)) & 1u) cost += inst.distances[i][j];
        }
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const bool a = (bits >> (i * n + j)) & 1u;
          const bool b = (bits >> (j * n + i)) & 1u;
          if (a != b) cost += kTspSymmetryWeight;
        }
      }
      return cost;
    }
    default:
      throw std::invalid_argument(std::string(kind_name(inst.kind)) +
                                  " is evaluated through measured expectation values, "
                                  "not a classical bitstring cost");
  }
}

/// DSP feasibility: every node chosen or adjacent to a chosen node.
inline bool is_dominating(const ProblemInstance& inst, std::uint32_t bits) {
  for (std::uint32_t mask : inst.closed_masks) {
    if (!(bits & mask)) return false;
  }
  return true;
}

inline bool is_independent(const ProblemInstance& inst, std::uint32_t bits) {
  for (auto [u, v] : inst.edges) {
    if (((bits >> u) & 1u) && ((bits >> v) & 1u)) return false;
  }
  return true;
}

}  // namespace detail

/// Packs an MSB-first bitstring (leftmost char = highest qubit) into bits.
inline std::uint32_t pack_bitstring(const std::string& bitstring) {
  std::uint32_t bits = 0;
  const std::size_t n = bitstring.size();
  for (std::size_t p = 0; p < n; ++p) {
    const char c = bitstring[p];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring \"" + bitstring + "\" has a character besides 0/1");
    }
    if (c == '1') bits |= std::uint32_t(1) << (n - 1 - p);
  }
  return bits;
}

/// Classical objective of a measured bitstring over the logical register.
/// Lower is better; RH and IC reject this call (their energies come from
/// measured expectation values).
inline double evaluate_cost(const ProblemInstance& inst, const std::string& bitstring) {
  if (inst.kind == ProblemKind::RH || inst.kind == ProblemKind::IC) {
    throw std::invalid_argument(std::string(kind_name(inst.kind)) +
                                " has no classical bitstring cost");
  }
  if (bitstring.size() != static_cast<std::size_t>(inst.n_logical)) {
    throw std::invalid_argument("bitstring length " + std::to_string(bitstring.size()) +
                                " does not match the logical register of " +
                                std::to_string(inst.n_logical) + " qubits");
  }
  return detail::cost_from_bits(inst, pack_bitstring(bitstring));
}

// ---------------------------------------------------------------------------
// Exact ground energy of a Pauli observable (for IC reference values):
// Lanczos iteration with full reorthogonalization; the small Krylov
// tridiagonal is solved by the implicit-shift QL method.

struct GroundState {
  double energy = 0;
  std::vector<std::complex<double>> vector;
};

namespace detail {

/// Eigen-decomposition of a symmetric tridiagonal matrix (implicit-shift QL).
/// d: diagonal, in/out (eigenvalues); e: subdiagonal e[0..n-2], destroyed;
/// z: identity on entry, columns become eigenvectors (z[i][j] = component i
/// of eigenvector j).
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                           std::vector<std::vector<double>>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tridiagonal eigensolver failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z[k][i + 1];
            z[k][i + 1] = s * z[k][i] + c * f;
            z[k][i] = c * z[k][i] - s * f;
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

}  // namespace detail

/// Smallest eigenvalue and its eigenvector. Exact up to floating-point
/// round-off: for registers up to 10 qubits the full Krylov space is built,
/// beyond that the iteration runs until the Ritz value stops moving.
inline GroundState ground_state(const Hamiltonian& h) {
  using Cd = std::complex<double>;
  const std::size_t dim = std::size_t(1) << h.n_qubits();
  if (h.empty()) throw std::invalid_argument("ground_state needs a nonempty observable");
  const std::size_t max_vectors = std::min<std::size_t>(dim, 240);

  Rng rng(0x9d2c5680u);  // fixed: reference values must not depend on callers
  std::vector<std::vector<Cd>> basis;
  std::vector<double> alpha, beta;

  std::vector<Cd> v(dim);
  double norm = 0;
  for (auto& a : v) {
    a = Cd(rng.uniform(-1, 1), 0);
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (auto& a : v) a /= norm;
  basis.push_back(v);

  double previous = 1e300;
  std::vector<double> ritz_d, ritz_e;
  std::vector<std::vector<double>> ritz_z;
  for (std::size_t j = 0; j < max_vectors; ++j) {
    std::vector<Cd> w(dim, Cd(0, 0));
    accumulate_apply(h, basis[j], w);
    Cd a{0, 0};
    for (std::size_t i = 0; i < dim; ++i) a += std::conj(basis[j][i]) * w[i];
    alpha.push_back(a.real());

    // Current Ritz approximation: smallest eigenvalue of the tridiagonal.
    ritz_d = alpha;
    ritz_e = beta;
    ritz_z.assign(alpha.size(), std::vector<double>(alpha.size(), 0.0));
    for (std::size_t i = 0; i < alpha.size(); ++i) ritz_z[i][i] = 1.0;
    detail::tridiagonal_ql(ritz_d, ritz_e, ritz_z);
    const std::size_t best =
        std::min_element(ritz_d.begin(), ritz_d.end()) - ritz_d.begin();
    if (dim > 1024 && j > 8 && std::abs(ritz_d[best] - previous) < 1e-13) break;
    previous = ritz_d[best];

    if (j + 1 == max_vectors) break;
    // Next Lanczos vector with full reorthogonalization (twice for safety).
    for (std::size_t i = 0; i < dim; ++i) w[i] -= a * basis[j][i];
    if (j > 0) {
      for (std::size_t i = 0; i < dim; ++i) w[i] -= beta[j - 1] * basis[j - 1][i];
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        Cd overlap{0, 0};
        for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(b[i]) * w[i];
        for (std::size_t i = 0; i < dim; ++i) w[i] -= overlap * b[i];
      }
    }
    double wnorm = 0;
    for (const auto& x : w) wnorm += std::norm(x);
    wnorm = std::sqrt(wnorm);
    if (wnorm < 1e-12) break;  // Krylov space exhausted
    beta.push_back(wnorm);
    for (auto& x : w) x /= wnorm;
    basis.push_back(std::move(w));
  }

  const std::size_t k = alpha.size();
  const std::size_t best = std::min_element(ritz_d.begin(), ritz_d.end()) - ritz_d.begin();
  GroundState gs;
  gs.energy = ritz_d[best];
  gs.vector.assign(dim, Cd(0, 0));
  for (std::size_t j = 0; j < k; ++j) {
    const double w = ritz_z[j][best];
    for (std::size_t i = 0; i < dim; ++i) gs.vector[i] += w * basis[j][i];
  }
  double vnorm = 0;
  for (const auto& x : gs.vector) vnorm += std::norm(x);
  vnorm = std::sqrt(vnorm);
  for (auto& x : gs.vector) x /= vnorm;
  return gs;
}

/// Best attainable objective value, computed classically:
/// exhaustive enumeration for the bitstring problems, the diagonal minimum
/// for RH, and exact diagonalization for IC.
inline double brute_force_optimum(const ProblemInstance& inst) {
  switch (inst.kind) {
    case ProblemKind::MCP:
    case ProblemKind::DSP:
    case ProblemKind::MIS:
    case ProblemKind::TSP: {
      if (inst.n_logical > 20) {
        throw std::runtime_error("exhaustive search capped at 20 logical qubits");
      }
      double best = detail::cost_from_bits(inst, 0);
      for (std::uint32_t bits = 1; bits < (std::uint32_t(1) << inst.n_logical); ++bits) {
        best = std::min(best, detail::cost_from_bits(inst, bits));
      }
      return best;
    }
    case ProblemKind::RH: {
      // min over assignments of sum_i r_i (1-2b_i) = -sum_i |r_i|
      double total = 0;
      for (double r : inst.diagonal_weights) total -= std::abs(r);
      return total;
    }
    case ProblemKind::IC:
      return ground_state(inst.observable).energy;
  }
  throw std::invalid_argument("unknown problem kind");
}

}  // namespace vqbench

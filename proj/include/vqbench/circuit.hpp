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
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Gate-level intermediate representation.
//
// Conventions used throughout the library:
//  - Amplitude order is little-endian: qubit 0 is the least significant bit
//    of a basis-state index.
//  - Printed bitstrings are MSB-first: the leftmost character is the highest
//    qubit index, the rightmost is qubit 0.
//  - Gate operand order is controls first, then ancillas (for composite
//    kinds that need them), then the target last.

namespace vqbench {

enum class GateKind {
  // Base set. Simulation and depth are defined on these only.
  H,
  X,
  Rx,
  Ry,
  Rz,
  CNOT,
  Toffoli,
  CRy,
  CRz,
  // Composite kinds. decompose() rewrites them into the base set.
  QOR,        // [c0, c1, t]: flips t iff c0 OR c1
  MultiQOR,   // [c0..c_{k-1}, a0..a_{k-3}, t]: flips t iff any control set
  ORCtrlRz,   // [c0..c_{k-1}, chain ancillas, result ancilla, t]: Rz(angle) on t iff any control set
  NORCtrlRx,  // [c0..c_{k-1}, chain ancillas, result ancilla, t]: Rx(angle) on t iff no control set
  Rxx,        // [q0, q1]: exp(-i angle/2 XX)
  Ryy,        // [q0, q1]: exp(-i angle/2 YY)
  Rzz,        // [q0, q1]: exp(-i angle/2 ZZ)
  DickeRow,   // [q0..q_{n-1}], n in {3,4}: prepares the weight-2 Dicke state from |0..0>
};

inline const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::CNOT: return "CNOT";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::CRy: return "CRy";
    case GateKind::CRz: return "CRz";
    case GateKind::QOR: return "QOR";
    case GateKind::MultiQOR: return "MultiQOR";
    case GateKind::ORCtrlRz: return "ORCtrlRz";
    case GateKind::NORCtrlRx: return "NORCtrlRx";
    case GateKind::Rxx: return "Rxx";
    case GateKind::Ryy: return "Ryy";
    case GateKind::Rzz: return "Rzz";
    case GateKind::DickeRow: return "DickeRow";
  }
  return "?";
}

inline bool is_composite(GateKind k) {
  switch (k) {
    case GateKind::QOR:
    case GateKind::MultiQOR:
    case GateKind::ORCtrlRz:
    case GateKind::NORCtrlRx:
    case GateKind::Rxx:
    case GateKind::Ryy:
    case GateKind::Rzz:
    case GateKind::DickeRow:
      return true;
    default:
      return false;
  }
}

inline bool uses_angle(GateKind k) {
  switch (k) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::CRy:
    case GateKind::CRz:
    case GateKind::ORCtrlRz:
    case GateKind::NORCtrlRx:
    case GateKind::Rxx:
    case GateKind::Ryy:
    case GateKind::Rzz:
      return true;
    default:
      return false;
  }
}

struct Gate {
  GateKind kind;
  double angle = 0.0;
  std::vector<std::uint32_t> qubits;  // controls..., ancillas..., target

  Gate(GateKind k, std::vector<std::uint32_t> qs) : kind(k), qubits(std::move(qs)) {}
  Gate(GateKind k, double a, std::vector<std::uint32_t> qs)
      : kind(k), angle(a), qubits(std::move(qs)) {}
};

inline std::string to_string(const Gate& g) {
  std::ostringstream os;
  os << kind_name(g.kind);
  if (uses_angle(g.kind)) os << "(" << g.angle << ")";
  os << "[";
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    if (i) os << ",";
    os << g.qubits[i];
  }
  os << "]";
  return os.str();
}

namespace detail {

// Number of controls of a multi-controlled composite, recovered from the
// operand count. MultiQOR carries k controls, k-2 chain ancillas and one
// target (2k-1 operands); the OR/NOR controlled rotations additionally carry
// the OR-result ancilla (2k operands).
inline std::size_t multiqor_controls(std::size_t operands) { return (operands + 1) / 2; }
inline std::size_t ctrl_rot_controls(std::size_t operands) { return operands / 2; }

inline void check_operand_count(const Gate& g) {
  const std::size_t m = g.qubits.size();
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("gate ") + kind_name(g.kind) + ": " + what +
                                " (got " + std::to_string(m) + " operands)");
  };
  switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      if (m != 1) fail("expects exactly one qubit");
      break;
    case GateKind::CNOT:
    case GateKind::CRy:
    case GateKind::CRz:
    case GateKind::Rxx:
    case GateKind::Ryy:
    case GateKind::Rzz:
      if (m != 2) fail("expects exactly two qubits");
      break;
    case GateKind::Toffoli:
    case GateKind::QOR:
      if (m != 3) fail("expects exactly three qubits");
      break;
    case GateKind::MultiQOR:
      // 2k-1 operands, k >= 2
      if (m < 3 || m % 2 == 0) fail("expects an odd operand count of at least 3");
      break;
    case GateKind::ORCtrlRz:
    case GateKind::NORCtrlRx:
      // 2k operands, k >= 2
      if (m < 4 || m % 2 == 1) fail("expects an even operand count of at least 4");
      break;
    case GateKind::DickeRow:
      if (m != 3 && m != 4) fail("supports rows of three or four qubits");
      break;
  }
}

}  // namespace detail

/// An ordered gate list over a fixed-width qubit register.
class Circuit {
 public:
  explicit Circuit(std::uint32_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) throw std::invalid_argument("circuit needs at least one qubit");
  }

  std::uint32_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Appends a gate after validating operand count, operand distinctness,
  /// register bounds and angle finiteness.
  void add(Gate g) {
    detail::check_operand_count(g);
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (g.qubits[i] >= n_qubits_) {
        throw std::invalid_argument("gate " + to_string(g) + ": qubit index out of range for a " +
                                    std::to_string(n_qubits_) + "-qubit register");
      }
      for (std::size_t j = i + 1; j < g.qubits.size(); ++j) {
        if (g.qubits[i] == g.qubits[j]) {
          throw std::invalid_argument("gate " + to_string(g) + ": operands must be distinct");
        }
      }
    }
    if (uses_angle(g.kind) && !std::isfinite(g.angle)) {
      throw std::invalid_argument(std::string("gate ") + kind_name(g.kind) +
                                  ": rotation angle must be finite");
    }
    gates_.push_back(std::move(g));
  }

  // Shorthand builders for the base set.
  void h(std::uint32_t q) { add({GateKind::H, {q}}); }
  void x(std::uint32_t q) { add({GateKind::X, {q}}); }
  void rx(double a, std::uint32_t q) { add({GateKind::Rx, a, {q}}); }
  void ry(double a, std::uint32_t q) { add({GateKind::Ry, a, {q}}); }
  void rz(double a, std::uint32_t q) { add({GateKind::Rz, a, {q}}); }
  void cnot(std::uint32_t c, std::uint32_t t) { add({GateKind::CNOT, {c, t}}); }
  void toffoli(std::uint32_t c0, std::uint32_t c1, std::uint32_t t) {
    add({GateKind::Toffoli, {c0, c1, t}});
  }
  void cry(double a, std::uint32_t c, std::uint32_t t) { add({GateKind::CRy, a, {c, t}}); }
  void crz(double a, std::uint32_t c, std::uint32_t t) { add({GateKind::CRz, a, {c, t}}); }

 private:
  std::uint32_t n_qubits_;
  std::vector<Gate> gates_;
};

/// Critical-path depth of a base-set circuit: gates are packed into the
/// earliest layer where all their operands are free, and the depth is the
/// number of layers. Composite gates are rejected; decompose first.
inline std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> busy_until(c.n_qubits(), 0);
  std::size_t d = 0;
  for (const Gate& g : c.gates()) {
    if (is_composite(g.kind)) {
      throw std::invalid_argument(std::string("depth() is defined on decomposed circuits only; "
                                              "found composite gate ") + kind_name(g.kind));
    }
    std::size_t layer = 0;
    for (std::uint32_t q : g.qubits) layer = std::max(layer, busy_until[q]);
    ++layer;
    for (std::uint32_t q : g.qubits) busy_until[q] = layer;
    d = std::max(d, layer);
  }
  return d;
}

namespace detail {

inline void emit_qor(std::uint32_t c0, std::uint32_t c1, std::uint32_t t, Circuit& out) {
  out.toffoli(c0, c1, t);
  out.cnot(c0, t);
  out.cnot(c1, t);
}

// Flips `target` iff any of `controls` is set. `chain` must hold
// controls.size()-2 ancillas in |0>; they are returned to |0>.
inline void emit_multiqor(const std::vector<std::uint32_t>& controls,
                          const std::vector<std::uint32_t>& chain, std::uint32_t target,
                          Circuit& out) {
  const std::size_t k = controls.size();
  if (k == 2) {
    emit_qor(controls[0], controls[1], target, out);
    return;
  }
  // Forward chain: a0 = c0|c1, a_i = c_{i+1}|a_{i-1}, target ^= c_{k-1}|a_{k-3}.
  emit_qor(controls[0], controls[1], chain[0], out);
  for (std::size_t i = 1; i + 2 < k; ++i) emit_qor(controls[i + 1], chain[i - 1], chain[i], out);
  emit_qor(controls[k - 1], chain[k - 3], target, out);
  // Uncompute the chain.
  for (std::size_t i = k - 2; i-- > 1;) emit_qor(controls[i + 1], chain[i - 1], chain[i], out);
  emit_qor(controls[0], controls[1], chain[0], out);
}

// Controlled Rx from the base set: X = HZH, so CRx = H . CRz . H on the target.
inline void emit_crx(double angle, std::uint32_t c, std::uint32_t t, Circuit& out) {
  out.h(t);
  out.crz(angle, c, t);
  out.h(t);
}

// Doubly controlled Ry via the usual V / V-dagger ladder; Ry angles about the
// same axis add, so V = CRy(angle/2).
inline void emit_ccry(double angle, std::uint32_t c0, std::uint32_t c1, std::uint32_t t,
                      Circuit& out) {
  out.cry(angle / 2, c1, t);
  out.cnot(c0, c1);
  out.cry(-angle / 2, c1, t);
  out.cnot(c0, c1);
  out.cry(angle / 2, c0, t);
}

inline void emit_rzz(double angle, std::uint32_t q0, std::uint32_t q1, Circuit& out) {
  out.cnot(q0, q1);
  out.rz(angle, q1);
  out.cnot(q0, q1);
}

// Weight-2 Dicke state on a 3- or 4-qubit row, built from split-and-cyclic-shift
// blocks. Exact target amplitudes: 1/sqrt(3) resp. 1/sqrt(6) on every
// Hamming-weight-2 basis state of the row.
inline void emit_dicke_row(const std::vector<std::uint32_t>& row, Circuit& out) {
  const std::size_t n = row.size();
  out.x(row[n - 1]);
  out.x(row[n - 2]);
  for (std::size_t l = n; l >= 2; --l) {
    const std::uint32_t a = row[l - 2], b = row[l - 1];
    out.cnot(a, b);
    out.cry(2 * std::acos(std::sqrt(1.0 / static_cast<double>(l))), b, a);
    out.cnot(a, b);
    if (l > 2) {
      const std::uint32_t x = row[l - 3], y = row[l - 2], z = row[l - 1];
      out.cnot(x, z);
      emit_ccry(2 * std::acos(std::sqrt(2.0 / static_cast<double>(l))), y, z, x, out);
      out.cnot(x, z);
    }
  }
}

}  // namespace detail

/// Rewrites every composite gate into the base set
/// {H, X, Rx, Ry, Rz, CNOT, Toffoli, CRy, CRz}. Base gates pass through
/// unchanged; Toffoli stays primitive. Ancilla operands of a composite are
/// assumed |0> on entry and are returned to |0>.
inline Circuit decompose(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (const Gate& g : c.gates()) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::QOR:
        detail::emit_qor(q[0], q[1], q[2], out);
        break;
      case GateKind::MultiQOR: {
        const std::size_t k = detail::multiqor_controls(q.size());
        std::vector<std::uint32_t> controls(q.begin(), q.begin() + k);
        std::vector<std::uint32_t> chain(q.begin() + k, q.end() - 1);
        detail::emit_multiqor(controls, chain, q.back(), out);
        break;
      }
      case GateKind::ORCtrlRz:
      case GateKind::NORCtrlRx: {
        const std::size_t k = detail::ctrl_rot_controls(q.size());
        std::vector<std::uint32_t> controls(q.begin(), q.begin() + k);
        std::vector<std::uint32_t> chain(q.begin() + k, q.end() - 2);
        const std::uint32_t result = q[q.size() - 2];
        const std::uint32_t target = q.back();
        detail::emit_multiqor(controls, chain, result, out);
        if (g.kind == GateKind::ORCtrlRz) {
          out.crz(g.angle, result, target);
        } else {
          out.x(result);
          detail::emit_crx(g.angle, result, target, out);
          out.x(result);
        }
        detail::emit_multiqor(controls, chain, result, out);
        break;
      }
      case GateKind::Rxx:
        out.h(q[0]);
        out.h(q[1]);
        detail::emit_rzz(g.angle, q[0], q[1], out);
        out.h(q[0]);
        out.h(q[1]);
        break;
      case GateKind::Ryy:
        out.rx(-std::numbers::pi / 2, q[0]);
        out.rx(-std::numbers::pi / 2, q[1]);
        detail::emit_rzz(g.angle, q[0], q[1], out);
        out.rx(std::numbers::pi / 2, q[0]);
        out.rx(std::numbers::pi / 2, q[1]);
        break;
      case GateKind::Rzz:
        detail::emit_rzz(g.angle, q[0], q[1], out);
        break;
      case GateKind::DickeRow:
        detail::emit_dicke_row(q, out);
        break;
      default:
        out.add(g);
        break;
    }
  }
  return out;
}

}  // namespace vqbench

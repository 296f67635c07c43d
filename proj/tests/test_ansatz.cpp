#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "vqbench/ansatz.hpp"
#include "vqbench/problems.hpp"
#include "vqbench/simulator.hpp"

using namespace vqbench;

namespace {

std::size_t count_kind(const Circuit& c, GateKind k) {
  return static_cast<std::size_t>(
      std::count_if(c.gates().begin(), c.gates().end(),
                    [k](const Gate& g) { return g.kind == k; }));
}

Histogram single_outcome(const std::string& key, std::uint64_t shots) {
  Histogram h;
  h.counts[key] = shots;
  h.shots = shots;
  return h;
}

int row_weight(std::size_t index, int row, int n) {
  int w = 0;
  for (int j = 0; j < n; ++j) {
    if ((index >> (row * n + j)) & 1u) ++w;
  }
  return w;
}

}  // namespace

TEST_CASE("parameter counts per problem family") {
  CHECK(param_count(make_instance(ProblemKind::MCP, 7, 1)) == 2);
  CHECK(param_count(make_instance(ProblemKind::DSP, 6, 1)) == 2);
  CHECK(param_count(make_instance(ProblemKind::MIS, 8, 1)) == 2);
  CHECK(param_count(make_instance(ProblemKind::TSP, 3, 1)) == 2);
  CHECK(param_count(make_instance(ProblemKind::RH, 4, 1)) == 4);
  CHECK(param_count(make_instance(ProblemKind::IC, 4, 1)) == 16);
}

TEST_CASE("build_circuits validates its parameter vector") {
  const auto inst = make_instance(ProblemKind::RH, 3, 5);
  const std::vector<double> short_params{0.1, 0.2};
  CHECK_THROWS_WITH(build_circuits(inst, short_params),
                    Catch::Matchers::ContainsSubstring("takes 3 parameters, got 2"));
  const std::vector<double> bad{0.1, std::nan(""), 0.3};
  CHECK_THROWS_WITH(build_circuits(inst, bad),
                    Catch::Matchers::ContainsSubstring("non-finite"));
}

TEST_CASE("max-cut circuit layout") {
  const auto inst = make_instance(ProblemKind::MCP, 5, 3);
  const std::vector<double> params{0.7, 0.3};
  const auto set = build_circuits(inst, params);
  REQUIRE(set.circuits.size() == 1);
  CHECK(set.circuits[0].basis == Basis::Z);
  const Circuit& c = set.circuits[0].circuit;
  CHECK(c.n_qubits() == 5);
  CHECK(count_kind(c, GateKind::H) == 5);
  CHECK(count_kind(c, GateKind::Rzz) == 10);  // K5 edge count
  CHECK(count_kind(c, GateKind::Rx) == 5);
  CHECK(c.size() == 20);
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Rzz) CHECK(g.angle == Catch::Approx(2 * 0.7));
    if (g.kind == GateKind::Rx) CHECK(g.angle == Catch::Approx(2 * 0.3));
  }
}

TEST_CASE("dominating-set circuit layout") {
  const auto inst = make_instance(ProblemKind::DSP, 5, 3);
  const auto set = build_circuits(inst, std::vector<double>{0.4, 0.2});
  const Circuit& c = set.circuits[0].circuit;
  CHECK(c.n_qubits() == 10);  // 5 nodes + cost + 3 chain + result
  CHECK(count_kind(c, GateKind::H) == 6);  // nodes plus the phase-tag ancilla
  CHECK(count_kind(c, GateKind::ORCtrlRz) == 5);
  CHECK(count_kind(c, GateKind::X) == 10);  // the not-chosen clause sandwiches
  CHECK(count_kind(c, GateKind::CRz) == 5);
  CHECK(count_kind(c, GateKind::Rx) == 5);
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::ORCtrlRz) {
      CHECK(g.qubits.size() == 10);  // 5 controls, 3 chain, result, target
      CHECK(g.qubits.back() == 5);   // phase lands on the cost ancilla
    }
  }
}

TEST_CASE("independent-set circuit layout") {
  const auto inst = make_instance(ProblemKind::MIS, 6, 2);
  const auto set = build_circuits(inst, std::vector<double>{0.5, 0.25});
  const Circuit& c = set.circuits[0].circuit;
  CHECK(c.n_qubits() == 9);
  CHECK(count_kind(c, GateKind::H) == 6);
  CHECK(count_kind(c, GateKind::Rz) == 6);
  CHECK(count_kind(c, GateKind::NORCtrlRx) == 6);
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Rz) CHECK(g.angle == Catch::Approx(1.0));
    if (g.kind == GateKind::NORCtrlRx) {
      CHECK(g.angle == Catch::Approx(0.5));
      CHECK(g.qubits.size() == 8);  // 4 neighbours, 2 chain, result, target
    }
  }
}

TEST_CASE("tour circuit layout") {
  const auto inst = make_instance(ProblemKind::TSP, 3, 9);
  const auto set = build_circuits(inst, std::vector<double>{0.3, 0.6});
  const Circuit& c = set.circuits[0].circuit;
  CHECK(c.n_qubits() == 9);
  CHECK(count_kind(c, GateKind::DickeRow) == 3);
  CHECK(count_kind(c, GateKind::Rz) == 9);    // one per matrix entry
  CHECK(count_kind(c, GateKind::Rzz) == 3);   // one per symmetric pair
  CHECK(count_kind(c, GateKind::Rxx) == 6);   // two adjacent pairs per row
  CHECK(count_kind(c, GateKind::Ryy) == 6);
  // Diagonal entries pay the self-loop weight, off-diagonals their distance.
  for (const Gate& g : c.gates()) {
    if (g.kind != GateKind::Rz) continue;
    const int i = static_cast<int>(g.qubits[0]) / 3;
    const int j = static_cast<int>(g.qubits[0]) % 3;
    CHECK(g.angle == Catch::Approx(-0.3 * inst.distances[i][j]));
  }
}

TEST_CASE("random-diagonal circuit applies one Rx per weight") {
  const auto inst = make_instance(ProblemKind::RH, 4, 11);
  const std::vector<double> params{0.1, 0.2, 0.3, 0.4};
  const auto set = build_circuits(inst, params);
  const Circuit& c = set.circuits[0].circuit;
  REQUIRE(c.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(c.gates()[i].kind == GateKind::Rx);
    CHECK(c.gates()[i].angle == Catch::Approx(params[i]));
    CHECK(c.gates()[i].qubits[0] == i);
  }
}

TEST_CASE("transverse-chain ansatz measures in two bases") {
  const auto inst = make_instance(ProblemKind::IC, 3, 0);
  const std::vector<double> params(12, 0.15);
  const auto set = build_circuits(inst, params);
  REQUIRE(set.circuits.size() == 2);
  CHECK(set.circuits[0].basis == Basis::Z);
  CHECK(set.circuits[1].basis == Basis::X);
  const Circuit& z = set.circuits[0].circuit;
  const Circuit& x = set.circuits[1].circuit;
  CHECK(count_kind(z, GateKind::Ry) == 6);
  CHECK(count_kind(z, GateKind::Rz) == 6);
  CHECK(count_kind(z, GateKind::CNOT) == 3);  // all ordered pairs of 3 qubits
  CHECK(count_kind(z, GateKind::H) == 0);
  // The X-basis circuit is the Z circuit plus a closing H on every qubit.
  REQUIRE(x.size() == z.size() + 3);
  for (std::size_t i = 0; i < z.size(); ++i) {
    CHECK(x.gates()[i].kind == z.gates()[i].kind);
    CHECK(x.gates()[i].qubits == z.gates()[i].qubits);
  }
  for (std::size_t i = z.size(); i < x.size(); ++i) {
    CHECK(x.gates()[i].kind == GateKind::H);
  }
}

TEST_CASE("histogram energy of a fixed cut assignment") {
  const auto inst = make_instance(ProblemKind::MCP, 5, 3);
  // Nodes 0 and 1 on one side of K5: every edge to the other three is cut.
  const double e = expectation_from_counts(inst, {single_outcome("00011", 4096)});
  CHECK(e == -6.0);
}

TEST_CASE("histogram energy averages over outcomes") {
  const auto inst = make_instance(ProblemKind::MCP, 5, 3);
  Histogram h;
  double expected = 0;
  for (std::uint32_t b = 0; b < 32; ++b) {
    std::string key(5, '0');
    for (int q = 0; q < 5; ++q) {
      if ((b >> q) & 1u) key[4 - q] = '1';
    }
    h.counts[key] = 3;
    expected += 3.0 * evaluate_cost(inst, key);
  }
  h.shots = 96;
  expected /= 96.0;
  CHECK(expectation_from_counts(inst, {h}) == Catch::Approx(expected).margin(1e-12));
  // K5 cuts each of the 10 edges in half of all assignments.
  CHECK(expected == Catch::Approx(-5.0).margin(1e-12));
}

TEST_CASE("histogram energy discards ancilla bits") {
  const auto inst = make_instance(ProblemKind::MIS, 6, 2);
  // 9-bit outcomes; the top three ancilla bits must not affect the estimate.
  Histogram h;
  h.counts["000000101"] = 2;  // nodes 0 and 2
  h.counts["110000101"] = 2;  // same nodes, stray ancilla bits
  h.counts["000001001"] = 2;  // nodes 0 and 3
  h.counts["000000000"] = 2;
  h.shots = 8;
  // Three weight-2 selections and one empty one.
  CHECK(expectation_from_counts(inst, {h}) == Catch::Approx(-1.5).margin(1e-12));
}

TEST_CASE("transverse-chain energy combines both histograms") {
  const auto inst = make_instance(ProblemKind::IC, 2, 0);
  // All-zero Z outcomes: sum <Z_i> = 2. All-zero X outcomes: <X0 X1> = 1.
  const double e = expectation_from_counts(
      inst, {single_outcome("00", 1024), single_outcome("00", 1024)});
  CHECK(e == Catch::Approx(-3.0).margin(1e-12));
}

TEST_CASE("histogram count and shape validation") {
  const auto mcp = make_instance(ProblemKind::MCP, 5, 3);
  const auto ic = make_instance(ProblemKind::IC, 2, 0);
  CHECK_THROWS_WITH(
      expectation_from_counts(mcp, {single_outcome("00011", 8), single_outcome("00011", 8)}),
      Catch::Matchers::ContainsSubstring("expects 1 histogram(s), got 2"));
  CHECK_THROWS_WITH(expectation_from_counts(ic, {single_outcome("00", 8)}),
                    Catch::Matchers::ContainsSubstring("expects 2 histogram(s), got 1"));
  CHECK_THROWS_WITH(expectation_from_counts(mcp, {Histogram{}}),
                    Catch::Matchers::ContainsSubstring("empty histogram"));
  CHECK_THROWS_WITH(expectation_from_counts(mcp, {single_outcome("0011", 8)}),
                    Catch::Matchers::ContainsSubstring("does not cover the full register"));
}

TEST_CASE("sampled energy converges to the exact energy") {
  const auto inst = make_instance(ProblemKind::MCP, 5, 3);
  const std::vector<double> params{0.9, 0.4};
  const double exact = exact_energy(inst, params);
  const auto set = build_circuits(inst, params);
  const auto job = run_job(decompose(set.circuits[0].circuit), 1'000'000, 77);
  const double sampled = expectation_from_counts(inst, {job.histogram});
  CHECK(std::abs(sampled - exact) < 0.02);
}

TEST_CASE("zero-angle random-diagonal circuit is deterministic") {
  const auto inst = make_instance(ProblemKind::RH, 4, 11);
  const std::vector<double> zeros(4, 0.0);
  double weight_sum = 0;
  for (double w : inst.diagonal_weights) weight_sum += w;
  CHECK(exact_energy(inst, zeros) == Catch::Approx(weight_sum).margin(1e-12));
  const auto set = build_circuits(inst, zeros);
  const auto job = run_job(decompose(set.circuits[0].circuit), 256, 5);
  REQUIRE(job.histogram.counts.size() == 1);
  CHECK(job.histogram.counts.begin()->first == "0000");
}

TEST_CASE("cut energy is periodic in both parameters") {
  const auto inst = make_instance(ProblemKind::MCP, 5, 3);
  const double g = 0.83, b = 0.41;
  const double base = exact_energy(inst, std::vector<double>{g, b});
  const double shift_g = exact_energy(inst, std::vector<double>{g + 2 * std::numbers::pi, b});
  const double shift_b = exact_energy(inst, std::vector<double>{g, b + std::numbers::pi});
  CHECK(base == Catch::Approx(shift_g).margin(1e-9));
  CHECK(base == Catch::Approx(shift_b).margin(1e-9));
}

TEST_CASE("guarded mixer keeps the state in the independent-set subspace") {
  const auto inst = make_instance(ProblemKind::MIS, 6, 2);
  const auto n = static_cast<std::uint32_t>(inst.size);
  // The mixer bank alone, from the empty selection.
  Circuit c(static_cast<std::uint32_t>(inst.n_qubits));
  for (int k = 0; k < inst.size; ++k) {
    std::vector<std::uint32_t> operands;
    for (int nb : neighbors(inst, k)) operands.push_back(static_cast<std::uint32_t>(nb));
    operands.insert(operands.end(), {n, n + 1, n + 2, static_cast<std::uint32_t>(k)});
    c.add({GateKind::NORCtrlRx, 1.1, std::move(operands)});
  }
  const StateVector state = simulate(decompose(c));
  const std::uint32_t logical_mask = (1u << n) - 1;
  bool spread = false;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (std::norm(state[i]) < 1e-18) continue;
    const auto bits = static_cast<std::uint32_t>(i);
    CHECK((bits >> n) == 0);  // ancillas end clean
    CHECK(detail::is_independent(inst, bits & logical_mask));
    if ((bits & logical_mask) != 0) spread = true;
  }
  CHECK(spread);  // the mixer actually moved amplitude off the empty set
}

TEST_CASE("tour mixer preserves the row weights") {
  const auto inst = make_instance(ProblemKind::TSP, 3, 9);
  Circuit c(9);
  for (int i = 0; i < 3; ++i) {
    c.add({GateKind::DickeRow,
           {static_cast<std::uint32_t>(3 * i), static_cast<std::uint32_t>(3 * i + 1),
            static_cast<std::uint32_t>(3 * i + 2)}});
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j + 1 < 3; ++j) {
      const auto a = static_cast<std::uint32_t>(3 * i + j);
      c.add({GateKind::Rxx, 0.7, {a, a + 1}});
      c.add({GateKind::Ryy, 0.7, {a, a + 1}});
    }
  }
  const StateVector state = simulate(decompose(c));
  std::size_t support = 0;
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    if (std::norm(state[idx]) < 1e-18) continue;
    ++support;
    for (int row = 0; row < 3; ++row) CHECK(row_weight(idx, row, 3) == 2);
  }
  CHECK(support > 1);
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifk/graph.hpp"

namespace ifk {

/// The degree threshold index l: k/2 - 1 for even k, (k-3)/2 for odd k.
int discharge_level(int k);

/// Degree/state class of a vertex, written U^d_j, F^d_j or I^d.
struct VertexClass {
  VertexState state;
  std::size_t degree = 0;
  /// Odd k only: U_0 of degree 3 with exactly two neighbours in U^2_l.
  bool needy = false;

  std::string tag() const;
};

std::vector<VertexClass> classify(const PrecoloredGraph& g);

struct ChargeReport {
  int k = 2;
  std::vector<VertexClass> classes;
  std::vector<std::int64_t> initial;
  std::vector<std::int64_t> final;
  std::int64_t total_initial = 0;
  std::int64_t total_final = 0;
  std::int64_t minus_two_rho = 0;  // -2 * potential of the whole vertex set

  bool sum_identity_holds() const { return total_initial == minus_two_rho; }
  bool conserved() const { return total_initial == total_final; }
};

/// ch(v) = C_E d(v) - 2 coeff(v); final charges equal the initial ones.
/// Throws std::invalid_argument when a vertex is precolored I.
ChargeReport initial_charges(const PrecoloredGraph& g);

/// Initial charges followed by the rules for k's parity, all transfers
/// computed from the initial classification and applied at once.
/// Even k: each U^2_l vertex takes 1 from every neighbour.
/// Odd k: each U^2_l vertex takes 2 from every neighbour, and each needy
/// vertex takes 1 from its neighbour outside U^2_l.
ChargeReport discharge(const PrecoloredGraph& g);

/// Lower bound on the final charge of a class, when the tables list one.
struct ChargeBound {
  std::int64_t value = 0;
  /// True when the bound relies on structure only a smallest counterexample
  /// is guaranteed to have; such bounds can fail on ordinary graphs.
  bool counterexample_only = false;
};

std::optional<ChargeBound> charge_lower_bound(int k, const VertexClass& c);

/// TSV: header row, one row per vertex (vertex, class, initial, final),
/// then total and -2rho rows.
std::string format_charge_report(const ChargeReport& report);

}  // namespace ifk

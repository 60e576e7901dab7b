#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "neumaier/finite_field.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/group.hpp"

namespace neumaier {

/// Data defining the cyclotomic Cayley graph on GF(q1) x GF(q2).
///
/// alpha1 / alpha2 are chosen by position in FieldSpec::primitive_elements().
struct GammaSpec {
  std::uint32_t m = 0;
  FieldSpec field1;
  FieldSpec field2;
  DlogTable alpha1;
  DlogTable alpha2;
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
  std::size_t alpha1_position = 0;
  std::size_t alpha2_position = 0;

  // Throws InvalidArgument when q1 or q2 is not a prime power, m does not divide
  // q_i - 1, or an alpha position is out of range.
  static GammaSpec make(std::uint32_t m, std::uint32_t q1, std::uint32_t q2, std::size_t alpha1_position = 0,
                        std::size_t alpha2_position = 0);

  std::uint32_t q1() const { return field1.q(); }
  std::uint32_t q2() const { return field2.q(); }
  // The connection set is closed under negation iff q1 n1 and q2 n2 have equal parity.
  bool undirected() const { return (std::uint64_t{q1()} * n1) % 2 == (std::uint64_t{q2()} * n2) % 2; }
  AbelianGroup group() const { return AbelianGroup::field_product(field1, field2); }
  std::uint32_t element(FieldElement x, FieldElement y) const { return x.index * q2() + y.index; }
};

/// The m + 3 basic sets {0}, C1, C2, D_0..D_{m-1}.
struct GammaClasses {
  ConnectionSet c1;
  ConnectionSet c2;
  std::vector<ConnectionSet> d;
};

GammaClasses build_classes(const GammaSpec& spec);

// Class label per group element: 0 identity, 1 for C1, 2 for C2, 3 + i for D_i.
std::vector<std::uint32_t> class_labels(const GammaSpec& spec);

// Cay(GF(q1) x GF(q2), C1 u D0). Throws InvalidArgument on a parity violation.
Graph gamma(const GammaSpec& spec);

// {(0,0)} u C1, a clique of order q1 in gamma(spec).
std::vector<std::uint32_t> canonical_clique(const GammaSpec& spec);

/// A validated antipodal distance-regular graph of diameter 3.
struct DrgInput {
  Graph graph;
  std::uint32_t a = 0;       // antipodal class size
  std::uint32_t k = 0;
  std::uint32_t lambda = 0;
  std::array<std::uint32_t, 3> b{};  // b0, b1, b2
  std::array<std::uint32_t, 3> c{};  // c1, c2, c3
  std::vector<std::uint8_t> distance;  // row-major n x n
};

// Recomputes every intersection number from BFS distances; throws InvalidArgument naming the failure.
DrgInput validate_antipodal_drg(const Graph& g);

// I_t (x) (A1 + A3) + (J_t - I_t) (x) (I + A3), with t = (lambda + 2) / a.
Graph gk_graph(const DrgInput& d);

Graph icosahedron();
Graph petersen_graph();

/// Whiteman generalized-cyclotomy data for Z/pqZ.
struct WhitemanData {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::uint32_t alpha = 0;
  std::uint32_t x = 0;  // smallest multiplier making {x^i alpha^j} a partition of the units
  std::uint32_t m = 0;  // gcd(p-1, q-1)
  std::uint32_t n = 0;  // (p-1)(q-1)/m
  std::uint32_t t = 0;
  std::vector<std::uint32_t> k0;  // sorted powers of alpha mod pq
};

// alpha = 0 selects the smallest common primitive root.
WhitemanData whiteman_data(std::uint32_t p, std::uint32_t q, std::uint32_t alpha = 0);

// t copies of Cay(Z/pqZ, K0) with the cocliques {z : z = k (mod p)} of copy c
// joined into cliques through perms[c - 1]. Empty perms means identities.
Graph whiteman_graph(std::uint32_t p, std::uint32_t q, std::uint32_t alpha = 0,
                     const std::vector<std::vector<std::uint32_t>>& perms = {});

// Cay(Z/2 x Z/8, S4 u S5 u S6).
Graph omega_fixture();

}  // namespace neumaier

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "neumaier/finite_field.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

/// Finite abelian group written as a direct product of components.
///
/// A component is either a cyclic group Z/nZ or the additive group of a finite
/// field GF(p^r), whose elements use the FieldElement encoding. Elements of the
/// product are indexed mixed-radix with the first component most significant,
/// so (x1, x2) in GF(q1) x GF(q2) has index x1 * q2 + x2.
class AbelianGroup {
 public:
  struct Component {
    std::uint32_t order = 1;
    std::uint32_t p = 0;  // 0 for a cyclic component, else the field characteristic
    std::uint32_t r = 0;
  };

  static AbelianGroup cyclic(std::vector<std::uint32_t> orders);
  static AbelianGroup field_product(const FieldSpec& a, const FieldSpec& b);
  static AbelianGroup from_components(std::vector<Component> components);

  std::uint32_t size() const { return size_; }
  const std::vector<Component>& components() const { return components_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t identity() const { return 0; }

  std::uint32_t encode(std::span<const std::uint32_t> parts) const;
  std::vector<std::uint32_t> decode(std::uint32_t x) const;

  std::string describe() const;
  nlohmann::json to_json() const;

 private:
  explicit AbelianGroup(std::vector<Component> components);

  static std::uint32_t component_add(const Component& c, std::uint32_t a, std::uint32_t b);
  static std::uint32_t component_neg(const Component& c, std::uint32_t a);

  std::vector<Component> components_;
  std::vector<std::uint32_t> stride_;  // stride_[i] = product of later orders
  std::uint32_t size_ = 1;
};

/// Sorted, duplicate-free subset of group elements with a provenance label.
struct ConnectionSet {
  std::vector<std::uint32_t> members;
  std::string label;

  static ConnectionSet make(std::vector<std::uint32_t> members, std::string label);
  std::size_t size() const { return members.size(); }
  bool contains(std::uint32_t x) const;
};

// Negation-closure check; returns a member whose negative is missing, if any.
std::optional<std::uint32_t> asymmetry_witness(const AbelianGroup& g, const ConnectionSet& s);

// Cay(G, S): x ~ x + s. Throws InvalidArgument if S contains the identity or is not closed under negation.
Graph cayley_graph(const AbelianGroup& g, const ConnectionSet& s);

/// Element of the integral group ring ZG, indexed by group element.
using GroupRingVector = std::vector<std::int64_t>;

GroupRingVector indicator(const AbelianGroup& g, std::span<const std::uint32_t> elements);

// Convolution (a * b)[z] = sum_{x + y = z} a[x] b[y], over the supports of a and b.
GroupRingVector group_ring_mul(const AbelianGroup& g, const GroupRingVector& a, const GroupRingVector& b);

}  // namespace neumaier

#include "neumaier/group.hpp"

#include <algorithm>

#include "neumaier/error.hpp"

namespace neumaier {

AbelianGroup::AbelianGroup(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("group needs at least one component");
  stride_.assign(components_.size(), 1);
  std::uint64_t size = 1;
  for (std::size_t i = components_.size(); i-- > 0;) {
    if (components_[i].order == 0) throw InvalidArgument("component order must be positive");
    stride_[i] = static_cast<std::uint32_t>(size);
    size *= components_[i].order;
    if (size > 0xFFFFFFFFull) throw LimitExceeded("group too large");
  }
  size_ = static_cast<std::uint32_t>(size);
}

AbelianGroup AbelianGroup::cyclic(std::vector<std::uint32_t> orders) {
  std::vector<Component> comps;
  for (auto o : orders) comps.push_back({o, 0, 0});
  return AbelianGroup(std::move(comps));
}

AbelianGroup AbelianGroup::field_product(const FieldSpec& a, const FieldSpec& b) {
  return AbelianGroup({{a.q(), a.p(), a.r()}, {b.q(), b.p(), b.r()}});
}

AbelianGroup AbelianGroup::from_components(std::vector<Component> components) {
  return AbelianGroup(std::move(components));
}

std::uint32_t AbelianGroup::component_add(const Component& c, std::uint32_t a, std::uint32_t b) {
  if (c.p == 0 || c.r == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % c.order);
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < c.r; ++i) {
    out += ((a % c.p + b % c.p) % c.p) * place;
    a /= c.p;
    b /= c.p;
    place *= c.p;
  }
  return out;
}

std::uint32_t AbelianGroup::component_neg(const Component& c, std::uint32_t a) {
  if (c.p == 0 || c.r == 1) return a == 0 ? 0 : c.order - a;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < c.r; ++i) {
    const std::uint32_t d = a % c.p;
    out += (d == 0 ? 0 : c.p - d) * place;
    a /= c.p;
    place *= c.p;
  }
  return out;
}

std::uint32_t AbelianGroup::add(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const std::uint32_t xi = x / stride_[i] % components_[i].order;
    const std::uint32_t yi = y / stride_[i] % components_[i].order;
    out += component_add(components_[i], xi, yi) * stride_[i];
  }
  return out;
}

std::uint32_t AbelianGroup::neg(std::uint32_t x) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    out += component_neg(components_[i], x / stride_[i] % components_[i].order) * stride_[i];
  }
  return out;
}

std::uint32_t AbelianGroup::encode(std::span<const std::uint32_t> parts) const {
  if (parts.size() != components_.size()) throw InvalidArgument("wrong number of group coordinates");
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] >= components_[i].order) throw InvalidArgument("group coordinate out of range");
    out += parts[i] * stride_[i];
  }
  return out;
}

std::vector<std::uint32_t> AbelianGroup::decode(std::uint32_t x) const {
  std::vector<std::uint32_t> out(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) out[i] = x / stride_[i] % components_[i].order;
  return out;
}

std::string AbelianGroup::describe() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " x ";
    const auto& c = components_[i];
    s += c.p == 0 ? "Z/" + std::to_string(c.order) : "GF(" + std::to_string(c.order) + ")";
  }
  return s;
}

nlohmann::json AbelianGroup::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : components_) {
    if (c.p == 0) {
      arr.push_back({{"cyclic", c.order}});
    } else {
      arr.push_back({{"field", c.order}, {"p", c.p}, {"r", c.r}});
    }
  }
  return arr;
}

ConnectionSet ConnectionSet::make(std::vector<std::uint32_t> members, std::string label) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(members), std::move(label)};
}

bool ConnectionSet::contains(std::uint32_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::optional<std::uint32_t> asymmetry_witness(const AbelianGroup& g, const ConnectionSet& s) {
  for (auto x : s.members) {
    if (!s.contains(g.neg(x))) return x;
  }
  return std::nullopt;
}

Graph cayley_graph(const AbelianGroup& g, const ConnectionSet& s) {
  if (s.contains(g.identity())) throw InvalidArgument("connection set '" + s.label + "' contains the identity");
  if (auto w = asymmetry_witness(g, s)) {
    throw InvalidArgument("connection set '" + s.label + "' is not closed under negation: element " +
                          std::to_string(*w) + " has no inverse in the set");
  }
  for (auto x : s.members) {
    if (x >= g.size()) throw InvalidArgument("connection set element out of range");
  }
  Graph out(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    for (auto d : s.members) {
      const std::uint32_t y = g.add(x, d);
      if (x < y) out.add_edge(x, y);
    }
  }
  GraphMeta meta;
  meta.construction = "cayley";
  meta.extra["group"] = g.to_json();
  meta.extra["connection_set"] = s.label;
  out.meta = std::move(meta);
  return out;
}

GroupRingVector indicator(const AbelianGroup& g, std::span<const std::uint32_t> elements) {
  GroupRingVector v(g.size(), 0);
  for (auto x : elements) v.at(x) += 1;
  return v;
}

GroupRingVector group_ring_mul(const AbelianGroup& g, const GroupRingVector& a, const GroupRingVector& b) {
  if (a.size() != g.size() || b.size() != g.size()) throw InvalidArgument("group ring vector has wrong length");
  std::vector<std::uint32_t> support_b;
  for (std::uint32_t y = 0; y < g.size(); ++y) {
    if (b[y] != 0) support_b.push_back(y);
  }
  GroupRingVector out(g.size(), 0);
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    if (a[x] == 0) continue;
    for (auto y : support_b) out[g.add(x, y)] += a[x] * b[y];
  }
  return out;
}

}  // namespace neumaier

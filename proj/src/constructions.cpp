#include "neumaier/constructions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "neumaier/arith.hpp"
#include "neumaier/error.hpp"

namespace neumaier {
namespace {

FieldSpec field_of_order(std::uint32_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return FieldSpec::build(pp->p, pp->r);
}

DlogTable alpha_at(const FieldSpec& f, std::size_t position) {
  const auto prims = f.primitive_elements();
  if (position >= prims.size()) {
    throw InvalidArgument("primitive element position " + std::to_string(position) + " out of range for GF(" +
                          std::to_string(f.q()) + ") (" + std::to_string(prims.size()) + " generators)");
  }
  return DlogTable(f, prims[position]);
}

}  // namespace

GammaSpec GammaSpec::make(std::uint32_t m, std::uint32_t q1, std::uint32_t q2, std::size_t alpha1_position,
                          std::size_t alpha2_position) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  FieldSpec f1 = field_of_order(q1);
  FieldSpec f2 = field_of_order(q2);
  if ((q1 - 1) % m != 0 || (q2 - 1) % m != 0) {
    throw InvalidArgument("m = " + std::to_string(m) + " must divide q1 - 1 and q2 - 1");
  }
  DlogTable a1 = alpha_at(f1, alpha1_position);
  DlogTable a2 = alpha_at(f2, alpha2_position);
  return GammaSpec{m, std::move(f1), std::move(f2), std::move(a1), std::move(a2), (q1 - 1) / m, (q2 - 1) / m,
                   alpha1_position, alpha2_position};
}

std::vector<std::uint32_t> class_labels(const GammaSpec& spec) {
  const std::uint32_t q1 = spec.q1();
  const std::uint32_t q2 = spec.q2();
  std::vector<std::uint32_t> label(std::size_t{q1} * q2);
  for (std::uint32_t x = 0; x < q1; ++x) {
    for (std::uint32_t y = 0; y < q2; ++y) {
      std::uint32_t l = 0;
      if (x != 0 && y == 0) {
        l = 1;
      } else if (x == 0 && y != 0) {
        l = 2;
      } else if (x != 0 && y != 0) {
        const std::int64_t diff = std::int64_t{spec.alpha1.log({x})} - spec.alpha2.log({y});
        l = 3 + static_cast<std::uint32_t>(mod_floor(diff, spec.m));
      }
      label[std::size_t{x} * q2 + y] = l;
    }
  }
  return label;
}

GammaClasses build_classes(const GammaSpec& spec) {
  const auto labels = class_labels(spec);
  std::vector<std::vector<std::uint32_t>> buckets(spec.m + 3);
  for (std::uint32_t e = 0; e < labels.size(); ++e) buckets[labels[e]].push_back(e);
  GammaClasses out;
  out.c1 = ConnectionSet::make(std::move(buckets[1]), "C1");
  out.c2 = ConnectionSet::make(std::move(buckets[2]), "C2");
  for (std::uint32_t i = 0; i < spec.m; ++i) {
    out.d.push_back(ConnectionSet::make(std::move(buckets[3 + i]), "D" + std::to_string(i)));
  }
  return out;
}

Graph gamma(const GammaSpec& spec) {
  if (!spec.undirected()) {
    throw InvalidArgument("connection set is not closed under negation: q1*n1 = " +
                          std::to_string(std::uint64_t{spec.q1()} * spec.n1) + " and q2*n2 = " +
                          std::to_string(std::uint64_t{spec.q2()} * spec.n2) + " differ in parity");
  }
  const GammaClasses classes = build_classes(spec);
  std::vector<std::uint32_t> members = classes.c1.members;
  members.insert(members.end(), classes.d[0].members.begin(), classes.d[0].members.end());
  Graph g = cayley_graph(spec.group(), ConnectionSet::make(std::move(members), "C1+D0"));
  GraphMeta meta;
  meta.construction = "gamma";
  meta.m = spec.m;
  meta.q1 = spec.q1();
  meta.q2 = spec.q2();
  meta.alpha1 = static_cast<std::int64_t>(spec.alpha1_position);
  meta.alpha2 = static_cast<std::int64_t>(spec.alpha2_position);
  meta.extra["alpha1_element"] = spec.alpha1.alpha().index;
  meta.extra["alpha2_element"] = spec.alpha2.alpha().index;
  meta.extra["field1"] = spec.field1.to_json();
  meta.extra["field2"] = spec.field2.to_json();
  g.meta = std::move(meta);
  return g;
}

std::vector<std::uint32_t> canonical_clique(const GammaSpec& spec) {
  std::vector<std::uint32_t> clique;
  for (std::uint32_t x = 0; x < spec.q1(); ++x) clique.push_back(x * spec.q2());
  return clique;
}

DrgInput validate_antipodal_drg(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw InvalidArgument("distance-regular input needs at least two vertices");
  constexpr std::uint8_t kUnreached = 0xFF;
  std::vector<std::uint8_t> dist(n * n, kUnreached);
  std::vector<std::vector<std::uint32_t>> nbrs(n);
  for (std::size_t v = 0; v < n; ++v) nbrs[v] = g.neighbours(v);
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(s)};
    dist[s * n + s] = 0;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : nbrs[v]) {
        if (dist[s * n + w] == kUnreached) {
          dist[s * n + w] = static_cast<std::uint8_t>(dist[s * n + v] + 1);
          queue.push_back(w);
        }
      }
    }
  }
  std::uint8_t diameter = 0;
  for (auto d : dist) {
    if (d == kUnreached) throw InvalidArgument("graph is disconnected");
    diameter = std::max(diameter, d);
  }
  if (diameter != 3) throw InvalidArgument("diameter is " + std::to_string(diameter) + ", expected 3");

  // b_i, c_i must not depend on the pair (x, y) at distance i.
  std::array<std::int64_t, 4> b{-1, -1, -1, -1};
  std::array<std::int64_t, 4> c{-1, -1, -1, -1};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int i = dist[x * n + y];
      std::int64_t bi = 0;
      std::int64_t ci = 0;
      for (auto z : nbrs[y]) {
        const int dz = dist[x * n + z];
        if (dz == i + 1) ++bi;
        if (dz == i - 1) ++ci;
      }
      if (b[i] < 0) b[i] = bi;
      if (c[i] < 0) c[i] = ci;
      if (b[i] != bi) throw InvalidArgument("intersection number b" + std::to_string(i) + " is not constant");
      if (c[i] != ci) throw InvalidArgument("intersection number c" + std::to_string(i) + " is not constant");
    }
  }

  // Antipodality: {y : d(x,y) in {0, 3}} is an equivalence class of constant size.
  std::int64_t a = -1;
  for (std::size_t x = 0; x < n; ++x) {
    std::int64_t size = 0;
    for (std::size_t y = 0; y < n; ++y) {
      const auto dxy = dist[x * n + y];
      if (dxy != 0 && dxy != 3) continue;
      ++size;
      for (std::size_t z = 0; z < n; ++z) {
        const auto dyz = dist[y * n + z];
        const auto dxz = dist[x * n + z];
        if ((dyz == 0 || dyz == 3) != (dxz == 0 || dxz == 3)) {
          throw InvalidArgument("distance-3-or-0 relation is not transitive");
        }
      }
    }
    if (a < 0) a = size;
    if (a != size) throw InvalidArgument("antipodal classes have different sizes");
  }
  if (a < 2) throw InvalidArgument("graph is not antipodal");

  const std::int64_t k = b[0];
  const std::int64_t lambda = k - b[1] - c[1];
  auto expect = [](const char* name, std::int64_t got, std::int64_t want) {
    if (got != want) {
      throw InvalidArgument(std::string("intersection number ") + name + " = " + std::to_string(got) +
                            ", antipodal array requires " + std::to_string(want));
    }
  };
  expect("c1", c[1], 1);
  expect("b1", b[1], k - lambda - 1);
  expect("b2", b[2], 1);
  if ((k - lambda - 1) % (a - 1) != 0) throw InvalidArgument("(k - lambda - 1) is not divisible by a - 1");
  expect("c2", c[2], (k - lambda - 1) / (a - 1));
  expect("c3", c[3], k);

  DrgInput out{g,
               static_cast<std::uint32_t>(a),
               static_cast<std::uint32_t>(k),
               static_cast<std::uint32_t>(lambda),
               {static_cast<std::uint32_t>(b[0]), static_cast<std::uint32_t>(b[1]), static_cast<std::uint32_t>(b[2])},
               {static_cast<std::uint32_t>(c[1]), static_cast<std::uint32_t>(c[2]), static_cast<std::uint32_t>(c[3])},
               std::move(dist)};
  return out;
}

Graph gk_graph(const DrgInput& d) {
  const std::uint32_t a = d.a;
  const std::uint32_t lambda2 = d.lambda + 2;
  if (lambda2 % a != 0) {
    throw InvalidArgument("antipodal class size " + std::to_string(a) + " does not divide lambda + 2 = " +
                          std::to_string(lambda2));
  }
  if (a == lambda2) throw InvalidArgument("a = lambda + 2 yields a strongly regular graph; a proper divisor is required");
  const std::uint32_t t = lambda2 / a;
  const std::size_t v = d.graph.order();
  Graph g(v * t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t x = 0; x < v; ++x) {
        for (std::size_t y = 0; y < v; ++y) {
          const auto dxy = d.distance[x * v + y];
          const bool edge = i == j ? (dxy == 1 || dxy == 3) : (dxy == 0 || dxy == 3);
          const std::size_t u = i * v + x;
          const std::size_t w = j * v + y;
          if (edge && u < w) g.add_edge(u, w);
        }
      }
    }
  }
  GraphMeta meta;
  meta.construction = "gk";
  meta.extra["t"] = t;
  meta.extra["a"] = a;
  meta.extra["drg_order"] = v;
  meta.extra["intersection_array"] = {d.b[0], d.b[1], d.b[2], d.c[0], d.c[1], d.c[2]};
  g.meta = std::move(meta);
  return g;
}

Graph icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  Graph g(12);
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t up = 1 + i;
    const std::size_t up_next = 1 + (i + 1) % 5;
    const std::size_t lo = 6 + i;
    const std::size_t lo_next = 6 + (i + 1) % 5;
    g.add_edge(0, up);
    g.add_edge(up, up_next);
    g.add_edge(up, lo);
    g.add_edge(up, lo_next);
    g.add_edge(lo, lo_next);
    g.add_edge(11, lo);
  }
  g.meta = GraphMeta{"icosahedron", {}, {}, {}, {}, {}, nlohmann::json::object()};
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  g.meta = GraphMeta{"petersen", {}, {}, {}, {}, {}, nlohmann::json::object()};
  return g;
}

WhitemanData whiteman_data(std::uint32_t p, std::uint32_t q, std::uint32_t alpha) {
  if (p == q || !is_prime(p) || !is_prime(q) || p == 2 || q == 2) {
    throw InvalidArgument("p and q must be distinct odd primes");
  }
  if ((p - 1) % (q - 1) != 0) throw InvalidArgument("q - 1 must divide p - 1");
  const std::uint32_t pq = p * q;
  auto primitive_mod = [](std::uint64_t g, std::uint64_t prime) {
    if (g % prime == 0) return false;
    for (auto l : prime_divisors(prime - 1)) {
      if (pow_mod(g, (prime - 1) / l, prime) == 1) return false;
    }
    return true;
  };
  if (alpha == 0) {
    for (std::uint32_t g = 2; g < pq; ++g) {
      if (primitive_mod(g, p) && primitive_mod(g, q)) {
        alpha = g;
        break;
      }
    }
    if (alpha == 0) throw InvalidArgument("no common primitive root");
  } else if (!primitive_mod(alpha, p) || !primitive_mod(alpha, q)) {
    throw InvalidArgument(std::to_string(alpha) + " is not a primitive root of both p and q");
  }

  WhitemanData w;
  w.p = p;
  w.q = q;
  w.alpha = alpha % pq;
  w.m = static_cast<std::uint32_t>(gcd_u64(p - 1, q - 1));
  w.n = (p - 1) * (q - 1) / w.m;

  std::vector<std::uint32_t> k0;
  std::uint64_t power = 1;
  for (std::uint32_t j = 0; j < w.n; ++j) {
    k0.push_back(static_cast<std::uint32_t>(power));
    power = power * w.alpha % pq;
  }
  std::sort(k0.begin(), k0.end());
  if (std::adjacent_find(k0.begin(), k0.end()) != k0.end()) throw InternalError("alpha has order below n mod pq");
  w.k0 = k0;

  const std::uint64_t units = std::uint64_t{p - 1} * (q - 1);
  for (std::uint32_t x = 1; x < pq && w.x == 0; ++x) {
    if (gcd_u64(x, pq) != 1) continue;
    std::vector<char> seen(pq, 0);
    std::uint64_t hit = 0;
    std::uint64_t xi = 1;
    bool ok = true;
    for (std::uint32_t i = 0; i < w.m && ok; ++i) {
      for (auto k : k0) {
        const auto e = static_cast<std::uint32_t>(xi * k % pq);
        if (seen[e]) {
          ok = false;
          break;
        }
        seen[e] = 1;
        ++hit;
      }
      xi = xi * x % pq;
    }
    if (ok && hit == units) w.x = x;
  }
  if (w.x == 0) throw InvalidArgument("no multiplier x partitions the units into cosets of <alpha>");

  std::uint32_t overlap = 0;
  for (auto k : k0) {
    if (std::binary_search(k0.begin(), k0.end(), (k + pq - 1) % pq)) ++overlap;
  }
  if ((overlap + 2) % q != 0) {
    throw InvalidArgument("t = (|K0 n (K0+1)| + 2)/q = " + std::to_string(overlap + 2) + "/" + std::to_string(q) +
                          " is not an integer");
  }
  w.t = (overlap + 2) / q;
  return w;
}

Graph whiteman_graph(std::uint32_t p, std::uint32_t q, std::uint32_t alpha,
                     const std::vector<std::vector<std::uint32_t>>& perms) {
  const WhitemanData w = whiteman_data(p, q, alpha);
  const std::uint32_t pq = p * q;
  const AbelianGroup zpq = AbelianGroup::cyclic({pq});
  const Graph base = cayley_graph(zpq, ConnectionSet::make(w.k0, "K0"));

  std::vector<std::vector<std::uint32_t>> pi(w.t);
  for (std::uint32_t c = 0; c < w.t; ++c) {
    if (c == 0 || perms.empty()) {
      pi[c].resize(p);
      std::iota(pi[c].begin(), pi[c].end(), 0u);
    } else {
      if (perms.size() != w.t - 1) {
        throw InvalidArgument("expected " + std::to_string(w.t - 1) + " permutations");
      }
      pi[c] = perms[c - 1];
      std::vector<std::uint32_t> sorted = pi[c];
      std::sort(sorted.begin(), sorted.end());
      for (std::uint32_t i = 0; i < p; ++i) {
        if (sorted.size() != p || sorted[i] != i) throw InvalidArgument("invalid permutation of the cocliques");
      }
    }
  }

  Graph g(std::size_t{w.t} * pq);
  for (std::uint32_t c = 0; c < w.t; ++c) {
    for (std::uint32_t z = 0; z < pq; ++z) {
      for (auto y : base.neighbours(z)) {
        if (z < y) g.add_edge(std::size_t{c} * pq + z, std::size_t{c} * pq + y);
      }
    }
  }
  // Coclique k of copy c is {z : z = k (mod p)}, of size q.
  for (std::uint32_t k = 0; k < p; ++k) {
    std::vector<std::size_t> block;
    for (std::uint32_t c = 0; c < w.t; ++c) {
      const std::uint32_t part = pi[c][k];
      for (std::uint32_t j = 0; j < q; ++j) block.push_back(std::size_t{c} * pq + part + j * p);
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) g.add_edge(block[i], block[j]);
    }
  }
  GraphMeta meta;
  meta.construction = "whiteman";
  meta.extra["p"] = p;
  meta.extra["q"] = q;
  meta.extra["alpha"] = w.alpha;
  meta.extra["x"] = w.x;
  meta.extra["t"] = w.t;
  g.meta = std::move(meta);
  return g;
}

Graph omega_fixture() {
  const AbelianGroup g = AbelianGroup::cyclic({2, 8});
  auto el = [&g](std::uint32_t a, std::uint32_t b) { return g.encode(std::array<std::uint32_t, 2>{a, b}); };
  std::vector<std::uint32_t> s{el(1, 4),                                  // S4
                               el(0, 1), el(0, 7), el(1, 1), el(1, 7),    // S5
                               el(0, 2), el(0, 6), el(1, 2), el(1, 6)};   // S6
  Graph out = cayley_graph(g, ConnectionSet::make(std::move(s), "S4+S5+S6"));
  out.meta->construction = "omega";
  return out;
}

}  // namespace neumaier

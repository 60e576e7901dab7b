#include "neumaier/coherent.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "neumaier/error.hpp"
#include "neumaier/group.hpp"

namespace neumaier {
namespace {

using Signature = std::vector<std::uint64_t>;

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : s) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct RowResult {
  std::vector<std::uint32_t> local;
  std::vector<Signature> sigs;
};

constexpr std::uint64_t kDenseKeyLimit = std::uint64_t{1} << 22;

class RowRefiner {
 public:
  RowRefiner(const std::vector<std::uint32_t>& color, const std::vector<std::uint32_t>& ct, std::size_t n,
             std::uint64_t r)
      : color_(color), ct_(ct), n_(n), r_(r), dense_(r * r <= kDenseKeyLimit) {
    if (dense_) counts_.assign(r * r, 0);
  }

  RowResult run(std::size_t x) {
    RowResult out;
    out.local.resize(n_);
    std::unordered_map<Signature, std::uint32_t, SignatureHash> ids;
    const std::uint32_t* row = color_.data() + x * n_;
    Signature sig;
    for (std::size_t y = 0; y < n_; ++y) {
      const std::uint32_t* col = ct_.data() + y * n_;
      sig.clear();
      sig.push_back(row[y]);
      if (dense_) {
        touched_.clear();
        for (std::size_t z = 0; z < n_; ++z) {
          const std::uint64_t key = std::uint64_t{row[z]} * r_ + col[z];
          if (counts_[key]++ == 0) touched_.push_back(key);
        }
        std::sort(touched_.begin(), touched_.end());
        for (auto key : touched_) {
          sig.push_back(key);
          sig.push_back(counts_[key]);
          counts_[key] = 0;
        }
      } else {
        keys_.resize(n_);
        for (std::size_t z = 0; z < n_; ++z) keys_[z] = std::uint64_t{row[z]} * r_ + col[z];
        std::sort(keys_.begin(), keys_.end());
        for (std::size_t i = 0; i < n_;) {
          std::size_t j = i;
          while (j < n_ && keys_[j] == keys_[i]) ++j;
          sig.push_back(keys_[i]);
          sig.push_back(j - i);
          i = j;
        }
      }
      auto [it, inserted] = ids.try_emplace(sig, static_cast<std::uint32_t>(out.sigs.size()));
      if (inserted) out.sigs.push_back(sig);
      out.local[y] = it->second;
    }
    return out;
  }

 private:
  const std::vector<std::uint32_t>& color_;
  const std::vector<std::uint32_t>& ct_;
  std::size_t n_;
  std::uint64_t r_;
  bool dense_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint64_t> touched_;
  std::vector<std::uint64_t> keys_;
};

std::vector<std::uint32_t> transpose_of(const std::vector<std::uint32_t>& c, std::size_t n) {
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[y * n + x] = c[x * n + y];
  }
  return t;
}

std::uint32_t color_count(const std::vector<std::uint32_t>& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Renumber by first occurrence in row-major order.
std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& c) {
  std::unordered_map<std::uint32_t, std::uint32_t> map;
  std::vector<std::uint32_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto [it, ins] = map.try_emplace(c[i], static_cast<std::uint32_t>(map.size()));
    out[i] = it->second;
  }
  return out;
}

// Count vector over (i, j) of #{z : c(x,z) = i, c(z,y) = j}, as sorted (key, count) runs.
std::vector<std::pair<std::uint64_t, std::uint32_t>> pair_profile(const CoherentConfiguration& c, std::size_t x,
                                                                  std::size_t y) {
  std::vector<std::uint64_t> keys(c.n);
  for (std::size_t z = 0; z < c.n; ++z) keys[z] = std::uint64_t{c.at(x, z)} * c.rank + c.at(z, y);
  std::sort(keys.begin(), keys.end());
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    out.emplace_back(keys[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> wl_refine_once(const std::vector<std::uint32_t>& color, std::size_t n, unsigned threads) {
  if (color.size() != n * n) throw InvalidArgument("colour array must have n*n entries");
  const std::uint64_t r = color_count(color);
  const auto ct = transpose_of(color, n);
  threads = std::max(1u, threads);

  std::vector<std::uint32_t> next(n * n);
  std::unordered_map<Signature, std::uint32_t, SignatureHash> global;
  auto merge = [&](std::size_t x, const RowResult& rr) {
    std::vector<std::int64_t> map(rr.sigs.size(), -1);
    for (std::size_t y = 0; y < n; ++y) {
      const auto l = rr.local[y];
      if (map[l] < 0) {
        auto [it, ins] = global.try_emplace(rr.sigs[l], static_cast<std::uint32_t>(global.size()));
        map[l] = it->second;
      }
      next[x * n + y] = static_cast<std::uint32_t>(map[l]);
    }
  };

  if (threads == 1) {
    RowRefiner refiner(color, ct, n, r);
    for (std::size_t x = 0; x < n; ++x) merge(x, refiner.run(x));
    return next;
  }
  // Blocks of rows are refined concurrently, then merged in row order so numbering is thread-count independent.
  const std::size_t block = std::size_t{threads} * 8;
  std::vector<RowResult> results(block);
  for (std::size_t base = 0; base < n; base += block) {
    const std::size_t end = std::min(n, base + block);
    std::atomic<std::size_t> cursor{base};
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          RowRefiner refiner(color, ct, n, r);
          for (std::size_t x = cursor++; x < end; x = cursor++) results[x - base] = refiner.run(x);
        });
      }
    }
    for (std::size_t x = base; x < end; ++x) merge(x, results[x - base]);
  }
  return next;
}

CoherentConfiguration wl_closure(const Graph& g, const WlOptions& options) {
  const std::size_t n = g.order();
  if (n > options.cap) {
    throw LimitExceeded("graph has " + std::to_string(n) + " vertices, WL cap is " + std::to_string(options.cap));
  }
  std::vector<std::uint32_t> color(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) color[x * n + y] = x == y ? 0 : (g.adjacent(x, y) ? 1 : 2);
  }
  color = canonical(color);

  CoherentConfiguration c;
  c.n = n;
  std::uint32_t r = color_count(color);
  for (;;) {
    auto next = wl_refine_once(color, n, options.threads);
    ++c.rounds;
    const std::uint32_t r2 = color_count(next);
    color = std::move(next);
    if (r2 == r) break;
    r = r2;
  }
  c.rank = r;
  c.color = std::move(color);

  c.class_reps.assign(r, {0, 0});
  c.class_sizes.assign(r, 0);
  std::vector<char> seen(r, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto k = c.at(x, y);
      if (!seen[k]) {
        seen[k] = 1;
        c.class_reps[k] = {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
      }
      ++c.class_sizes[k];
    }
  }
  c.transpose.resize(r);
  for (std::uint32_t k = 0; k < r; ++k) c.transpose[k] = c.at(c.class_reps[k].second, c.class_reps[k].first);
  std::set<std::uint32_t> diag;
  for (std::size_t x = 0; x < n; ++x) diag.insert(c.at(x, x));
  c.diag_classes.assign(diag.begin(), diag.end());

  if (r <= CoherentConfiguration::kIntersectionRankCap) {
    c.intersection.assign(std::size_t{r} * r * r, 0);
    for (std::uint32_t k = 0; k < r; ++k) {
      const auto [x, y] = c.class_reps[k];
      for (std::size_t z = 0; z < n; ++z) ++c.intersection[(std::size_t{k} * r + c.at(x, z)) * r + c.at(z, y)];
    }
  }
  c.flags = structural_flags(c);
  return c;
}

StructuralFlags structural_flags(const CoherentConfiguration& c) {
  StructuralFlags f;
  f.homogeneous = c.diag_classes.size() == 1;
  f.symmetric = true;
  for (std::uint32_t k = 0; k < c.rank; ++k) f.symmetric = f.symmetric && c.transpose[k] == k;
  if (!f.homogeneous) return f;  // commutative implies homogeneous
  f.commutative = true;
  for (std::uint32_t k = 0; k < c.rank && f.commutative; ++k) {
    const auto [x, y] = c.class_reps[k];
    const auto prof = pair_profile(c, x, y);
    for (const auto& [key, cnt] : prof) {
      const std::uint64_t i = key / c.rank;
      const std::uint64_t j = key % c.rank;
      const std::uint64_t swapped = j * c.rank + i;
      auto it = std::lower_bound(prof.begin(), prof.end(), std::make_pair(swapped, std::uint32_t{0}));
      if (it == prof.end() || it->first != swapped || it->second != cnt) {
        f.commutative = false;
        break;
      }
    }
  }
  return f;
}

AxiomReport verify_axioms(const CoherentConfiguration& c, std::size_t exhaustive_limit, std::size_t samples) {
  AxiomReport rep;
  const std::size_t n = c.n;
  if (c.color.size() != n * n) {
    rep.failure = "colour array has wrong size";
    return rep;
  }
  // CC1: colours 0..rank-1 each used.
  std::vector<std::size_t> first(c.rank, SIZE_MAX);
  for (std::size_t i = 0; i < c.color.size(); ++i) {
    if (c.color[i] >= c.rank) {
      rep.failure = "colour out of range at pair " + std::to_string(i);
      return rep;
    }
    if (first[c.color[i]] == SIZE_MAX) first[c.color[i]] = i;
  }
  for (std::uint32_t k = 0; k < c.rank; ++k) {
    if (first[k] == SIZE_MAX) {
      rep.failure = "class " + std::to_string(k) + " is empty";
      return rep;
    }
  }
  rep.cc1 = true;

  // CC2: (y,x) colour is a function of the (x,y) colour.
  std::vector<std::uint32_t> tr(c.rank);
  for (std::uint32_t k = 0; k < c.rank; ++k) tr[k] = c.at(first[k] % n, first[k] / n);
  for (std::size_t x = 0; x < n && rep.failure == std::nullopt; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (c.at(y, x) != tr[c.at(x, y)]) {
        rep.failure = "transpose of pair (" + std::to_string(x) + "," + std::to_string(y) + ") breaks CC2";
        break;
      }
    }
  }
  if (rep.failure) return rep;
  rep.cc2 = true;

  // CC3: diagonal classes contain no off-diagonal pair.
  std::vector<char> diag(c.rank, 0);
  for (std::size_t x = 0; x < n; ++x) diag[c.at(x, x)] = 1;
  for (std::size_t x = 0; x < n && !rep.failure; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && diag[c.at(x, y)]) {
        rep.failure = "off-diagonal pair (" + std::to_string(x) + "," + std::to_string(y) + ") in a diagonal class";
        break;
      }
    }
  }
  if (rep.failure) return rep;
  rep.cc3 = true;

  // CC4: every pair of a class has the reference profile of the class's first pair.
  std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> ref(c.rank);
  for (std::uint32_t k = 0; k < c.rank; ++k) ref[k] = pair_profile(c, first[k] / n, first[k] % n);
  if (n <= exhaustive_limit) {
    rep.cc4_exhaustive = true;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        ++rep.cc4_checks;
        if (pair_profile(c, x, y) != ref[c.at(x, y)]) {
          rep.failure = "pair (" + std::to_string(x) + "," + std::to_string(y) + ") breaks CC4";
          return rep;
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t x = pick(rng);
      const std::size_t y = pick(rng);
      const auto& r = ref[c.at(x, y)];
      std::uint64_t key;
      if (s % 2 == 0) {
        const std::size_t z0 = pick(rng);
        key = std::uint64_t{c.at(x, z0)} * c.rank + c.at(z0, y);
      } else {
        key = r[std::uniform_int_distribution<std::size_t>(0, r.size() - 1)(rng)].first;
      }
      std::uint32_t got = 0;
      for (std::size_t z = 0; z < n; ++z) got += std::uint64_t{c.at(x, z)} * c.rank + c.at(z, y) == key ? 1 : 0;
      auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(key, std::uint32_t{0}));
      const std::uint32_t want = (it != r.end() && it->first == key) ? it->second : 0;
      ++rep.cc4_checks;
      if (got != want) {
        rep.failure = "pair (" + std::to_string(x) + "," + std::to_string(y) + ") breaks CC4 on a sampled triple";
        return rep;
      }
    }
  }
  rep.cc4 = true;
  return rep;
}

SupportInfo support(const Graph& g, const CoherentConfiguration& c) {
  if (g.order() != c.n) throw InvalidArgument("configuration was computed for a different graph");
  std::vector<int> edge(c.rank, -1);
  for (std::size_t x = 0; x < c.n; ++x) {
    for (std::size_t y = 0; y < c.n; ++y) {
      const int a = g.adjacent(x, y) ? 1 : 0;
      auto& e = edge[c.at(x, y)];
      if (e < 0) e = a;
      if (e != a) throw InternalError("class " + std::to_string(c.at(x, y)) + " mixes edges and non-edges");
    }
  }
  SupportInfo s;
  for (std::uint32_t k = 0; k < c.rank; ++k) {
    if (edge[k] == 1) s.classes.push_back(k);
  }
  return s;
}

nlohmann::json CoherentConfiguration::to_json(bool with_colors) const {
  nlohmann::json j;
  j["n"] = n;
  j["rank"] = rank;
  j["rounds"] = rounds;
  j["class_sizes"] = class_sizes;
  j["diag_classes"] = diag_classes;
  j["transpose"] = transpose;
  nlohmann::json reps = nlohmann::json::array();
  for (auto [x, y] : class_reps) reps.push_back({x, y});
  j["class_reps"] = reps;
  j["flags"] = {{"homogeneous", flags.homogeneous}, {"symmetric", flags.symmetric}, {"commutative", flags.commutative}};
  if (!intersection.empty()) j["intersection_numbers"] = intersection;
  if (with_colors) j["color"] = color;
  return j;
}

nlohmann::json SchurReport::to_json() const {
  nlohmann::json j{{"m", m},
                   {"q1", q1},
                   {"q2", q2},
                   {"products", products},
                   {"partition_closed", partition_closed},
                   {"formulas_hold", formulas_hold},
                   {"mixed_parity", mixed_parity},
                   {"mismatches", mismatches}};
  j["dd_as_printed"] = dd_as_printed ? nlohmann::json(*dd_as_printed) : nlohmann::json();
  return j;
}

SchurReport schur_verify(const GammaSpec& spec) {
  SchurReport rep;
  rep.m = spec.m;
  rep.q1 = spec.q1();
  rep.q2 = spec.q2();
  rep.mixed_parity = !spec.undirected();
  const std::uint32_t m = spec.m;
  const std::size_t basis = m + 3;
  const AbelianGroup grp = spec.group();
  const auto labels = class_labels(spec);
  std::vector<std::vector<std::uint32_t>> sets(basis);
  for (std::uint32_t e = 0; e < labels.size(); ++e) sets[labels[e]].push_back(e);
  std::vector<GroupRingVector> ind;
  for (const auto& s : sets) ind.push_back(indicator(grp, s));

  const CyclotomicTable t1 = cyclotomic_numbers(spec.field1, spec.alpha1, m);
  const CyclotomicTable t2 = cyclotomic_numbers(spec.field2, spec.alpha2, m);
  const std::int64_t q1 = spec.q1(), q2 = spec.q2(), n1 = spec.n1, n2 = spec.n2;
  const std::int64_t nn = static_cast<std::int64_t>(m) * n1 * n2;
  using Coeffs = std::vector<std::int64_t>;

  auto f_vec = [&](std::uint32_t i, std::uint32_t j) {
    Coeffs v(basis, 0);
    v[1] = n1 * n2;
    v[2] = n1 * n2;
    for (std::uint32_t k = 0; k < m; ++k) v[3 + k] = x_sum(t1, t2, i, j, k);
    return v;
  };
  auto g_vec = [&](std::uint32_t i, std::uint32_t j) {
    Coeffs v = f_vec(i, j);
    v[1] -= n2;
    v[2] -= n1;
    return v;
  };
  // expected(a, b, printed): printed selects the D.D case split exactly as stated for mixed parity.
  auto expected = [&](std::size_t a, std::size_t b, bool printed) {
    Coeffs v(basis, 0);
    if (a == 0) {
      v[b] = 1;
    } else if (b == 0) {
      v[a] = 1;
    } else if (a <= 2 && b <= 2) {
      if (a == b) {
        const std::int64_t q = a == 1 ? q1 : q2;
        v[0] = q - 1;
        v[a] = q - 2;
      } else {
        for (std::uint32_t k = 0; k < m; ++k) v[3 + k] = 1;
      }
    } else if (a <= 2 || b <= 2) {
      const std::size_t ci = a <= 2 ? a : b;
      const std::uint32_t j = static_cast<std::uint32_t>((a <= 2 ? b : a) - 3);
      const std::int64_t ni = ci == 1 ? n1 : n2;
      v[3 + j] = ni - 1;
      v[ci == 1 ? 2 : 1] = ni;
      for (std::uint32_t k = 0; k < m; ++k) {
        if (k != j) v[3 + k] = ni;
      }
    } else {
      const auto i = static_cast<std::uint32_t>(a - 3);
      const auto j = static_cast<std::uint32_t>(b - 3);
      if (!rep.mixed_parity) {
        v = i == j ? g_vec(i, j) : f_vec(i, j);
        if (i == j) v[0] += nn;
      } else {
        const bool opposite = (i + m - j) % m == m / 2;
        if (printed) {
          v = i == j ? f_vec(i, j) : (opposite ? g_vec(i, j) : f_vec(i, j));
          if (i == j) v[0] += nn;
        } else {
          v = opposite ? g_vec(i, j) : f_vec(i, j);
          if (opposite) v[0] += nn;
        }
      }
    }
    return v;
  };

  rep.partition_closed = true;
  rep.formulas_hold = true;
  bool printed_ok = true;
  auto name = [m](std::size_t a) {
    (void)m;
    if (a == 0) return std::string("I");
    if (a == 1) return std::string("C1");
    if (a == 2) return std::string("C2");
    return "D" + std::to_string(a - 3);
  };
  for (std::size_t a = 0; a < basis; ++a) {
    for (std::size_t b = 0; b < basis; ++b) {
      ++rep.products;
      const GroupRingVector prod = group_ring_mul(grp, ind[a], ind[b]);
      Coeffs got(basis, 0);
      bool closed = true;
      for (std::size_t l = 0; l < basis && closed; ++l) {
        got[l] = prod[sets[l].front()];
        for (auto e : sets[l]) {
          if (prod[e] != got[l]) {
            closed = false;
            rep.mismatches.push_back(name(a) + "*" + name(b) + " is not constant on " + name(l));
            break;
          }
        }
      }
      if (!closed) {
        rep.partition_closed = false;
        rep.formulas_hold = false;
        continue;
      }
      if (got != expected(a, b, false)) {
        rep.formulas_hold = false;
        rep.mismatches.push_back(name(a) + "*" + name(b) + " differs from the expected expansion");
      }
      if (rep.mixed_parity && a >= 3 && b >= 3 && got != expected(a, b, true)) printed_ok = false;
    }
  }
  if (rep.mixed_parity) rep.dd_as_printed = printed_ok;
  return rep;
}

RankBoundReport rank_bound_check(const Graph& g, const CoherentConfiguration& c, const std::optional<GammaSpec>& spec) {
  RankBoundReport rep;
  rep.rank = c.rank;
  if (spec) {
    rep.upper = spec->m + 3;
    rep.upper_ok = c.rank <= *rep.upper;
  }
  const std::size_t edges = g.edge_count();
  const std::size_t n = g.order();
  const bool trivial = edges == 0 || edges == n * (n - 1) / 2;
  rep.lower_ok = trivial || c.rank >= 3;
  return rep;
}

std::size_t minimal_polynomial_degree(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap) throw LimitExceeded("minimal polynomial is capped at " + std::to_string(cap) + " vertices");
  if (n == 0) return 0;
  const std::size_t len = n * n;
  std::vector<std::vector<std::uint32_t>> nbrs(n);
  for (std::size_t v = 0; v < n; ++v) nbrs[v] = g.neighbours(v);

  struct Row {
    std::size_t pivot;
    std::vector<mpz_class> v;
  };
  std::vector<Row> basis;
  auto normalize = [](std::vector<mpz_class>& v) {
    mpz_class content = 0;
    for (const auto& x : v) {
      if (x != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    }
    if (content > 1) {
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    }
  };

  std::vector<mpz_class> cur(len, 0);
  for (std::size_t i = 0; i < n; ++i) cur[i * n + i] = 1;
  for (;;) {
    for (const auto& b : basis) {
      if (cur[b.pivot] == 0) continue;
      const mpz_class scale_cur = b.v[b.pivot];
      const mpz_class scale_b = cur[b.pivot];
      for (std::size_t t = 0; t < len; ++t) cur[t] = scale_cur * cur[t] - scale_b * b.v[t];
      normalize(cur);
    }
    auto nz = std::find_if(cur.begin(), cur.end(), [](const mpz_class& x) { return x != 0; });
    if (nz == cur.end()) return basis.size();
    const auto pivot = static_cast<std::size_t>(nz - cur.begin());
    // Next Krylov element: A times the reduced remainder.
    std::vector<mpz_class> next(len, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto l : nbrs[i]) {
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += cur[l * n + j];
      }
    }
    basis.push_back({pivot, std::move(cur)});
    cur = std::move(next);
  }
}

}  // namespace neumaier

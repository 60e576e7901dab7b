#include "neumaier/regularity.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "neumaier/error.hpp"

namespace neumaier {
namespace {

using Row = std::vector<std::uint64_t>;

Row row_of(const Graph& g, std::size_t v) {
  const auto r = g.adjacency().row(v);
  return Row(r.begin(), r.end());
}

std::size_t popcount_row(const Row& r) {
  std::size_t c = 0;
  for (auto w : r) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// Bron-Kerbosch with Tomita pivoting on bit rows; stops at the first accepted clique.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t k, std::size_t lambda) : g_(g), n_(g.order()), words_((n_ + 63) / 64) {
    // An e-regular clique of order s in a (v,k,lambda) graph has s (k - s + 1) = e (v - s), 0 < e < s <= lambda + 2.
    for (std::size_t s = 2; s <= std::min(lambda + 2, n_ - 1); ++s) {
      if (k + 1 < s) break;
      const std::size_t lhs = s * (k - s + 1);
      if (lhs % (n_ - s) != 0) continue;
      const std::size_t e = lhs / (n_ - s);
      if (e > 0 && e < s) sizes_.insert(s);
    }
    rows_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) rows_.push_back(row_of(g, v));
  }

  std::optional<std::vector<std::uint32_t>> run() {
    if (sizes_.empty()) return std::nullopt;
    Row p(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) p[v / 64] |= std::uint64_t{1} << (v % 64);
    Row x(words_, 0);
    std::vector<std::uint32_t> r;
    expand(r, p, x);
    return found_;
  }

 private:
  void expand(std::vector<std::uint32_t>& r, Row p, Row x) {
    if (found_) return;
    const std::size_t pc = popcount_row(p);
    if (r.size() + pc < *sizes_.begin()) return;
    if (r.size() > *sizes_.rbegin()) return;
    if (pc == 0) {
      if (popcount_row(x) == 0 && sizes_.count(r.size()) && regular(r)) found_ = r;
      return;
    }
    // Pivot maximizing |P n N(u)| over P u X.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = p[w] | x[w];
      while (bits) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::size_t c = BitMatrix::and_count(rows_[u], p);
        if (!have || c > best) {
          pivot = u;
          best = c;
          have = true;
        }
      }
    }
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t cand = p[w] & ~rows_[pivot][w];
      while (cand) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(cand));
        cand &= cand - 1;
        Row p2(words_), x2(words_);
        for (std::size_t i = 0; i < words_; ++i) {
          p2[i] = p[i] & rows_[v][i];
          x2[i] = x[i] & rows_[v][i];
        }
        r.push_back(static_cast<std::uint32_t>(v));
        expand(r, std::move(p2), std::move(x2));
        r.pop_back();
        if (found_) return;
        p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  }

  bool regular(const std::vector<std::uint32_t>& c) const {
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    return regular_clique_check(g_, sorted).e.has_value();
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  std::set<std::size_t> sizes_;
  std::vector<Row> rows_;
  std::optional<std::vector<std::uint32_t>> found_;
};

}  // namespace

EdgeRegularity edge_regularity(const Graph& g, bool from_vertex_zero) {
  EdgeRegularity out;
  out.v = g.order();
  const std::size_t n = g.order();
  if (n == 0) return out;
  const std::size_t k = g.degree(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (g.degree(v) != k) {
      out.failure = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", vertex 0 has " +
                    std::to_string(k);
      return out;
    }
  }
  out.k = k;
  std::optional<std::size_t> lambda;
  std::pair<std::size_t, std::size_t> first_edge;
  const std::size_t rows = from_vertex_zero ? 1 : n;
  for (std::size_t u = 0; u < rows; ++u) {
    for (auto w : g.neighbours(u)) {
      if (w <= u) continue;
      const std::size_t c = g.common_neighbours(u, w);
      if (!lambda) {
        lambda = c;
        first_edge = {u, w};
      } else if (*lambda != c) {
        out.failure = "edge {" + std::to_string(u) + "," + std::to_string(w) + "} lies in " + std::to_string(c) +
                      " triangles, edge {" + std::to_string(first_edge.first) + "," +
                      std::to_string(first_edge.second) + "} in " + std::to_string(*lambda);
        return out;
      }
    }
  }
  out.lambda = lambda.value_or(0);
  return out;
}

CliqueCheck regular_clique_check(const Graph& g, std::span<const std::uint32_t> c) {
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  for (auto x : c) {
    if (x >= n) throw InvalidArgument("clique vertex " + std::to_string(x) + " out of range");
    if (in[x]) throw InvalidArgument("clique vertex " + std::to_string(x) + " repeated");
    in[x] = 1;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!g.adjacent(c[i], c[j])) {
        throw InvalidArgument("vertices " + std::to_string(c[i]) + " and " + std::to_string(c[j]) +
                              " of the clique are not adjacent");
      }
    }
  }
  CliqueCheck out;
  std::optional<std::size_t> e;
  for (std::size_t x = 0; x < n; ++x) {
    if (in[x]) continue;
    std::size_t hits = 0;
    for (auto y : c) hits += g.adjacent(x, y) ? 1 : 0;
    if (!e) e = hits;
    if (*e != hits) {
      out.failure = "outside vertex " + std::to_string(x) + " has " + std::to_string(hits) +
                    " neighbours in the clique, expected " + std::to_string(*e);
      return out;
    }
  }
  if (!e) {
    out.failure = "clique covers every vertex";
  } else if (*e == 0) {
    out.failure = "outside vertices have no neighbours in the clique";
  } else {
    out.e = e;
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotEdgeRegular: return "not-edge-regular";
    case Verdict::EdgeRegularOnly: return "edge-regular-only";
    case Verdict::StrictlyNeumaier: return "strictly-neumaier";
    case Verdict::StronglyRegular: return "strongly-regular";
    case Verdict::NeumaierAndSrg: return "neumaier-and-srg";
  }
  return "unknown";
}

std::vector<std::size_t> mu_set(const Graph& g, unsigned threads, bool from_vertex_zero) {
  const std::size_t n = g.order();
  if (from_vertex_zero) {
    std::set<std::size_t> s;
    for (std::size_t w = 1; w < n; ++w) {
      if (!g.adjacent(0, w)) s.insert(g.common_neighbours(0, w));
    }
    return {s.begin(), s.end()};
  }
  threads = std::max(1u, threads);
  std::vector<std::set<std::size_t>> partial(threads);
  auto work = [&](unsigned t) {
    for (std::size_t u = t; u < n; u += threads) {
      for (std::size_t w = u + 1; w < n; ++w) {
        if (!g.adjacent(u, w)) partial[t].insert(g.common_neighbours(u, w));
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::set<std::size_t> all;
  for (auto& s : partial) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

std::optional<std::vector<std::uint32_t>> find_regular_clique(const Graph& g, std::size_t k, std::size_t lambda) {
  if (g.order() < 3) return std::nullopt;
  auto c = CliqueSearch(g, k, lambda).run();
  if (c) std::sort(c->begin(), c->end());
  return c;
}

NeumaierReport classify(const Graph& g, const ClassifyOptions& options) {
  NeumaierReport rep;
  rep.v = g.order();
  const EdgeRegularity er = edge_regularity(g, options.vertex_transitive);
  rep.mu_set = mu_set(g, options.threads, options.vertex_transitive);
  if (!er.holds()) {
    rep.verdict = Verdict::NotEdgeRegular;
    rep.witness = er.failure;
    rep.clique_source = "none";
    return rep;
  }
  rep.k = er.k;
  rep.lambda = er.lambda;
  rep.srg = rep.mu_set.size() == 1;

  const bool complete = rep.v > 0 && *rep.k + 1 == rep.v;
  if (complete) {
    rep.clique_source = "none";
    rep.witness = "complete graph";
  } else if (options.candidate_clique) {
    rep.clique_source = "candidate";
    std::vector<std::uint32_t> c = *options.candidate_clique;
    const CliqueCheck check = regular_clique_check(g, c);
    if (check.e) {
      std::sort(c.begin(), c.end());
      rep.clique = c;
      rep.e = check.e;
      rep.s = c.size();
    } else {
      rep.witness = check.failure;
    }
  } else if (rep.v <= options.clique_search_cap) {
    rep.clique_source = "search";
    if (auto c = find_regular_clique(g, *rep.k, *rep.lambda)) {
      rep.e = regular_clique_check(g, *c).e;
      rep.s = c->size();
      rep.clique = std::move(c);
    }
  } else {
    rep.clique_source = "skipped";
  }

  if (rep.clique) {
    rep.verdict = rep.srg ? Verdict::NeumaierAndSrg : Verdict::StrictlyNeumaier;
  } else {
    rep.verdict = rep.srg ? Verdict::StronglyRegular : Verdict::EdgeRegularOnly;
  }
  return rep;
}

nlohmann::json NeumaierReport::to_json() const {
  nlohmann::json j;
  j["v"] = v;
  j["k"] = k ? nlohmann::json(*k) : nlohmann::json();
  j["lambda"] = lambda ? nlohmann::json(*lambda) : nlohmann::json();
  j["mu_set"] = mu_set;
  j["srg"] = srg;
  j["clique"] = clique ? nlohmann::json(*clique) : nlohmann::json();
  j["e"] = e ? nlohmann::json(*e) : nlohmann::json();
  j["s"] = s ? nlohmann::json(*s) : nlohmann::json();
  j["verdict"] = to_string(verdict);
  j["clique_source"] = clique_source;
  j["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json();
  return j;
}

CayleyProfile cayley_profile(const AbelianGroup& g, const ConnectionSet& s) {
  if (s.contains(g.identity())) throw InvalidArgument("connection set contains the identity");
  if (auto w = asymmetry_witness(g, s)) {
    throw InvalidArgument("connection set is not closed under negation (witness " + std::to_string(*w) + ")");
  }
  const GroupRingVector ind = indicator(g, s.members);
  const GroupRingVector sq = group_ring_mul(g, ind, ind);
  std::set<std::int64_t> lam, mu;
  for (std::uint32_t x = 1; x < g.size(); ++x) (ind[x] ? lam : mu).insert(sq[x]);
  CayleyProfile p;
  p.degree = s.size();
  p.lambda_set.assign(lam.begin(), lam.end());
  p.mu_set.assign(mu.begin(), mu.end());
  return p;
}

std::vector<std::int64_t> mu_spectrum_prediction(const GammaSpec& spec, const CyclotomicTable& t1,
                                                 const CyclotomicTable& t2) {
  std::set<std::int64_t> out{std::int64_t{spec.n1} * (spec.n2 + 1)};
  for (std::uint32_t i = 1; i < spec.m; ++i) out.insert(2 * std::int64_t{spec.n1} + x_sum(t1, t2, 0, 0, i));
  return {out.begin(), out.end()};
}

bool neumaier_condition(const GammaSpec& spec, const CyclotomicTable& t1, const CyclotomicTable& t2) {
  if (!spec.undirected()) return false;
  const std::int64_t q1 = spec.q1();
  const std::int64_t n1 = spec.n1;
  const std::int64_t n2 = spec.n2;
  return x_sum(t1, t2, 0, 0, 0) == q1 + n1 * n2 - 2 * n1 - n2;
}

}  // namespace neumaier

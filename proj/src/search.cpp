#include "neumaier/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "neumaier/coherent.hpp"
#include "neumaier/constructions.hpp"
#include "neumaier/cyclotomy.hpp"
#include "neumaier/error.hpp"
#include "neumaier/regularity.hpp"

namespace neumaier {
namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

// One primitive element per unit class r (mod m), as alpha0^j with j = r (mod m) minimal.
struct UnitClass {
  std::uint32_t r = 0;
  std::size_t position = 0;
  CyclotomicTable table;
  std::optional<UVPair> uv;
};

struct FieldTables {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::vector<UnitClass> classes;  // classes[0] has r = 1 (alpha0 itself)
};

FieldTables field_tables(const PrimePower& pp, std::uint32_t m) {
  const FieldSpec f = FieldSpec::build(pp.p, pp.r);
  const auto prims = f.primitive_elements();
  FieldTables out;
  out.q = f.q();
  out.n = (f.q() - 1) / m;
  for (std::uint32_t r = 1; r < m || (m == 1 && r == 1); ++r) {
    if (gcd_u64(r, m) != 1) continue;
    std::uint64_t j = r;
    while (gcd_u64(j, f.q() - 1) != 1) j += m;
    const FieldElement beta = f.pow(prims.front(), j);
    const auto it = std::lower_bound(prims.begin(), prims.end(), beta);
    if (it == prims.end() || *it != beta) throw InternalError("alpha0^j with j a unit is not primitive");
    const DlogTable dlog(f, beta);
    UnitClass c;
    c.r = r;
    c.position = static_cast<std::size_t>(it - prims.begin());
    c.table = cyclotomic_numbers(f, dlog, m);
    if (m == 3 || m == 4) c.uv = uv_decomposition(f, dlog, m);
    out.classes.push_back(std::move(c));
  }
  return out;
}

std::vector<std::int64_t> predicted_mu(std::int64_t n1, std::int64_t n2, std::uint32_t m, const CyclotomicTable& t1,
                                       const CyclotomicTable& t2) {
  std::set<std::int64_t> s{n1 * (n2 + 1)};
  for (std::uint32_t i = 1; i < m; ++i) s.insert(2 * n1 + x_sum(t1, t2, 0, 0, i));
  return {s.begin(), s.end()};
}

// Tests the edge-regularity condition for alpha1 = alpha0 and every unit class of alpha2.
// Prefers a strictly Neumaier witness over a strongly regular one.
std::optional<SearchHit> evaluate_pair(std::uint32_t m, const FieldTables& f1, const FieldTables& f2) {
  const std::int64_t q1 = f1.q, q2 = f2.q, n1 = f1.n, n2 = f2.n;
  if ((q1 * n1) % 2 != (q2 * n2) % 2) return std::nullopt;
  const UnitClass& c1 = f1.classes.front();
  std::optional<SearchHit> best;
  for (const auto& c2 : f2.classes) {
    if (x_sum(c1.table, c2.table, 0, 0, 0) != q1 + n1 * n2 - 2 * n1 - n2) continue;
    SearchHit h;
    h.m = m;
    h.q1 = f1.q;
    h.q2 = f2.q;
    h.nexus = f1.n;
    h.alpha1_position = c1.position;
    h.alpha2_position = c2.position;
    h.witnessed = true;
    h.coprime = as_prime_power(q1)->p != as_prime_power(q2)->p;
    h.mu_prediction = predicted_mu(n1, n2, m, c1.table, c2.table);
    h.srg = h.mu_prediction.size() == 1;
    if (c1.uv && c2.uv) {
      h.u1 = c1.uv->u;
      h.v1 = c1.uv->v;
      h.u2 = c2.uv->u;
      h.v2 = c2.uv->v;
    }
    if (!best || (best->srg && !h.srg)) best = std::move(h);
    if (!best->srg) break;
  }
  return best;
}

void verify_hit(SearchHit& h, const SearchOptions& o) {
  if (o.verify == VerifyMode::None) return;
  const std::size_t v = std::size_t{h.q1} * h.q2;
  const GammaSpec spec = GammaSpec::make(h.m, h.q1, h.q2, h.alpha1_position, h.alpha2_position);
  if (v > o.construct_cap) {
    const std::size_t degree = std::size_t{h.q1 - 1} * (spec.n2 + 1);
    if (degree > o.group_ring_cap) return;
    const GammaClasses cls = build_classes(spec);
    std::vector<std::uint32_t> s = cls.c1.members;
    s.insert(s.end(), cls.d[0].members.begin(), cls.d[0].members.end());
    const CayleyProfile prof = cayley_profile(spec.group(), ConnectionSet::make(std::move(s), "C1+D0"));
    const std::int64_t lambda = std::int64_t{h.q1} - 2 + std::int64_t{spec.n1 - 1} * spec.n2;
    h.group_ring_checked = true;
    if (prof.degree != degree || prof.lambda_set != std::vector<std::int64_t>{lambda} ||
        prof.mu_set != h.mu_prediction) {
      h.problem = "group-ring square disagrees with the predicted parameters";
    }
    return;
  }
  const Graph g = gamma(spec);
  ClassifyOptions co;
  co.candidate_clique = canonical_clique(spec);
  co.vertex_transitive = true;
  const NeumaierReport rep = classify(g, co);
  const std::size_t n1 = spec.n1, n2 = spec.n2;
  const bool params = rep.neumaier() && rep.k == (h.q1 - 1) * (n2 + 1) && rep.lambda == h.q1 - 2 + (n1 - 1) * n2 &&
                      rep.e == n1 && rep.s == h.q1;
  std::vector<std::int64_t> observed(rep.mu_set.begin(), rep.mu_set.end());
  if (!params) {
    h.problem = "constructed graph is " + to_string(rep.verdict) + " without the predicted parameters";
  } else if (rep.srg != h.srg || observed != h.mu_prediction) {
    h.problem = "observed common-neighbour set differs from the prediction";
  }
  h.verified = Verified::Constructed;
  if (o.verify == VerifyMode::Wl && v <= o.wl_cap) {
    WlOptions wo;
    wo.cap = o.wl_cap;
    wo.threads = 1;
    h.rank = wl_closure(g, wo).rank;
    h.verified = Verified::WlConfirmed;
  }
}

void finish(std::vector<std::optional<SearchHit>>& slots, std::vector<SearchHit>& out, const SearchOptions& o) {
  for (auto& s : slots) {
    if (s && (o.include_srg || !s->srg)) out.push_back(std::move(*s));
  }
  std::sort(out.begin(), out.end(), [](const SearchHit& a, const SearchHit& b) {
    return std::tie(a.q1, a.q2) < std::tie(b.q1, b.q2);
  });
  parallel_for(out.size(), o.threads, [&](std::size_t i) { verify_hit(out[i], o); });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::vector<PrimePower> prime_powers(std::uint32_t m, std::uint32_t bound) {
  if (m < 1) throw InvalidArgument("m must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t q = m + 1; q <= bound; q += m) {
    if (auto pp = as_prime_power(q)) out.push_back(*pp);
  }
  return out;
}

std::string to_string(VerifyMode v) {
  switch (v) {
    case VerifyMode::None: return "none";
    case VerifyMode::Construct: return "construct";
    case VerifyMode::Wl: return "wl";
  }
  return "none";
}

std::string to_string(Verified v) {
  switch (v) {
    case Verified::AnalyticOnly: return "analytic-only";
    case Verified::Constructed: return "constructed";
    case Verified::WlConfirmed: return "wl-confirmed";
  }
  return "analytic-only";
}

VerifyMode verify_mode_from_name(const std::string& name) {
  if (name == "none") return VerifyMode::None;
  if (name == "construct") return VerifyMode::Construct;
  if (name == "wl") return VerifyMode::Wl;
  throw InvalidArgument("unknown verify mode '" + name + "' (expected none, construct or wl)");
}

nlohmann::json SearchHit::to_json() const {
  auto opt = [](const std::optional<std::int64_t>& x) { return x ? nlohmann::json(*x) : nlohmann::json(); };
  nlohmann::json j{{"m", m},
                   {"q1", q1},
                   {"q2", q2},
                   {"u1", opt(u1)},
                   {"v1", opt(v1)},
                   {"u2", opt(u2)},
                   {"v2", opt(v2)},
                   {"nexus", nexus},
                   {"verified", to_string(verified)},
                   {"alpha1_position", alpha1_position},
                   {"alpha2_position", alpha2_position},
                   {"witnessed", witnessed},
                   {"coprime", coprime},
                   {"srg", srg},
                   {"group_ring_checked", group_ring_checked},
                   {"mu_prediction", mu_prediction}};
  j["rank"] = rank ? nlohmann::json(*rank) : nlohmann::json();
  j["problem"] = problem ? nlohmann::json(*problem) : nlohmann::json();
  return j;
}

std::vector<SearchHit> solve_pairs(std::uint32_t m, std::uint32_t q1_max, const SearchOptions& options) {
  if (m != 3 && m != 4) throw InvalidArgument("pair search supports m = 3 or m = 4");
  if (q1_max < m + 1) throw InvalidArgument("q1 bound must be at least " + std::to_string(m + 1));
  if (options.window_scale < 1) throw InvalidArgument("window scale must be positive");
  const std::uint64_t factor = m == 3 ? 4 : 9;
  const std::uint64_t q2_bound = factor * options.window_scale * q1_max;
  if (q2_bound > (1u << 24)) throw LimitExceeded("q2 window exceeds 2^24");
  const auto q1s = prime_powers(m, q1_max);
  const auto q2s = prime_powers(m, static_cast<std::uint32_t>(q2_bound));
  std::map<std::uint32_t, UVPair> mags;
  for (const auto& pp : q2s) mags.emplace(pp.q, uv_magnitudes(m, pp));

  // Analytic phase: both signs of v1 v2.
  std::vector<std::pair<PrimePower, PrimePower>> candidates;
  for (const auto& a : q1s) {
    const UVPair& x = mags.at(a.q);
    const std::int64_t q1 = a.q;
    const std::uint64_t lo = q1 / options.window_scale;
    const std::uint64_t hi = factor * options.window_scale * q1;
    for (const auto& b : q2s) {
      if (b.q < lo || b.q > hi) continue;
      const std::int64_t q2 = b.q;
      const UVPair& y = mags.at(b.q);
      std::int64_t lhs, c;
      if (m == 3) {
        lhs = 4 * (2 * q1 - q2);
        c = 27;
      } else {
        if (((q1 - 1) / 4) % 2 != ((q2 - 1) / 4) % 2) continue;
        lhs = (3 * q1 - q2) / 2;
        c = 4;
      }
      const std::int64_t base = x.u * y.u;
      const std::int64_t cross = c * std::abs(x.v) * std::abs(y.v);
      if (lhs == base + cross || lhs == base - cross) candidates.emplace_back(a, b);
    }
  }

  // Witness phase.
  std::map<std::uint32_t, FieldTables> cache;
  std::mutex mu;
  auto tables = [&](const PrimePower& pp) -> const FieldTables& {
    {
      std::lock_guard lock(mu);
      if (auto it = cache.find(pp.q); it != cache.end()) return it->second;
    }
    FieldTables t = field_tables(pp, m);
    std::lock_guard lock(mu);
    return cache.try_emplace(pp.q, std::move(t)).first->second;
  };
  std::vector<std::optional<SearchHit>> slots(candidates.size());
  parallel_for(candidates.size(), options.threads, [&](std::size_t i) {
    const auto& [a, b] = candidates[i];
    const FieldTables& f1 = tables(a);
    const FieldTables& f2 = tables(b);
    auto hit = evaluate_pair(m, f1, f2);
    if (!hit) {
      SearchHit h;
      h.m = m;
      h.q1 = a.q;
      h.q2 = b.q;
      h.nexus = f1.n;
      h.coprime = a.p != b.p;
      h.witnessed = false;
      h.problem = "no primitive elements realize the sign pattern";
      hit = std::move(h);
    }
    slots[i] = std::move(hit);
  });
  std::vector<SearchHit> out;
  finish(slots, out, options);
  return out;
}

std::vector<SearchHit> general_search(std::uint32_t m, std::uint32_t q1_max, std::uint32_t q2_max,
                                      const SearchOptions& options) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  const auto q1s = prime_powers(m, q1_max);
  const auto q2s = prime_powers(m, q2_max);
  std::map<std::uint32_t, PrimePower> all;
  for (const auto& p : q1s) all.emplace(p.q, p);
  for (const auto& p : q2s) all.emplace(p.q, p);
  std::vector<PrimePower> keys;
  for (const auto& [q, pp] : all) keys.push_back(pp);
  std::vector<std::optional<FieldTables>> built(keys.size());
  parallel_for(keys.size(), options.threads, [&](std::size_t i) { built[i] = field_tables(keys[i], m); });
  std::map<std::uint32_t, const FieldTables*> by_q;
  for (std::size_t i = 0; i < keys.size(); ++i) by_q.emplace(keys[i].q, &*built[i]);

  std::vector<std::optional<SearchHit>> slots(q1s.size() * q2s.size());
  parallel_for(q1s.size(), options.threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < q2s.size(); ++j) {
      slots[i * q2s.size() + j] = evaluate_pair(m, *by_q.at(q1s[i].q), *by_q.at(q2s[j].q));
    }
  });
  std::vector<SearchHit> out;
  finish(slots, out, options);
  return out;
}

std::vector<NexusRow> nexus_table(std::uint32_t m_max, std::uint32_t q2_max, std::uint32_t e_max,
                                  const SearchOptions& options) {
  if (m_max < 2 || q2_max < 3 || e_max < 1) throw InvalidArgument("nexus bounds must be positive (m_max >= 2)");
  std::map<std::uint32_t, NexusRow> rows;
  for (std::uint32_t m = 2; m <= m_max; ++m) {
    for (auto& h : general_search(m, 1 + m * e_max, q2_max, options)) {
      auto& row = rows[h.nexus];
      row.e = h.nexus;
      row.hits.push_back(std::move(h));
    }
  }
  std::vector<NexusRow> out;
  for (auto& [e, row] : rows) {
    if (e >= 1 && e <= e_max) out.push_back(std::move(row));
  }
  return out;
}

std::string hits_to_csv(const std::vector<SearchHit>& hits) {
  std::ostringstream os;
  os << "m,q1,q2,u1,v1,u2,v2,nexus,verified,rank\n";
  for (const auto& h : hits) {
    os << h.m << ',' << h.q1 << ',' << h.q2 << ',' << opt_str(h.u1) << ',' << opt_str(h.v1) << ',' << opt_str(h.u2)
       << ',' << opt_str(h.v2) << ',' << h.nexus << ',' << csv_field(to_string(h.verified)) << ',' << opt_str(h.rank)
       << '\n';
  }
  return os.str();
}

std::string nexus_to_csv(const std::vector<NexusRow>& rows) {
  std::ostringstream os;
  os << "e,m,q1,q2\n";
  for (const auto& r : rows) {
    for (const auto& h : r.hits) os << r.e << ',' << h.m << ',' << h.q1 << ',' << h.q2 << '\n';
  }
  return os.str();
}

}  // namespace neumaier

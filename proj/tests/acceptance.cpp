// Acceptance run: one PASS/FAIL line per criterion, with details underneath.
// Usage: acceptance [--only N[,N...]] [--expect-fail N[,N...]] [--threads T]
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "neumaier/arith.hpp"
#include "neumaier/coherent.hpp"
#include "neumaier/constructions.hpp"
#include "neumaier/cyclotomy.hpp"
#include "neumaier/regularity.hpp"
#include "neumaier/search.hpp"

using namespace neumaier;

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;
using Triple = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;  // m, q1, q2

unsigned g_threads = 1;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back("mismatch: " + why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string str(const Pair& p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }
std::string str(const Triple& t) {
  return "(" + std::to_string(std::get<0>(t)) + ";" + std::to_string(std::get<1>(t)) + "," + std::to_string(std::get<2>(t)) + ")";
}

template <class Seq>
std::string join(const Seq& items) {
  std::string s;
  for (const auto& x : items) s += (s.empty() ? "" : " ") + str(x);
  return s.empty() ? "none" : s;
}

// The published order-3 list prints 443 in the (109, .) cell; 443 = 2 mod 3, so 433 is the only reading consistent with the
// construction, and it is what the criterion check uses.
const std::vector<Pair> kOrder3 = {{4, 7},    {4, 13},   {7, 16},   {7, 19},   {13, 16},  {13, 49},  {19, 67},
                                   {31, 43},  {37, 73},  {49, 193}, {61, 97},  {97, 241}, {109, 433}, {139, 331},
                                   {151, 163}, {163, 211}, {169, 313}, {193, 769}, {199, 787}, {223, 811}};
const std::vector<Pair> kOrder4 = {{5, 13},   {5, 37},   {17, 25},  {25, 97},  {29, 61},  {29, 229}, {41, 169},
                                   {41, 241}, {61, 349}, {89, 289}, {89, 601}, {101, 109}, {109, 181}, {113, 625},
                                   {125, 157}, {125, 1093}, {149, 541}, {169, 1321}, {181, 829}, {229, 2029}};

const std::map<std::uint32_t, std::vector<Triple>> kNexus = {
    {1, {{3, 4, 7}, {3, 4, 13}, {4, 5, 13}, {4, 5, 37}, {6, 7, 79}, {6, 7, 103}, {7, 8, 29}, {7, 8, 43}, {7, 8, 71},
         {7, 8, 127}, {10, 11, 131}}},
    {2, {{3, 7, 16}, {3, 7, 19}, {5, 11, 41}, {5, 11, 101}, {6, 13, 37}, {9, 19, 487}}},
    {3, {{5, 16, 31}, {5, 16, 61}, {5, 16, 121}, {8, 25, 313}, {10, 31, 311}, {10, 31, 631}}},
    {4, {{3, 13, 16}, {3, 13, 49}, {4, 17, 25}, {7, 29, 113}, {7, 29, 449}, {9, 37, 181}, {9, 37, 1171}, {10, 41, 401},
         {10, 41, 601}, {10, 41, 1481}}},
    {5, {{6, 31, 127}, {8, 41, 137}}},
    {6, {{3, 19, 67}, {4, 25, 97}, {5, 31, 181}, {5, 31, 211}, {5, 31, 256}, {8, 49, 337}, {10, 61, 701}, {10, 61, 2221}}},
    {7, {{4, 29, 61}, {4, 29, 229}, {6, 43, 691}, {9, 64, 199}, {9, 64, 307}, {9, 64, 343}, {9, 64, 613}, {9, 64, 631},
         {9, 64, 739}, {9, 64, 829}, {9, 64, 991}, {9, 64, 1009}, {9, 64, 1063}, {9, 64, 1153}, {9, 64, 2197}}},
    {8, {{5, 41, 71}, {5, 41, 131}, {6, 49, 73}, {6, 49, 1201}, {9, 73, 1621}}},
    {9, {{7, 64, 757}, {7, 64, 883}, {7, 64, 1583}}},
    {10, {{3, 31, 43}, {4, 41, 169}, {4, 41, 241}, {6, 61, 349}, {6, 61, 1237}}},
    {11, {{6, 67, 139}}},
    {12, {{3, 37, 73}, {5, 61, 211}, {5, 61, 256}, {5, 61, 331}, {5, 61, 421}, {6, 73, 673}, {9, 109, 739}}},
    {13, {{6, 79, 1879}, {10, 131, 691}, {10, 131, 1091}}},
    {14, {{5, 71, 281}, {5, 71, 461}, {9, 127, 397}}},
    {15, {{4, 61, 349}, {10, 151, 431}}},
    {16, {{3, 49, 193}, {6, 97, 1249}}},
    {17, {{6, 103, 2503}, {8, 137, 953}}},
    {18, {{10, 181, 1061}}},
    {19, {{10, 191, 271}, {10, 191, 751}}},
    {20, {{5, 101, 311}, {3, 61, 97}, {9, 181, 2161}}},
};

void pairs_criterion(Outcome& o, std::uint32_t m, const std::vector<Pair>& expected) {
  SearchOptions opts;
  opts.verify = VerifyMode::Construct;
  opts.threads = g_threads;
  const auto hits = solve_pairs(m, 250, opts);
  std::vector<Pair> got;
  std::size_t checked = 0;
  for (const auto& h : hits) {
    got.emplace_back(h.q1, h.q2);
    if (h.problem) o.fail(str(Pair{h.q1, h.q2}) + ": " + *h.problem);
    if (!h.witnessed) o.fail(str(Pair{h.q1, h.q2}) + " has no witnessing primitive elements");
    if (h.verified == Verified::Constructed || h.group_ring_checked) ++checked;
  }
  std::vector<Pair> missing, extra;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  if (got != expected) o.fail("missing " + join(missing) + "; extra " + join(extra));
  o.note(std::to_string(got.size()) + " pairs, " + std::to_string(checked) +
         " confirmed by construction or group-ring product");
}

void c1(Outcome& o) {
  pairs_criterion(o, 3, kOrder3);
  o.note("the printed cell 443 is read as 433 (443 is not 1 mod 3)");
}

void c2(Outcome& o) { pairs_criterion(o, 4, kOrder4); }

void nexus_check(Outcome& o, std::uint32_t q2_max) {
  SearchOptions opts;
  opts.verify = VerifyMode::Construct;
  opts.threads = g_threads;
  const auto rows = nexus_table(10, q2_max, 20, opts);
  std::map<Triple, std::uint32_t> got;
  std::size_t problems = 0;
  for (const auto& r : rows)
    for (const auto& h : r.hits) {
      got[{h.m, h.q1, h.q2}] = r.e;
      if (h.problem) {
        ++problems;
        o.fail(str(Triple{h.m, h.q1, h.q2}) + ": " + *h.problem);
      }
    }
  std::vector<Triple> missing, wrong_e;
  std::size_t expected_count = 0;
  for (const auto& [e, ts] : kNexus)
    for (const auto& t : ts) {
      if (std::get<2>(t) > q2_max) continue;
      ++expected_count;
      const auto it = got.find(t);
      if (it == got.end()) {
        missing.push_back(t);
      } else if (it->second != e) {
        wrong_e.push_back(t);
      }
    }
  std::vector<std::string> extras;
  for (const auto& [t, e] : got) {
    bool listed = false;
    const auto row = kNexus.find(e);
    if (row != kNexus.end()) listed = std::find(row->second.begin(), row->second.end(), t) != row->second.end();
    if (!listed) extras.push_back("e=" + std::to_string(e) + " " + str(t));
  }
  if (!missing.empty()) o.fail("q2 <= " + std::to_string(q2_max) + ": missing " + join(missing));
  if (!wrong_e.empty()) o.fail("q2 <= " + std::to_string(q2_max) + ": wrong nexus for " + join(wrong_e));
  std::string ex;
  for (const auto& s : extras) ex += (ex.empty() ? "" : ", ") + s;
  o.note("q2 <= " + std::to_string(q2_max) + ": " + std::to_string(expected_count - missing.size()) + " of " +
         std::to_string(expected_count) + " listed triples present, " +
         std::to_string(got.size()) + " hits in total, " + std::to_string(problems) + " verification problems");
  if (!extras.empty()) o.note("  hits not listed in the table (verified strictly Neumaier): " + ex);
}

void c3(Outcome& o) {
  nexus_check(o, 1000);
  nexus_check(o, 5000);
}

void rank_case(Outcome& o, const std::string& name, const Graph& g, std::uint32_t rank,
               std::optional<std::size_t> support_size = std::nullopt) {
  WlOptions w;
  w.threads = g_threads;
  const auto c = wl_closure(g, w);
  const auto sup = support(g, c).cardinality();
  std::string line = name + ": rank " + std::to_string(c.rank) + ", support " + std::to_string(sup);
  o.note(line);
  if (c.rank != rank) o.fail(name + " rank " + std::to_string(c.rank) + ", expected " + std::to_string(rank));
  if (support_size && sup != *support_size)
    o.fail(name + " support " + std::to_string(sup) + ", expected " + std::to_string(*support_size));
  if (!verify_axioms(c).holds()) o.fail(name + " closure violates the axioms");
}

void c4(Outcome& o) {
  for (auto [q1, q2] : std::vector<Pair>{{4, 7}, {4, 13}, {7, 16}, {7, 19}, {13, 16}})
    rank_case(o, "Gamma_3" + str(Pair{q1, q2}), gamma(GammaSpec::make(3, q1, q2)), 6);
  for (auto [q1, q2] : std::vector<Pair>{{5, 13}, {5, 37}, {17, 25}})
    rank_case(o, "Gamma_4" + str(Pair{q1, q2}), gamma(GammaSpec::make(4, q1, q2)), 7);
  rank_case(o, "Omega", omega_fixture(), 7);
  rank_case(o, "Whiteman(13,5)", whiteman_graph(13, 5), 7);
  rank_case(o, "K(icosahedron)", gk_graph(validate_antipodal_drg(icosahedron())), 6, 3);
}

std::string params(const NeumaierReport& r) {
  auto f = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("-"); };
  return "(" + std::to_string(r.v) + "," + f(r.k) + "," + f(r.lambda) + ";" + f(r.e) + "," + f(r.s) + ")";
}

void param_case(Outcome& o, const std::string& name, const Graph& g, const std::string& expected,
                std::optional<Verdict> verdict = std::nullopt, std::optional<std::vector<std::uint32_t>> clique = {}) {
  ClassifyOptions co;
  co.candidate_clique = std::move(clique);
  const auto r = classify(g, co);
  const auto got = params(r);
  o.note(name + ": " + got + " " + to_string(r.verdict));
  if (got != expected) o.fail(name + " gives " + got + ", expected " + expected);
  if (verdict && r.verdict != *verdict) o.fail(name + " verdict " + to_string(r.verdict));
}

void c5(Outcome& o) {
  const auto spec = GammaSpec::make(3, 4, 7);
  param_case(o, "Gamma_3(4,7)", gamma(spec), "(28,9,2;1,4)", Verdict::StrictlyNeumaier, canonical_clique(spec));
  param_case(o, "Omega", omega_fixture(), "(16,9,2;2,4)");
  param_case(o, "Whiteman(13,5)", whiteman_graph(13, 5), "(65,16,3;1,5)", Verdict::StrictlyNeumaier);
  param_case(o, "K(icosahedron)", gk_graph(validate_antipodal_drg(icosahedron())), "(24,8,2;1,4)",
             Verdict::StrictlyNeumaier);
  const auto om = edge_regularity(omega_fixture());
  if (om.lambda && *om.lambda != 2)
    o.note("Omega: every edge of the listed Cayley graph lies in " + std::to_string(*om.lambda) +
           " triangles; lambda = 2 is not attainable from that connection set");
}

void c6(Outcome& o) {
  std::size_t graphs = 0;
  for (std::uint32_t q = 3; q <= 31; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    for (std::uint32_t m = 2; m <= q - 1; ++m) {
      if ((q - 1) % m) continue;
      ++graphs;
      const std::uint64_t n = (q - 1) / m;
      const auto g = gamma(GammaSpec::make(m, q, q));
      const auto r = classify(g);
      const std::size_t k = n * (q + m - 1), lam = q - 2 + n * (n - 1), mu = n * (n + 1);
      const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(m);
      if (!r.srg || r.k != k || r.lambda != lam || r.mu_set != std::vector<std::size_t>{mu} || r.v != std::size_t{q} * q)
        o.fail(tag + " gives " + params(r) + " mu " + (r.mu_set.empty() ? "-" : std::to_string(r.mu_set.front())));
      WlOptions w;
      w.threads = g_threads;
      const auto rank = wl_closure(g, w).rank;
      if (rank != 3) o.fail(tag + " rank " + std::to_string(rank));
    }
  }
  o.note(std::to_string(graphs) + " graphs (m >= 2), all strongly regular with the stated parameters and rank 3");
}

void c7(Outcome& o) {
  std::size_t tables = 0, closed = 0;
  for (std::uint32_t q = 3; q <= 200; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    const auto f = FieldSpec::build(pp->p, pp->r);
    for (auto a : f.primitive_elements()) {
      const DlogTable d(f, a);
      for (std::uint32_t m = 2; m <= 10; ++m) {
        if ((q - 1) % m) continue;
        const auto t = cyclotomic_numbers(f, d, m);
        ++tables;
        const auto tag = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " alpha=" + std::to_string(a.index);
        if (const auto bad = check_sum_rules(t)) o.fail(tag + ": " + *bad);
        const std::int64_t n = (q - 1) / m;
        if (x_sum(t, t, 0, 0, 0) != (n - 1) * (n - 1) + n * (m - 1)) o.fail(tag + ": X_000");
        for (std::uint32_t i = 1; i < m; ++i)
          if (x_sum(t, t, 0, 0, i) != n * (n - 1)) o.fail(tag + ": X_00" + std::to_string(i));
        if (m <= 4) {
          std::optional<UVPair> uv;
          if (m > 2) uv = uv_decomposition(f, d, m);
          ++closed;
          if (!(closed_form(m, q, uv) == t)) o.fail(tag + ": closed form differs");
        }
      }
    }
  }
  o.note(std::to_string(closed) + " closed-form comparisons (m <= 4), " + std::to_string(tables) +
         " tables checked for sum rules and same-element identities (m <= 10)");
}

void c8(Outcome& o) {
  std::size_t runs = 0, mixed = 0, printed_ok = 0;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> jobs;
  for (std::uint32_t m = 2; m <= 6; ++m) {
    const auto qs = prime_powers(m, 2000);
    for (const auto& a : qs)
      for (const auto& b : qs)
        if (std::uint64_t{a.q} * b.q <= 2000) jobs.emplace_back(m, a.q, b.q);
  }
  std::vector<std::optional<SchurReport>> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < g_threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        const auto [m, q1, q2] = jobs[i];
        reports[i] = schur_verify(GammaSpec::make(m, q1, q2));
      }
    });
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!reports[i]) continue;
    const auto& r = *reports[i];
    ++runs;
    if (!r.passes()) {
      o.fail(str(Triple{r.m, r.q1, r.q2}) + (r.mismatches.empty() ? std::string() : ": " + r.mismatches.front()));
    }
    if (r.mixed_parity) {
      ++mixed;
      if (r.dd_as_printed.value_or(false)) ++printed_ok;
    }
  }
  o.note(std::to_string(runs) + " combinations (m <= 6, q1 q2 <= 2000)");
  o.note(std::to_string(mixed) + " have q1 n1 and q2 n2 of different parity; for these the D.D products carry the identity "
         "term at i - j = m/2, and the split with it at i = j matches " + std::to_string(printed_ok) + " of them");
}

void c9(Outcome& o) {
  std::size_t graphs = 0, diagonal = 0;
  const auto qs = prime_powers(2, 50);
  for (const auto& a : qs)
    for (const auto& b : qs) {
      const auto spec = GammaSpec::make(2, a.q, b.q);
      if (!spec.undirected()) continue;
      ++graphs;
      ClassifyOptions co;
      co.candidate_clique = canonical_clique(spec);
      co.vertex_transitive = true;
      const auto r = classify(gamma(spec), co);
      const auto tag = str(Pair{a.q, b.q});
      if (a.q == b.q) {
        ++diagonal;
        if (!r.neumaier() || !r.srg) o.fail(tag + " verdict " + to_string(r.verdict) + " on the diagonal");
      } else if (r.neumaier()) {
        o.fail(tag + " off the diagonal is " + to_string(r.verdict));
      }
    }
  o.note(std::to_string(graphs) + " undirected graphs, " + std::to_string(diagonal) +
         " diagonal ones all Neumaier and strongly regular, none off the diagonal");
}

void c10(Outcome& o) {
  for (std::uint32_t bound : {250u, 400u}) {
    std::set<Pair> even;
    for (const auto& h : solve_pairs(3, bound, SearchOptions{VerifyMode::None, 5000, 1024, 6000, g_threads}))
      if ((std::uint64_t{h.q1} * h.q2) % 2 == 0 && h.coprime) even.emplace(h.q1, h.q2);
    const std::set<Pair> want{{4, 7}, {4, 13}, {7, 16}, {13, 16}};
    o.note("q1 <= " + std::to_string(bound) + ": " + join(even));
    if (even != want) o.fail("even coprime pairs differ for q1 <= " + std::to_string(bound));
  }
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string only, expect_fail;
  g_threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--only", only, "Comma-separated criteria to run");
  app.add_option("--expect-fail", expect_fail, "Criteria whose failure is known and documented");
  app.add_option("--threads", g_threads);
  CLI11_PARSE(app, argc, argv);
  const auto only_set = parse_list(only);
  const auto known = parse_list(expect_fail);

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"order-3 pair table, q1 <= 250", c1},
      {"order-4 pair table, q1 <= 250", c2},
      {"nexus table, m <= 10, q2 <= 5000, e <= 20", c3},
      {"exact coherent ranks", c4},
      {"exact Neumaier parameters", c5},
      {"Latin-square SRG family, q <= 31", c6},
      {"closed forms and identities, q <= 200", c7},
      {"Schur partition products, m <= 6, q1 q2 <= 2000", c8},
      {"order 2: Neumaier only on the diagonal, q <= 50", c9},
      {"even coprime order-3 solutions", c10},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only_set.empty() && !only_set.count(id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << timing << "]" << (!o.pass && known.count(id) ? "  (known, documented)" : "") << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    if (!o.pass && !known.count(id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}

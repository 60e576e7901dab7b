// Command-line front end. Talks to the library only through the C API.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neumaier/neumaier.h"

namespace {

using json = nlohmann::json;

struct CliFailure {
  int status;
  std::string message;
};

void check(nm_status s) {
  if (s != NM_OK) throw CliFailure{static_cast<int>(s), nm_last_error()};
}

struct GraphDeleter {
  void operator()(nm_graph* g) const { nm_graph_free(g); }
};
struct ClosureDeleter {
  void operator()(nm_closure* c) const { nm_closure_free(c); }
};
using GraphPtr = std::unique_ptr<nm_graph, GraphDeleter>;
using ClosurePtr = std::unique_ptr<nm_closure, ClosureDeleter>;

json take_json(char* raw) {
  std::string s(raw);
  nm_string_free(raw);
  return json::parse(s);
}

GraphPtr read_graph(const std::string& path) {
  nm_graph* g = nullptr;
  check(nm_graph_read(path.c_str(), &g));
  return GraphPtr(g);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliFailure{NM_ERR_IO, "cannot write '" + path + "'"};
  out << text;
  if (!out) throw CliFailure{NM_ERR_IO, "write failed for '" + path + "'"};
}

std::vector<std::uint32_t> parse_clique(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw CliFailure{NM_ERR_INVALID_ARGUMENT, "bad clique vertex '" + item + "'"};
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::string opt_num(const json& j) { return j.is_null() ? "-" : j.dump(); }

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Cyclotomic Neumaier graphs: construction, classification, coherent rank and pair searches"};
  app.require_subcommand(1);
  bool as_json = false;
  bool no_manifest = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", as_json, "Machine-readable output and errors");
  app.add_flag("--no-manifest", no_manifest, "Do not print the run manifest to stderr");
  app.add_option("--threads", threads, "Worker threads for search and refinement")->check(CLI::PositiveNumber);

  std::vector<std::string> outputs;
  std::function<void()> action;

  // cyclo table
  auto* cyclo = app.add_subcommand("cyclo", "Cyclotomic numbers");
  cyclo->require_subcommand(1);
  auto* ctable = cyclo->add_subcommand("table", "Print the m x m table c_m(alpha; a, b)");
  std::uint32_t cp = 0, cr = 1, cm = 0;
  std::size_t calpha = 0;
  ctable->add_option("--p", cp, "Characteristic")->required();
  ctable->add_option("--r", cr, "Extension degree");
  ctable->add_option("--m", cm, "Order")->required();
  ctable->add_option("--alpha-index", calpha, "Position of alpha among the ascending primitive elements");
  ctable->callback([&] {
    action = [&] {
      char* raw = nullptr;
      check(nm_cyclo_table_json(cp, cr, cm, calpha, &raw));
      const json t = take_json(raw);
      if (as_json) {
        std::cout << t.dump(2) << "\n";
        return;
      }
      std::cout << "q=" << t["q"] << " m=" << t["m"] << " n=" << t["n"] << " alpha=" << t["alpha"]
                << " (index " << calpha << ")\n";
      const auto& counts = t["counts"];
      std::size_t width = 1;
      for (const auto& row : counts)
        for (const auto& c : row) width = std::max(width, c.dump().size());
      for (const auto& row : counts) {
        for (std::size_t b = 0; b < row.size(); ++b)
          std::cout << (b ? " " : "") << std::setw(static_cast<int>(width)) << row[b].get<long long>();
        std::cout << "\n";
      }
      if (t.contains("u")) std::cout << "u=" << t["u"] << " v=" << t["v"] << "\n";
      if (t.contains("closed_form_matches")) std::cout << "closed form matches: " << t["closed_form_matches"] << "\n";
      std::cout << "sum rules: " << t["sum_rules"].get<std::string>() << "\n";
    };
  });

  // builders
  std::string out_path, out_format;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output graph file (.g6/.graph6 for graph6, otherwise JSON)")->required();
    sub->add_option("--format", out_format, "json or graph6 (overrides the extension)");
  };
  auto emit_graph = [&](GraphPtr g) {
    check(nm_graph_write(g.get(), out_path.c_str(), out_format.empty() ? nullptr : out_format.c_str()));
    outputs.push_back(out_path);
    const auto n = nm_graph_vertex_count(g.get());
    const auto e = nm_graph_edge_count(g.get());
    if (as_json) {
      std::cout << json{{"out", out_path}, {"n", n}, {"edges", e}}.dump() << "\n";
    } else {
      std::cout << "wrote " << out_path << ": " << n << " vertices, " << e << " edges\n";
    }
  };

  auto* gamma_cmd = app.add_subcommand("gamma", "Cyclotomic Cayley graphs on GF(q1) x GF(q2)");
  gamma_cmd->require_subcommand(1);
  auto* gbuild = gamma_cmd->add_subcommand("build", "Build Cay(GF(q1) x GF(q2), C1 u D0)");
  std::uint32_t gm = 0, gq1 = 0, gq2 = 0;
  std::size_t ga1 = 0, ga2 = 0;
  gbuild->add_option("--m", gm, "Order")->required();
  gbuild->add_option("--q1", gq1, "First field order")->required();
  gbuild->add_option("--q2", gq2, "Second field order")->required();
  gbuild->add_option("--alpha1", ga1, "Position of alpha1 among the primitive elements of GF(q1)");
  gbuild->add_option("--alpha2", ga2, "Position of alpha2 among the primitive elements of GF(q2)");
  add_out(gbuild);
  gbuild->callback([&] {
    action = [&] {
      nm_graph* g = nullptr;
      check(nm_gamma_build(gm, gq1, gq2, ga1, ga2, &g));
      emit_graph(GraphPtr(g));
    };
  });

  auto* gk_cmd = app.add_subcommand("gk", "Blow-up of an antipodal distance-regular graph of diameter 3");
  gk_cmd->require_subcommand(1);
  auto* gkbuild = gk_cmd->add_subcommand("build", "Build from a DRG file");
  std::string drg_path;
  gkbuild->add_option("--drg", drg_path, "Input distance-regular graph")->required();
  add_out(gkbuild);
  gkbuild->callback([&] {
    action = [&] {
      auto d = read_graph(drg_path);
      nm_graph* g = nullptr;
      check(nm_gk_build(d.get(), &g));
      emit_graph(GraphPtr(g));
    };
  });

  auto* wm_cmd = app.add_subcommand("whiteman", "Generalized cyclotomy graphs on Z/pqZ");
  wm_cmd->require_subcommand(1);
  auto* wbuild = wm_cmd->add_subcommand("build", "Build the graph for primes p, q");
  std::uint32_t wp = 0, wq = 0, walpha = 0;
  wbuild->add_option("--p", wp, "Prime p")->required();
  wbuild->add_option("--q", wq, "Prime q with q - 1 dividing p - 1")->required();
  wbuild->add_option("--alpha", walpha, "Common primitive root (default: smallest)");
  add_out(wbuild);
  wbuild->callback([&] {
    action = [&] {
      nm_graph* g = nullptr;
      check(nm_whiteman_build(wp, wq, walpha, &g));
      emit_graph(GraphPtr(g));
    };
  });

  auto* fixture = app.add_subcommand("fixture", "Built-in graphs");
  fixture->require_subcommand(1);
  std::string fixture_name;
  for (const char* name : {"omega", "icosahedron", "petersen"}) {
    auto* f = fixture->add_subcommand(name, std::string("Write the ") + name + " graph");
    add_out(f);
    f->callback([&, name] {
      fixture_name = name;
      action = [&] {
        nm_graph* g = nullptr;
        check(nm_fixture(fixture_name.c_str(), &g));
        emit_graph(GraphPtr(g));
      };
    });
  }

  // check
  auto* check_cmd = app.add_subcommand("check", "Classify: edge-regular, Neumaier, strongly regular");
  std::string graph_path, clique_text;
  bool vertex_transitive = false;
  check_cmd->add_option("--graph", graph_path, "Graph file")->required();
  check_cmd->add_option("--clique", clique_text, "Candidate regular clique, comma separated");
  check_cmd->add_flag("--vertex-transitive", vertex_transitive, "Count triangles and common neighbours at vertex 0 only");
  check_cmd->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      std::vector<std::uint32_t> clique;
      if (!clique_text.empty()) clique = parse_clique(clique_text);
      char* raw = nullptr;
      check(nm_classify_json(g.get(), clique_text.empty() ? nullptr : clique.data(), clique.size(),
                             vertex_transitive ? 1 : 0, &raw));
      const json r = take_json(raw);
      if (as_json) {
        std::cout << r.dump(2) << "\n";
        return;
      }
      std::cout << "verdict: " << r["verdict"].get<std::string>() << "\n";
      std::cout << "parameters: (" << r["v"] << "," << opt_num(r["k"]) << "," << opt_num(r["lambda"]) << ";"
                << opt_num(r["e"]) << "," << opt_num(r["s"]) << ")\n";
      std::cout << "mu_set: " << r["mu_set"].dump() << "\n";
      std::cout << "clique: " << r["clique_source"].get<std::string>();
      if (!r["clique"].is_null()) std::cout << " " << r["clique"].dump();
      std::cout << "\n";
      if (!r["witness"].is_null()) std::cout << "note: " << r["witness"].get<std::string>() << "\n";
    };
  });

  // wl rank
  auto* wl = app.add_subcommand("wl", "Weisfeiler-Leman coherent closure");
  wl->require_subcommand(1);
  auto* wrank = wl->add_subcommand("rank", "Coherent rank of a graph");
  std::size_t cap = 1024;
  bool show_flags = false, show_support = false, min_poly = false;
  wrank->add_option("--graph", graph_path, "Graph file")->required();
  wrank->add_option("--cap", cap, "Vertex cap for refinement");
  wrank->add_flag("--flags", show_flags, "Print homogeneous / symmetric / commutative");
  wrank->add_flag("--support", show_support, "Print the classes forming the adjacency relation");
  wrank->add_flag("--min-poly", min_poly, "Also compute the exact minimal polynomial degree (v <= 256)");
  wrank->callback([&] {
    action = [&] {
      auto g = read_graph(graph_path);
      const auto n = nm_graph_vertex_count(g.get());
      if (n > cap) {
        // Too large to refine: fall back to the analytic bound when the graph carries Gamma provenance.
        char* raw = nullptr;
        check(nm_graph_serialize(g.get(), "json", &raw));
        const json gj = take_json(raw);
        const json meta = gj.value("meta", json::object());
        if (meta.value("construction", "") != "gamma" || !meta.contains("m")) {
          throw CliFailure{NM_ERR_LIMIT, "graph has " + std::to_string(n) + " vertices, above the WL cap of " +
                                             std::to_string(cap) + "; no analytic rank is available"};
        }
        const auto bound = meta["m"].get<long long>() + 3;
        if (as_json) {
          std::cout << json{{"path", "analytic"}, {"rank_upper_bound", bound}, {"n", n}}.dump(2) << "\n";
        } else {
          std::cout << "path: analytic (v=" << n << " exceeds cap " << cap << ")\nrank <= " << bound << "\n";
        }
        return;
      }
      nm_closure* c = nullptr;
      check(nm_wl_closure(g.get(), cap, threads, &c));
      ClosurePtr closure(c);
      char* raw = nullptr;
      check(nm_closure_report_json(closure.get(), g.get(), &raw));
      json r = take_json(raw);
      r["path"] = "wl";
      if (min_poly) {
        std::size_t deg = 0;
        check(nm_min_poly_degree(g.get(), 256, &deg));
        r["min_poly_degree"] = deg;
      }
      if (as_json) {
        std::cout << r.dump(2) << "\n";
        return;
      }
      std::cout << "path: wl\nrank: " << r["rank"] << "\n";
      if (show_flags) {
        std::cout << "homogeneous: " << r["flags"]["homogeneous"] << "\nsymmetric: " << r["flags"]["symmetric"]
                  << "\ncommutative: " << r["flags"]["commutative"] << "\n";
      }
      if (show_support) std::cout << "support: " << r["support"].dump() << " (cardinality " << r["support_cardinality"] << ")\n";
      if (min_poly) std::cout << "minimal polynomial degree: " << r["min_poly_degree"] << "\n";
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Prime-power pair searches");
  search->require_subcommand(1);
  auto* pairs = search->add_subcommand("pairs", "Pairs for m = 3 or m = 4 from the quadratic-form criterion");
  std::uint32_t sm = 0, q1_max = 0, window = 1;
  std::string csv_path, verify = "wl";
  bool include_srg = false;
  pairs->add_option("--m", sm, "3 or 4")->required();
  pairs->add_option("--q1-max", q1_max, "Bound on q1")->required();
  pairs->add_option("--csv", csv_path, "Write CSV here instead of stdout");
  pairs->add_option("--verify", verify, "none, construct or wl");
  pairs->add_flag("--include-srg", include_srg, "Also emit strongly regular hits");
  pairs->add_option("--window-scale", window, "Widen the q2 window by this factor");
  pairs->callback([&] {
    action = [&] {
      char* raw = nullptr;
      check(nm_search_pairs_json(sm, q1_max, verify.c_str(), threads, include_srg ? 1 : 0, window, &raw));
      const json r = take_json(raw);
      if (!csv_path.empty()) {
        write_text_file(csv_path, r["csv"].get<std::string>());
        outputs.push_back(csv_path);
      }
      if (as_json) {
        std::cout << r["hits"].dump(2) << "\n";
      } else if (csv_path.empty()) {
        std::cout << r["csv"].get<std::string>();
      } else {
        std::cout << r["hits"].size() << " pairs written to " << csv_path << "\n";
      }
    };
  });

  auto* nexus = search->add_subcommand("nexus", "Strictly Neumaier hits grouped by nexus");
  std::uint32_t m_max = 10, q2_max = 0, e_max = 0;
  std::string nexus_verify = "construct";
  nexus->add_option("--m-max", m_max, "Largest m")->required();
  nexus->add_option("--q2-max", q2_max, "Bound on q2")->required();
  nexus->add_option("--e-max", e_max, "Largest nexus")->required();
  nexus->add_option("--csv", csv_path, "Write CSV (e,m,q1,q2) here");
  nexus->add_option("--verify", nexus_verify, "none, construct or wl");
  nexus->callback([&] {
    action = [&] {
      char* raw = nullptr;
      check(nm_search_nexus_json(m_max, q2_max, e_max, nexus_verify.c_str(), threads, &raw));
      const json r = take_json(raw);
      if (!csv_path.empty()) {
        write_text_file(csv_path, r["csv"].get<std::string>());
        outputs.push_back(csv_path);
      }
      if (as_json) {
        std::cout << r["rows"].dump(2) << "\n";
        return;
      }
      for (const auto& row : r["rows"]) {
        std::cout << std::setw(3) << row["e"].get<int>() << " |";
        for (const auto& h : row["hits"]) {
          std::cout << " (" << h["m"] << ";" << h["q1"] << "," << h["q2"] << ")";
          if (!h["problem"].is_null()) std::cout << "[!]";
        }
        std::cout << "\n";
      }
    };
  });

  int code = 0;
  std::string error_message;
  try {
    app.parse(argc, argv);
    if (action) action();
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    code = 1;
    error_message = e.what();
  } catch (const CliFailure& f) {
    code = f.status == NM_ERR_INTERNAL ? 2 : 1;
    error_message = f.message;
  } catch (const std::exception& e) {
    code = 2;
    error_message = e.what();
  }
  if (code != 0) {
    if (as_json) {
      std::cerr << json{{"error", error_message}, {"exit_code", code}}.dump() << "\n";
    } else {
      std::cerr << "error: " << error_message << "\n";
    }
  }

  if (!no_manifest) {
    std::string cmdline;
    for (int i = 1; i < argc; ++i) cmdline += (i > 1 ? " " : "") + std::string(argv[i]);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << json{{"manifest",
                       {{"command", cmdline},
                        {"config_hash", hex64(fnv1a(cmdline))},
                        {"version", nm_version()},
                        {"threads", threads},
                        {"wall_time_s", wall},
                        {"outputs", outputs},
                        {"exit_code", code}}}}
                     .dump()
              << "\n";
  }
  return code;
}

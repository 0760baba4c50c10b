#include "ctw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "ctw/brambles.hpp"
#include "ctw/connectify.hpp"
#include "ctw/cycle_space.hpp"
#include "ctw/decomposition.hpp"
#include "ctw/dot_export.hpp"
#include "ctw/families.hpp"
#include "ctw/graph.hpp"
#include "ctw/json_io.hpp"
#include "ctw/pipeline.hpp"
#include "ctw/treewidth.hpp"

namespace ctw {

namespace {

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return parse_edge_list(in);
}

void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  write(f);
}

std::string yesno(bool b) { return b ? "true" : "false"; }

struct CommonArgs {
  std::string graph_file;
  std::string decomposition_file;
  std::string out_file;
  std::string trace_file;
  bool heuristic = false;
  int kernel_limit = 20;
  bool json = false;
};

int cmd_generate(const std::string& family, const std::vector<int>& params,
                 unsigned seed, const std::string& out_file, std::ostream& out,
                 std::ostream& err) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::runtime_error("family '" + family + "' expects " +
                               std::to_string(n) + " parameter(s)");
  };
  Graph g;
  if (family == "path") {
    need(1);
    g = path_graph(params[0]);
  } else if (family == "cycle") {
    need(1);
    g = cycle_graph(params[0]);
  } else if (family == "complete") {
    need(1);
    g = complete_graph(params[0]);
  } else if (family == "subdivided-complete") {
    need(2);
    g = subdivided_complete(params[0], params[1]).graph;
  } else if (family == "subdivided-grid") {
    need(1);
    g = subdivided_grid(params[0]).graph;
  } else if (family == "duality") {
    need(1);
    g = duality_graph(params[0]);
  } else if (family == "random") {
    need(2);
    g = random_connected_graph(params[0], params[1], seed);
  } else {
    err << "unknown family '" << family << "'\n";
    return 2;
  }
  emit(out_file, out, [&](std::ostream& os) { write_edge_list(g, os); });
  return 0;
}

int cmd_tw(const CommonArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(a.graph_file);
  TreewidthOptions opts{a.kernel_limit};
  std::optional<int> tw;
  int upper = -1;
  Decomposition dec = trivial_decomposition(g);
  try {
    auto res = exact_treewidth(g, opts);
    tw = res.width;
    upper = res.width;
    dec = std::move(res.decomposition);
  } catch (const SizeLimitError& ex) {
    if (!a.heuristic) {
      err << ex.what() << " (rerun with --heuristic)\n";
      return 2;
    }
    dec = minfill_decomposition(g);
    upper = width(dec);
  }
  if (!a.out_file.empty()) save_json_file(a.out_file, decomposition_to_json(g, dec));
  if (a.json) {
    nlohmann::json j{{"tw_upper", upper}, {"exact", tw.has_value()}};
    if (tw)
      j["tw"] = *tw;
    else
      j["tw"] = nullptr;
    out << j.dump() << '\n';
  } else if (tw) {
    out << "tw=" << *tw << "\n";
  } else {
    out << "tw_upper=" << upper << "\n";
  }
  return 0;
}

int cmd_ell(const CommonArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(a.graph_file);
  if (cyclomatic_number(g) == 0) {
    err << "forest: cycle space is empty, ell undefined\n";
    return 2;
  }
  int l = ell(g);
  int gi = girth(g).value();
  if (a.json) {
    out << nlohmann::json{{"ell", l}, {"girth", gi}, {"cyclomatic", cyclomatic_number(g)}}
               .dump()
        << '\n';
  } else {
    out << "ell=" << l << " girth=" << gi << " cyclomatic=" << cyclomatic_number(g)
        << "\n";
  }
  return 0;
}

int cmd_stabilize(const CommonArgs& a, std::ostream& out, std::ostream&) {
  Graph g = load_graph(a.graph_file);
  Decomposition d = decomposition_from_json(g, load_json_file(a.decomposition_file));
  auto report = validate(g, d);
  if (!report.ok()) throw std::runtime_error("input decomposition: " + report.detail);
  if (!g.is_connected()) throw std::runtime_error("stabilize requires a connected graph");
  Decomposition s = stabilize(g, d);
  emit(a.out_file, out,
       [&](std::ostream& os) { os << decomposition_to_json(g, s).dump(2) << '\n'; });
  if (!a.out_file.empty())
    out << "width_in=" << width(d) << " width_out=" << width(s)
        << " stable=" << yesno(is_stable(g, s)) << "\n";
  return 0;
}

int cmd_connectify(const CommonArgs& a, std::ostream& out, std::ostream&) {
  Graph g = load_graph(a.graph_file);
  Decomposition d = decomposition_from_json(g, load_json_file(a.decomposition_file));
  ConstructionState state(g, std::move(d));  // throws on invalid/unstable input
  Decomposition result = state.run();
  if (!a.out_file.empty()) save_json_file(a.out_file, decomposition_to_json(g, result));
  if (!a.trace_file.empty())
    save_json_file(a.trace_file, trace_to_json(g, state.additions()));
  out << "additions=" << state.additions().size() << " width=" << width(result)
      << " connected=" << yesno(is_connected_decomposition(g, result)) << "\n";
  return 0;
}

int cmd_pipeline(const CommonArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(a.graph_file);
  PipelineOptions opts;
  opts.heuristic = a.heuristic;
  opts.tw.exact_kernel_limit = a.kernel_limit;
  std::optional<PipelineResult> run;
  try {
    run = run_pipeline(g, opts);
  } catch (const SizeLimitError& ex) {
    err << ex.what() << " (rerun with --heuristic)\n";
    return 2;
  }
  PipelineResult& res = *run;

  if (!a.out_file.empty())
    save_json_file(a.out_file, decomposition_to_json(g, res.decomposition));
  if (!a.trace_file.empty())
    save_json_file(a.trace_file, trace_to_json(g, res.trace));

  auto validation = validate(g, res.decomposition);
  bool connected = is_connected_decomposition(g, res.decomposition);
  bool ok = validation.ok() && connected && res.bound_holds;

  if (a.json) {
    nlohmann::json j{{"tw", res.width_used},      {"exact", res.exact},
                     {"forest", res.forest},      {"ell", res.forest ? nlohmann::json() : nlohmann::json(res.ell)},
                     {"bound", res.bound},        {"achieved", res.achieved},
                     {"valid", validation.ok()},  {"connected", connected},
                     {"ok", ok}};
    out << j.dump() << '\n';
    return ok ? 0 : 1;
  }

  if (res.forest) {
    out << "forest tw=" << res.width_used << " ctw=" << res.achieved << " "
        << (ok ? "OK" : "VIOLATION") << "\n";
  } else {
    out << "tw=" << res.width_used << (res.exact ? "" : " exact=false")
        << " ell=" << res.ell << " bound=" << res.bound
        << " achieved=" << res.achieved << " " << (ok ? "OK" : "VIOLATION") << "\n";
  }
  if (!ok) {
    nlohmann::json diag{{"valid", validation.ok()},
                        {"connected", connected},
                        {"bound", res.bound},
                        {"achieved", res.achieved},
                        {"detail", validation.ok() ? "" : validation.detail}};
    out << diag.dump() << '\n';
    return 1;
  }
  return 0;
}

int cmd_verify(const CommonArgs& a, bool want_connected, bool want_stable,
               std::ostream& out, std::ostream&) {
  Graph g = load_graph(a.graph_file);
  Decomposition d = decomposition_from_json(g, load_json_file(a.decomposition_file));
  auto report = validate(g, d);
  bool connected = !want_connected || is_connected_decomposition(g, d);
  bool stable = !want_stable || is_stable(g, d);
  bool ok = report.ok() && connected && stable;
  if (!ok) {
    nlohmann::json diag{{"valid", report.ok()},
                        {"vertex_coverage", report.vertex_coverage},
                        {"edge_coverage", report.edge_coverage},
                        {"coherence", report.coherence},
                        {"detail", report.detail}};
    if (want_connected) diag["connected"] = connected;
    if (want_stable) diag["stable"] = stable;
    out << diag.dump() << '\n';
    return 1;
  }
  out << "valid=true width=" << width(d);
  if (want_connected) out << " connected=true";
  if (want_stable) out << " stable=true";
  out << "\n";
  return 0;
}

int cmd_bramble(const CommonArgs& a, bool want_order, bool want_connected_order,
                bool want_bound, std::ostream& out, std::ostream&) {
  Graph g = load_graph(a.graph_file);
  Bramble b = bramble_from_json(g, load_json_file(a.decomposition_file));
  auto check = is_bramble(g, b);
  if (!check.ok) {
    out << nlohmann::json{{"bramble", false}, {"detail", check.detail}}.dump() << '\n';
    return 1;
  }
  out << "elements=" << b.size() << " bramble=true";
  if (want_order) out << " order=" << bramble_order(g, b);
  ConnectedOrderResult co;
  if (want_connected_order || want_bound) co = connected_order(g, b);
  if (want_connected_order) out << " connected_order=" << co.order;
  bool ok = true;
  if (want_bound) {
    auto tw = exact_treewidth(g, TreewidthOptions{a.kernel_limit});
    auto rep = check_bramble_bound(g, b, tw.width, ell(g));
    out << " bound=" << rep.bound << " holds=" << yesno(rep.holds);
    ok = rep.holds;
  }
  out << "\n";
  if (!ok) {
    out << nlohmann::json{{"bramble", true}, {"bound_holds", false}}.dump() << '\n';
    return 1;
  }
  return 0;
}

int cmd_report(const CommonArgs& a, const std::string& bramble_file, std::ostream& out,
               std::ostream&) {
  Graph g = load_graph(a.graph_file);
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  int comps = static_cast<int>(components(g, g.full_vertex_set()).size());
  j["components"] = comps;
  int rank = cyclomatic_number(g);
  j["cyclomatic"] = rank;

  auto gi = girth(g);
  j["girth"] = gi ? nlohmann::json(*gi) : nlohmann::json();
  j["ell"] = rank > 0 ? nlohmann::json(ell(g)) : nlohmann::json();

  std::optional<int> tw;
  try {
    tw = exact_treewidth(g, TreewidthOptions{a.kernel_limit}).width;
    j["tw"] = *tw;
  } catch (const SizeLimitError&) {
    j["tw"] = nullptr;
    j["tw_upper"] = width(minfill_decomposition(g));
  }

  if (rank > 0 && tw) {
    j["ctw_bound"] = *tw * (j["ell"].get<int>() - 2);
    j["bramble_bound"] = *tw * (j["ell"].get<int>() / 2) + 1;
    if (g.is_connected()) j["wctw_upper"] = wctw_upper(g, TreewidthOptions{a.kernel_limit}).value;
  }
  if (g.vertex_count() <= 8 && g.vertex_count() >= 1)
    j["wctw"] = wctw_exact_small(g);

  if (rank > 0 && g.vertex_count() <= 16) {
    int longest = 0;
    for (const auto& c : cycles_upto(g, g.vertex_count()))
      if (is_geodesic_cycle(g, c)) longest = std::max(longest, c.length());
    j["longest_geodesic_cycle"] = longest;
  }

  if (!bramble_file.empty()) {
    Bramble b = bramble_from_json(g, load_json_file(bramble_file));
    auto check = is_bramble(g, b);
    j["bramble"] = check.ok;
    if (check.ok) {
      int co = connected_order(g, b).order;
      j["connected_order"] = co;
      // Locality principle: a bramble certificate of connected order k
      // limits the connected width to 2(k-1)(k-2) for non-forests.
      if (co >= 2) j["locality_bound"] = 2L * (co - 1) * (co - 2);
    }
  }

  if (a.json) {
    out << j.dump() << '\n';
  } else {
    for (auto& [key, value] : j.items()) {
      out << key << "=";
      if (value.is_null())
        out << "undefined";
      else if (value.is_string())
        out << value.get<std::string>();
      else
        out << value.dump();
      out << "\n";
    }
  }
  return 0;
}

int cmd_export_dot(const CommonArgs& a, std::ostream& out, std::ostream&) {
  Graph g = load_graph(a.graph_file);
  Decomposition d = decomposition_from_json(g, load_json_file(a.decomposition_file));

  std::vector<VertexSet> grown;
  bool have_trace = !a.trace_file.empty();
  if (have_trace) {
    auto trace = trace_from_json(g, load_json_file(a.trace_file));
    grown.assign(static_cast<size_t>(d.node_count()), VertexSet(g.vertex_count()));
    Decomposition rooted = d;
    if (!rooted.has_root()) rooted.set_root(0);
    for (const auto& entry : trace) {
      if (entry.node < 0 || entry.node >= d.node_count())
        throw std::runtime_error("trace node out of range");
      auto internals = entry.path.internals();
      // Mark the interior of the path in every bag of the node's subtree.
      std::vector<int> stack{entry.node};
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int v : internals)
          if (d.bag(t).contains(v)) grown[static_cast<size_t>(t)].insert(v);
        for (int c : rooted.children(t)) stack.push_back(c);
      }
    }
  }
  emit(a.out_file, out, [&](std::ostream& os) {
    decomposition_to_dot(g, d, os, have_trace ? &grown : nullptr);
  });
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"stable and connected tree-decompositions"};
  app.require_subcommand(1);

  CommonArgs a;
  std::string family;
  std::vector<int> params;
  unsigned seed = 1;
  bool want_connected = false, want_stable = false;
  bool want_order = false, want_connected_order = false, want_bound = false;
  std::string bramble_file;

  auto* generate = app.add_subcommand("generate", "write a family graph as an edge list");
  generate->add_option("family", family,
                       "path|cycle|complete|subdivided-complete|subdivided-grid|duality|random")
      ->required();
  generate->add_option("params", params, "family parameters");
  generate->add_option("--seed", seed, "seed for the random family");
  generate->add_option("--out", a.out_file, "output file (default stdout)");

  auto add_common = [&](CLI::App* cmd, bool with_dec) {
    cmd->add_option("--graph", a.graph_file, "edge list file")->required();
    if (with_dec)
      cmd->add_option("--decomposition", a.decomposition_file, "decomposition JSON")
          ->required();
  };

  auto* tw = app.add_subcommand("tw", "treewidth with witness decomposition");
  add_common(tw, false);
  tw->add_flag("--heuristic", a.heuristic, "fall back to min-fill beyond the solver limit");
  tw->add_option("--kernel-limit", a.kernel_limit, "exact solver kernel size limit");
  tw->add_option("--out", a.out_file, "write the decomposition JSON here");
  tw->add_flag("--json", a.json, "machine-readable output");

  auto* ellc = app.add_subcommand("ell", "cycle space generator length");
  add_common(ellc, false);
  ellc->add_flag("--json", a.json, "machine-readable output");

  auto* stab = app.add_subcommand("stabilize", "make every side union connected");
  add_common(stab, true);
  stab->add_option("--out", a.out_file, "output decomposition JSON (default stdout)");

  auto* conn = app.add_subcommand("connectify",
                                  "reconnect the parts of a stable decomposition");
  add_common(conn, true);
  conn->add_option("--out", a.out_file, "output decomposition JSON");
  conn->add_option("--trace-out", a.trace_file, "write the path additions here");

  auto* pipe = app.add_subcommand("pipeline", "treewidth, stabilize and reconnect");
  add_common(pipe, false);
  pipe->add_flag("--heuristic", a.heuristic, "fall back to min-fill beyond the solver limit");
  pipe->add_option("--kernel-limit", a.kernel_limit, "exact solver kernel size limit");
  pipe->add_option("--out", a.out_file, "output decomposition JSON");
  pipe->add_option("--trace-out", a.trace_file, "write the path additions here");
  pipe->add_flag("--json", a.json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "check a decomposition");
  add_common(verify, true);
  verify->add_flag("--connected", want_connected, "also require connected parts");
  verify->add_flag("--stable", want_stable, "also require connected side unions");

  auto* bram = app.add_subcommand("bramble", "check a bramble and its orders");
  bram->add_option("--graph", a.graph_file, "edge list file")->required();
  bram->add_option("--bramble", a.decomposition_file, "bramble JSON")->required();
  bram->add_flag("--order", want_order, "compute the plain order");
  bram->add_flag("--connected-order", want_connected_order, "compute the connected order");
  bram->add_flag("--bound", want_bound, "check the connected order bound tw*floor(ell/2)+1");
  bram->add_option("--kernel-limit", a.kernel_limit, "exact solver kernel size limit");

  auto* report = app.add_subcommand("report", "graph invariants overview");
  add_common(report, false);
  report->add_option("--bramble", bramble_file, "bramble certificate JSON");
  report->add_option("--kernel-limit", a.kernel_limit, "exact solver kernel size limit");
  report->add_flag("--json", a.json, "machine-readable output");

  auto* dot = app.add_subcommand("export-dot", "render a decomposition tree");
  add_common(dot, true);
  dot->add_option("--trace", a.trace_file, "color vertices added by this trace");
  dot->add_option("--out", a.out_file, "output DOT file (default stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(family, params, seed, a.out_file, out, err);
    if (tw->parsed()) return cmd_tw(a, out, err);
    if (ellc->parsed()) return cmd_ell(a, out, err);
    if (stab->parsed()) return cmd_stabilize(a, out, err);
    if (conn->parsed()) return cmd_connectify(a, out, err);
    if (pipe->parsed()) return cmd_pipeline(a, out, err);
    if (verify->parsed()) return cmd_verify(a, want_connected, want_stable, out, err);
    if (bram->parsed())
      return cmd_bramble(a, want_order, want_connected_order, want_bound, out, err);
    if (report->parsed()) return cmd_report(a, bramble_file, out, err);
    if (dot->parsed()) return cmd_export_dot(a, out, err);
  } catch (const SizeLimitError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no command\n";
  return 2;
}

}  // namespace ctw

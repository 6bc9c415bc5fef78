#include "topos/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "topos/classifier.hpp"
#include "topos/corpus.hpp"
#include "topos/document.hpp"
#include "topos/exponential.hpp"
#include "topos/hom.hpp"
#include "topos/limits.hpp"
#include "topos/slice.hpp"
#include "topos/topology.hpp"

namespace topos {

namespace {

struct Settings {
  bool dot = false;
  bool oracle = false;
  std::string topology = "nn";
  std::string sub;
  double cap_homs = kDefaultHomCap;
  std::size_t corpus_max_nodes = 2;
  std::size_t corpus_max_arcs = 2;
  std::vector<std::string> files;

  HomOptions hom_options() const {
    HomOptions options;
    options.cap = cap_homs;
    return options;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GraphDocument builtin(const std::string& name) {
  if (name == "N") return make_document("N", node_graph());
  if (name == "A") return make_document("A", arc_graph());
  if (name == "0") return make_document("initial", initial_graph());
  if (name == "1") return make_document("terminal", terminal_graph());
  if (name == "omega") return make_document("omega", *omega());
  throw GraphError("cannot open '" + name + "' (not a file or a built-in graph)");
}

GraphDocument resolve(const std::string& arg) {
  if (!std::filesystem::is_regular_file(arg)) return builtin(arg);
  auto doc = load_document(arg);
  if (doc.name.empty()) doc.name = std::filesystem::path(arg).stem().string();
  return doc;
}

TopologyKind parse_topology(const std::string& name) {
  if (name == "nn") return TopologyKind::kDoubleNegation;
  if (name == "closed") return TopologyKind::kClosed;
  if (name == "id") return TopologyKind::kIdentity;
  if (name == "top") return TopologyKind::kTop;
  throw UsageError("unknown topology '" + name + "'");
}

const Subobject& chosen_sub(const GraphDocument& doc, const Settings& s) {
  if (!s.sub.empty()) return doc.sub(s.sub);
  if (doc.subobjects.size() == 1) return doc.subobjects.front().second;
  throw UsageError("--sub is required when the document does not declare exactly one subobject");
}

std::string sub_name(const GraphDocument& doc, const Settings& s) {
  return s.sub.empty() ? doc.subobjects.front().first : s.sub;
}

void emit_graph(const GraphDocument& doc, const Settings& s, std::ostream& out,
                const ArcCaption& caption = {}) {
  if (s.dot) {
    emit_dot(doc, out, caption);
  } else {
    emit_document(doc, out);
  }
}

void emit_sub_line(const std::string& name, const Subobject& sub, std::ostream& out) {
  out << "sub " << name << " {";
  for (const auto& id : sub.member_ids()) out << ' ' << id;
  out << " }\n";
}

void emit_sub(const std::string& name, const Subobject& sub, const Settings& s,
              std::ostream& out) {
  if (s.dot) {
    emit_dot(make_document(name, sub.to_graph()), out);
  } else {
    emit_sub_line(name, sub, out);
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void report_oracle(const SeparationReport& r, const Settings& s, std::ostream& out) {
  out << "oracle: separated " << yes_no(r.separated) << ", complete "
      << yes_no(r.complete) << " (corpus " << r.corpus_size << " graphs with <= "
      << s.corpus_max_nodes << " nodes, <= " << s.corpus_max_arcs << " arcs; "
      << r.probes << " probes)\n";
  if (!r.separation_witness.empty()) out << "  " << r.separation_witness << '\n';
  if (!r.completeness_witness.empty()) out << "  " << r.completeness_witness << '\n';
}

const LabelledGraph& require_labelled(const GraphDocument& doc) {
  if (!doc.labelled) throw GraphError("'" + doc.name + "' is not a labelled graph");
  return *doc.labelled;
}

// Commands ------------------------------------------------------------------

void cmd_show_omega(const Settings& s, std::ostream& out) {
  auto doc = make_document("omega", *omega());
  emit_graph(doc, s, out, [](std::size_t a) {
    return std::string(truth_name(arc_truth(a)));
  });
}

void cmd_product(const Settings& s, std::ostream& out) {
  auto g = resolve(s.files[0]);
  auto h = resolve(s.files[1]);
  std::string name = g.name + "_x_" + h.name;
  if (g.labelled && h.labelled) {
    emit_graph(make_document(name, slice_product(*g.labelled, *h.labelled)), s, out);
  } else {
    emit_graph(make_document(name, *product(g.graph, h.graph).graph), s, out);
  }
}

void cmd_coproduct(const Settings& s, std::ostream& out) {
  auto g = resolve(s.files[0]);
  auto h = resolve(s.files[1]);
  emit_graph(make_document(g.name + "_plus_" + h.name,
                           *coproduct(g.graph, h.graph).graph),
             s, out);
}

void cmd_exponential(const Settings& s, std::ostream& out) {
  auto g = resolve(s.files[0]);
  auto h = resolve(s.files[1]);
  auto expo = exponential(g.graph, h.graph, s.hom_options());
  emit_graph(make_document(h.name + "_pow_" + g.name, *expo.graph), s, out);
}

void cmd_classify(const Settings& s, std::ostream& out) {
  auto doc = resolve(s.files[0]);
  const auto& sub = chosen_sub(doc, s);
  auto chi = characteristic(sub);
  const auto& g = *doc.graph;
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    out << "node " << g.node_id(n) << " -> " << truth_name(node_truth(chi.node(n)))
        << '\n';
  }
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    out << "arc " << g.arc_id(a) << " -> " << truth_name(arc_truth(chi.arc(a))) << '\n';
  }
}

void cmd_subobjects(const Settings& s, std::ostream& out) {
  auto doc = resolve(s.files[0]);
  auto subs = enumerate_subobjects(*doc.graph);
  out << "# " << subs.size() << " subobjects\n";
  for (std::size_t i = 0; i < subs.size(); ++i) {
    emit_sub_line("S" + std::to_string(i), subs[i], out);
  }
}

void cmd_topologies(std::ostream& out) {
  const TruthValue header[] = {TruthValue::kNodeFalse, TruthValue::kNodeTrue,
                               TruthValue::kArcNone,   TruthValue::kArcSource,
                               TruthValue::kArcTarget, TruthValue::kArcEnds,
                               TruthValue::kArcFull};
  out << std::left << std::setw(17) << "topology";
  for (auto v : header) out << std::setw(7) << truth_name(v);
  out << '\n';
  for (const auto& j : enumerate_topologies()) {
    out << std::setw(17) << j.name();
    for (auto v : header) out << std::setw(7) << truth_name(j(v));
    out << '\n';
  }
}

void cmd_closure(const Settings& s, std::ostream& out) {
  auto doc = resolve(s.files[0]);
  auto j = make_topology(parse_topology(s.topology));
  emit_sub(sub_name(doc, s) + "_closure", closure(chosen_sub(doc, s), j), s, out);
}

void cmd_dense(const Settings& s, std::ostream& out) {
  auto doc = resolve(s.files[0]);
  auto j = make_topology(parse_topology(s.topology));
  if (!doc.subobjects.empty() || !s.sub.empty()) {
    out << "dense: " << yes_no(is_dense(chosen_sub(doc, s), j)) << '\n';
  }
  emit_sub("minimum_dense", minimum_dense(*doc.graph, j), s, out);
}

void cmd_separated(const Settings& s, bool sheaf, std::ostream& out) {
  auto doc = resolve(s.files[0]);
  auto j = make_topology(parse_topology(s.topology));
  bool value = sheaf ? is_sheaf(*doc.graph, j) : is_separated(*doc.graph, j);
  out << (sheaf ? "sheaf: " : "separated: ") << yes_no(value) << " ("
      << j.name() << ")\n";
  if (s.oracle) {
    auto corpus = graph_corpus(s.corpus_max_nodes, s.corpus_max_arcs);
    report_oracle(definitional_separation_oracle(*doc.graph, j.endo, corpus,
                                                 s.hom_options()),
                  s, out);
  }
}

void cmd_hom_count(const Settings& s, std::ostream& out) {
  auto g = resolve(s.files[0]);
  auto h = resolve(s.files[1]);
  if (g.labelled && h.labelled) {
    out << enumerate_slice_homs(*g.labelled, *h.labelled, s.hom_options()).size() << '\n';
  } else {
    out << count_homs(*g.graph, *h.graph, s.hom_options()) << '\n';
  }
}

void cmd_lts_check(const Settings& s, std::ostream& out) {
  auto doc = resolve(s.files[0]);
  const auto& l = require_labelled(doc);
  out << "transition system: " << yes_no(is_transition_system(l)) << '\n';
  const auto& g = l.graph();
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>>
      groups;
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    groups[{g.source(a), g.target(a), l.label(a)}].push_back(a);
  }
  for (const auto& [key, arcs] : groups) {
    if (arcs.size() < 2) continue;
    out << "  parallel " << l.alphabet().symbol(std::get<2>(key)) << "-arcs "
        << g.node_id(std::get<0>(key)) << " -> " << g.node_id(std::get<1>(key)) << ":";
    for (auto a : arcs) out << ' ' << g.arc_id(a);
    out << '\n';
  }
  if (s.oracle) {
    auto corpus = labelled_corpus(l.alphabet(), s.corpus_max_nodes, s.corpus_max_arcs);
    report_oracle(slice_separation_oracle(l, corpus, s.hom_options()), s, out);
  }
}

void cmd_strong_mono(const Settings& s, std::ostream& out) {
  auto doc = resolve(s.files[0]);
  const auto& x = require_labelled(doc);
  const auto& sub = chosen_sub(doc, s);
  auto part = restrict_to(x, sub);
  GraphMorphism m(part.graph_ref(), x.graph_ref(), sub.inclusion().node_map(),
                  sub.inclusion().arc_map());
  out << "strong: " << yes_no(is_strong_mono(m, part, x)) << '\n';
  const auto& g = x.graph();
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    if (sub.has_node(g.source(a)) && sub.has_node(g.target(a)) && !sub.has_arc(a)) {
      out << "  missing arc " << g.arc_id(a) << '\n';
    }
  }
  if (s.oracle) {
    auto epis = enumerate_ts_epis(
        labelled_corpus(x.alphabet(), s.corpus_max_nodes, s.corpus_max_arcs),
        s.hom_options());
    auto report = strong_mono_by_diagonals(m, part, x, epis, s.hom_options());
    out << "oracle: diagonals " << (report.strong ? "always exist" : "missing") << " ("
        << epis.size() << " epis, " << report.squares << " squares)\n";
    if (!report.witness.empty()) out << "  " << report.witness << '\n';
  }
}

void cmd_aut2lts(const Settings& s, std::ostream& out) {
  std::ifstream in(s.files[0]);
  if (!in) throw GraphError("cannot open '" + s.files[0] + "'");
  auto doc = parse_automaton(in);
  emit_graph(make_document(doc.name, automaton_to_lts(doc.automaton)), s, out);
}

void cmd_lts2aut(const Settings& s, std::ostream& out) {
  auto doc = resolve(s.files[0]);
  emit_automaton(AutomatonDocument{doc.name, lts_to_automaton(require_labelled(doc))},
                 out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Settings s;
  CLI::App app{"Constructions in the topos of finite graphs"};
  app.name("topos");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--dot", s.dot, "Emit graphs as DOT instead of the text format");
  app.add_option("--topology", s.topology, "Topology: nn, closed, id or top")
      ->check(CLI::IsMember({"nn", "closed", "id", "top"}))
      ->capture_default_str();
  app.add_option("--sub", s.sub, "Name of the subobject block to use");
  app.add_flag("--oracle", s.oracle,
               "Also run the definitional check over the probe corpus");
  app.add_option("--cap-homs", s.cap_homs,
                 "Refuse hom searches with more candidates than this")
      ->envname("TOPOS_CAP_HOMS")
      ->capture_default_str();
  app.add_option("--corpus-max-nodes", s.corpus_max_nodes,
                 "Probe corpus bound on nodes (--oracle)")
      ->envname("TOPOS_CORPUS_MAX_NODES")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();
  app.add_option("--corpus-max-arcs", s.corpus_max_arcs,
                 "Probe corpus bound on arcs (--oracle)")
      ->envname("TOPOS_CORPUS_MAX_ARCS")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();

  std::map<std::string, std::function<void()>> actions;
  auto command = [&](const std::string& name, const std::string& help,
                     std::vector<std::string> operands, std::function<void()> action) {
    auto* sub = app.add_subcommand(name, help);
    if (!operands.empty()) {
      sub->add_option("operands", s.files, "")
          ->required()
          ->expected(static_cast<int>(operands.size()));
    }
    std::string usage;
    for (const auto& o : operands) usage += " " + o;
    sub->usage("topos " + name + usage + " [options]");
    actions[name] = std::move(action);
  };
  command("show-omega", "Print the subobject classifier", {}, [&] { cmd_show_omega(s, out); });
  command("product", "Product G x H (synchronous when both are labelled)", {"G", "H"},
          [&] { cmd_product(s, out); });
  command("coproduct", "Coproduct G + H", {"G", "H"}, [&] { cmd_coproduct(s, out); });
  command("exponential", "Exponential H^G", {"G", "H"}, [&] { cmd_exponential(s, out); });
  command("classify", "Characteristic map of a subobject", {"G"},
          [&] { cmd_classify(s, out); });
  command("subobjects", "List every subobject", {"G"}, [&] { cmd_subobjects(s, out); });
  command("topologies", "Table of all topologies on omega", {}, [&] { cmd_topologies(out); });
  command("closure", "Closure of a subobject", {"G"}, [&] { cmd_closure(s, out); });
  command("dense", "Density test and minimum dense subobject", {"G"},
          [&] { cmd_dense(s, out); });
  command("separated", "Separatedness test", {"G"}, [&] { cmd_separated(s, false, out); });
  command("sheaf", "Sheaf test", {"G"}, [&] { cmd_separated(s, true, out); });
  command("hom-count", "Number of morphisms G -> H (label preserving when both labelled)",
          {"G", "H"}, [&] { cmd_hom_count(s, out); });
  command("lts-check", "Transition system test for a labelled graph", {"L"},
          [&] { cmd_lts_check(s, out); });
  command("strong-mono", "Strong mono test for a labelled subobject", {"L"},
          [&] { cmd_strong_mono(s, out); });
  command("aut2lts", "Automaton file to labelled graph", {"AUTOMATON"},
          [&] { cmd_aut2lts(s, out); });
  command("lts2aut", "Labelled graph to automaton file", {"L"},
          [&] { cmd_lts2aut(s, out); });
  app.footer(
      "Graph operands are files or the built-ins N, A, 0, 1, omega.\n"
      "Exit codes: 0 ok, 1 domain error, 2 usage error, 3 size cap exceeded.");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    actions.at(app.get_subcommands().front()->get_name())();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "size cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace topos

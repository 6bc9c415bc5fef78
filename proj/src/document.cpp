#include "topos/document.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace topos {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string spaced;
    for (char c : raw) {
      if (c == '{' || c == '}') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    std::istringstream words(spaced);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

struct PendingArc {
  std::size_t line;
  std::string id, source, target;
  std::optional<std::string> label;
};

struct PendingSub {
  std::size_t line;
  std::string name;
  std::vector<std::string> ids;
};

std::vector<std::string> braced_list(const Line& line, std::size_t from) {
  if (line.tokens.size() < from + 2 || line.tokens[from] != "{" ||
      line.tokens.back() != "}") {
    throw ParseError(line.number, "expected '{ <id> ... }'");
  }
  std::vector<std::string> ids(line.tokens.begin() + static_cast<long>(from) + 1,
                               line.tokens.end() - 1);
  for (const auto& id : ids) {
    if (id == "{" || id == "}") throw ParseError(line.number, "unbalanced braces");
  }
  return ids;
}

}  // namespace

const Subobject& GraphDocument::sub(const std::string& wanted) const {
  for (const auto& [n, s] : subobjects) {
    if (n == wanted) return s;
  }
  throw GraphError("no subobject named '" + wanted + "'");
}

bool operator==(const GraphDocument& lhs, const GraphDocument& rhs) {
  if (lhs.name != rhs.name || !(*lhs.graph == *rhs.graph) ||
      lhs.labelled.has_value() != rhs.labelled.has_value()) {
    return false;
  }
  if (lhs.labelled && !(*lhs.labelled == *rhs.labelled)) return false;
  if (lhs.subobjects.size() != rhs.subobjects.size()) return false;
  for (std::size_t i = 0; i < lhs.subobjects.size(); ++i) {
    if (lhs.subobjects[i].first != rhs.subobjects[i].first ||
        !(lhs.subobjects[i].second == rhs.subobjects[i].second)) {
      return false;
    }
  }
  return true;
}

GraphDocument parse_document(std::istream& in) {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> alphabet;
  std::vector<std::string> nodes;
  std::map<std::string, std::size_t> declared;  // id -> line
  std::vector<PendingArc> arcs;
  std::vector<PendingSub> subs;

  auto declare = [&](const std::string& id, std::size_t line) {
    if (auto it = declared.find(id); it != declared.end()) {
      throw ParseError(line, "duplicate identifier '" + id + "' (first declared on line " +
                                 std::to_string(it->second) + ")");
    }
    declared.emplace(id, line);
  };

  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    const auto& keyword = t[0];
    if (keyword == "graph") {
      if (t.size() != 2) throw ParseError(line.number, "expected 'graph <name>'");
      if (name) throw ParseError(line.number, "graph name given twice");
      name = t[1];
    } else if (keyword == "alphabet") {
      if (t.size() < 2) throw ParseError(line.number, "empty alphabet");
      if (alphabet) throw ParseError(line.number, "alphabet given twice");
      std::set<std::string> unique(t.begin() + 1, t.end());
      if (unique.size() != t.size() - 1) {
        throw ParseError(line.number, "duplicate symbol in alphabet");
      }
      alphabet.emplace(t.begin() + 1, t.end());
    } else if (keyword == "node") {
      if (t.size() != 2) throw ParseError(line.number, "expected 'node <id>'");
      declare(t[1], line.number);
      nodes.push_back(t[1]);
    } else if (keyword == "arc") {
      if (t.size() != 4 && t.size() != 5) {
        throw ParseError(line.number, "expected 'arc <id> <source> <target> [<label>]'");
      }
      declare(t[1], line.number);
      PendingArc arc{line.number, t[1], t[2], t[3], std::nullopt};
      if (t.size() == 5) arc.label = t[4];
      arcs.push_back(std::move(arc));
    } else if (keyword == "sub") {
      if (t.size() < 4) throw ParseError(line.number, "expected 'sub <name> { <id> ... }'");
      for (const auto& s : subs) {
        if (s.name == t[1]) throw ParseError(line.number, "duplicate subobject '" + t[1] + "'");
      }
      subs.push_back(PendingSub{line.number, t[1], braced_list(line, 2)});
    } else {
      throw ParseError(line.number, "unknown declaration '" + keyword + "'");
    }
  }

  std::map<std::string, std::size_t> node_index;
  for (std::size_t n = 0; n < nodes.size(); ++n) node_index[nodes[n]] = n;
  bool labelled = alphabet.has_value();
  for (const auto& a : arcs) labelled = labelled || a.label.has_value();

  std::vector<std::string> arc_ids;
  std::vector<std::size_t> src, tgt;
  std::vector<std::string> symbols = alphabet.value_or(std::vector<std::string>{});
  std::vector<std::string> arc_labels;
  for (const auto& a : arcs) {
    auto s = node_index.find(a.source);
    auto d = node_index.find(a.target);
    if (s == node_index.end() || d == node_index.end()) {
      const auto& missing = s == node_index.end() ? a.source : a.target;
      throw ParseError(a.line, "arc '" + a.id + "' references undeclared node '" +
                                   missing + "'");
    }
    arc_ids.push_back(a.id);
    src.push_back(s->second);
    tgt.push_back(d->second);
    if (labelled) {
      if (!a.label) throw ParseError(a.line, "arc '" + a.id + "' has no label");
      bool known = std::find(symbols.begin(), symbols.end(), *a.label) != symbols.end();
      if (!known) {
        if (alphabet) throw ParseError(a.line, "unknown label '" + *a.label + "'");
        symbols.push_back(*a.label);
      }
      arc_labels.push_back(*a.label);
    }
  }

  GraphDocument doc;
  doc.name = name.value_or("");
  doc.graph = share(FiniteGraph(nodes, arc_ids, src, tgt));
  if (labelled) {
    if (symbols.empty()) {
      throw ParseError(1, "labelled document without any symbol");
    }
    doc.labelled = LabelledGraph::with_symbols(*doc.graph, Alphabet(symbols), arc_labels);
    doc.graph = doc.labelled->graph_ref();
  }
  for (const auto& s : subs) {
    std::vector<bool> in_nodes(doc.graph->node_count(), false);
    std::vector<bool> in_arcs(doc.graph->arc_count(), false);
    for (const auto& id : s.ids) {
      if (auto n = doc.graph->find_node(id)) {
        in_nodes[*n] = true;
      } else if (auto a = doc.graph->find_arc(id)) {
        in_arcs[*a] = true;
      } else {
        throw ParseError(s.line, "subobject '" + s.name + "' names unknown identifier '" +
                                     id + "'");
      }
    }
    for (std::size_t a = 0; a < in_arcs.size(); ++a) {
      if (in_arcs[a] && (!in_nodes[doc.graph->source(a)] ||
                         !in_nodes[doc.graph->target(a)])) {
        throw ParseError(s.line, "subobject '" + s.name + "' contains arc '" +
                                     doc.graph->arc_id(a) +
                                     "' but not both of its endpoints");
      }
    }
    doc.subobjects.emplace_back(s.name, Subobject(doc.graph, in_nodes, in_arcs));
  }
  return doc;
}

GraphDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

GraphDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  try {
    return parse_document(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(
                                                 std::string("line ").size() +
                                                 std::to_string(e.line()).size() + 2));
  }
}

GraphDocument make_document(std::string name, const FiniteGraph& graph) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.graph = share(graph);
  return doc;
}

GraphDocument make_document(std::string name, const LabelledGraph& graph) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.graph = graph.graph_ref();
  doc.labelled = graph;
  return doc;
}

void emit_document(const GraphDocument& doc, std::ostream& out) {
  const auto& g = *doc.graph;
  if (!doc.name.empty()) out << "graph " << doc.name << '\n';
  if (doc.labelled) {
    out << "alphabet";
    for (const auto& s : doc.labelled->alphabet().symbols()) out << ' ' << s;
    out << '\n';
  }
  for (const auto& id : g.node_ids()) out << "node " << id << '\n';
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    out << "arc " << g.arc_id(a) << ' ' << g.node_id(g.source(a)) << ' '
        << g.node_id(g.target(a));
    if (doc.labelled) out << ' ' << doc.labelled->label_symbol(a);
    out << '\n';
  }
  for (const auto& [name, sub] : doc.subobjects) {
    out << "sub " << name << " {";
    for (const auto& id : sub.member_ids()) out << ' ' << id;
    out << " }\n";
  }
}

std::string to_text(const GraphDocument& doc) {
  std::ostringstream out;
  emit_document(doc, out);
  return out.str();
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void emit_dot(const GraphDocument& doc, std::ostream& out, const ArcCaption& caption) {
  const auto& g = *doc.graph;
  out << "digraph " << quoted(doc.name.empty() ? "G" : doc.name) << " {\n";
  for (const auto& id : g.node_ids()) out << "  " << quoted(id) << ";\n";
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    std::string text;
    if (caption) {
      text = caption(a);
    } else {
      text = g.arc_id(a);
      if (doc.labelled) text += ":" + doc.labelled->label_symbol(a);
    }
    out << "  " << quoted(g.node_id(g.source(a))) << " -> "
        << quoted(g.node_id(g.target(a))) << " [label=" << quoted(text) << "];\n";
  }
  out << "}\n";
}

// ---------------------------------------------------------------------------

AutomatonDocument parse_automaton(std::istream& in) {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> alphabet;
  std::vector<std::string> states;
  std::vector<Line> deltas;
  for (auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] == "automaton") {
      if (t.size() != 2 || name) throw ParseError(line.number, "expected one 'automaton <name>'");
      name = t[1];
    } else if (t[0] == "alphabet") {
      if (t.size() < 2 || alphabet) throw ParseError(line.number, "expected one nonempty alphabet");
      alphabet.emplace(t.begin() + 1, t.end());
    } else if (t[0] == "state") {
      if (t.size() != 2) throw ParseError(line.number, "expected 'state <id>'");
      if (std::find(states.begin(), states.end(), t[1]) != states.end()) {
        throw ParseError(line.number, "duplicate state '" + t[1] + "'");
      }
      states.push_back(t[1]);
    } else if (t[0] == "delta") {
      if (t.size() < 3) throw ParseError(line.number, "expected 'delta <state> <symbol> <target> ...'");
      deltas.push_back(std::move(line));
    } else {
      throw ParseError(line.number, "unknown declaration '" + t[0] + "'");
    }
  }
  if (!alphabet) throw ParseError(1, "automaton without an alphabet");
  AutomatonDocument doc{name.value_or(""), Automaton(states, Alphabet(*alphabet))};
  auto state_index = [&](const std::string& id, std::size_t line) {
    auto it = std::find(states.begin(), states.end(), id);
    if (it == states.end()) throw ParseError(line, "undeclared state '" + id + "'");
    return static_cast<std::size_t>(it - states.begin());
  };
  for (const auto& line : deltas) {
    const auto& t = line.tokens;
    std::size_t from = state_index(t[1], line.number);
    auto symbol = doc.automaton.alphabet.find(t[2]);
    if (!symbol) throw ParseError(line.number, "unknown label '" + t[2] + "'");
    for (std::size_t i = 3; i < t.size(); ++i) {
      doc.automaton.add(*symbol, from, state_index(t[i], line.number));
    }
  }
  return doc;
}

AutomatonDocument parse_automaton(const std::string& text) {
  std::istringstream in(text);
  return parse_automaton(in);
}

void emit_automaton(const AutomatonDocument& doc, std::ostream& out) {
  const auto& a = doc.automaton;
  if (!doc.name.empty()) out << "automaton " << doc.name << '\n';
  out << "alphabet";
  for (const auto& s : a.alphabet.symbols()) out << ' ' << s;
  out << '\n';
  for (const auto& s : a.states) out << "state " << s << '\n';
  for (std::size_t x = 0; x < a.states.size(); ++x) {
    for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
      const auto& targets = a.delta[sym][x];
      if (targets.empty()) continue;
      out << "delta " << a.states[x] << ' ' << a.alphabet.symbol(sym);
      for (auto y : targets) out << ' ' << a.states[y];
      out << '\n';
    }
  }
}

}  // namespace topos

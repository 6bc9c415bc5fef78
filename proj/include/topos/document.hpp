#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topos/graph.hpp"
#include "topos/slice.hpp"

namespace topos {

/// A syntax or validation error in a text document, with its 1-based line.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format, one declaration per line, '#' starts a comment:
//
//   graph <name>
//   alphabet <symbol> ...
//   node <id>
//   arc <id> <source> <target> [<label>]
//   sub <name> { <id> ... }
//
// A document is labelled when it declares an alphabet or labels any arc; then
// every arc needs a label. Without an alphabet line the alphabet is the set of
// labels in order of first use. Subobject endpoint closure is checked.
struct GraphDocument {
  std::string name;
  GraphRef graph;
  std::optional<LabelledGraph> labelled;
  std::vector<std::pair<std::string, Subobject>> subobjects;

  const Subobject& sub(const std::string& name) const;
  friend bool operator==(const GraphDocument& lhs, const GraphDocument& rhs);
};

GraphDocument parse_document(std::istream& in);
GraphDocument parse_document(const std::string& text);
GraphDocument load_document(const std::string& path);

GraphDocument make_document(std::string name, const FiniteGraph& graph);
GraphDocument make_document(std::string name, const LabelledGraph& graph);

void emit_document(const GraphDocument& doc, std::ostream& out);
std::string to_text(const GraphDocument& doc);

using ArcCaption = std::function<std::string(std::size_t arc)>;

/// DOT digraph: nodes by identifier, one edge per arc captioned by
/// `caption` (default: the arc identifier, plus ":label" when labelled).
void emit_dot(const GraphDocument& doc, std::ostream& out,
              const ArcCaption& caption = {});

// Automaton format:
//
//   automaton <name>
//   alphabet <symbol> ...
//   state <id>
//   delta <state> <symbol> <target> ...
struct AutomatonDocument {
  std::string name;
  Automaton automaton;
};

AutomatonDocument parse_automaton(std::istream& in);
AutomatonDocument parse_automaton(const std::string& text);
void emit_automaton(const AutomatonDocument& doc, std::ostream& out);

}  // namespace topos

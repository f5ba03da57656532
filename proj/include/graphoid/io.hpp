#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "graphoid/graph.hpp"
#include "graphoid/model.hpp"
#include "graphoid/protocol.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

// Text formats. All three share the same lexing: '#' starts a comment,
// blank lines are ignored, tokens are whitespace-separated.
//
// Graph files:    node <name> [det]       then  edge <parent> <child>
//                 (undirected files use   link <a> <b>)
// Model files:    var <name>...           then  indep <x> | <z> | <y>
//                 (comma-separated name lists; '-' for an empty z)
// Protocol files: order <name>...         then  bnd <name> : <list or ->
//
// Declarations must precede uses. Parse errors cite the line number and
// the directive.

Dag parse_dag(std::string_view text, const std::string& filename = "<input>");
UndirectedGraph parse_undirected(std::string_view text, const std::string& filename = "<input>");
// Detects the flavor from the directives used ('edge' vs 'link');
// a file with no edges parses as a DAG.
std::variant<Dag, UndirectedGraph> parse_graph_auto(std::string_view text,
                                                    const std::string& filename = "<input>");

DependencyModel parse_model(std::string_view text, const std::string& filename = "<input>");

// Protocols parse without validity checking; run validate() on the
// result. The order line defines the universe.
StratifiedProtocol parse_protocol(std::string_view text, const std::string& filename = "<input>");

// "x-list | z-list | y-list" with '-' for an empty z, e.g. "a,b | - | c".
Triplet parse_triplet(std::string_view literal, const UniversePtr& universe);

std::string to_text(const Dag& g);
std::string to_text(const UndirectedGraph& u);
std::string to_text(const DependencyModel& m);
std::string to_text(const StratifiedProtocol& p);

// DOT export. Node order follows the universe; edges are sorted;
// deterministic nodes carry peripheries=2. Output is byte-stable.
std::string to_dot(const Dag& g);
std::string to_dot(const UndirectedGraph& u);

std::string read_file(const std::string& path);

}  // namespace graphoid

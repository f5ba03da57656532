#include "graphoid/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace graphoid {

namespace {

struct Line {
  int number;
  std::string text;                 // comment-stripped
  std::vector<std::string> tokens;  // whitespace-split
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++number;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, std::string(raw), {}};
    std::istringstream stream(line.text);
    std::string token;
    while (stream >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
  }
  return lines;
}

std::vector<std::string> split_names(std::string_view field) {
  std::vector<std::string> names;
  size_t pos = 0;
  while (pos <= field.size()) {
    size_t comma = field.find(',', pos);
    std::string_view part =
        field.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    size_t begin = part.find_first_not_of(" \t");
    if (begin == std::string_view::npos) {
      names.emplace_back();  // empty entry, caller rejects
    } else {
      names.emplace_back(part.substr(begin, part.find_last_not_of(" \t") - begin + 1));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return names;
}

VarSet parse_name_list(std::string_view field, const UniversePtr& u, bool allow_dash) {
  size_t begin = field.find_first_not_of(" \t");
  if (begin == std::string_view::npos) {
    throw ValidationError("empty name list");
  }
  std::string_view trimmed = field.substr(begin, field.find_last_not_of(" \t") - begin + 1);
  if (trimmed == "-") {
    if (allow_dash) return VarSet();
    throw ValidationError("'-' is only valid for the z list");
  }
  VarSet result;
  for (const std::string& name : split_names(trimmed)) {
    if (name.empty()) throw ValidationError("empty name in list");
    int v = u->find(name);
    if (v < 0) throw ValidationError("unknown variable '" + name + "'");
    if (result.contains(v)) {
      throw ValidationError("variable '" + name + "' listed twice");
    }
    result |= VarSet::single(v);
  }
  return result;
}

void check_name(const std::string& name, const std::string& file, int line,
                const std::string& directive) {
  if (!Universe::valid_name(name)) {
    throw ParseError(file, line, directive,
                     "invalid variable name '" + name +
                         "' (must be nonempty, no whitespace, ',', '|', or '#')");
  }
}

struct GraphData {
  std::vector<std::string> names;
  VarSet det;
  std::vector<std::pair<int, int>> directed;    // parent -> child
  std::vector<std::pair<int, int>> undirected;  // link a b
  bool saw_edge = false;
  bool saw_link = false;
};

GraphData parse_graph_lines(std::string_view text, const std::string& file) {
  GraphData data;
  auto index_of = [&](const std::string& name) {
    for (size_t i = 0; i < data.names.size(); ++i) {
      if (data.names[i] == name) return static_cast<int>(i);
    }
    return -1;
  };

  for (const Line& line : lex(text)) {
    const std::string& directive = line.tokens[0];
    if (directive == "node") {
      if (line.tokens.size() < 2 || line.tokens.size() > 3) {
        throw ParseError(file, line.number, directive, "expected 'node <name> [det]'");
      }
      const std::string& name = line.tokens[1];
      check_name(name, file, line.number, directive);
      if (index_of(name) >= 0) {
        throw ParseError(file, line.number, directive, "duplicate node '" + name + "'");
      }
      if (data.names.size() >= Universe::kMaxVars) {
        throw ParseError(file, line.number, directive, "more than 64 nodes");
      }
      if (line.tokens.size() == 3) {
        if (line.tokens[2] != "det") {
          throw ParseError(file, line.number, directive,
                           "unexpected token '" + line.tokens[2] + "' (only 'det' is allowed)");
        }
        data.det |= VarSet::single(static_cast<int>(data.names.size()));
      }
      data.names.push_back(name);
    } else if (directive == "edge" || directive == "link") {
      if (line.tokens.size() != 3) {
        throw ParseError(file, line.number, directive,
                         "expected '" + directive + " <name> <name>'");
      }
      int a = index_of(line.tokens[1]);
      int b = index_of(line.tokens[2]);
      if (a < 0) {
        throw ParseError(file, line.number, directive, "unknown node '" + line.tokens[1] + "'");
      }
      if (b < 0) {
        throw ParseError(file, line.number, directive, "unknown node '" + line.tokens[2] + "'");
      }
      if (a == b) {
        throw ParseError(file, line.number, directive,
                         "self-edge on '" + line.tokens[1] + "' is not allowed");
      }
      if (directive == "edge") {
        data.saw_edge = true;
        if (std::find(data.directed.begin(), data.directed.end(), std::pair(a, b)) !=
            data.directed.end()) {
          throw ParseError(file, line.number, directive,
                           "duplicate edge " + line.tokens[1] + " -> " + line.tokens[2]);
        }
        data.directed.emplace_back(a, b);
      } else {
        data.saw_link = true;
        auto lo = std::min(a, b), hi = std::max(a, b);
        if (std::find(data.undirected.begin(), data.undirected.end(), std::pair(lo, hi)) !=
            data.undirected.end()) {
          throw ParseError(file, line.number, directive,
                           "duplicate link " + line.tokens[1] + " -- " + line.tokens[2]);
        }
        data.undirected.emplace_back(lo, hi);
      }
      if (data.saw_edge && data.saw_link) {
        throw ParseError(file, line.number, directive,
                         "file mixes directed 'edge' and undirected 'link' directives");
      }
    } else {
      throw ParseError(file, line.number, directive, "unknown directive '" + directive + "'");
    }
  }
  return data;
}

Dag dag_from(GraphData data) {
  UniversePtr u = Universe::create(std::move(data.names));
  std::vector<VarSet> parents(u->size());
  for (auto [p, c] : data.directed) parents[c] |= VarSet::single(p);
  return Dag::create(std::move(u), std::move(parents), data.det);
}

UndirectedGraph undirected_from(GraphData data, const std::string& file) {
  if (!data.det.empty()) {
    throw ParseError(file, 0, "node", "undirected graphs cannot have deterministic nodes");
  }
  UniversePtr u = Universe::create(std::move(data.names));
  return UndirectedGraph::create(std::move(u), data.undirected);
}

}  // namespace

Dag parse_dag(std::string_view text, const std::string& filename) {
  GraphData data = parse_graph_lines(text, filename);
  if (data.saw_link) {
    throw ParseError(filename, 0, "link", "expected a directed graph, found 'link' directives");
  }
  return dag_from(std::move(data));
}

UndirectedGraph parse_undirected(std::string_view text, const std::string& filename) {
  GraphData data = parse_graph_lines(text, filename);
  if (data.saw_edge) {
    throw ParseError(filename, 0, "edge", "expected an undirected graph, found 'edge' directives");
  }
  return undirected_from(std::move(data), filename);
}

std::variant<Dag, UndirectedGraph> parse_graph_auto(std::string_view text,
                                                    const std::string& filename) {
  GraphData data = parse_graph_lines(text, filename);
  if (data.saw_link) return undirected_from(std::move(data), filename);
  return dag_from(std::move(data));
}

DependencyModel parse_model(std::string_view text, const std::string& filename) {
  std::vector<std::string> names;
  UniversePtr universe;
  std::optional<DependencyModel> model;

  for (const Line& line : lex(text)) {
    const std::string& directive = line.tokens[0];
    if (directive == "var") {
      if (model) {
        throw ParseError(filename, line.number, directive,
                         "'var' declarations must precede 'indep' lines");
      }
      if (line.tokens.size() < 2) {
        throw ParseError(filename, line.number, directive, "expected 'var <name>...'");
      }
      for (size_t i = 1; i < line.tokens.size(); ++i) {
        check_name(line.tokens[i], filename, line.number, directive);
        if (std::find(names.begin(), names.end(), line.tokens[i]) != names.end()) {
          throw ParseError(filename, line.number, directive,
                           "duplicate variable '" + line.tokens[i] + "'");
        }
        names.push_back(line.tokens[i]);
      }
      if (names.size() > Universe::kMaxVars) {
        throw ParseError(filename, line.number, directive, "more than 64 variables");
      }
    } else if (directive == "indep") {
      if (!model) {
        universe = Universe::create(names);
        model.emplace(universe);
      }
      std::string_view rest(line.text);
      rest = rest.substr(rest.find("indep") + 5);
      try {
        model->insert(parse_triplet(rest, universe));
      } catch (const Error& e) {
        throw ParseError(filename, line.number, directive, e.what());
      }
    } else {
      throw ParseError(filename, line.number, directive, "unknown directive '" + directive + "'");
    }
  }
  if (!model) {
    universe = Universe::create(names);
    model.emplace(universe);
  }
  return *std::move(model);
}

StratifiedProtocol parse_protocol(std::string_view text, const std::string& filename) {
  StratifiedProtocol p;
  VarSet bnd_seen;

  for (const Line& line : lex(text)) {
    const std::string& directive = line.tokens[0];
    if (directive == "order") {
      if (p.universe) {
        throw ParseError(filename, line.number, directive, "second 'order' line");
      }
      if (line.tokens.size() < 2) {
        throw ParseError(filename, line.number, directive, "expected 'order <name>...'");
      }
      std::vector<std::string> names(line.tokens.begin() + 1, line.tokens.end());
      for (const std::string& name : names) check_name(name, filename, line.number, directive);
      for (size_t i = 0; i < names.size(); ++i) {
        if (std::find(names.begin(), names.begin() + i, names[i]) != names.begin() + i) {
          throw ParseError(filename, line.number, directive,
                           "duplicate variable '" + names[i] + "' in order");
        }
      }
      if (names.size() > Universe::kMaxVars) {
        throw ParseError(filename, line.number, directive, "more than 64 variables");
      }
      p.universe = Universe::create(names);
      for (int i = 0; i < p.universe->size(); ++i) p.order.push_back(i);
      p.boundary.assign(p.universe->size(), VarSet());
    } else if (directive == "bnd") {
      if (!p.universe) {
        throw ParseError(filename, line.number, directive, "'bnd' before 'order'");
      }
      // bnd <name> : <comma-list or ->
      size_t colon = line.text.find(':');
      if (colon == std::string::npos) {
        throw ParseError(filename, line.number, directive, "expected 'bnd <name> : <list or ->'");
      }
      std::istringstream head(line.text.substr(0, colon));
      std::string keyword, name, extra;
      head >> keyword >> name;
      if (name.empty() || (head >> extra)) {
        throw ParseError(filename, line.number, directive, "expected 'bnd <name> : <list or ->'");
      }
      int v = p.universe->find(name);
      if (v < 0) {
        throw ParseError(filename, line.number, directive, "unknown variable '" + name + "'");
      }
      if (bnd_seen.contains(v)) {
        throw ParseError(filename, line.number, directive, "second 'bnd' line for '" + name + "'");
      }
      bnd_seen |= VarSet::single(v);
      try {
        p.boundary[v] = parse_name_list(line.text.substr(colon + 1), p.universe, true);
      } catch (const Error& e) {
        throw ParseError(filename, line.number, directive, e.what());
      }
    } else {
      throw ParseError(filename, line.number, directive, "unknown directive '" + directive + "'");
    }
  }
  if (!p.universe) {
    throw ParseError(filename, 0, "", "protocol file has no 'order' line");
  }
  if (bnd_seen != p.universe->full_set()) {
    VarSet missing = p.universe->full_set() - bnd_seen;
    throw ParseError(filename, 0, "bnd",
                     "missing 'bnd' line for '" + p.universe->name(missing.lowest()) + "'");
  }
  return p;
}

Triplet parse_triplet(std::string_view literal, const UniversePtr& universe) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    size_t bar = literal.find('|', pos);
    if (bar == std::string_view::npos) {
      fields.push_back(literal.substr(pos));
      break;
    }
    fields.push_back(literal.substr(pos, bar - pos));
    pos = bar + 1;
  }
  if (fields.size() != 3) {
    throw ValidationError("triplet literal must have three '|'-separated fields: 'x | z | y'");
  }
  VarSet x = parse_name_list(fields[0], universe, false);
  VarSet z = parse_name_list(fields[1], universe, true);
  VarSet y = parse_name_list(fields[2], universe, false);
  return Triplet(universe, x, z, y);
}

namespace {

void append_nodes(std::string& out, const UniversePtr& u, VarSet det) {
  for (int v = 0; v < u->size(); ++v) {
    out += "node " + u->name(v);
    if (det.contains(v)) out += " det";
    out += "\n";
  }
}

}  // namespace

std::string to_text(const Dag& g) {
  std::string out;
  append_nodes(out, g.universe(), g.deterministic());
  for (int p = 0; p < g.node_count(); ++p) {
    for (int c : g.children(p)) {
      out += "edge " + g.universe()->name(p) + " " + g.universe()->name(c) + "\n";
    }
  }
  return out;
}

std::string to_text(const UndirectedGraph& u) {
  std::string out;
  append_nodes(out, u.universe(), VarSet());
  for (auto [a, b] : u.edges()) {
    out += "link " + u.universe()->name(a) + " " + u.universe()->name(b) + "\n";
  }
  return out;
}

std::string to_text(const DependencyModel& m) {
  std::string out = "var";
  for (const std::string& name : m.universe()->names()) out += " " + name;
  out += "\n";
  for (const Triplet& t : m.triplets()) out += "indep " + t.to_literal() + "\n";
  return out;
}

std::string to_text(const StratifiedProtocol& p) {
  std::string out = "order";
  for (int v : p.order) out += " " + p.universe->name(v);
  out += "\n";
  for (int v : p.order) {
    VarSet b = p.boundary[v];
    out += "bnd " + p.universe->name(v) + " : " + (b.empty() ? "-" : p.universe->label(b)) + "\n";
  }
  return out;
}

std::string to_dot(const Dag& g) {
  std::string out = "digraph {\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out += "  " + g.universe()->name(v);
    if (g.is_deterministic(v)) out += " [peripheries=2]";
    out += ";\n";
  }
  for (int p = 0; p < g.node_count(); ++p) {
    for (int c : g.children(p)) {
      out += "  " + g.universe()->name(p) + " -> " + g.universe()->name(c) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_dot(const UndirectedGraph& u) {
  std::string out = "graph {\n";
  for (int v = 0; v < u.node_count(); ++v) out += "  " + u.universe()->name(v) + ";\n";
  for (auto [a, b] : u.edges()) {
    out += "  " + u.universe()->name(a) + " -- " + u.universe()->name(b) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace graphoid

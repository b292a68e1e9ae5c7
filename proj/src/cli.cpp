#include "dendro/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "dendro/dendroidal.hpp"
#include "dendro/monoidal.hpp"
#include "dendro/omega.hpp"
#include "dendro/serialize.hpp"
#include "dendro/trees.hpp"

namespace dendro::cli {

namespace {

struct Config {
  Flavour flavour = Flavour::commutative;
  bool json = false;
  std::optional<std::size_t> max_word_len;
  std::size_t budget = EnumerationOptions{}.budget;

  ClosureOptions closure() const { return {max_word_len}; }
  EnumerationOptions enumeration() const { return {budget}; }
};

Json read_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

/// Inline JSON, a JSON file, or a tree term, in that order.
Json load_json(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return read_json(arg);
  std::ifstream in(arg);
  if (!in) throw IdentifierError("cannot open '" + arg + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_json(buffer.str());
}

BroadPoset load_poset(const std::string& arg, const Config& config) {
  bool is_json = (!arg.empty() && arg.front() == '{') ||
                 (arg.find('(') == std::string::npos && std::filesystem::is_regular_file(arg));
  if (is_json) return broad_poset_from_json(load_json(arg));
  return to_broad(parse_term(arg), config.flavour);
}

std::string trim(std::string s) {
  auto space = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && space(s.back())) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && space(s[start])) ++start;
  return s.substr(start);
}

Assignment parse_map_literal(const std::string& text) {
  Assignment out;
  std::size_t offset = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto arrow = item.find("=>");
    if (arrow == std::string::npos) throw ParseError("expected 'a=>x' in map literal", offset);
    std::string from = trim(item.substr(0, arrow));
    std::string to = trim(item.substr(arrow + 2));
    if (from.empty() || to.empty()) throw ParseError("empty identifier in map literal", offset);
    if (!out.emplace(from, to).second) {
      throw ParseError("'" + from + "' is assigned twice", offset);
    }
    offset += item.size() + 1;
  }
  return out;
}

std::string join_names(const BroadPoset& p, const std::vector<Index>& xs) {
  std::string out;
  for (Index x : xs) out += (out.empty() ? "" : ",") + p.name(x);
  return out.empty() ? "-" : out;
}

std::string describe_poset(const BroadPoset& p) {
  if (is_dendroidal(p)) return print_term(to_term(p));
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + p.name(i);
  return out + "}";
}

std::string describe_map(const MonotoneMap& m) {
  std::string out;
  for (const auto& id : m.domain().carrier()) {
    out += (out.empty() ? "" : ", ") + id + "=>" + m(id);
  }
  return out;
}

void print_poset(std::ostream& out, const BroadPoset& p) {
  out << "flavour: " << to_string(p.flavour()) << "\n";
  out << "carrier: " << p.size() << " elements\n";
  for (const auto& id : p.carrier()) out << "  " << id << "\n";
  out << "relation: " << p.relation().size() << " pairs\n";
  for (const auto& pair : p.relation()) out << "  " << p.format(pair) << "\n";
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void print_dot(std::ostream& out, const BroadPoset& p) {
  Tree t(p);
  out << "digraph tree {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& id : p.carrier()) out << "  " << quote(id) << ";\n";
  for (const auto& v : t.vertices()) {
    const std::string vertex = quote("v:" + p.name(v.target));
    if (v.source.empty()) {
      out << "  " << vertex << " [shape=square, label=\"\", width=0.12, style=filled];\n";
    } else {
      out << "  " << vertex << " [shape=point];\n";
    }
    for (Index c : v.source) out << "  " << quote(p.name(c)) << " -> " << vertex << " [arrowhead=none];\n";
    out << "  " << vertex << " -> " << quote(p.name(v.target)) << " [arrowhead=none];\n";
  }
  out << "}\n";
}

int cmd_check(const Config& config, const std::string& arg, std::ostream& out) {
  BroadPoset p = load_poset(arg, config);
  DendroReport report = check_dendroidal(p);
  if (config.json) {
    Json j = {{"report", to_json(report)}};
    if (report.is_dendroidal) {
      j["degree"] = degree(p);
      j["leaves"] = Json::array();
      for (Index x : Tree(p).leaves()) j["leaves"].push_back(p.name(x));
    }
    out << j.dump(2) << "\n";
  } else if (report.is_dendroidal) {
    Tree t(p);
    out << "dendroidal: true; degree " << degree(p) << "; leaves " << join_names(p, t.leaves())
        << "\n";
  } else {
    out << "dendroidal: false\n";
    for (const auto& v : report.violations) out << "  " << v << "\n";
  }
  return report.is_dendroidal ? 0 : 1;
}

int cmd_validate(const Config& config, const std::string& arg, std::ostream& out) {
  BroadPoset p = load_poset(arg, config);
  ValidationReport report = validate(p);
  if (config.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << "broad poset: " << (report.ok() ? "true" : "false") << "\n";
    for (const auto& v : report.violations) out << "  " << v << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_info(const Config& config, const std::string& arg, std::ostream& out) {
  BroadPoset p = load_poset(arg, config);
  Tree t(p);
  std::vector<Pair> ls = links(p);
  if (config.json) {
    auto names = [&](const std::vector<Index>& xs) {
      Json a = Json::array();
      for (Index x : xs) a.push_back(p.name(x));
      return a;
    };
    Json jl = Json::array();
    for (const auto& l : ls) {
      NamedPair np = p.named(l);
      jl.push_back({{"source", np.source}, {"target", np.target}});
    }
    out << Json{{"tree", to_json(p)},
                {"root", p.name(t.root())},
                {"leaves", names(t.leaves())},
                {"stumps", names(t.stumps())},
                {"inner_edges", names(t.inner_edges())},
                {"degree", ls.size()},
                {"links", jl}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "root: " << p.name(t.root()) << "\n";
  out << "leaves: " << join_names(p, t.leaves()) << "\n";
  out << "stumps: " << join_names(p, t.stumps()) << "\n";
  out << "inner edges: " << join_names(p, t.inner_edges()) << "\n";
  out << "degree: " << ls.size() << "\n";
  out << "links:\n";
  for (const auto& l : ls) out << "  " << p.format(l) << "\n";
  return 0;
}

int cmd_subtrees(const Config& config, const std::string& arg, bool maximal, std::ostream& out) {
  BroadPoset p = load_poset(arg, config);
  auto subs = maximal ? maximal_subtrees(p) : enumerate_subtrees(p);
  const std::size_t d = degree(p);
  Json items = Json::array();
  if (!config.json) out << subs.size() << (maximal ? " maximal subtrees\n" : " subtrees\n");
  for (const auto& s : subs) {
    std::optional<FaceKind> kind;
    if (degree(s) + 1 == d) kind = classify_maximal(p, s);
    if (config.json) {
      Json item = {{"tree", to_json(s)}, {"term", print_term(to_term(s))}};
      if (kind) item["face"] = to_json(*kind);
      items.push_back(std::move(item));
    } else {
      out << "  " << print_term(to_term(s));
      if (kind) out << "  [" << describe(*kind) << "]";
      out << "\n";
    }
  }
  if (config.json) out << Json{{"count", subs.size()}, {"subtrees", items}}.dump(2) << "\n";
  return 0;
}

int cmd_faces(const Config& config, const std::string& arg, std::ostream& out) {
  BroadPoset p = load_poset(arg, config);
  auto fs = faces(p);
  if (config.json) {
    Json items = Json::array();
    for (const auto& f : fs) items.push_back({{"kind", to_json(f.kind)}, {"map", to_json(f.inclusion)}});
    out << Json{{"count", fs.size()}, {"faces", items}}.dump(2) << "\n";
    return 0;
  }
  out << fs.size() << " faces\n";
  for (const auto& f : fs) {
    out << "  " << describe(f.kind) << ": " << describe_poset(f.inclusion.domain()) << "\n";
  }
  return 0;
}

int cmd_degeneracies(const Config& config, const std::string& arg, std::ostream& out) {
  BroadPoset p = load_poset(arg, config);
  auto ds = degeneracies(p);
  if (config.json) {
    Json items = Json::array();
    for (const auto& d : ds) items.push_back(to_json(d));
    out << Json{{"count", ds.size()}, {"degeneracies", items}}.dump(2) << "\n";
    return 0;
  }
  out << ds.size() << " degeneracies\n";
  for (const auto& d : ds) {
    out << "  " << describe_map(d) << " : " << describe_poset(d.domain()) << " -> "
        << describe_poset(d.codomain()) << "\n";
  }
  return 0;
}

int cmd_hom(const Config& config, const std::string& a, const std::string& b, std::ostream& out) {
  BroadPoset from = load_poset(a, config);
  BroadPoset to = load_poset(b, config);
  auto maps = enumerate_monotone(from, to, config.enumeration());
  if (config.json) {
    Json items = Json::array();
    for (const auto& m : maps) items.push_back(to_json(m));
    out << Json{{"count", maps.size()}, {"maps", items}}.dump(2) << "\n";
    return 0;
  }
  out << maps.size() << " maps\n";
  for (const auto& m : maps) out << "  " << describe_map(m) << "\n";
  return 0;
}

int cmd_factor(const Config& config, const std::string& a, const std::string& b,
               const std::string& literal, std::ostream& out) {
  BroadPoset from = load_poset(a, config);
  BroadPoset to = load_poset(b, config);
  Assignment assignment = parse_map_literal(literal);
  for (const auto& id : from.carrier()) {
    if (!assignment.contains(id)) throw IdentifierError("'" + id + "' is not assigned");
  }
  for (const auto& [id, image] : assignment) {
    if (!from.find(id)) throw IdentifierError("'" + id + "' is not in the domain");
  }
  MonotoneMap f = MonotoneMap::make(from, to, assignment);
  Factorization fact = factorize(f);
  const bool verified = fact.composite() == f;
  if (config.json) {
    Json j = to_json(fact);
    j["verified"] = verified;
    out << j.dump(2) << "\n";
    return verified ? 0 : 1;
  }
  auto line = [&](std::string_view label, const MonotoneMap& m) {
    out << label << " (" << to_string(classify_map(m)) << "): " << describe_map(m) << " : "
        << describe_poset(m.domain()) << " -> " << describe_poset(m.codomain()) << "\n";
  };
  out << fact.degeneracies.size() << " degeneracies, " << fact.faces.size() << " faces\n";
  for (const auto& d : fact.degeneracies) line("degeneracy", d);
  line("iso", fact.iso);
  for (const auto& f2 : fact.faces) line("face", f2);
  out << "composite " << (verified ? "verified" : "MISMATCH") << "\n";
  return verified ? 0 : 1;
}

int cmd_graft(const Config& config, const std::string& a, const std::string& leaf,
              const std::string& b, std::ostream& out) {
  Graft g = graft(load_poset(a, config), leaf, load_poset(b, config));
  if (config.json) {
    out << Json{{"tree", to_json(g.tree)}, {"renaming", g.renaming}}.dump(2) << "\n";
  } else {
    out << print_term(to_term(g.tree)) << "\n";
  }
  return 0;
}

int emit_poset(const Config& config, const BroadPoset& p, std::ostream& out) {
  if (config.json) {
    out << to_json(p).dump(2) << "\n";
  } else {
    print_poset(out, p);
  }
  return 0;
}

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::semantic: return 1;
    case ErrorCategory::input: return 2;
    case ErrorCategory::resource: return 3;
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Broad posets, dendroidally ordered sets and the dendroidal category", "dendro"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string flavour = "commutative";
  std::string output = "text";
  std::optional<std::size_t> max_word_len;
  std::size_t budget = EnumerationOptions{}.budget;
  app.add_option("--flavour", flavour, "commutative or planar")
      ->check(CLI::IsMember({"commutative", "planar"}));
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-word-len", max_word_len, "bound on generated word length")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "bound on enumeration size")->check(CLI::PositiveNumber);

  std::string first, second, leaf, literal;
  bool maximal = false;
  auto one = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("TREE", first, "tree term, inline JSON or JSON file")->required();
    return sub;
  };
  auto two = [&](const char* name, const char* help) {
    auto* sub = one(name, help);
    sub->add_option("SECOND", second)->required();
    return sub;
  };
  auto* check = one("check", "dendroidal report");
  auto* valid = one("validate", "broad poset axioms report");
  auto* info = one("info", "root, leaves, stumps, inner edges, degree, links");
  auto* subtrees = one("subtrees", "all subtrees, classified when maximal");
  subtrees->add_flag("--maximal", maximal, "only maximal subtrees");
  auto* face = one("faces", "face maps into the tree");
  auto* degen = one("degeneracies", "degeneracy maps out of the tree");
  auto* dot = one("dot", "Graphviz digraph");
  auto* hom = two("hom", "all monotone maps");
  auto* factor = two("factor", "degeneracy, iso, face factorization");
  factor->add_option("--map", literal, "assignment such as \"a=>x,b=>y\"")->required();
  auto* graft_cmd = app.add_subcommand("graft", "graft SECOND onto a leaf of TREE");
  graft_cmd->add_option("TREE", first)->required();
  graft_cmd->add_option("--at", leaf, "leaf of TREE")->required();
  graft_cmd->add_option("SECOND", second)->required();
  auto* tensor_cmd = two("tensor", "tensor product of broad posets");
  auto* product_cmd = two("product", "cartesian product of broad posets");
  auto* pushout_cmd = app.add_subcommand("pushout", "pushout of a span given as two maps");
  pushout_cmd->add_option("FIRST", first, "map JSON or file")->required();
  pushout_cmd->add_option("SECOND", second, "map JSON or file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Config config;
  config.flavour = parse_flavour(flavour);
  config.json = output == "json";
  config.max_word_len = max_word_len;
  config.budget = budget;

  try {
    if (*check) return cmd_check(config, first, out);
    if (*valid) return cmd_validate(config, first, out);
    if (*info) return cmd_info(config, first, out);
    if (*subtrees) return cmd_subtrees(config, first, maximal, out);
    if (*face) return cmd_faces(config, first, out);
    if (*degen) return cmd_degeneracies(config, first, out);
    if (*dot) {
      print_dot(out, load_poset(first, config));
      return 0;
    }
    if (*hom) return cmd_hom(config, first, second, out);
    if (*factor) return cmd_factor(config, first, second, literal, out);
    if (*graft_cmd) return cmd_graft(config, first, leaf, second, out);
    if (*tensor_cmd) {
      return emit_poset(config,
                        tensor(load_poset(first, config), load_poset(second, config),
                               config.closure()),
                        out);
    }
    if (*product_cmd) {
      return emit_poset(config, product(load_poset(first, config), load_poset(second, config)).object,
                        out);
    }
    if (*pushout_cmd) {
      MonotoneMap f = monotone_map_from_json(load_json(first));
      MonotoneMap g = monotone_map_from_json(load_json(second));
      return emit_poset(config, pushout(f, g, config.closure()).object, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace dendro::cli

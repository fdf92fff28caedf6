#include "pcknot/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace pcknot {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

int parse_int(const Token& t, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return v;
}

int parse_bit(const Token& t, int line) {
  int v = parse_int(t, line);
  if (v != 0 && v != 1) throw ParseError(line, t.column, "expected 0 or 1");
  return v;
}

void expect_arity(const std::vector<Token>& toks, std::size_t n, int line) {
  if (toks.size() != n) {
    int col = toks.size() > n ? toks[n].column : toks.back().column;
    throw ParseError(line, col, "'" + std::string(toks[0].text) + "' takes " + std::to_string(n - 1) + " argument(s)");
  }
}

class Parser {
 public:
  LinkDiagram run(std::string_view text) {
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      line_ = static_cast<int>(i) + 1;
      auto toks = tokenize(lines[i]);
      if (!toks.empty()) directive(toks);
    }
    line_ = static_cast<int>(lines.size()) + 1;
    finish_surface(1);
    close_component(1);
    if (!labeling_.empty() && labeling_.size() != d_.components.size()) {
      throw ParseError(labeling_line_, 1, "labeling lists " + std::to_string(labeling_.size()) + " bits for " +
                                              std::to_string(d_.components.size()) + " components");
    }
    for (std::size_t c = 0; c < labeling_.size(); ++c) d_.components[c].labeling = labeling_[c];
    return d_;
  }

 private:
  void directive(const std::vector<Token>& t) {
    std::string_view kw = t[0].text;
    if (kw == "surface") {
      if (surface_seen_) throw ParseError(line_, t[0].column, "duplicate surface line");
      surface_seen_ = true;
      if (t.size() >= 2 && t[1].text == "boundary") {
        expect_arity(t, 2, line_);
        boundary_ = true;
      } else if (t.size() >= 2 && t[1].text == "closed") {
        expect_arity(t, 3, line_);
        int k = parse_int(t[2], line_);
        if (k < 1) throw ParseError(line_, t[2].column, "closed surface needs at least one cross-cap");
        d_.surface = SurfacePresentation::closed(k);
        surface_built_ = true;
      } else {
        throw ParseError(line_, t.size() >= 2 ? t[1].column : t[0].column, "expected 'boundary' or 'closed <k>'");
      }
      return;
    }
    if (!surface_seen_) throw ParseError(line_, t[0].column, "file must start with a surface line");
    if (kw == "gen") {
      if (!boundary_ || surface_built_) throw ParseError(line_, t[0].column, "'gen' only follows 'surface boundary'");
      expect_arity(t, 3, line_);
      gens_.push_back({std::string(t[1].text), parse_bit(t[2], line_)});
      return;
    }
    finish_surface(t[0].column);
    if (kw == "flat") {
      expect_arity(t, 1, line_);
      d_.flat = true;
    } else if (kw == "component") {
      expect_arity(t, 1, line_);
      close_component(t[0].column);
      d_.components.emplace_back();
      in_component_ = true;
      expect_edge_ = false;
    } else if (kw == "pass") {
      expect_arity(t, 3, line_);
      if (!in_component_) throw ParseError(line_, t[0].column, "'pass' outside a component");
      auto& comp = d_.components.back();
      if (expect_edge_) throw ParseError(line_, t[0].column, "expected 'edge' after a pass");
      if (comp.passes.empty() && !comp.edges.empty()) {
        throw ParseError(line_, t[0].column, "crossing-free component already has its closed edge");
      }
      Role role;
      if (t[1].text == "over") {
        role = Role::over;
      } else if (t[1].text == "under") {
        role = Role::under;
      } else {
        throw ParseError(line_, t[1].column, "expected 'over' or 'under'");
      }
      comp.passes.push_back({parse_int(t[2], line_), role});
      expect_edge_ = true;
    } else if (kw == "edge") {
      expect_arity(t, 2, line_);
      if (!in_component_) throw ParseError(line_, t[0].column, "'edge' outside a component");
      auto& comp = d_.components.back();
      if (!expect_edge_ && !(comp.passes.empty() && comp.edges.empty())) {
        throw ParseError(line_, t[0].column, "expected 'pass' before another edge");
      }
      try {
        comp.edges.push_back(parse_word(t[1].text, d_.surface));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_, t[1].column, e.what());
      }
      expect_edge_ = false;
    } else if (kw == "corner") {
      expect_arity(t, 3, line_);
      close_component(t[0].column);
      int x = parse_int(t[1], line_);
      Corner c;
      if (t[2].text == "ccw") {
        c = Corner::ccw;
      } else if (t[2].text == "cw") {
        c = Corner::cw;
      } else {
        throw ParseError(line_, t[2].column, "expected 'ccw' or 'cw'");
      }
      if (!d_.corners.emplace(x, c).second) throw ParseError(line_, t[1].column, "duplicate corner line");
    } else if (kw == "labeling") {
      close_component(t[0].column);
      if (labeling_line_) throw ParseError(line_, t[0].column, "duplicate labeling line");
      labeling_line_ = line_;
      for (std::size_t i = 1; i < t.size(); ++i) labeling_.push_back(parse_bit(t[i], line_));
    } else {
      throw ParseError(line_, t[0].column, "unknown directive '" + std::string(kw) + "'");
    }
  }

  void finish_surface(int column) {
    if (surface_built_) return;
    if (!surface_seen_) throw ParseError(line_, column, "missing surface line");
    try {
      d_.surface = SurfacePresentation::with_boundary(gens_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_, column, e.what());
    }
    surface_built_ = true;
  }

  void close_component(int column) {
    if (!in_component_) return;
    const auto& comp = d_.components.back();
    if (expect_edge_) throw ParseError(line_, column, "component ends with a pass; expected 'edge'");
    if (comp.edges.empty()) throw ParseError(line_, column, "empty component");
    in_component_ = false;
  }

  LinkDiagram d_;
  std::vector<Generator> gens_;
  std::vector<int> labeling_;
  int labeling_line_ = 0;
  int line_ = 0;
  bool surface_seen_ = false;
  bool surface_built_ = false;
  bool boundary_ = false;
  bool in_component_ = false;
  bool expect_edge_ = false;
};

}  // namespace

LinkDiagram parse_diagram(std::string_view text) { return Parser{}.run(text); }

std::string serialize(const LinkDiagram& d) {
  std::ostringstream out;
  if (d.surface.is_closed()) {
    out << "surface closed " << d.surface.closed_genus() << '\n';
  } else {
    out << "surface boundary\n";
    for (const Generator& g : d.surface.generators()) out << "gen " << g.symbol << ' ' << g.w1 << '\n';
  }
  if (d.flat) out << "flat\n";
  for (const DiagramComponent& c : d.components) {
    out << "component\n";
    for (std::size_t j = 0; j < c.edges.size(); ++j) {
      if (j < c.passes.size()) {
        out << "  pass " << (c.passes[j].role == Role::over ? "over" : "under") << ' ' << c.passes[j].crossing << '\n';
      }
      out << "  edge " << format_word(c.edges[j], d.surface) << '\n';
    }
  }
  for (const auto& [x, corner] : d.corners) out << "corner " << x << ' ' << (corner == Corner::ccw ? "ccw" : "cw") << '\n';
  if (!d.components.empty()) {
    out << "labeling";
    for (const DiagramComponent& c : d.components) out << ' ' << c.labeling;
    out << '\n';
  }
  return out.str();
}

std::string serialize_cable(const CableDiagram& c) {
  std::ostringstream out;
  out << serialize(c.diagram);
  for (std::size_t i = 0; i < c.strands.size(); ++i) {
    out << "strand " << i << ' ' << c.strands[i].original_component << ' '
        << (c.strands[i].name == CableName::left ? "left" : "right") << '\n';
  }
  for (const auto& [x, p] : c.patterns) {
    out << "pattern " << x;
    for (int id : p.tile) out << ' ' << id;
    out << " inp " << p.input << " out " << p.output << '\n';
  }
  return out.str();
}

CableDiagram parse_cable(std::string_view text) {
  CableDiagram c;
  std::string diagram_text;
  auto lines = split_lines(text);
  std::vector<std::pair<int, std::vector<Token>>> strands;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int line = static_cast<int>(i) + 1;
    auto toks = tokenize(lines[i]);
    if (!toks.empty() && toks[0].text == "strand") {
      expect_arity(toks, 4, line);
      int idx = parse_int(toks[1], line);
      if (idx != static_cast<int>(c.strands.size())) throw ParseError(line, toks[1].column, "strands must be listed in order");
      CableName name;
      if (toks[3].text == "left") {
        name = CableName::left;
      } else if (toks[3].text == "right") {
        name = CableName::right;
      } else {
        throw ParseError(line, toks[3].column, "expected 'left' or 'right'");
      }
      c.strands.push_back({parse_int(toks[2], line), name});
      diagram_text += '\n';
    } else if (!toks.empty() && toks[0].text == "pattern") {
      expect_arity(toks, 10, line);
      if (toks[6].text != "inp" || toks[8].text != "out") throw ParseError(line, toks[6].column, "expected 'inp <id> out <id>'");
      CablePattern p;
      for (std::size_t k = 0; k < 4; ++k) p.tile[k] = parse_int(toks[2 + k], line);
      p.input = parse_int(toks[7], line);
      p.output = parse_int(toks[9], line);
      c.patterns[parse_int(toks[1], line)] = p;
      diagram_text += '\n';
    } else {
      diagram_text.append(lines[i]);
      diagram_text += '\n';
    }
  }
  c.diagram = parse_diagram(diagram_text);
  if (c.strands.size() != c.diagram.components.size()) {
    throw ParseError(static_cast<int>(lines.size()), 1, "one strand line per cable component required");
  }
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pcknot

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lamina/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace lamina {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

// Splits on whitespace; braces are tokens of their own.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      const char ch = raw[i];
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
      } else if (ch == '{' || ch == '}') {
        line.tokens.push_back({std::string(1, ch), static_cast<int>(i) + 1});
        ++i;
      } else {
        const std::size_t start = i;
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' && raw[i] != '{' &&
               raw[i] != '}') {
          ++i;
        }
        line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class LineReader {
 public:
  explicit LineReader(const Line& line) : line_(line) {}

  int line_number() const { return line_.number; }
  bool done() const { return next_ >= line_.tokens.size(); }

  [[noreturn]] void fail(const std::string& message) const {
    const int column = done() ? end_column() : line_.tokens[next_].column;
    throw ParseError(line_.number, column, message);
  }

  const Token& take(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return line_.tokens[next_++];
  }

  void expect(std::string_view keyword) {
    const Token& t = take(std::string(keyword).c_str());
    if (t.text != keyword) {
      --next_;
      fail("expected '" + std::string(keyword) + "', found '" + t.text + "'");
    }
  }

  int take_int(const char* what) {
    const Token& t = take(what);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
      --next_;
      fail(std::string("expected integer ") + what + ", found '" + t.text + "'");
    }
    return value;
  }

  bool peek_is(std::string_view text) const { return !done() && line_.tokens[next_].text == text; }

  // Reads `{ label ... }` and maps labels through `index`.
  Subset take_set(const std::map<std::string, int>& index) {
    if (!peek_is("{")) fail("expected '{'");
    ++next_;
    Subset s;
    while (true) {
      if (done()) fail("unterminated '{'");
      const Token& t = line_.tokens[next_++];
      if (t.text == "}") return s;
      if (t.text == "{") {
        --next_;
        fail("nested '{'");
      }
      const auto it = index.find(t.text);
      if (it == index.end()) {
        --next_;
        fail("unknown element label '" + t.text + "'");
      }
      if (s.contains(it->second)) {
        --next_;
        fail("label '" + t.text + "' repeated in set");
      }
      s = s.with(it->second);
    }
  }

  void finish() {
    if (!done()) fail("unexpected '" + line_.tokens[next_].text + "'");
  }

 private:
  int end_column() const {
    if (line_.tokens.empty()) return 1;
    const Token& last = line_.tokens.back();
    return last.column + static_cast<int>(last.text.size());
  }

  const Line& line_;
  std::size_t next_ = 0;
};

std::map<std::string, int> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < labels.size(); ++i) out.emplace(labels[i], static_cast<int>(i));
  return out;
}

Matroid parse_graph_body(const std::vector<Line>& body, int n, std::optional<std::vector<std::string>> labels,
                         int last_line) {
  if (body.empty()) throw ParseError(last_line + 1, 1, "expected 'vertices'");
  LineReader head(body.front());
  head.expect("vertices");
  const int vertices = head.take_int("vertex count");
  if (vertices < 0) head.fail("vertex count must be non-negative");
  head.finish();

  struct Pending {
    Edge edge;
    int line;
  };
  std::vector<Pending> edges;
  for (std::size_t i = 1; i < body.size(); ++i) {
    LineReader r(body[i]);
    r.expect("edge");
    Edge e;
    e.label = r.take("edge label").text;
    if (e.label == "{" || e.label == "}") r.fail("edge label expected");
    e.u = r.take_int("endpoint");
    e.v = r.take_int("endpoint");
    if (e.u < 0 || e.u >= vertices || e.v < 0 || e.v >= vertices) {
      throw ParseError(body[i].number, body[i].tokens.back().column, "endpoint out of range");
    }
    r.finish();
    edges.push_back({std::move(e), body[i].number});
  }
  if (static_cast<int>(edges.size()) != n) {
    throw ParseError(body.back().number, 1,
                     "graph has " + std::to_string(edges.size()) + " edges but n is " + std::to_string(n));
  }
  Multigraph g;
  g.vertex_count = vertices;
  if (!labels) {
    for (auto& p : edges) g.edges.push_back(p.edge);
    return cycle_matroid(g);
  }
  // Element order follows the labels line.
  const auto index = label_index(*labels);
  g.edges.resize(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto& p : edges) {
    const auto it = index.find(p.edge.label);
    if (it == index.end()) throw ParseError(p.line, 6, "edge label '" + p.edge.label + "' not in labels");
    if (seen[it->second]) throw ParseError(p.line, 6, "edge label '" + p.edge.label + "' repeated");
    seen[it->second] = true;
    g.edges[it->second] = p.edge;
  }
  return cycle_matroid(g);
}

}  // namespace

Matroid parse_matroid(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input; expected '%matroid v1'");
  std::size_t at = 0;
  {
    LineReader r(lines[at++]);
    r.expect("%matroid");
    r.expect("v1");
    r.finish();
  }
  if (at >= lines.size()) throw ParseError(lines.back().number + 1, 1, "expected 'n <count>'");
  LineReader nline(lines[at++]);
  nline.expect("n");
  const int n = nline.take_int("element count");
  if (n < 0 || n > kMaxElements) nline.fail("element count must be in [0, 16]");
  nline.finish();

  std::optional<std::vector<std::string>> labels;
  if (at < lines.size() && lines[at].tokens.front().text == "labels") {
    const Line& l = lines[at++];
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      const Token& t = l.tokens[i];
      if (t.text == "{" || t.text == "}") throw ParseError(l.number, t.column, "braces are not allowed in labels");
      if (!seen.insert(t.text).second) throw ParseError(l.number, t.column, "duplicate label '" + t.text + "'");
      names.push_back(t.text);
    }
    if (static_cast<int>(names.size()) != n) {
      throw ParseError(l.number, 1, "labels lists " + std::to_string(names.size()) + " names but n is " +
                                        std::to_string(n));
    }
    labels = std::move(names);
  }

  if (at >= lines.size()) throw ParseError(lines.back().number + 1, 1, "expected 'repr <kind>'");
  LineReader rline(lines[at++]);
  rline.expect("repr");
  const std::string kind = rline.take("representation kind").text;
  rline.finish();
  const std::vector<Line> body(lines.begin() + static_cast<std::ptrdiff_t>(at), lines.end());
  const int repr_line = lines[at - 1].number;

  if (kind == "graph") return parse_graph_body(body, n, labels, repr_line);

  const std::vector<std::string> names = labels ? *labels : default_labels(n);
  const auto index = label_index(names);

  if (kind == "circuits") {
    SetFamily family;
    for (const Line& l : body) {
      LineReader r(l);
      while (!r.done()) family.push_back(r.take_set(index));
    }
    return from_circuits(names, family);
  }
  if (kind == "uniform") {
    if (body.size() != 1) throw ParseError(repr_line + 1, 1, "uniform body is a single 'r <int>' line");
    LineReader r(body.front());
    r.expect("r");
    const int rank = r.take_int("rank");
    if (rank < 0 || rank > n) r.fail("rank must be in [0, n]");
    r.finish();
    const Matroid u = uniform(rank, n);
    return Matroid(names, std::vector<int>(u.rank_table().begin(), u.rank_table().end()));
  }
  if (kind == "cyclic-flats") {
    CyclicFlatFamily z{names, {}};
    for (const Line& l : body) {
      LineReader r(l);
      r.expect("set");
      const Subset s = r.take_set(index);
      r.expect("rank");
      const int rank = r.take_int("rank");
      r.finish();
      z.entries.push_back({s, rank});
    }
    return from_cyclic_flats(z);
  }
  if (kind == "laminar") {
    LaminarCapacitySystem sys{names, {}, {}};
    for (const Line& l : body) {
      LineReader r(l);
      r.expect("cap");
      sys.family.push_back(r.take_set(index));
      sys.capacities.push_back(r.take_int("capacity"));
      r.finish();
    }
    return laminar_matroid(sys);
  }
  if (kind == "transversal") {
    NestedPresentation p{names, {}};
    for (const Line& l : body) {
      LineReader r(l);
      r.expect("block");
      p.chain.push_back(r.take_set(index));
      r.finish();
    }
    return transversal_matroid(p);
  }
  throw ParseError(repr_line, 6, "unknown representation kind '" + kind + "'");
}

namespace {

void check_label(const std::string& l) {
  for (char ch : l) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '{' || ch == '}' || ch == '#') {
      throw std::invalid_argument("label '" + l + "' cannot be written in the text format");
    }
  }
}

void write_header(std::ostringstream& out, const std::vector<std::string>& labels) {
  out << "%matroid v1\n";
  out << "n " << labels.size() << "\n";
  if (!labels.empty()) {
    out << "labels";
    for (const auto& l : labels) {
      check_label(l);
      out << ' ' << l;
    }
    out << "\n";
  }
}

std::string braces(const std::vector<std::string>& labels, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ' ';
    out += labels[static_cast<std::size_t>(e)];
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string serialize_matroid(const Matroid& m) {
  std::ostringstream out;
  write_header(out, m.labels());
  out << "repr circuits\n";
  const SetFamily cs = circuits(m);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out << (i ? " " : "") << braces(m.labels(), cs[i]);
  }
  if (!cs.empty()) out << "\n";
  return out.str();
}

std::string serialize_cyclic_flats(const CyclicFlatFamily& z) {
  std::ostringstream out;
  write_header(out, z.ground);
  out << "repr cyclic-flats\n";
  for (const auto& e : z.entries) out << "set " << braces(z.ground, e.set) << " rank " << e.rank << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lamina

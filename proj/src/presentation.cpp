#include "alexlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "alexlab/errors.hpp"

namespace alexlab {

namespace {

void push_letter(std::vector<Letter>& out, Letter l) {
  if (l.exponent == 0) return;
  if (!out.empty() && out.back().generator == l.generator) {
    out.back().exponent += l.exponent;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back(l);
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    require(l.generator >= 1, "generator indices are 1-based");
    push_letter(letters_, l);
  }
}

FreeWord FreeWord::generator(int g, std::int64_t exponent) { return FreeWord({{g, exponent}}); }

int FreeWord::max_generator() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

std::int64_t FreeWord::exponent_sum(int g) const {
  std::int64_t s = 0;
  for (const Letter& l : letters_)
    if (l.generator == g) s += l.exponent;
  return s;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

FreeWord FreeWord::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  FreeWord result;
  FreeWord base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

FreeWord FreeWord::substitute(const std::vector<FreeWord>& images) const {
  FreeWord result;
  for (const Letter& l : letters_) {
    require(l.generator <= static_cast<int>(images.size()), "substitution misses a generator");
    result = result * images[l.generator - 1].pow(l.exponent);
  }
  return result;
}

FreeWord FreeWord::shifted(int offset) const {
  FreeWord w = *this;
  for (Letter& l : w.letters_) l.generator += offset;
  require(w.letters_.empty() || w.max_generator() >= 1, "shift makes a generator index non-positive");
  return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  for (const Letter& l : b.letters_) push_letter(w.letters_, l);
  return w;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) { return u * v * u.inverse() * v.inverse(); }

FreeWord conjugate(const FreeWord& u, const FreeWord& v) { return u * v * u.inverse(); }

// ---------------------------------------------------------------------------

GroupPresentation::GroupPresentation(int num_generators, std::vector<FreeWord> relators, std::string label,
                                     std::vector<std::string> generator_names)
    : num_generators_(num_generators),
      relators_(std::move(relators)),
      label_(std::move(label)),
      names_(std::move(generator_names)) {
  require(num_generators_ >= 1, "a presentation needs at least one generator");
  for (const FreeWord& r : relators_)
    require(r.max_generator() <= num_generators_, "relator uses a generator index out of range");
  if (names_.empty()) {
    for (int i = 1; i <= num_generators_; ++i) names_.push_back("x" + std::to_string(i));
  }
  require(static_cast<int>(names_.size()) == num_generators_, "generator name count mismatch");
  std::set<std::string> seen(names_.begin(), names_.end());
  require(seen.size() == names_.size(), "generator names must be distinct");
}

bool GroupPresentation::is_commutator_relators() const {
  for (const FreeWord& r : relators_)
    for (int g = 1; g <= num_generators_; ++g)
      if (r.exponent_sum(g) != 0) return false;
  return true;
}

std::string GroupPresentation::word_to_string(const FreeWord& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += names_[l.generator - 1];
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (int i = 0; i < num_generators_; ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ", ";
    out += word_to_string(relators_[i]);
  }
  out += '>';
  return out;
}

GroupPresentation GroupPresentation::with_label(std::string label) const {
  GroupPresentation p = *this;
  p.label_ = std::move(label);
  return p;
}

// ---------------------------------------------------------------------------
// DSL parser

namespace {

struct Token {
  enum Kind { Symbol, Ident, Number, End } kind;
  std::string text;
  int line, column;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::string("<>|,[]()^=-+").find(c) != std::string::npos) {
      out.push_back({Token::Symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  GroupPresentation presentation() {
    expect("<");
    std::vector<std::string> names;
    if (peek().kind != Token::Ident) fail("empty generator set");
    while (true) {
      const Token& t = next();
      if (t.kind != Token::Ident) fail_at(t, "expected a generator name");
      if (index_.count(t.text)) fail_at(t, "duplicate generator '" + t.text + "'");
      index_[t.text] = static_cast<int>(names.size()) + 1;
      names.push_back(t.text);
      if (is("|")) break;
      expect(",");
    }
    expect("|");
    num_ = static_cast<int>(names.size());
    generic_ = true;
    for (int i = 0; i < num_; ++i)
      if (names[i] != "x" + std::to_string(i + 1)) generic_ = false;
    std::vector<FreeWord> relators;
    if (!is(">")) {
      while (true) {
        FreeWord lhs = word();
        relators.push_back(lhs);
        bool chained = false;
        while (is("=")) {
          next();
          FreeWord rhs = word();
          if (!chained) relators.pop_back();
          chained = true;
          relators.push_back(lhs * rhs.inverse());
          lhs = rhs;
        }
        if (is(">")) break;
        expect(",");
      }
    }
    expect(">");
    if (peek().kind != Token::End) fail("trailing input after '>'");
    return GroupPresentation(num_, std::move(relators), {}, std::move(names));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is(const char* sym) const { return peek().kind == Token::Symbol && peek().text == sym; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column);
  }
  void expect(const char* sym) {
    if (!is(sym)) fail(std::string("expected '") + sym + "'");
    next();
  }

  bool starts_factor() const {
    const Token& t = peek();
    if (t.kind == Token::Ident) return true;
    if (t.kind == Token::Number) return true;
    return is("[") || is("(");
  }

  FreeWord word() {
    if (!starts_factor()) fail("expected a word");
    FreeWord w;
    while (starts_factor()) w = w * factor();
    return w;
  }

  FreeWord factor() {
    FreeWord base = primary();
    while (is("^")) {
      next();
      bool negative = false;
      if (is("-") || is("+")) negative = next().text == "-";
      const Token& t = next();
      if (t.kind != Token::Number) fail_at(t, "expected an integer exponent");
      std::int64_t e;
      try {
        e = std::stoll(t.text);
      } catch (const std::exception&) {
        fail_at(t, "exponent out of range");
      }
      base = base.pow(negative ? -e : e);
    }
    return base;
  }

  FreeWord primary() {
    const Token& t = next();
    if (t.kind == Token::Ident) {
      auto it = index_.find(t.text);
      if (it != index_.end()) return FreeWord::generator(it->second);
      if (generic_ && t.text.size() > 1 && t.text[0] == 'x' &&
          std::all_of(t.text.begin() + 1, t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail_at(t, "generator index out of range: " + t.text);
      fail_at(t, "unknown generator '" + t.text + "'");
    }
    if (t.kind == Token::Number) {
      if (t.text != "1") fail_at(t, "only '1' may denote the identity");
      return FreeWord();
    }
    if (t.text == "(") {
      FreeWord w = word();
      expect(")");
      return w;
    }
    if (t.text == "[") {
      FreeWord u = word();
      expect(",");
      FreeWord v = word();
      expect("]");
      return commutator(u, v);
    }
    fail_at(t, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, int> index_;
  int num_ = 0;
  bool generic_ = false;
};

}  // namespace

GroupPresentation parse_presentation(const std::string& text) { return Parser(tokenize(text)).presentation(); }

// ---------------------------------------------------------------------------
// Graphs

Graph Graph::path(int n) {
  require(n >= 1, "path graph needs a vertex");
  Graph g{n, {}};
  for (int v = 1; v < n; ++v) g.edges.push_back({v, v + 1});
  return g;
}

Graph Graph::complete(int n) {
  require(n >= 1, "complete graph needs a vertex");
  Graph g{n, {}};
  for (int v = 1; v <= n; ++v)
    for (int w = v + 1; w <= n; ++w) g.edges.push_back({v, w});
  return g;
}

Graph Graph::cycle(int n) {
  require(n >= 3, "cycle graph needs at least 3 vertices");
  Graph g = path(n);
  g.edges.push_back({1, n});
  return g;
}

Graph Graph::star(int leaves) {
  require(leaves >= 1, "star graph needs a leaf");
  Graph g{leaves + 1, {}};
  for (int v = 2; v <= leaves + 1; ++v) g.edges.push_back({1, v});
  return g;
}

namespace {

int parse_positive(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw PreconditionError("malformed " + what + ": '" + s + "'");
  }
  if (used != s.size() || v < 0) throw PreconditionError("malformed " + what + ": '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

}  // namespace

Graph Graph::parse(const std::string& raw) {
  std::string text = trim(raw);
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string kind = trim(text.substr(0, colon));
    int n = parse_positive(trim(text.substr(colon + 1)), "graph size");
    if (kind == "path") return path(n);
    if (kind == "complete") return complete(n);
    if (kind == "cycle") return cycle(n);
    if (kind == "star") return star(n);
    throw PreconditionError("malformed graph: unknown family '" + kind + "'");
  }
  auto semi = text.find(';');
  if (semi == std::string::npos) throw PreconditionError("malformed graph: expected 'n;u-v,...' or 'family:n'");
  Graph g;
  g.vertices = parse_positive(trim(text.substr(0, semi)), "vertex count");
  require(g.vertices >= 1, "malformed graph: no vertices");
  std::set<std::pair<int, int>> edges;
  std::string rest = trim(text.substr(semi + 1));
  if (!rest.empty()) {
    for (const std::string& e : split(rest, ',')) {
      auto dash = e.find('-');
      if (dash == std::string::npos) throw PreconditionError("malformed graph edge '" + e + "'");
      int u = parse_positive(trim(e.substr(0, dash)), "vertex");
      int v = parse_positive(trim(e.substr(dash + 1)), "vertex");
      if (u < 1 || v < 1 || u > g.vertices || v > g.vertices)
        throw PreconditionError("malformed graph: vertex out of range in '" + e + "'");
      if (u == v) throw PreconditionError("malformed graph: loop at vertex " + std::to_string(u));
      edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

bool Graph::is_tree() const {
  if (vertices < 1 || static_cast<int>(edges.size()) != vertices - 1) return false;
  std::vector<int> parent(vertices + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::string Graph::to_string() const {
  std::string out = std::to_string(vertices) + ";";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return out;
}

GroupPresentation raag(const Graph& graph) {
  require(graph.vertices >= 1, "raag needs a vertex");
  std::vector<FreeWord> rels;
  for (auto [u, v] : graph.edges) rels.push_back(commutator(FreeWord::generator(u), FreeWord::generator(v)));
  return GroupPresentation(graph.vertices, std::move(rels), "raag(" + graph.to_string() + ")");
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

FreeWord x(int g, std::int64_t e = 1) { return FreeWord::generator(g, e); }

struct BuiltinSpec {
  std::string name;
  std::string args;
  bool has_args = false;
};

BuiltinSpec split_spec(const std::string& raw) {
  std::string s = trim(raw);
  BuiltinSpec b;
  auto open = s.find('(');
  if (open == std::string::npos) {
    b.name = s;
    return b;
  }
  if (s.back() != ')') throw PreconditionError("malformed builtin '" + s + "'");
  b.name = trim(s.substr(0, open));
  b.args = trim(s.substr(open + 1, s.size() - open - 2));
  b.has_args = true;
  return b;
}

std::vector<int> int_args(const BuiltinSpec& b, std::size_t count) {
  if (!b.has_args) throw PreconditionError("builtin " + b.name + " needs " + std::to_string(count) + " parameter(s)");
  std::vector<int> out;
  for (const std::string& a : split(b.args, ',')) out.push_back(parse_positive(a, "builtin parameter"));
  if (out.size() != count)
    throw PreconditionError("builtin " + b.name + " takes " + std::to_string(count) + " parameter(s)");
  return out;
}

void no_args(const BuiltinSpec& b) {
  if (b.has_args && !b.args.empty()) throw PreconditionError("builtin " + b.name + " takes no parameters");
}

// Standard Artin generators A_ij of the pure braid group with the classical
// conjugation relations.
GroupPresentation pure_braid(int n) {
  std::map<std::pair<int, int>, int> idx;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      idx[{i, j}] = static_cast<int>(names.size()) + 1;
      names.push_back("a" + std::to_string(i) + std::to_string(j));
    }
  auto A = [&](int i, int j) { return x(idx.at({i, j})); };
  std::vector<FreeWord> rels;
  for (auto [rs, g] : idx) {
    auto [r, s] = rs;
    for (auto [ij, h] : idx) {
      auto [i, j] = ij;
      if (g == h) continue;
      FreeWord lhs = A(r, s).inverse() * A(i, j) * A(r, s);
      FreeWord rhs;
      if ((r < s && s < i && i < j) || (i < r && r < s && s < j)) {
        rhs = A(i, j);
      } else if (r < s && s == i && i < j) {
        rhs = conjugate(A(r, j), A(i, j));
      } else if (r == i && s < j) {
        rhs = conjugate(A(r, j) * A(s, j), A(i, j));
      } else if (r < i && i < s && s < j) {
        FreeWord c = commutator(A(r, j), A(s, j));
        rhs = conjugate(c, A(i, j));
      } else {
        continue;
      }
      rels.push_back(lhs * rhs.inverse());
    }
  }
  const int count = static_cast<int>(names.size());
  return GroupPresentation(count, std::move(rels), "pure_braid(" + std::to_string(n) + ")", std::move(names));
}

}  // namespace

GroupPresentation builtin_group(const std::string& spec) {
  BuiltinSpec b = split_spec(spec);
  const std::string& n = b.name;
  if (n == "free") {
    int k = int_args(b, 1)[0];
    require(k >= 1, "free(n) needs n >= 1");
    return GroupPresentation(k, {}, "free(" + std::to_string(k) + ")");
  }
  if (n == "trefoil") {
    no_args(b);
    return GroupPresentation(2, {x(1) * x(2) * x(1) * (x(2) * x(1) * x(2)).inverse()}, "trefoil");
  }
  if (n == "torus_knot") {
    auto a = int_args(b, 2);
    require(a[0] >= 2 && a[1] >= 2 && std::gcd(a[0], a[1]) == 1, "torus_knot(p,q) needs coprime p,q >= 2");
    return GroupPresentation(2, {x(1, a[0]) * x(2, -a[1])},
                             "torus_knot(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")", {"a", "b"});
  }
  if (n == "dihedral_inf") {
    no_args(b);
    return GroupPresentation(2, {x(1, 2), x(2, 2)}, "dihedral_inf");
  }
  if (n == "heisenberg") {
    no_args(b);
    return GroupPresentation(3, {commutator(x(1), x(2)) * x(3, -1), commutator(x(1), x(3)), commutator(x(2), x(3))},
                             "heisenberg", {"x", "y", "z"});
  }
  if (n == "heisenberg_quotient") {
    no_args(b);
    FreeWord c = commutator(x(1), x(2));
    return GroupPresentation(2, {commutator(x(1), c), commutator(x(2), c)}, "heisenberg_quotient", {"x", "y"});
  }
  if (n == "baumslag_solitar") {
    int k = int_args(b, 1)[0];
    return GroupPresentation(2, {x(2) * x(1) * x(2, -1) * x(1, -k)}, "baumslag_solitar(" + std::to_string(k) + ")",
                             {"a", "t"});
  }
  if (n == "raag") {
    if (!b.has_args) throw PreconditionError("raag needs a graph parameter");
    return raag(Graph::parse(b.args));
  }
  if (n == "klein_bottle") {
    no_args(b);
    return GroupPresentation(2, {x(1) * x(2) * x(1, -1) * x(2)}, "klein_bottle", {"t", "a"});
  }
  if (n == "commutator_power") {
    int k = int_args(b, 1)[0];
    require(k >= 1, "commutator_power(n) needs n >= 1");
    return GroupPresentation(2, {commutator(x(1), x(2)).pow(k)}, "commutator_power(" + std::to_string(k) + ")");
  }
  if (n == "pure_braid") {
    int k = int_args(b, 1)[0];
    require(k >= 2, "pure_braid(n) needs n >= 2");
    require(k <= 4, "pure_braid(n) is limited to n <= 4");
    return pure_braid(k);
  }
  throw PreconditionError("unknown builtin '" + n + "'");
}

FormalityFlags builtin_formality(const std::string& spec) {
  BuiltinSpec b = split_spec(spec);
  if (b.name == "free" || b.name == "raag") return {true, true};
  return {};
}

// ---------------------------------------------------------------------------

GroupPresentation semidirect_presentation(const SplitExtensionData& ext) {
  const int k = ext.kernel.num_generators();
  const int s = ext.quotient.num_generators();
  require(static_cast<int>(ext.action.size()) == s, "action list length differs from the quotient generator count");
  std::vector<FreeWord> rels = ext.kernel.relators();
  for (const FreeWord& r : ext.quotient.relators()) rels.push_back(r.shifted(k));
  for (int j = 0; j < s; ++j) {
    require(static_cast<int>(ext.action[j].size()) == k, "action list length differs from the kernel generator count");
    for (int i = 0; i < k; ++i) {
      const FreeWord& img = ext.action[j][i];
      require(img.max_generator() <= k, "action image uses a generator outside the kernel");
      rels.push_back(conjugate(x(k + j + 1), x(i + 1)) * img.inverse());
    }
  }
  std::vector<std::string> names = ext.kernel.generator_names();
  std::set<std::string> used(names.begin(), names.end());
  for (std::string q : ext.quotient.generator_names()) {
    while (used.count(q)) q += "_q";
    used.insert(q);
    names.push_back(q);
  }
  std::string label = "(" + ext.kernel.label() + ")x|(" + ext.quotient.label() + ")";
  return GroupPresentation(k + s, std::move(rels), label, std::move(names));
}

}  // namespace alexlab

#include "twr/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace twr {

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) {
  fail(Err::Syntax, "line " + std::to_string(line) + ": " + msg);
}

// line-oriented tokenizer: names, punctuation, '=' and '!' tokens
struct Lexer {
  std::string s;
  size_t pos = 0;
  int line;

  explicit Lexer(std::string str, int ln) : s(std::move(str)), line(ln) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool try_punct(const std::string& p) {
    skip_ws();
    if (s.compare(pos, p.size(), p) == 0) {
      pos += p.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& p) {
    if (!try_punct(p)) syntax(line, "expected '" + p + "'");
  }
  static bool name_char(char c) {
    return std::isalnum((unsigned char)c) || c == '_' || c == '\'' || c == '*' || c == '$';
  }
  std::string name() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && name_char(s[pos])) pos++;
    if (pos == start) syntax(line, "expected a name");
    return s.substr(start, pos - start);
  }
};

std::vector<std::string> logical_lines(const std::string& text, std::vector<int>* linenos) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ln++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
    if (linenos) linenos->push_back(ln);
  }
  return out;
}

Atom parse_atom(Lexer& lx, bool constants) {
  Atom a;
  a.pred = lx.name();
  lx.expect("(");
  if (!lx.try_punct(")")) {
    do {
      std::string n = lx.name();
      a.args.push_back(constants ? mkconst(n) : mkvar(n));
    } while (lx.try_punct(","));
    lx.expect(")");
  }
  return a;
}

std::string term_str(const Term& t) { return t.name; }

std::string atom_str(const Atom& a) {
  std::string s = a.pred + "(";
  for (size_t i = 0; i < a.args.size(); i++) {
    if (i) s += ",";
    s += term_str(a.args[i]);
  }
  return s + ")";
}

}  // namespace

// ------------------------------------------------------------------ ontology

Ontology parse_ontology(const std::string& text) {
  Ontology t;
  std::vector<int> lns;
  auto lines = logical_lines(text, &lns);
  for (size_t i = 0; i < lines.size(); i++) {
    Lexer lx(lines[i], lns[i]);
    TGD g;
    g.body = parse_atom(lx, false);
    lx.expect("->");
    if (lx.try_punct("exists")) {
      g.head_existential = lx.name();
      lx.expect(".");
    }
    if (lx.eof()) syntax(lns[i], "missing head atoms");
    do {
      g.head.push_back(parse_atom(lx, false));
    } while (lx.try_punct(","));
    if (!lx.eof()) syntax(lns[i], "trailing input");
    std::sort(g.head.begin(), g.head.end());
    g.head.erase(std::unique(g.head.begin(), g.head.end()), g.head.end());
    t.tgds.push_back(std::move(g));
  }
  validate(t);
  return t;
}

std::string print(const Ontology& t) {
  std::string out;
  for (const auto& g : t.tgds) {
    out += atom_str(g.body) + " -> ";
    if (g.head_existential) out += "exists " + *g.head_existential + ". ";
    for (size_t i = 0; i < g.head.size(); i++) {
      if (i) out += ", ";
      out += atom_str(g.head[i]);
    }
    out += "\n";
  }
  return out;
}

// ------------------------------------------------------------------ query

ConjunctiveQuery parse_query(const std::string& text) {
  auto lines = logical_lines(text, nullptr);
  std::string joined;
  for (const auto& l : lines) joined += l + " ";
  Lexer lx(joined, 1);
  ConjunctiveQuery q;
  lx.name();  // query name, ignored
  lx.expect("(");
  if (!lx.try_punct(")")) {
    do {
      q.answer_vars.push_back(lx.name());
    } while (lx.try_punct(","));
    lx.expect(")");
  }
  lx.expect("<-");
  do {
    q.atoms.push_back(parse_atom(lx, false));
  } while (lx.try_punct(","));
  if (!lx.eof()) syntax(1, "trailing input");
  q.normalize();
  validate(q);
  return q;
}

std::string print(const ConjunctiveQuery& q) {
  ConjunctiveQuery c = q;
  c.normalize();
  std::string out = "q(";
  for (size_t i = 0; i < c.answer_vars.size(); i++) {
    if (i) out += ",";
    out += c.answer_vars[i];
  }
  out += ") <- ";
  for (size_t i = 0; i < c.atoms.size(); i++) {
    if (i) out += ", ";
    out += atom_str(c.atoms[i]);
  }
  return out + "\n";
}

// ------------------------------------------------------------------ data

DataInstance parse_data(const std::string& text) {
  DataInstance a;
  std::vector<int> lns;
  auto lines = logical_lines(text, &lns);
  for (size_t i = 0; i < lines.size(); i++) {
    Lexer lx(lines[i], lns[i]);
    a.atoms.push_back(parse_atom(lx, true));
    if (!lx.eof()) syntax(lns[i], "trailing input");
  }
  a.normalize();
  validate(a);
  return a;
}

std::string print(const DataInstance& a) {
  DataInstance c = a;
  c.normalize();
  std::string out;
  for (const auto& at : c.atoms) out += atom_str(at) + "\n";
  return out;
}

// ------------------------------------------------------------------ hypergraph

Hypergraph parse_hypergraph(const std::string& text) {
  Hypergraph h;
  std::vector<int> lns;
  auto lines = logical_lines(text, &lns);
  // two passes: vertices first (edges may reference them), then edges,
  // then incidence references resolved
  struct PendingInc {
    int v;
    std::string i1, i2;
    int line;
  };
  std::vector<PendingInc> pending;
  for (size_t i = 0; i < lines.size(); i++) {
    Lexer lx(lines[i], lns[i]);
    std::string kw = lx.name();
    if (kw == "vertex") {
      std::string name = lx.name();
      Label l = lblv(name);
      std::string e1, e2;
      while (!lx.eof()) {
        std::string key = lx.name();
        lx.expect("=");
        if (key == "label") {
          if (lx.try_punct("!")) {
            l = lblnv(lx.name());
          } else {
            std::string v = lx.name();
            if (v == "0")
              l = lbl0();
            else if (v == "1")
              l = lbl1();
            else
              l = lblv(v);
          }
        } else if (key == "i1") {
          e1 = lx.name();
        } else if (key == "i2") {
          e2 = lx.name();
        } else {
          syntax(lns[i], "unknown vertex attribute " + key);
        }
      }
      int v = h.add_vertex(name, l);
      if (!e1.empty() || !e2.empty()) pending.push_back({v, e1, e2, lns[i]});
    } else if (kw == "edge") {
      std::string name = lx.name();
      lx.expect("=");
      std::vector<int> vs;
      while (!lx.eof()) {
        std::string vn = lx.name();
        int v = h.vertex_id(vn);
        if (v < 0) syntax(lns[i], "unknown vertex " + vn);
        vs.push_back(v);
      }
      h.add_edge(name, std::move(vs));
    } else {
      syntax(lns[i], "expected 'vertex' or 'edge'");
    }
  }
  for (const auto& p : pending) {
    auto resolve = [&](const std::string& en) {
      if (en.empty()) return -1;
      int e = h.edge_id(en);
      if (e < 0) fail(Err::UnknownVertex, "unknown edge " + en + " in incidence map");
      return e;
    };
    h.vertices[p.v].i1 = resolve(p.i1);
    h.vertices[p.v].i2 = resolve(p.i2);
    if (h.vertices[p.v].i1 >= 0 && h.vertices[p.v].i1 == h.vertices[p.v].i2)
      fail(Err::DegreeMapInconsistent, "i1(v)=i2(v) for vertex " + h.vertices[p.v].name);
    for (int e : {h.vertices[p.v].i1, h.vertices[p.v].i2})
      if (e >= 0 && !std::binary_search(h.edges[e].begin(), h.edges[e].end(), p.v))
        fail(Err::DegreeMapInconsistent,
             "vertex " + h.vertices[p.v].name + " not in incidence edge");
  }
  return h;
}

std::string print(const Hypergraph& h) {
  std::string out;
  for (const auto& v : h.vertices) {
    out += "vertex " + v.name;
    switch (v.label.kind) {
      case Label::Kind::Zero: out += " label=0"; break;
      case Label::Kind::One: out += " label=1"; break;
      case Label::Kind::Var: out += " label=" + v.label.var; break;
      case Label::Kind::NegVar: out += " label=!" + v.label.var; break;
    }
    if (v.i1 >= 0) out += " i1=" + h.edge_names[v.i1];
    if (v.i2 >= 0) out += " i2=" + h.edge_names[v.i2];
    out += "\n";
  }
  for (size_t e = 0; e < h.edges.size(); e++) {
    out += "edge " + h.edge_names[e] + " =";
    for (int v : h.edges[e]) out += " " + h.vertices[v].name;
    out += "\n";
  }
  return out;
}

// ------------------------------------------------------------------ formulas

namespace {

Formula parse_sexpr(Lexer& lx);

std::vector<std::string> parse_varlist(Lexer& lx) {
  lx.expect("(");
  std::vector<std::string> vs;
  while (!lx.try_punct(")")) vs.push_back(lx.name());
  return vs;
}

Formula parse_sexpr(Lexer& lx) {
  lx.expect("(");
  std::string head = lx.name();
  Formula f;
  if (head == "true") {
    f = f_true();
  } else if (head == "false") {
    f = f_false();
  } else if (head == "atom") {
    Atom a;
    a.pred = lx.name();
    while (lx.peek() != ')') a.args.push_back(mkvar(lx.name()));
    f = f_atom(std::move(a));
  } else if (head == "eq") {
    std::string l = lx.name(), r = lx.name();
    f = f_eq(l, r);
  } else if (head == "and" || head == "or") {
    std::vector<Formula> kids;
    while (lx.peek() != ')') kids.push_back(parse_sexpr(lx));
    // preserve structure exactly as written
    f.kind = head == "and" ? Formula::Kind::And : Formula::Kind::Or;
    f.kids = std::move(kids);
  } else if (head == "not") {
    f = f_not(parse_sexpr(lx));
  } else if (head == "exists" || head == "forall") {
    auto vs = parse_varlist(lx);
    Formula body = parse_sexpr(lx);
    f.kind = head == "exists" ? Formula::Kind::Exists : Formula::Kind::Forall;
    f.bound = std::move(vs);
    f.kids.push_back(std::move(body));
  } else {
    syntax(lx.line, "unknown formula head " + head);
  }
  lx.expect(")");
  return f;
}

void print_formula_rec(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Formula::Kind::True: out += "(true)"; return;
    case Formula::Kind::False: out += "(false)"; return;
    case Formula::Kind::Atom:
      out += "(atom " + f.atom.pred;
      for (const auto& t : f.atom.args) out += " " + t.name;
      out += ")";
      return;
    case Formula::Kind::Eq: out += "(eq " + f.lhs + " " + f.rhs + ")"; return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out += f.kind == Formula::Kind::And ? "(and" : "(or";
      for (const auto& k : f.kids) {
        out += " ";
        print_formula_rec(k, out);
      }
      out += ")";
      return;
    case Formula::Kind::Not:
      out += "(not ";
      print_formula_rec(f.kids[0], out);
      out += ")";
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      out += f.kind == Formula::Kind::Exists ? "(exists (" : "(forall (";
      for (size_t i = 0; i < f.bound.size(); i++) {
        if (i) out += " ";
        out += f.bound[i];
      }
      out += ") ";
      print_formula_rec(f.kids[0], out);
      out += ")";
      return;
    }
  }
}

}  // namespace

Formula parse_formula(const std::string& text) {
  auto lines = logical_lines(text, nullptr);
  std::string joined;
  for (const auto& l : lines) joined += l + " ";
  Lexer lx(joined, 1);
  Formula f = parse_sexpr(lx);
  if (!lx.eof()) syntax(1, "trailing input");
  return f;
}

std::string print(const Formula& f) {
  std::string out;
  print_formula_rec(f, out);
  out += "\n";
  return out;
}

// ------------------------------------------------------------------ ndl

NDLProgram parse_ndl(const std::string& text) {
  NDLProgram p;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ln++;
    if (raw.rfind("# goal:", 0) == 0) {
      std::string g = raw.substr(7);
      size_t a = g.find_first_not_of(" \t\r");
      size_t b = g.find_last_not_of(" \t\r");
      if (a != std::string::npos) p.goal = g.substr(a, b - a + 1);
      continue;
    }
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    Lexer lx(raw, ln);
    NDLClause c;
    c.head = parse_atom(lx, false);
    lx.expect(":-");
    if (!lx.try_punct(".")) {
      do {
        // lookahead: NAME '=' NAME is an equality, NAME '(' ... an atom
        size_t save = lx.pos;
        std::string n = lx.name();
        if (lx.try_punct("=")) {
          NDLBodyAtom b;
          b.is_eq = true;
          b.lhs = n;
          b.rhs = lx.name();
          c.body.push_back(std::move(b));
        } else {
          lx.pos = save;
          NDLBodyAtom b;
          b.atom = parse_atom(lx, false);
          c.body.push_back(std::move(b));
        }
      } while (lx.try_punct(","));
      lx.expect(".");
    }
    if (!lx.eof()) syntax(ln, "trailing input");
    p.clauses.push_back(std::move(c));
  }
  return p;
}

std::string print(const NDLProgram& p) {
  std::string out = "# goal: " + p.goal + "\n";
  for (const auto& c : p.clauses) {
    out += atom_str(c.head) + " :- ";
    for (size_t i = 0; i < c.body.size(); i++) {
      if (i) out += ", ";
      const auto& b = c.body[i];
      out += b.is_eq ? b.lhs + " = " + b.rhs : atom_str(b.atom);
    }
    out += ".\n";
  }
  return out;
}

// ------------------------------------------------------------------ files

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::Syntax, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::Syntax, "cannot write " + path);
  out << text;
}

}  // namespace twr

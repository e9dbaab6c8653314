#include <gsm/dsl.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gsm::dsl {

std::string kind_name(const DeclBody& body) {
  static const char* const names[] = {"groupoid", "subgroupoid", "algebra", "action",
                                      "biset",    "module",      "morphism"};
  return names[body.index()];
}

std::string Task::arg(const std::string& key) const {
  for (const auto& [k, v] : args)
    if (k == key) return v;
  return "";
}

const Decl* Document::find(const std::string& name) const {
  for (const Decl& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = {"check",       "orbits",     "smash",    "duality",
                                                 "coset-duality", "ig-duality", "weakhopf", "morita"};
  return names;
}

namespace {

enum class Tok { Ident, String, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Pos pos;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const Pos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), pos});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({Tok::Number, src.substr(i, j - i), pos});
      advance(j - i);
    } else if (c == '"') {
      std::string text;
      advance(1);
      while (true) {
        if (i >= src.size() || src[i] == '\n') throw ParseError(ErrorCode::Syntax, pos, "unterminated string");
        if (src[i] == '"') break;
        if (src[i] == '\\' && i + 1 < src.size()) advance(1);
        text += src[i];
        advance(1);
      }
      advance(1);
      out.push_back({Tok::String, text, pos});
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Punct, "->", pos});
      advance(2);
    } else if (std::string_view("{}();:,=*+-|@[]").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), pos});
      advance(1);
    } else {
      throw ParseError(ErrorCode::Syntax, pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", Pos{line, col}});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "\"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind != Tok::Ident) expected("a declaration or task");
      if (t.text == "task") {
        doc.tasks.push_back(task());
        continue;
      }
      Decl d;
      d.pos = t.pos;
      const std::string kw = take().text;
      if (kw == "groupoid") {
        d.name = name();
        d.body = groupoid();
      } else if (kw == "subgroupoid") {
        d.name = name();
        d.body = subgroupoid();
      } else if (kw == "algebra") {
        d.name = name();
        d.body = algebra();
      } else if (kw == "action") {
        d.name = name();
        d.body = action();
      } else if (kw == "biset") {
        d.name = name();
        d.body = biset();
      } else if (kw == "module") {
        d.name = name();
        d.body = module();
      } else if (kw == "morphism") {
        d.name = name();
        d.body = morphism();
      } else {
        back();
        expected("a declaration keyword");
      }
      doc.decls.push_back(std::move(d));
    }
    return doc;
  }

 private:
  std::vector<Token> toks_;
  size_t at_ = 0;

  const Token& peek(size_t ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[std::min(at_++, toks_.size() - 1)]; }
  void back() { --at_; }

  [[noreturn]] void expected(const std::string& what) const {
    throw ParseError(ErrorCode::Syntax, peek().pos, "expected " + what + ", found " + describe(peek()));
  }

  bool is(const char* punct) const { return peek().kind == Tok::Punct && peek().text == punct; }
  bool is_kw(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
  bool accept(const char* punct) {
    if (!is(punct)) return false;
    ++at_;
    return true;
  }
  void expect(const char* punct) {
    if (!accept(punct)) expected(std::string("'") + punct + "'");
  }
  void expect_kw(const char* kw) {
    if (!is_kw(kw)) expected(std::string("'") + kw + "'");
    ++at_;
  }
  bool is_name(bool allow_number = false) const {
    return peek().kind == Tok::Ident || peek().kind == Tok::String ||
           (allow_number && peek().kind == Tok::Number && peek().text.find('/') == std::string::npos);
  }
  std::string name(bool allow_number = false) {
    if (!is_name(allow_number)) expected("a name");
    return take().text;
  }
  std::vector<std::string> names_until_semicolon(bool allow_number = false) {
    std::vector<std::string> out;
    while (!is(";")) out.push_back(name(allow_number));
    expect(";");
    return out;
  }
  Scalar number() {
    const bool negative = accept("-");
    if (peek().kind != Tok::Number) expected("a number");
    Scalar q = parse_rational(take().text);
    return negative ? Scalar(-q) : q;
  }

  LinComb lincomb() {
    LinComb out;
    if (peek().kind == Tok::Number && peek(1).kind == Tok::Punct && peek(1).text == ";") {
      if (parse_rational(peek().text) != 0) expected("a basis name after the coefficient");
      take();
      return out;
    }
    bool negative = accept("-");
    while (true) {
      Scalar c = 1;
      if (peek().kind == Tok::Number) c = parse_rational(take().text);
      out.push_back({negative ? Scalar(-c) : c, name()});
      if (accept("+")) negative = false;
      else if (accept("-")) negative = true;
      else break;
    }
    return out;
  }

  GroupoidDecl groupoid() {
    GroupoidDecl g;
    if (accept("=")) {
      const Token& kw = peek();
      if (kw.kind != Tok::Ident) expected("'pair', 'group', 'cyclic' or 'union'");
      const std::string k = take().text;
      expect("(");
      if (k == "pair") {
        g.kind = GroupoidDecl::Kind::Pair;
        g.objects.push_back(name());
        while (accept(",")) g.objects.push_back(name());
      } else if (k == "group") {
        g.kind = GroupoidDecl::Kind::Group;
        do {
          std::vector<std::string> row;
          while (is_name(true)) row.push_back(name(true));
          if (row.empty()) expected("a group element");
          g.table.push_back(std::move(row));
        } while (accept("|"));
      } else if (k == "cyclic") {
        g.kind = GroupoidDecl::Kind::Cyclic;
        if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos) expected("an integer");
        g.order = std::stol(take().text);
      } else if (k == "union") {
        g.kind = GroupoidDecl::Kind::Union;
        g.left = name();
        expect(",");
        g.right = name();
      } else {
        back();
        back();
        expected("'pair', 'group', 'cyclic' or 'union'");
      }
      expect(")");
      expect(";");
      return g;
    }
    expect("{");
    while (!accept("}")) {
      if (is_kw("objects")) {
        take();
        for (std::string& o : names_until_semicolon()) g.objects.push_back(std::move(o));
      } else if (is_kw("mor")) {
        take();
        GroupoidDecl::Mor m;
        m.name = name();
        expect(":");
        m.from = name();
        expect("->");
        m.to = name();
        expect(";");
        g.mors.push_back(std::move(m));
      } else if (is_kw("comp")) {
        take();
        GroupoidDecl::Comp c;
        c.g = name();
        c.h = name();
        expect("=");
        c.k = name();
        expect(";");
        g.comps.push_back(std::move(c));
      } else {
        expected("'objects', 'mor', 'comp' or '}'");
      }
    }
    return g;
  }

  SubgroupoidDecl subgroupoid() {
    SubgroupoidDecl s;
    if (accept("=")) {
      if (is_kw("identities") || is_kw("whole")) {
        s.kind = take().text == "identities" ? SubgroupoidDecl::Kind::Identities : SubgroupoidDecl::Kind::Whole;
        expect("(");
        s.parent = name();
      } else if (is_kw("isotropy")) {
        take();
        s.kind = SubgroupoidDecl::Kind::Isotropy;
        expect("(");
        s.parent = name();
        expect(",");
        s.object = name();
      } else {
        expected("'identities', 'whole' or 'isotropy'");
      }
      expect(")");
      expect(";");
      return s;
    }
    expect_kw("of");
    s.parent = name();
    expect("{");
    expect_kw("members");
    s.members = names_until_semicolon();
    expect("}");
    return s;
  }

  AlgebraDecl algebra() {
    AlgebraDecl a;
    if (accept("=")) {
      expect_kw("groupoid_algebra");
      expect("(");
      a.groupoid = name();
      a.groupoid_algebra = true;
      expect(")");
      expect(";");
      return a;
    }
    expect_kw("over");
    a.groupoid = name();
    expect("{");
    while (!accept("}")) {
      if (is_kw("basis")) {
        take();
        while (!accept(";")) {
          AlgebraDecl::Basis b;
          b.name = name();
          expect("@");
          b.degree = name();
          a.basis.push_back(std::move(b));
        }
      } else if (is_kw("mult")) {
        take();
        AlgebraDecl::Mult m;
        m.left = name();
        expect("*");
        m.right = name();
        expect("=");
        m.value = lincomb();
        expect(";");
        a.mults.push_back(std::move(m));
      } else if (is_kw("unit")) {
        take();
        a.has_unit = true;
        a.unit = lincomb();
        expect(";");
      } else {
        expected("'basis', 'mult', 'unit' or '}'");
      }
    }
    return a;
  }

  ActionDecl action() {
    ActionDecl a;
    if (accept("=")) {
      if (is_kw("left")) {
        take();
        a.kind = ActionDecl::Kind::Left;
        expect("(");
        a.groupoid = name();
      } else if (is_kw("right")) {
        take();
        a.kind = ActionDecl::Kind::Right;
        expect("(");
        a.sub = name();
      } else {
        expected("'left' or 'right'");
      }
      expect(")");
      expect(";");
      return a;
    }
    expect_kw("on");
    a.groupoid = name();
    expect("{");
    while (!accept("}")) {
      if (is_kw("points")) {
        take();
        for (std::string& p : names_until_semicolon(true)) a.points.push_back(std::move(p));
      } else if (is_kw("fiber")) {
        take();
        ActionDecl::Fiber f;
        f.object = name();
        expect(":");
        f.points = names_until_semicolon(true);
        a.fibers.push_back(std::move(f));
      } else if (is_kw("map")) {
        take();
        ActionDecl::Map m;
        m.morphism = name();
        expect(":");
        do {
          std::string from = name(true);
          expect("->");
          m.pairs.emplace_back(std::move(from), name(true));
        } while (accept(","));
        expect(";");
        a.maps.push_back(std::move(m));
      } else {
        expected("'points', 'fiber', 'map' or '}'");
      }
    }
    return a;
  }

  BisetDecl biset() {
    BisetDecl b;
    if (accept("=")) {
      expect_kw("translation");
      b.kind = BisetDecl::Kind::Translation;
      expect("(");
      b.groupoid = name();
      if (accept(",")) b.sub = name();
      expect(")");
      expect(";");
      return b;
    }
    expect("{");
    expect_kw("gset");
    b.gset = name();
    expect(";");
    expect_kw("kset");
    b.kset = name();
    expect(";");
    expect("}");
    return b;
  }

  ModuleDecl module() {
    ModuleDecl m;
    expect_kw("over");
    m.algebra = name();
    expect_kw("graded");
    m.action = name();
    if (accept("=")) {
      expect_kw("regular");
      expect(";");
      m.regular = true;
      return m;
    }
    expect("{");
    while (!accept("}")) {
      if (is_kw("deg")) {
        take();
        for (std::string& p : names_until_semicolon(true)) m.deg.push_back(std::move(p));
      } else if (is_kw("act")) {
        take();
        ModuleDecl::Act act;
        act.basis = name();
        expect("=");
        expect("[");
        if (!is("]")) {
          do {
            std::vector<Scalar> row;
            while (is("-") || peek().kind == Tok::Number) row.push_back(number());
            if (row.empty()) expected("a matrix entry");
            act.rows.push_back(std::move(row));
          } while (accept("|"));
        }
        expect("]");
        expect(";");
        m.acts.push_back(std::move(act));
      } else {
        expected("'deg', 'act' or '}'");
      }
    }
    return m;
  }

  MorphismDecl morphism() {
    MorphismDecl m;
    expect(":");
    m.source = name();
    expect("->");
    m.target = name();
    expect("{");
    while (!accept("}")) {
      std::string from = name(true);
      expect("->");
      m.pairs.emplace_back(std::move(from), name(true));
      expect(";");
    }
    return m;
  }

  Task task() {
    Task t;
    t.pos = take().pos;
    const Pos name_pos = peek().pos;
    if (peek().kind != Tok::Ident) expected("a task name");
    t.name = take().text;
    while (is("-") && peek(1).kind == Tok::Ident) {
      take();
      t.name += "-" + take().text;
    }
    const auto& known = task_names();
    if (std::find(known.begin(), known.end(), t.name) == known.end())
      throw ParseError(ErrorCode::Syntax, name_pos, "expected a task name, found unknown task '" + t.name + "'");
    while (!accept(";")) {
      if (peek().kind != Tok::Ident) expected("a task argument or ';'");
      std::string key = take().text;
      expect("=");
      if (!is_name(true)) expected("an argument value");
      t.args.emplace_back(std::move(key), take().text);
    }
    t.pos = name_pos;
    return t;
  }
};

// ---------------------------------------------------------------------------
// Name resolution

const std::map<std::string, std::map<std::string, std::string>>& task_keys() {
  // key -> required declaration kind ("" for free-form values)
  static const std::map<std::string, std::map<std::string, std::string>> keys = {
      {"check", {{"target", "*"}}},
      {"orbits", {{"action", "action"}, {"biset", "biset"}}},
      {"smash", {{"algebra", "algebra"}, {"action", "action"}, {"morphism", "morphism"}}},
      {"duality", {{"biset", "biset"}, {"algebra", "algebra"}}},
      {"coset-duality", {{"sub", "subgroupoid"}, {"algebra", "algebra"}}},
      {"ig-duality", {{"action", "action"}, {"algebra", "algebra"}}},
      {"weakhopf", {{"algebra", "algebra"}}},
      {"morita", {{"algebra", "algebra"}, {"action", "action"}, {"point", ""}, {"module", "module"}, {"random", ""}}},
  };
  return keys;
}

void check_unique(const std::vector<std::string>& names, Pos pos, const std::string& what) {
  std::set<std::string> seen;
  for (const std::string& n : names)
    if (!seen.insert(n).second)
      throw ParseError(ErrorCode::DuplicateName, pos, "duplicate " + what + " '" + n + "'");
}

void resolve(const Document& doc) {
  std::map<std::string, std::string> kinds;
  auto ref = [&](const std::string& name, const std::string& kind, Pos pos) {
    auto it = kinds.find(name);
    if (it == kinds.end()) throw ParseError(ErrorCode::UnresolvedName, pos, "unknown name '" + name + "'");
    if (kind != "*" && it->second != kind)
      throw ParseError(ErrorCode::UnresolvedName, pos, "'" + name + "' is a " + it->second + ", expected a " + kind);
  };

  for (const Decl& d : doc.decls) {
    const Pos p = d.pos;
    if (const auto* g = std::get_if<GroupoidDecl>(&d.body)) {
      if (g->kind == GroupoidDecl::Kind::Union) {
        ref(g->left, "groupoid", p);
        ref(g->right, "groupoid", p);
      }
      check_unique(g->objects, p, "object");
      std::vector<std::string> mors;
      for (const std::string& o : g->objects) mors.push_back("id_" + o);
      for (const auto& m : g->mors) mors.push_back(m.name);
      check_unique(mors, p, "morphism");
      if (g->kind == GroupoidDecl::Kind::Group) check_unique(g->table.front(), p, "group element");
    } else if (const auto* s = std::get_if<SubgroupoidDecl>(&d.body)) {
      ref(s->parent, "groupoid", p);
    } else if (const auto* a = std::get_if<AlgebraDecl>(&d.body)) {
      ref(a->groupoid, "groupoid", p);
      std::vector<std::string> basis;
      for (const auto& b : a->basis) basis.push_back(b.name);
      check_unique(basis, p, "basis element");
    } else if (const auto* ac = std::get_if<ActionDecl>(&d.body)) {
      if (ac->kind == ActionDecl::Kind::Right) ref(ac->sub, "subgroupoid", p);
      else ref(ac->groupoid, "groupoid", p);
      check_unique(ac->points, p, "point");
    } else if (const auto* b = std::get_if<BisetDecl>(&d.body)) {
      if (b->kind == BisetDecl::Kind::Explicit) {
        ref(b->gset, "action", p);
        ref(b->kset, "action", p);
      } else {
        ref(b->groupoid, "groupoid", p);
        if (!b->sub.empty()) ref(b->sub, "subgroupoid", p);
      }
    } else if (const auto* m = std::get_if<ModuleDecl>(&d.body)) {
      ref(m->algebra, "algebra", p);
      ref(m->action, "action", p);
    } else if (const auto* mo = std::get_if<MorphismDecl>(&d.body)) {
      ref(mo->source, "action", p);
      ref(mo->target, "action", p);
    }
    if (!kinds.emplace(d.name, kind_name(d.body)).second)
      throw ParseError(ErrorCode::DuplicateName, p, "duplicate declaration '" + d.name + "'");
  }

  for (const Task& t : doc.tasks) {
    const auto& allowed = task_keys().at(t.name);
    std::set<std::string> seen;
    for (const auto& [key, value] : t.args) {
      auto it = allowed.find(key);
      if (it == allowed.end())
        throw ParseError(ErrorCode::Syntax, t.pos, "expected a valid argument for task '" + t.name + "', found '" + key + "'");
      if (!seen.insert(key).second) throw ParseError(ErrorCode::DuplicateName, t.pos, "argument '" + key + "' given twice");
      if (!it->second.empty()) ref(value, it->second, t.pos);
    }
  }
}

// ---------------------------------------------------------------------------
// Printing

std::string quote(const std::string& n) {
  const bool plain = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_') &&
                     std::all_of(n.begin(), n.end(), [](char c) {
                       return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
                     });
  if (plain) return n;
  std::string out = "\"";
  for (char c : n) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& names, const std::string& sep = " ") {
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) out += (i ? sep : "") + quote(names[i]);
  return out;
}

std::string print_lincomb(const LinComb& c) {
  if (c.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    const bool negative = c[i].coeff < 0;
    const Scalar mag = negative ? Scalar(-c[i].coeff) : c[i].coeff;
    out += i == 0 ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (mag != 1) out += to_string(mag) + " ";
    out += quote(c[i].basis);
  }
  return out;
}

void print_decl(std::ostream& os, const Decl& d) {
  const std::string n = quote(d.name);
  if (const auto* g = std::get_if<GroupoidDecl>(&d.body)) {
    using K = GroupoidDecl::Kind;
    switch (g->kind) {
      case K::Pair: os << "groupoid " << n << " = pair(" << join(g->objects, ", ") << ");\n"; return;
      case K::Cyclic: os << "groupoid " << n << " = cyclic(" << g->order << ");\n"; return;
      case K::Union: os << "groupoid " << n << " = union(" << quote(g->left) << ", " << quote(g->right) << ");\n"; return;
      case K::Group: {
        os << "groupoid " << n << " = group(";
        for (size_t r = 0; r < g->table.size(); ++r) os << (r ? " | " : "") << join(g->table[r]);
        os << ");\n";
        return;
      }
      case K::Explicit: {
        os << "groupoid " << n << " {\n";
        if (!g->objects.empty()) os << "  objects " << join(g->objects) << ";\n";
        for (const auto& m : g->mors) os << "  mor " << quote(m.name) << ": " << quote(m.from) << " -> " << quote(m.to) << ";\n";
        for (const auto& c : g->comps) os << "  comp " << quote(c.g) << " " << quote(c.h) << " = " << quote(c.k) << ";\n";
        os << "}\n";
        return;
      }
    }
  } else if (const auto* s = std::get_if<SubgroupoidDecl>(&d.body)) {
    using K = SubgroupoidDecl::Kind;
    switch (s->kind) {
      case K::Identities: os << "subgroupoid " << n << " = identities(" << quote(s->parent) << ");\n"; return;
      case K::Whole: os << "subgroupoid " << n << " = whole(" << quote(s->parent) << ");\n"; return;
      case K::Isotropy:
        os << "subgroupoid " << n << " = isotropy(" << quote(s->parent) << ", " << quote(s->object) << ");\n";
        return;
      case K::Members:
        os << "subgroupoid " << n << " of " << quote(s->parent) << " {\n  members " << join(s->members) << ";\n}\n";
        return;
    }
  } else if (const auto* a = std::get_if<AlgebraDecl>(&d.body)) {
    if (a->groupoid_algebra) {
      os << "algebra " << n << " = groupoid_algebra(" << quote(a->groupoid) << ");\n";
      return;
    }
    os << "algebra " << n << " over " << quote(a->groupoid) << " {\n";
    if (!a->basis.empty()) {
      os << "  basis";
      for (const auto& b : a->basis) os << " " << quote(b.name) << "@" << quote(b.degree);
      os << ";\n";
    }
    for (const auto& m : a->mults)
      os << "  mult " << quote(m.left) << "*" << quote(m.right) << " = " << print_lincomb(m.value) << ";\n";
    if (a->has_unit) os << "  unit " << print_lincomb(a->unit) << ";\n";
    os << "}\n";
  } else if (const auto* ac = std::get_if<ActionDecl>(&d.body)) {
    if (ac->kind == ActionDecl::Kind::Left) {
      os << "action " << n << " = left(" << quote(ac->groupoid) << ");\n";
      return;
    }
    if (ac->kind == ActionDecl::Kind::Right) {
      os << "action " << n << " = right(" << quote(ac->sub) << ");\n";
      return;
    }
    os << "action " << n << " on " << quote(ac->groupoid) << " {\n";
    if (!ac->points.empty()) os << "  points " << join(ac->points) << ";\n";
    for (const auto& f : ac->fibers) os << "  fiber " << quote(f.object) << ": " << join(f.points) << ";\n";
    for (const auto& m : ac->maps) {
      os << "  map " << quote(m.morphism) << ":";
      for (size_t i = 0; i < m.pairs.size(); ++i)
        os << (i ? ", " : " ") << quote(m.pairs[i].first) << " -> " << quote(m.pairs[i].second);
      os << ";\n";
    }
    os << "}\n";
  } else if (const auto* b = std::get_if<BisetDecl>(&d.body)) {
    if (b->kind == BisetDecl::Kind::Translation) {
      os << "biset " << n << " = translation(" << quote(b->groupoid);
      if (!b->sub.empty()) os << ", " << quote(b->sub);
      os << ");\n";
      return;
    }
    os << "biset " << n << " {\n  gset " << quote(b->gset) << ";\n  kset " << quote(b->kset) << ";\n}\n";
  } else if (const auto* m = std::get_if<ModuleDecl>(&d.body)) {
    os << "module " << n << " over " << quote(m->algebra) << " graded " << quote(m->action);
    if (m->regular) {
      os << " = regular;\n";
      return;
    }
    os << " {\n";
    if (!m->deg.empty()) os << "  deg " << join(m->deg) << ";\n";
    for (const auto& act : m->acts) {
      os << "  act " << quote(act.basis) << " = [";
      for (size_t r = 0; r < act.rows.size(); ++r) {
        os << (r ? " | " : "");
        for (size_t c = 0; c < act.rows[r].size(); ++c) os << (c ? " " : "") << to_string(act.rows[r][c]);
      }
      os << "];\n";
    }
    os << "}\n";
  } else if (const auto* mo = std::get_if<MorphismDecl>(&d.body)) {
    os << "morphism " << n << ": " << quote(mo->source) << " -> " << quote(mo->target) << " {\n";
    for (const auto& [from, to] : mo->pairs) os << "  " << quote(from) << " -> " << quote(to) << ";\n";
    os << "}\n";
  }
}

}  // namespace

Document parse_spec(const std::string& text) {
  Parser p(lex(text));
  Document doc = p.document();
  resolve(doc);
  return doc;
}

std::string print_spec(const Document& d) {
  std::ostringstream os;
  for (const Decl& decl : d.decls) print_decl(os, decl);
  if (!d.decls.empty() && !d.tasks.empty()) os << "\n";
  for (const Task& t : d.tasks) {
    os << "task " << t.name;
    for (const auto& [k, v] : t.args) os << " " << k << "=" << quote(v);
    os << ";\n";
  }
  return os.str();
}

}  // namespace gsm::dsl

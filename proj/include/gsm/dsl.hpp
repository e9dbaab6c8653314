#ifndef GSM_DSL_HPP
#define GSM_DSL_HPP

// Abstract syntax of .gsm documents. The grammar lives in docs/grammar.ebnf.

#include <gsm/error.hpp>
#include <gsm/scalar.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gsm::dsl {

struct Pos {
  int line = 1;
  int column = 1;
};

/// Parse failures carry the position of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, Pos pos, const std::string& message)
      : Error(code, std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}
  Pos pos() const { return pos_; }

 private:
  Pos pos_;
};

struct LinTerm {
  Scalar coeff;
  std::string basis;
  friend bool operator==(const LinTerm&, const LinTerm&) = default;
};
using LinComb = std::vector<LinTerm>;

struct GroupoidDecl {
  enum class Kind { Pair, Group, Cyclic, Union, Explicit };
  struct Mor {
    std::string name, from, to;
    friend bool operator==(const Mor&, const Mor&) = default;
  };
  struct Comp {
    std::string g, h, k;
    friend bool operator==(const Comp&, const Comp&) = default;
  };
  Kind kind = Kind::Explicit;
  std::vector<std::string> objects;              // pair, explicit
  std::vector<std::vector<std::string>> table;   // group rows; row 0 lists the elements
  Index order = 0;                               // cyclic
  std::string left, right;                       // union
  std::vector<Mor> mors;                         // explicit, identities implicit
  std::vector<Comp> comps;                       // explicit, non-identity pairs
  friend bool operator==(const GroupoidDecl&, const GroupoidDecl&) = default;
};

struct SubgroupoidDecl {
  enum class Kind { Members, Identities, Whole, Isotropy };
  Kind kind = Kind::Members;
  std::string parent;
  std::vector<std::string> members;
  std::string object;  // isotropy
  friend bool operator==(const SubgroupoidDecl&, const SubgroupoidDecl&) = default;
};

struct AlgebraDecl {
  struct Basis {
    std::string name, degree;
    friend bool operator==(const Basis&, const Basis&) = default;
  };
  struct Mult {
    std::string left, right;
    LinComb value;
    friend bool operator==(const Mult&, const Mult&) = default;
  };
  std::string groupoid;
  bool groupoid_algebra = false;
  std::vector<Basis> basis;
  std::vector<Mult> mults;
  bool has_unit = false;
  LinComb unit;
  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct ActionDecl {
  enum class Kind { Explicit, Left, Right };
  struct Fiber {
    std::string object;
    std::vector<std::string> points;
    friend bool operator==(const Fiber&, const Fiber&) = default;
  };
  struct Map {
    std::string morphism;
    std::vector<std::pair<std::string, std::string>> pairs;
    friend bool operator==(const Map&, const Map&) = default;
  };
  Kind kind = Kind::Explicit;
  std::string groupoid;  // explicit, left
  std::string sub;       // right
  std::vector<std::string> points;
  std::vector<Fiber> fibers;
  std::vector<Map> maps;
  friend bool operator==(const ActionDecl&, const ActionDecl&) = default;
};

struct BisetDecl {
  enum class Kind { Explicit, Translation };
  Kind kind = Kind::Explicit;
  std::string gset, kset;  // explicit
  std::string groupoid;    // translation
  std::string sub;         // translation, optional (whole groupoid when empty)
  friend bool operator==(const BisetDecl&, const BisetDecl&) = default;
};

struct ModuleDecl {
  struct Act {
    std::string basis;
    std::vector<std::vector<Scalar>> rows;
    friend bool operator==(const Act&, const Act&) = default;
  };
  std::string algebra, action;
  bool regular = false;
  std::vector<std::string> deg;
  std::vector<Act> acts;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

struct MorphismDecl {
  std::string source, target;
  std::vector<std::pair<std::string, std::string>> pairs;
  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

using DeclBody =
    std::variant<GroupoidDecl, SubgroupoidDecl, AlgebraDecl, ActionDecl, BisetDecl, ModuleDecl, MorphismDecl>;

/// "groupoid", "subgroupoid", "algebra", "action", "biset", "module", "morphism".
std::string kind_name(const DeclBody& body);

struct Decl {
  std::string name;
  DeclBody body;
  Pos pos;
  friend bool operator==(const Decl& a, const Decl& b) { return a.name == b.name && a.body == b.body; }
};

struct Task {
  std::string name;
  std::vector<std::pair<std::string, std::string>> args;
  Pos pos;
  /// Value of `key`, or "" when absent.
  std::string arg(const std::string& key) const;
  friend bool operator==(const Task& a, const Task& b) { return a.name == b.name && a.args == b.args; }
};

struct Document {
  std::vector<Decl> decls;
  std::vector<Task> tasks;
  /// nullptr when absent.
  const Decl* find(const std::string& name) const;
  friend bool operator==(const Document&, const Document&) = default;
};

/// Task names accepted by the parser, in execution-report order.
const std::vector<std::string>& task_names();

/// Throws ParseError (E_SYNTAX, E_UNRESOLVED_NAME, E_DUPLICATE_NAME).
Document parse_spec(const std::string& text);

/// Canonical text; parse_spec(print_spec(d)) == d.
std::string print_spec(const Document& d);

}  // namespace gsm::dsl

#endif  // GSM_DSL_HPP

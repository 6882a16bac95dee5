#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fmw/bits.hpp"
#include "fmw/vocabulary.hpp"

namespace fmw {

enum class NodeKind {
  Atom,      // R(t1,...,ta): vocabulary symbol or bound relation variable
  Eq,        // t1 = t2
  Neq,       // t1 != t2
  Less,      // t1 < t2
  Bit,       // BIT(t1,t2)
  Not,
  And,
  Or,
  Implies,
  Exists,    // first-order
  Forall,
  SoExists,  // second-order, binds a relation variable of fixed arity
  SoForall,
  Tc,        // TC[x1..xk, y1..yk: body](s1..sk, t1..tk)
  Lfp,       // LFP[Q, x1..xa: body](t1..ta)
  Pfp,
  Char,      // reserved characteristic leaf, see CharKind
};

/// Characteristic leaves are evaluated by the decision procedures in
/// charsets.hpp. Payloads are Gödel codes:
///   Ord, Unord, CoUnord: <Gamma>, <T>, <Upsilon_tau>
///   NpConp:              <Lambda>, <Gamma>
///   Cfg:                 <G>
enum class CharKind { Ord, Unord, CoUnord, NpConp, Cfg };

std::string_view char_keyword(CharKind kind);
std::size_t char_payload_count(CharKind kind);

/// Three-valued constant folding computed at construction. `x != x` is false
/// everywhere, and quantifiers over a constant body keep that constant because
/// universes are never empty.
enum class StaticTruth { Unknown, True, False };

class Formula;

struct Node {
  NodeKind kind = NodeKind::Atom;
  /// Atom: relation name. Exists/Forall: variable. SoExists/SoForall/Lfp/Pfp:
  /// relation variable.
  std::string name;
  /// SoExists/SoForall: arity of the quantified relation.
  int arity = 0;
  /// Atom, Eq, Neq, Less, Bit: argument variables. Tc/Lfp/Pfp: bound variables.
  std::vector<std::string> vars;
  /// Tc/Lfp/Pfp: argument variables of the application.
  std::vector<std::string> args;
  std::vector<Formula> children;
  CharKind char_kind = CharKind::Ord;
  std::vector<BitString> payloads;

  std::size_t node_count = 1;
  StaticTruth truth = StaticTruth::Unknown;
  bool has_char = false;
};

/// Immutable formula tree with value semantics; copies share structure.
/// Equality is exact structural equality, variable names included.
class Formula {
 public:
  Formula() = default;

  static Formula atom(std::string relation, std::vector<std::string> args);
  static Formula eq(std::string a, std::string b);
  static Formula neq(std::string a, std::string b);
  static Formula less(std::string a, std::string b);
  static Formula bit(std::string a, std::string b);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula so_exists(std::string relvar, int arity, Formula body);
  static Formula so_forall(std::string relvar, int arity, Formula body);
  /// `vars` holds x1..xk followed by y1..yk; `args` holds s1..sk, t1..tk.
  static Formula tc(std::vector<std::string> vars, Formula body, std::vector<std::string> args);
  static Formula lfp(std::string relvar, std::vector<std::string> vars, Formula body, std::vector<std::string> args);
  static Formula pfp(std::string relvar, std::vector<std::string> vars, Formula body, std::vector<std::string> args);
  /// Checks payload count and that every payload decodes to a CHAR-free
  /// object of the expected type (PayloadNotCharFree / Malformed).
  static Formula char_leaf(CharKind kind, std::vector<BitString> payloads);

  bool empty() const noexcept { return !node_; }
  const Node& node() const { return *node_; }
  NodeKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  int arity() const { return node_->arity; }
  const std::vector<std::string>& vars() const { return node_->vars; }
  const std::vector<std::string>& args() const { return node_->args; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i = 0) const { return node_->children.at(i); }
  CharKind char_kind() const { return node_->char_kind; }
  const std::vector<BitString>& payloads() const { return node_->payloads; }
  std::size_t node_count() const { return node_->node_count; }
  StaticTruth static_truth() const { return node_->truth; }
  bool contains_char() const { return node_->has_char; }
  const Node* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);
  static Formula numeric(NodeKind kind, std::string a, std::string b);
  static Formula binary(NodeKind kind, Formula a, Formula b);
  static Formula quantified(NodeKind kind, std::string name, int arity, Formula body);
  static Formula fixpoint(NodeKind kind, std::string relvar, std::vector<std::string> vars, Formula body,
                          std::vector<std::string> args);

  std::shared_ptr<const Node> node_;
};

bool is_quantifier(NodeKind kind) noexcept;
bool is_binary_connective(NodeKind kind) noexcept;
bool is_fixpoint(NodeKind kind) noexcept;

/// Free first-order variables.
std::set<std::string> free_variables(const Formula& f);
/// Every identifier used as a first-order variable anywhere in f.
std::set<std::string> all_variables(const Formula& f);
/// Relation names used in atoms but not bound by a second-order quantifier or
/// fixpoint; these must come from the vocabulary.
std::set<std::string> free_relations(const Formula& f);
/// Every relation name bound by a second-order quantifier or fixpoint.
std::set<std::string> bound_relations(const Formula& f);

bool is_sentence(const Formula& f);

/// Throws IllFormedFormula unless f is a closed sentence whose free relation
/// symbols belong to `vocab` with matching arities, bound relation variables
/// are applied with their declared arity, and `<` is used only when the
/// vocabulary is ordered.
void check_sentence(const Formula& f, const Vocabulary& vocab);

/// Whether Q occurs only positively (under an even number of negations).
bool occurs_positively(const Formula& body, std::string_view relvar);

}  // namespace fmw

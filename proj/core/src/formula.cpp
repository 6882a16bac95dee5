#include "fmw/formula.hpp"

#include <algorithm>
#include <map>

#include "fmw/charsets.hpp"
#include "fmw/error.hpp"

namespace fmw {

std::string_view char_keyword(CharKind kind) {
  switch (kind) {
    case CharKind::Ord: return "CHAR_ORD";
    case CharKind::Unord: return "CHAR_UNORD";
    case CharKind::CoUnord: return "COCHAR_UNORD";
    case CharKind::NpConp: return "CHAR_NPCONP";
    case CharKind::Cfg: return "CHAR_CFG";
  }
  return "CHAR_?";
}

std::size_t char_payload_count(CharKind kind) {
  switch (kind) {
    case CharKind::Ord:
    case CharKind::Unord:
    case CharKind::CoUnord: return 3;
    case CharKind::NpConp: return 2;
    case CharKind::Cfg: return 1;
  }
  return 0;
}

bool is_quantifier(NodeKind kind) noexcept {
  return kind == NodeKind::Exists || kind == NodeKind::Forall || kind == NodeKind::SoExists ||
         kind == NodeKind::SoForall;
}

bool is_binary_connective(NodeKind kind) noexcept {
  return kind == NodeKind::And || kind == NodeKind::Or || kind == NodeKind::Implies;
}

bool is_fixpoint(NodeKind kind) noexcept {
  return kind == NodeKind::Tc || kind == NodeKind::Lfp || kind == NodeKind::Pfp;
}

namespace {

void require_var(const std::string& v) {
  if (!is_variable_name(v)) fail(ErrorCode::IllFormedFormula, "bad variable name '" + v + "'");
}

void require_rel(const std::string& r) {
  if (!is_relation_name(r)) fail(ErrorCode::IllFormedFormula, "bad relation name '" + r + "'");
}

void require_child(const Formula& f) {
  if (f.empty()) fail(ErrorCode::IllFormedFormula, "missing subformula");
}

StaticTruth negate(StaticTruth t) {
  if (t == StaticTruth::True) return StaticTruth::False;
  if (t == StaticTruth::False) return StaticTruth::True;
  return t;
}

StaticTruth fold(const Node& n) {
  using T = StaticTruth;
  auto kid = [&](std::size_t i) { return n.children[i].static_truth(); };
  switch (n.kind) {
    case NodeKind::Eq: return n.vars[0] == n.vars[1] ? T::True : T::Unknown;
    case NodeKind::Neq:
    case NodeKind::Less: return n.vars[0] == n.vars[1] ? T::False : T::Unknown;
    case NodeKind::Not: return negate(kid(0));
    case NodeKind::And:
      if (kid(0) == T::False || kid(1) == T::False) return T::False;
      if (kid(0) == T::True && kid(1) == T::True) return T::True;
      return T::Unknown;
    case NodeKind::Or:
      if (kid(0) == T::True || kid(1) == T::True) return T::True;
      if (kid(0) == T::False && kid(1) == T::False) return T::False;
      return T::Unknown;
    case NodeKind::Implies:
      if (kid(0) == T::False || kid(1) == T::True) return T::True;
      if (kid(0) == T::True && kid(1) == T::False) return T::False;
      return T::Unknown;
    case NodeKind::Exists:
    case NodeKind::Forall:
    case NodeKind::SoExists:
    case NodeKind::SoForall: return kid(0);
    default: return T::Unknown;
  }
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.node_count != b.node_count || a.name != b.name || a.arity != b.arity ||
      a.vars != b.vars || a.args != b.args || a.children.size() != b.children.size())
    return false;
  if (a.kind == NodeKind::Char && (a.char_kind != b.char_kind || a.payloads != b.payloads)) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(a.children[i] == b.children[i])) return false;
  }
  return true;
}

}  // namespace

Formula Formula::make(Node node) {
  for (const auto& c : node.children) {
    node.node_count += c.node_count();
    node.has_char = node.has_char || c.contains_char();
  }
  if (node.kind == NodeKind::Char) node.has_char = true;
  node.truth = fold(node);
  return Formula(std::make_shared<const Node>(std::move(node)));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return equal_nodes(*a.node_, *b.node_);
}

Formula Formula::atom(std::string relation, std::vector<std::string> args) {
  require_rel(relation);
  if (args.empty()) fail(ErrorCode::IllFormedFormula, "atom " + relation + " needs arguments");
  for (const auto& v : args) require_var(v);
  Node n;
  n.kind = NodeKind::Atom;
  n.name = std::move(relation);
  n.vars = std::move(args);
  return make(std::move(n));
}

Formula Formula::numeric(NodeKind kind, std::string a, std::string b) {
  require_var(a);
  require_var(b);
  Node n;
  n.kind = kind;
  n.vars = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::eq(std::string a, std::string b) { return numeric(NodeKind::Eq, std::move(a), std::move(b)); }
Formula Formula::neq(std::string a, std::string b) { return numeric(NodeKind::Neq, std::move(a), std::move(b)); }
Formula Formula::less(std::string a, std::string b) { return numeric(NodeKind::Less, std::move(a), std::move(b)); }
Formula Formula::bit(std::string a, std::string b) { return numeric(NodeKind::Bit, std::move(a), std::move(b)); }

Formula Formula::negation(Formula f) {
  require_child(f);
  Node n;
  n.kind = NodeKind::Not;
  n.children = {std::move(f)};
  return make(std::move(n));
}

Formula Formula::binary(NodeKind kind, Formula a, Formula b) {
  require_child(a);
  require_child(b);
  Node n;
  n.kind = kind;
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula Formula::conjunction(Formula a, Formula b) { return binary(NodeKind::And, std::move(a), std::move(b)); }
Formula Formula::disjunction(Formula a, Formula b) { return binary(NodeKind::Or, std::move(a), std::move(b)); }
Formula Formula::implication(Formula a, Formula b) { return binary(NodeKind::Implies, std::move(a), std::move(b)); }

Formula Formula::quantified(NodeKind kind, std::string name, int arity, Formula body) {
  require_child(body);
  Node n;
  n.kind = kind;
  if (kind == NodeKind::Exists || kind == NodeKind::Forall) {
    require_var(name);
  } else {
    require_rel(name);
    if (arity < 1) fail(ErrorCode::IllFormedFormula, "relation variable " + name + " needs positive arity");
    n.arity = arity;
  }
  n.name = std::move(name);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) { return quantified(NodeKind::Exists, std::move(var), 0, std::move(body)); }
Formula Formula::forall(std::string var, Formula body) { return quantified(NodeKind::Forall, std::move(var), 0, std::move(body)); }
Formula Formula::so_exists(std::string relvar, int arity, Formula body) {
  return quantified(NodeKind::SoExists, std::move(relvar), arity, std::move(body));
}
Formula Formula::so_forall(std::string relvar, int arity, Formula body) {
  return quantified(NodeKind::SoForall, std::move(relvar), arity, std::move(body));
}

Formula Formula::fixpoint(NodeKind kind, std::string relvar, std::vector<std::string> vars, Formula body,
                          std::vector<std::string> args) {
  require_child(body);
  for (const auto& v : vars) require_var(v);
  for (const auto& v : args) require_var(v);
  if (vars.empty() || vars.size() != args.size())
    fail(ErrorCode::IllFormedFormula, "fixpoint variable and argument lists must be nonempty and equally long");
  std::set<std::string> distinct(vars.begin(), vars.end());
  if (distinct.size() != vars.size()) fail(ErrorCode::IllFormedFormula, "fixpoint binds a variable twice");
  Node n;
  n.kind = kind;
  if (kind == NodeKind::Tc) {
    if (vars.size() % 2 != 0) fail(ErrorCode::IllFormedFormula, "TC needs two equally long variable tuples");
  } else {
    require_rel(relvar);
    n.name = std::move(relvar);
    n.arity = static_cast<int>(vars.size());
  }
  n.vars = std::move(vars);
  n.args = std::move(args);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::tc(std::vector<std::string> vars, Formula body, std::vector<std::string> args) {
  return fixpoint(NodeKind::Tc, {}, std::move(vars), std::move(body), std::move(args));
}
Formula Formula::lfp(std::string relvar, std::vector<std::string> vars, Formula body, std::vector<std::string> args) {
  return fixpoint(NodeKind::Lfp, std::move(relvar), std::move(vars), std::move(body), std::move(args));
}
Formula Formula::pfp(std::string relvar, std::vector<std::string> vars, Formula body, std::vector<std::string> args) {
  return fixpoint(NodeKind::Pfp, std::move(relvar), std::move(vars), std::move(body), std::move(args));
}

Formula Formula::char_leaf(CharKind kind, std::vector<BitString> payloads) {
  if (payloads.size() != char_payload_count(kind))
    fail(ErrorCode::IllFormedFormula, std::string(char_keyword(kind)) + " has the wrong number of payloads");
  for (const auto& p : payloads) {
    if (!is_bitstring(p)) fail(ErrorCode::Malformed, "payload is not a bit string");
  }
  detail::validate_char_payloads(kind, payloads);
  Node n;
  n.kind = NodeKind::Char;
  n.char_kind = kind;
  n.payloads = std::move(payloads);
  return make(std::move(n));
}

namespace {

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  auto use = [&](const std::string& v) {
    if (!bound.contains(v)) out.insert(v);
  };
  switch (f.kind()) {
    case NodeKind::Atom:
    case NodeKind::Eq:
    case NodeKind::Neq:
    case NodeKind::Less:
    case NodeKind::Bit:
      for (const auto& v : f.vars()) use(v);
      return;
    case NodeKind::Exists:
    case NodeKind::Forall: {
      auto it = bound.insert(f.name());
      collect_free(f.child(), bound, out);
      bound.erase(it);
      return;
    }
    case NodeKind::Tc:
    case NodeKind::Lfp:
    case NodeKind::Pfp: {
      for (const auto& v : f.args()) use(v);
      std::vector<std::multiset<std::string>::iterator> its;
      for (const auto& v : f.vars()) its.push_back(bound.insert(v));
      collect_free(f.child(), bound, out);
      for (auto it : its) bound.erase(it);
      return;
    }
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out);
  }
}

void collect_all_vars(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == NodeKind::Exists || f.kind() == NodeKind::Forall) out.insert(f.name());
  if (f.kind() != NodeKind::Char) {
    out.insert(f.vars().begin(), f.vars().end());
    out.insert(f.args().begin(), f.args().end());
  }
  for (const auto& c : f.children()) collect_all_vars(c, out);
}

bool binds_relation(NodeKind k) {
  return k == NodeKind::SoExists || k == NodeKind::SoForall || k == NodeKind::Lfp || k == NodeKind::Pfp;
}

void collect_free_rel(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  if (f.kind() == NodeKind::Atom) {
    if (!bound.contains(f.name())) out.insert(f.name());
    return;
  }
  if (binds_relation(f.kind())) {
    auto it = bound.insert(f.name());
    collect_free_rel(f.child(), bound, out);
    bound.erase(it);
    return;
  }
  for (const auto& c : f.children()) collect_free_rel(c, bound, out);
}

void collect_bound_rel(const Formula& f, std::set<std::string>& out) {
  if (binds_relation(f.kind())) out.insert(f.name());
  for (const auto& c : f.children()) collect_bound_rel(c, out);
}

void check_rec(const Formula& f, const Vocabulary& vocab, std::map<std::string, std::vector<int>>& relvars) {
  switch (f.kind()) {
    case NodeKind::Atom: {
      const int arity = static_cast<int>(f.vars().size());
      if (auto it = relvars.find(f.name()); it != relvars.end() && !it->second.empty()) {
        if (it->second.back() != arity)
          fail(ErrorCode::IllFormedFormula, "relation variable " + f.name() + " applied with wrong arity");
        return;
      }
      const auto idx = vocab.index_of(f.name());
      if (!idx) fail(ErrorCode::IllFormedFormula, "symbol " + f.name() + " is not in " + vocab.to_string());
      if (vocab[*idx].arity != arity) fail(ErrorCode::IllFormedFormula, "symbol " + f.name() + " applied with wrong arity");
      return;
    }
    case NodeKind::Less:
    case NodeKind::Bit:
      if (!vocab.has_order())
        fail(ErrorCode::IllFormedFormula, "numeric predicates `<` and BIT need an ordered vocabulary");
      return;
    case NodeKind::SoExists:
    case NodeKind::SoForall:
    case NodeKind::Lfp:
    case NodeKind::Pfp: {
      const int arity = f.kind() == NodeKind::SoExists || f.kind() == NodeKind::SoForall
                            ? f.arity()
                            : static_cast<int>(f.vars().size());
      relvars[f.name()].push_back(arity);
      check_rec(f.child(), vocab, relvars);
      relvars[f.name()].pop_back();
      return;
    }
    default:
      for (const auto& c : f.children()) check_rec(c, vocab, relvars);
  }
}

bool positive_rec(const Formula& f, std::string_view q, bool polarity) {
  switch (f.kind()) {
    case NodeKind::Atom: return f.name() != q || polarity;
    case NodeKind::Not: return positive_rec(f.child(), q, !polarity);
    case NodeKind::Implies: return positive_rec(f.child(0), q, !polarity) && positive_rec(f.child(1), q, polarity);
    case NodeKind::SoExists:
    case NodeKind::SoForall:
    case NodeKind::Lfp:
    case NodeKind::Pfp:
      if (f.name() == q) return true;
      return positive_rec(f.child(), q, polarity);
    default:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return positive_rec(c, q, polarity); });
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  collect_all_vars(f, out);
  return out;
}

std::set<std::string> free_relations(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free_rel(f, bound, out);
  return out;
}

std::set<std::string> bound_relations(const Formula& f) {
  std::set<std::string> out;
  collect_bound_rel(f, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

void check_sentence(const Formula& f, const Vocabulary& vocab) {
  if (f.empty()) fail(ErrorCode::IllFormedFormula, "empty formula");
  const auto free = free_variables(f);
  if (!free.empty()) fail(ErrorCode::IllFormedFormula, "not a sentence: variable " + *free.begin() + " is free");
  std::map<std::string, std::vector<int>> relvars;
  check_rec(f, vocab, relvars);
}

bool occurs_positively(const Formula& body, std::string_view relvar) { return positive_rec(body, relvar, true); }

}  // namespace fmw

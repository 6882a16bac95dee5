#include "fmw/eval.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <tuple>

#include "fmw/charsets.hpp"
#include "fmw/error.hpp"

namespace fmw {

struct ModelChecker::Program {
  struct Op {
    NodeKind kind = NodeKind::Atom;
    StaticTruth truth = StaticTruth::Unknown;
    int rel = -1;          // Atom: relation slot
    std::vector<int> vs;   // argument slots, or bound variable slots
    std::vector<int> as;   // fixpoint argument slots
    int arity = 0;         // SO quantifier / fixpoint relation arity
    int bound_rel = -1;    // SO / LFP / PFP relation slot
    std::vector<int> kids;
    const Node* node = nullptr;  // CHAR leaf
    int memo = -1;               // closed fixpoint memo slot
  };

  Vocabulary vocab;
  EvalOptions options;
  Formula source;  // keeps CHAR nodes alive
  std::vector<Op> ops;
  int root = -1;
  int var_slots = 0;
  int rel_slots = 0;
  int memo_slots = 0;
  std::vector<std::pair<std::string, int>> free_vars;
  std::vector<std::tuple<std::string, int, int>> free_rels;  // name, arity, slot
};

namespace {

using Program = ModelChecker::Program;
using Op = Program::Op;

class Compiler {
 public:
  explicit Compiler(Program& p) : p_(p) {}

  void declare_free(const Assignment& shape) {
    for (std::size_t i = 0; i < p_.vocab.size(); ++i) {
      rels_.push_back({p_.vocab[i].name, p_.vocab[i].arity, static_cast<int>(i)});
    }
    p_.rel_slots = static_cast<int>(p_.vocab.size());
    for (const auto& [name, rel] : shape.relations) {
      const int slot = p_.rel_slots++;
      rels_.push_back({name, rel.arity(), slot});
      p_.free_rels.emplace_back(name, rel.arity(), slot);
    }
    for (const auto& [name, value] : shape.vars) {
      (void)value;
      const int slot = p_.var_slots++;
      vars_.emplace_back(name, slot);
      p_.free_vars.emplace_back(name, slot);
    }
  }

  // Returns the op index. A fixpoint whose body refers to nothing bound
  // outside it gets a memo slot.
  int compile(const Formula& f) {
    Op op;
    op.kind = f.kind();
    op.truth = f.static_truth();
    switch (f.kind()) {
      case NodeKind::Atom: {
        const auto& r = lookup_rel(f.name());
        if (r.arity != static_cast<int>(f.vars().size()))
          fail(ErrorCode::IllFormedFormula, "relation " + f.name() + " applied with wrong arity");
        op.rel = r.slot;
        for (const auto& v : f.vars()) op.vs.push_back(lookup_var(v));
        break;
      }
      case NodeKind::Less:
      case NodeKind::Bit:
        if (!p_.vocab.has_order())
          fail(ErrorCode::IllFormedFormula, "numeric predicates `<` and BIT need an ordered vocabulary");
        [[fallthrough]];
      case NodeKind::Eq:
      case NodeKind::Neq:
        for (const auto& v : f.vars()) op.vs.push_back(lookup_var(v));
        break;
      case NodeKind::Not:
      case NodeKind::And:
      case NodeKind::Or:
      case NodeKind::Implies:
        for (const auto& c : f.children()) op.kids.push_back(compile(c));
        break;
      case NodeKind::Exists:
      case NodeKind::Forall: {
        const int slot = p_.var_slots++;
        op.vs.push_back(slot);
        vars_.emplace_back(f.name(), slot);
        op.kids.push_back(compile(f.child()));
        vars_.pop_back();
        break;
      }
      case NodeKind::SoExists:
      case NodeKind::SoForall: {
        op.arity = f.arity();
        op.bound_rel = p_.rel_slots++;
        rels_.push_back({f.name(), f.arity(), op.bound_rel});
        op.kids.push_back(compile(f.child()));
        rels_.pop_back();
        break;
      }
      case NodeKind::Tc:
      case NodeKind::Lfp:
      case NodeKind::Pfp: {
        for (const auto& v : f.args()) op.as.push_back(lookup_var(v));
        if (f.kind() != NodeKind::Tc) {
          if (f.kind() == NodeKind::Lfp && !occurs_positively(f.child(), f.name()))
            fail(ErrorCode::PositivityViolation, "LFP operand is not positive in " + f.name());
          op.arity = static_cast<int>(f.vars().size());
          op.bound_rel = p_.rel_slots++;
          rels_.push_back({f.name(), op.arity, op.bound_rel});
        }
        const std::size_t var_mark = vars_.size();
        const std::size_t rel_mark = rels_.size();
        for (const auto& v : f.vars()) {
          const int slot = p_.var_slots++;
          op.vs.push_back(slot);
          vars_.emplace_back(v, slot);
        }
        const int min_var = op.vs.front();
        const int min_rel = f.kind() == NodeKind::Tc ? p_.rel_slots : op.bound_rel;
        frames_.push_back({min_var, min_rel, 0, 0});
        op.kids.push_back(compile(f.child()));
        const Frame fr = frames_.back();
        frames_.pop_back();
        if (fr.outer_vars == 0 && fr.outer_rels == 0) op.memo = p_.memo_slots++;
        vars_.resize(var_mark);
        rels_.resize(rel_mark);
        if (f.kind() != NodeKind::Tc) rels_.pop_back();
        break;
      }
      case NodeKind::Char:
        op.node = &f.node();
        break;
    }
    p_.ops.push_back(std::move(op));
    return static_cast<int>(p_.ops.size()) - 1;
  }

 private:
  struct RelBinding {
    std::string name;
    int arity;
    int slot;
  };
  struct Frame {
    int min_var;     // variable slots below this belong to enclosing scopes
    int min_rel;     // likewise for relation slots (vocabulary symbols excepted)
    int outer_vars;
    int outer_rels;
  };

  Program& p_;
  std::vector<std::pair<std::string, int>> vars_;
  std::vector<RelBinding> rels_;
  std::vector<Frame> frames_;

  int lookup_var(const std::string& name) {
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
      if (it->first == name) {
        for (auto& fr : frames_) {
          if (it->second < fr.min_var) ++fr.outer_vars;
        }
        return it->second;
      }
    }
    fail(ErrorCode::IllFormedFormula, "variable " + name + " is free");
  }

  const RelBinding& lookup_rel(const std::string& name) {
    for (auto it = rels_.rbegin(); it != rels_.rend(); ++it) {
      if (it->name == name) {
        const bool symbol = it->slot < static_cast<int>(p_.vocab.size());
        for (auto& fr : frames_) {
          if (!symbol && it->slot < fr.min_rel) ++fr.outer_rels;
        }
        return *it;
      }
    }
    fail(ErrorCode::IllFormedFormula, "relation " + name + " is not in " + p_.vocab.to_string());
  }
};

struct Ctx {
  const Program& p;
  const Structure& a;
  std::size_t n;
  std::vector<Element> env;
  std::vector<const Relation*> rels;
  std::vector<std::optional<Relation>> memo;
};

std::size_t tuple_index(const Ctx& c, const std::vector<int>& slots, std::size_t from, std::size_t count) {
  std::size_t idx = 0;
  for (std::size_t i = from; i < from + count; ++i) idx = idx * c.n + static_cast<std::size_t>(c.env[static_cast<std::size_t>(slots[i])]);
  return idx;
}

void set_tuple(Ctx& c, const std::vector<int>& slots, std::size_t from, std::size_t count, std::size_t idx) {
  for (std::size_t i = from + count; i-- > from;) {
    c.env[static_cast<std::size_t>(slots[i])] = static_cast<Element>(idx % c.n);
    idx /= c.n;
  }
}

bool eval(Ctx& c, int index);

// Iterates the stage operator of LFP/PFP; returns the fixpoint (or the empty
// relation when PFP cycles without one).
Relation fixpoint(Ctx& c, const Op& op) {
  const auto slots = checked_pow(c.n, op.arity);
  Relation cur(op.arity, static_cast<int>(c.n));
  std::set<std::vector<std::uint8_t>> seen;
  const Relation* saved = c.rels[static_cast<std::size_t>(op.bound_rel)];
  for (;;) {
    Relation next(op.arity, static_cast<int>(c.n));
    c.rels[static_cast<std::size_t>(op.bound_rel)] = &cur;
    for (std::size_t i = 0; i < slots; ++i) {
      set_tuple(c, op.vs, 0, op.vs.size(), i);
      if (eval(c, op.kids[0])) next.set_index(i);
    }
    if (next == cur) break;
    if (op.kind == NodeKind::Pfp) {
      seen.insert(cur.raw());
      if (seen.contains(next.raw())) {
        cur = Relation(op.arity, static_cast<int>(c.n));
        break;
      }
    }
    cur = std::move(next);
  }
  c.rels[static_cast<std::size_t>(op.bound_rel)] = saved;
  return cur;
}

bool tc_edge(Ctx& c, const Op& op, std::size_t k, std::size_t u, std::size_t v) {
  set_tuple(c, op.vs, 0, k, u);
  set_tuple(c, op.vs, k, k, v);
  return eval(c, op.kids[0]);
}

bool eval_tc(Ctx& c, const Op& op) {
  const std::size_t k = op.vs.size() / 2;
  const std::size_t src = tuple_index(c, op.as, 0, k);
  const std::size_t dst = tuple_index(c, op.as, k, k);
  if (src == dst) return true;
  const std::size_t nodes = checked_pow(c.n, static_cast<int>(k));
  const Relation* edges = nullptr;
  if (op.memo >= 0) {
    auto& m = c.memo[static_cast<std::size_t>(op.memo)];
    if (!m) {
      Relation e(2, static_cast<int>(nodes));
      for (std::size_t u = 0; u < nodes; ++u) {
        for (std::size_t v = 0; v < nodes; ++v) e.set_index(u * nodes + v, tc_edge(c, op, k, u, v));
      }
      m = std::move(e);
    }
    edges = &*m;
  }
  std::vector<std::uint8_t> seen(nodes, 0);
  std::deque<std::size_t> queue{src};
  seen[src] = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < nodes; ++v) {
      if (seen[v]) continue;
      const bool edge = edges ? edges->test(u * nodes + v) : tc_edge(c, op, k, u, v);
      if (!edge) continue;
      if (v == dst) return true;
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  return false;
}

bool eval(Ctx& c, int index) {
  const Op& op = c.p.ops[static_cast<std::size_t>(index)];
  if (op.truth == StaticTruth::True) return true;
  if (op.truth == StaticTruth::False) return false;
  auto var = [&](std::size_t i) { return c.env[static_cast<std::size_t>(op.vs[i])]; };
  switch (op.kind) {
    case NodeKind::Atom:
      return c.rels[static_cast<std::size_t>(op.rel)]->test(tuple_index(c, op.vs, 0, op.vs.size()));
    case NodeKind::Eq: return var(0) == var(1);
    case NodeKind::Neq: return var(0) != var(1);
    case NodeKind::Less: return var(0) < var(1);
    case NodeKind::Bit: {
      const auto x = static_cast<unsigned>(var(0));
      const auto y = static_cast<unsigned>(var(1));
      return y < 32 && ((x >> y) & 1U) != 0;
    }
    case NodeKind::Not: return !eval(c, op.kids[0]);
    case NodeKind::And: return eval(c, op.kids[0]) && eval(c, op.kids[1]);
    case NodeKind::Or: return eval(c, op.kids[0]) || eval(c, op.kids[1]);
    case NodeKind::Implies: return !eval(c, op.kids[0]) || eval(c, op.kids[1]);
    case NodeKind::Exists:
    case NodeKind::Forall: {
      const bool want = op.kind == NodeKind::Exists;
      auto& slot = c.env[static_cast<std::size_t>(op.vs[0])];
      for (std::size_t e = 0; e < c.n; ++e) {
        slot = static_cast<Element>(e);
        if (eval(c, op.kids[0]) == want) return want;
      }
      return !want;
    }
    case NodeKind::SoExists:
    case NodeKind::SoForall: {
      const bool want = op.kind == NodeKind::SoExists;
      if (checked_pow(c.n, op.arity) >= 63)
        fail(ErrorCode::InvalidArgument, "second-order quantifier ranges over too many relations");
      Relation r(op.arity, static_cast<int>(c.n));
      c.rels[static_cast<std::size_t>(op.bound_rel)] = &r;
      bool result = !want;
      do {
        if (eval(c, op.kids[0]) == want) {
          result = want;
          break;
        }
      } while (r.increment());
      return result;
    }
    case NodeKind::Tc: return eval_tc(c, op);
    case NodeKind::Lfp:
    case NodeKind::Pfp: {
      const std::size_t args = tuple_index(c, op.as, 0, op.as.size());
      if (op.memo >= 0) {
        auto& m = c.memo[static_cast<std::size_t>(op.memo)];
        if (!m) m = fixpoint(c, op);
        return m->test(args);
      }
      return fixpoint(c, op).test(args);
    }
    case NodeKind::Char: {
      if (c.p.options.char_budget <= 0)
        fail(ErrorCode::RecursionBudgetExhausted, "CHAR leaf nested beyond the recursion budget");
      return detail::char_leaf_holds(c.a, *op.node, c.p.options.char_budget - 1, c.p.options.cache.get());
    }
  }
  return false;
}

}  // namespace

ModelChecker::ModelChecker(const Formula& f, const Vocabulary& vocab, EvalOptions options)
    : ModelChecker(f, vocab, Assignment{}, std::move(options)) {}

ModelChecker::ModelChecker(const Formula& f, const Vocabulary& vocab, const Assignment& free_shape,
                           EvalOptions options)
    : program_(std::make_unique<Program>()) {
  if (f.empty()) fail(ErrorCode::IllFormedFormula, "empty formula");
  program_->vocab = vocab;
  program_->options = std::move(options);
  program_->source = f;
  Compiler compiler(*program_);
  compiler.declare_free(free_shape);
  program_->root = compiler.compile(f);
}

ModelChecker::~ModelChecker() = default;
ModelChecker::ModelChecker(ModelChecker&&) noexcept = default;
ModelChecker& ModelChecker::operator=(ModelChecker&&) noexcept = default;

bool ModelChecker::operator()(const Structure& a) const { return (*this)(a, Assignment{}); }

bool ModelChecker::operator()(const Structure& a, const Assignment& assignment) const {
  const Program& p = *program_;
  if (a.vocab() != p.vocab)
    fail(ErrorCode::VocabMismatch, "structure over " + a.vocab().to_string() + ", formula over " + p.vocab.to_string());
  Ctx c{p, a, static_cast<std::size_t>(a.size()), std::vector<Element>(static_cast<std::size_t>(p.var_slots), 0),
        std::vector<const Relation*>(static_cast<std::size_t>(p.rel_slots), nullptr),
        std::vector<std::optional<Relation>>(static_cast<std::size_t>(p.memo_slots))};
  for (std::size_t i = 0; i < p.vocab.size(); ++i) c.rels[i] = &a.relation(i);
  for (const auto& [name, slot] : p.free_vars) {
    const auto it = assignment.vars.find(name);
    if (it == assignment.vars.end()) fail(ErrorCode::InvalidArgument, "no value for free variable " + name);
    if (it->second < 0 || it->second >= a.size()) fail(ErrorCode::InvalidArgument, "value of " + name + " out of range");
    c.env[static_cast<std::size_t>(slot)] = it->second;
  }
  for (const auto& [name, arity, slot] : p.free_rels) {
    const auto it = assignment.relations.find(name);
    if (it == assignment.relations.end()) fail(ErrorCode::InvalidArgument, "no value for relation variable " + name);
    if (it->second.arity() != arity || it->second.universe() != a.size())
      fail(ErrorCode::InvalidArgument, "relation variable " + name + " has the wrong shape");
    c.rels[static_cast<std::size_t>(slot)] = &it->second;
  }
  return eval(c, p.root);
}

bool models(const Structure& a, const Formula& f, const EvalOptions& options) {
  return ModelChecker(f, a.vocab(), options)(a);
}

bool models(const Structure& a, const Formula& f, const Assignment& assignment, const EvalOptions& options) {
  return ModelChecker(f, a.vocab(), assignment, options)(a, assignment);
}

std::optional<Structure> find_first_structure(const Vocabulary& vocab, int n_max,
                                              const std::function<bool(const Structure&)>& pred, unsigned jobs) {
  std::optional<Structure> found;
  if (jobs <= 1) {
    for_each_structure(vocab, n_max, [&](const Structure& s) {
      if (!pred(s)) return true;
      found = s;
      return false;
    });
    return found;
  }
  // Ordered parallelism: check a batch concurrently, then scan it in order.
  const std::size_t batch_size = 64 * static_cast<std::size_t>(jobs);
  std::vector<Structure> batch;
  auto flush = [&]() -> bool {
    std::vector<std::uint8_t> hit(batch.size(), 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
          for (std::size_t i = next++; i < batch.size(); i = next++) {
            try {
              hit[i] = pred(batch[i]) ? 1 : 0;
            } catch (...) {
              std::lock_guard lock(error_mu);
              if (!error) error = std::current_exception();
            }
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (hit[i]) {
        found = batch[i];
        return false;
      }
    }
    batch.clear();
    return true;
  };
  bool more = for_each_structure(vocab, n_max, [&](const Structure& s) {
    batch.push_back(s);
    return batch.size() < batch_size || flush();
  });
  if (more && !batch.empty()) flush();
  return found;
}

std::optional<Structure> valid_upto(const Formula& f, const Vocabulary& vocab, int n_max, const EvalOptions& options,
                                    unsigned jobs) {
  const ModelChecker check(f, vocab, options);
  return find_first_structure(vocab, n_max, [&](const Structure& s) { return !check(s); }, jobs);
}

std::optional<Structure> mod_eq_upto(const Formula& f, const Formula& g, const Vocabulary& vocab, int n_max,
                                     const EvalOptions& options, unsigned jobs) {
  const ModelChecker cf(f, vocab, options);
  const ModelChecker cg(g, vocab, options);
  return find_first_structure(vocab, n_max, [&](const Structure& s) { return cf(s) != cg(s); }, jobs);
}

}  // namespace fmw

#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fmw/error.hpp"
#include "fmw/godel.hpp"
#include "fmw/syntax.hpp"

namespace fmw::testing {

namespace {

using TupleSet = std::set<Tuple>;

struct Env {
  std::vector<std::pair<std::string, int>> vars;
  std::vector<std::pair<std::string, TupleSet>> rels;

  int var(const std::string& name) const {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (it->first == name) return it->second;
    throw std::logic_error("naive evaluator: unbound variable " + name);
  }
  const TupleSet* rel(const std::string& name) const {
    for (auto it = rels.rbegin(); it != rels.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
};

std::vector<Tuple> all_tuples(int n, int arity) {
  std::vector<Tuple> out;
  Tuple t(static_cast<std::size_t>(arity), 0);
  while (true) {
    out.push_back(t);
    int i = arity - 1;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] == n) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return out;
  }
}

Tuple values(const Env& env, const std::vector<std::string>& names, std::size_t from, std::size_t count) {
  Tuple t;
  for (std::size_t i = from; i < from + count; ++i) t.push_back(env.var(names[i]));
  return t;
}

bool holds(const Structure& a, const Formula& f, Env& env);

bool holds_with_vars(const Structure& a, const Formula& body, Env& env, const std::vector<std::string>& names,
                     const Tuple& vals) {
  for (std::size_t i = 0; i < names.size(); ++i) env.vars.emplace_back(names[i], vals[i]);
  const bool r = holds(a, body, env);
  env.vars.resize(env.vars.size() - names.size());
  return r;
}

TupleSet stage(const Structure& a, const Formula& f, Env& env, const TupleSet& current) {
  TupleSet next;
  env.rels.emplace_back(f.name(), current);
  for (const auto& t : all_tuples(a.size(), static_cast<int>(f.vars().size())))
    if (holds_with_vars(a, f.child(), env, f.vars(), t)) next.insert(t);
  env.rels.pop_back();
  return next;
}

bool holds(const Structure& a, const Formula& f, Env& env) {
  const int n = a.size();
  switch (f.kind()) {
    case NodeKind::Atom: {
      const Tuple t = values(env, f.vars(), 0, f.vars().size());
      if (const auto* r = env.rel(f.name())) return r->count(t) > 0;
      return a.relation(f.name()).contains(t);
    }
    case NodeKind::Eq: return env.var(f.vars()[0]) == env.var(f.vars()[1]);
    case NodeKind::Neq: return env.var(f.vars()[0]) != env.var(f.vars()[1]);
    case NodeKind::Less: return env.var(f.vars()[0]) < env.var(f.vars()[1]);
    case NodeKind::Bit: return ((env.var(f.vars()[0]) >> env.var(f.vars()[1])) & 1) == 1;
    case NodeKind::Not: return !holds(a, f.child(), env);
    case NodeKind::And: return holds(a, f.child(0), env) && holds(a, f.child(1), env);
    case NodeKind::Or: return holds(a, f.child(0), env) || holds(a, f.child(1), env);
    case NodeKind::Implies: return !holds(a, f.child(0), env) || holds(a, f.child(1), env);
    case NodeKind::Exists:
    case NodeKind::Forall: {
      const bool want = f.kind() == NodeKind::Exists;
      for (int v = 0; v < n; ++v) {
        env.vars.emplace_back(f.name(), v);
        const bool r = holds(a, f.child(), env);
        env.vars.pop_back();
        if (r == want) return want;
      }
      return !want;
    }
    case NodeKind::SoExists:
    case NodeKind::SoForall: {
      const bool want = f.kind() == NodeKind::SoExists;
      const auto tuples = all_tuples(n, f.arity());
      if (tuples.size() > 24) throw std::logic_error("naive evaluator: SO quantifier too large");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tuples.size()); ++mask) {
        TupleSet q;
        for (std::size_t i = 0; i < tuples.size(); ++i)
          if ((mask >> i) & 1) q.insert(tuples[i]);
        env.rels.emplace_back(f.name(), std::move(q));
        const bool r = holds(a, f.child(), env);
        env.rels.pop_back();
        if (r == want) return want;
      }
      return !want;
    }
    case NodeKind::Tc: {
      const std::size_t k = f.vars().size() / 2;
      const auto tuples = all_tuples(n, static_cast<int>(k));
      const std::size_t m = tuples.size();
      std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
      for (std::size_t i = 0; i < m; ++i) {
        reach[i][i] = 1;
        for (std::size_t j = 0; j < m; ++j) {
          Tuple both = tuples[i];
          both.insert(both.end(), tuples[j].begin(), tuples[j].end());
          if (holds_with_vars(a, f.child(), env, f.vars(), both)) reach[i][j] = 1;
        }
      }
      for (std::size_t via = 0; via < m; ++via)
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            if (reach[i][via] && reach[via][j]) reach[i][j] = 1;
      const Tuple s = values(env, f.args(), 0, k);
      const Tuple t = values(env, f.args(), k, k);
      const auto at = [&](const Tuple& x) {
        return static_cast<std::size_t>(std::find(tuples.begin(), tuples.end(), x) - tuples.begin());
      };
      return reach[at(s)][at(t)] != 0;
    }
    case NodeKind::Lfp: {
      TupleSet cur;
      while (true) {
        TupleSet next = stage(a, f, env, cur);
        if (next == cur) break;
        cur = std::move(next);
      }
      return cur.count(values(env, f.args(), 0, f.args().size())) > 0;
    }
    case NodeKind::Pfp: {
      const std::size_t slots = all_tuples(n, static_cast<int>(f.vars().size())).size();
      const std::uint64_t limit = slots >= 63 ? UINT64_MAX : (std::uint64_t{1} << slots);
      TupleSet cur;
      for (std::uint64_t step = 0; step <= limit; ++step) {
        TupleSet next = stage(a, f, env, cur);
        if (next == cur) return cur.count(values(env, f.args(), 0, f.args().size())) > 0;
        cur = std::move(next);
      }
      return false;
    }
    case NodeKind::Char: throw std::logic_error("naive evaluator: CHAR leaves are not supported");
  }
  return false;
}

std::size_t encoded_bits(const Vocabulary& vocab, int n) {
  std::size_t total = 0;
  for (const auto& s : vocab.symbols()) {
    std::size_t p = 1;
    for (int i = 0; i < s.arity; ++i) p *= static_cast<std::size_t>(n);
    total += p;
  }
  return total;
}

/// Calls visit on every structure of every size 2..bound, built by decoding
/// each bit string of the right length. Stops when visit returns false.
bool every_structure(const Vocabulary& vocab, std::uint64_t bound, const std::function<bool(const Structure&)>& visit) {
  for (std::uint64_t n = 2; n <= bound; ++n) {
    const std::size_t len = encoded_bits(vocab, static_cast<int>(n));
    if (len > 22) throw std::logic_error("literal set check: universe too large");
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      std::string bits(len, '0');
      for (std::size_t i = 0; i < len; ++i)
        if ((code >> (len - 1 - i)) & 1) bits[i] = '1';
      if (!visit(decode_bin(vocab, bits))) return false;
    }
  }
  return true;
}

bool literal_reduction(const Structure& a, unsigned k, const Formula& gamma, const OracleMachine& t,
                       const Formula& upsilon_tau) {
  const auto bound = iterated_bit_length(encode_bin(a).size(), k);
  const Vocabulary& vocab = a.vocab();
  const OracleFn oracle = [&](std::string_view q) {
    try {
      return naive_models(decode_bin(vocab, q), gamma);
    } catch (const Error&) {
      return false;
    }
  };
  return every_structure(vocab, bound, [&](const Structure& b) {
    const bool accepts = simulate(t, encode_bin(b), oracle).accepted;
    return accepts == naive_models(b, upsilon_tau);
  });
}

}  // namespace

bool naive_models(const Structure& a, const Formula& f) {
  Env env;
  return holds(a, f, env);
}

std::set<std::pair<int, int>> bfs_closure(const Relation& e) {
  const int n = e.universe();
  std::set<std::pair<int, int>> out;
  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      out.emplace(s, u);
      for (int v = 0; v < n; ++v) {
        if (!seen[static_cast<std::size_t>(v)] && e.contains(std::vector<int>{u, v})) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  return out;
}

bool two_colorable_bruteforce(const Structure& g) {
  const int n = g.size();
  const auto& e = g.relation("E");
  for (std::uint32_t color = 0; color < (1u << n); ++color) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (e.contains(std::vector<int>{u, v}) && ((color >> u) & 1) == ((color >> v) & 1)) ok = false;
    if (ok) return true;
  }
  return false;
}

bool naive_isomorphic(const Structure& a, const Structure& b) {
  if (!(a.vocab() == b.vocab()) || a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.vocab().has_order() && !std::is_sorted(perm.begin(), perm.end())) continue;
    if (a.permuted(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::set<std::string> derivable_strings(const Grammar& g, int max_steps, int max_len) {
  // A sentential form is a vector of symbols; nonterminals are encoded as
  // negative numbers -1 - index so forms can live in a std::set.
  using Form = std::vector<int>;
  std::set<std::string> out;
  std::set<Form> seen;
  std::vector<Form> frontier{{-1 - g.start()}};
  seen.insert(frontier.front());
  for (int step = 0; step <= max_steps && !frontier.empty(); ++step) {
    std::vector<Form> next;
    for (const auto& form : frontier) {
      const auto nt = std::find_if(form.begin(), form.end(), [](int s) { return s < 0; });
      if (nt == form.end()) {
        out.emplace(form.begin(), form.end());
        continue;
      }
      if (step == max_steps) continue;
      const int lhs = -1 - *nt;
      for (const auto& p : g.productions()) {
        if (p.lhs != lhs) continue;
        Form f(form.begin(), nt);
        for (const auto& s : p.rhs) f.push_back(s.terminal ? static_cast<unsigned char>(s.ch) : -1 - s.nt);
        f.insert(f.end(), nt + 1, form.end());
        const auto terminals = std::count_if(f.begin(), f.end(), [](int s) { return s >= 0; });
        const auto pending = static_cast<long>(f.size()) - terminals;
        if (terminals > max_len || step + 1 + pending > max_steps) continue;
        if (seen.insert(f).second) next.push_back(std::move(f));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::string> all_words(const std::string& alphabet, int max_len) {
  std::vector<std::string> out{""};
  std::size_t from = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    from = to;
  }
  return out;
}

std::uint64_t iterated_bit_length(std::uint64_t x, unsigned k) {
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t len = 0;
    while (x > 0) {
      ++len;
      x >>= 1;
    }
    x = len;
  }
  return x;
}

bool literal_S_ord(const Structure& a, const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau) {
  return literal_reduction(a, 3, gamma, t, upsilon_tau);
}

bool literal_S_unord(const Structure& a, const Formula& gamma, const OracleMachine& t, const Formula& upsilon_tau) {
  return literal_reduction(a, 2, gamma, t, upsilon_tau);
}

bool literal_S_npconp(const Structure& a, const Formula& lambda, const Formula& gamma) {
  const auto bound = iterated_bit_length(encode_bin(a).size(), 2);
  return every_structure(a.vocab(), bound,
                         [&](const Structure& b) { return naive_models(b, lambda) != naive_models(b, gamma); });
}

bool literal_S_cfg(const Structure& a, const Grammar& g) {
  const auto bound = static_cast<int>(iterated_bit_length(encode_bin(a).size(), 3));
  const auto language = derivable_strings(g, 4 * bound + 4, bound);
  for (const auto& w : all_words(g.alphabet(), bound))
    if (!language.count(w)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Random sentences

std::string FormulaGen::pick(const std::vector<std::string>& scope) {
  return scope[std::uniform_int_distribution<std::size_t>(0, scope.size() - 1)(rng)];
}

Formula FormulaGen::gen(int depth, std::vector<std::string>& scope, std::vector<std::pair<std::string, int>>& rels) {
  auto roll = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  auto fresh = [&](const char* stem) { return std::string(stem) + std::to_string(++counter_); };
  auto quantify = [&](bool exists) {
    const auto v = fresh("x");
    scope.push_back(v);
    Formula body = gen(depth - 1, scope, rels);
    scope.pop_back();
    return exists ? Formula::exists(v, body) : Formula::forall(v, body);
  };
  if (scope.empty()) return quantify(roll(2) == 0);
  if (depth <= 0 || roll(4) == 0) {
    const int numeric_kinds = !numeric ? 0 : vocab.has_order() ? 4 : 2;
    const int choice = roll(static_cast<int>(vocab.size() + rels.size()) + numeric_kinds);
    if (choice < static_cast<int>(vocab.size() + rels.size())) {
      const bool own = choice < static_cast<int>(vocab.size());
      const std::string name = own ? vocab[static_cast<std::size_t>(choice)].name : rels[static_cast<std::size_t>(choice) - vocab.size()].first;
      const int arity = own ? vocab[static_cast<std::size_t>(choice)].arity : rels[static_cast<std::size_t>(choice) - vocab.size()].second;
      std::vector<std::string> args;
      for (int i = 0; i < arity; ++i) args.push_back(pick(scope));
      return Formula::atom(name, std::move(args));
    }
    const auto x = pick(scope), y = pick(scope);
    switch (choice - static_cast<int>(vocab.size() + rels.size())) {
      case 0: return Formula::eq(x, y);
      case 1: return Formula::neq(x, y);
      case 2: return Formula::less(x, y);
      default: return Formula::bit(x, y);
    }
  }
  const int shapes = fixpoints ? 9 : 6;
  switch (roll(shapes)) {
    case 0: return Formula::negation(gen(depth - 1, scope, rels));
    case 1: return Formula::conjunction(gen(depth - 1, scope, rels), gen(depth - 1, scope, rels));
    case 2: return Formula::disjunction(gen(depth - 1, scope, rels), gen(depth - 1, scope, rels));
    case 3:
      if (implies) return Formula::implication(gen(depth - 1, scope, rels), gen(depth - 1, scope, rels));
      return Formula::negation(gen(depth - 1, scope, rels));
    case 4: return quantify(true);
    case 5: return quantify(false);
    case 6: {
      const auto x = fresh("s"), y = fresh("t");
      scope.push_back(x);
      scope.push_back(y);
      Formula body = gen(depth - 1, scope, rels);
      scope.resize(scope.size() - 2);
      return Formula::tc({x, y}, body, {pick(scope), pick(scope)});
    }
    case 7: {
      // Positive by construction: Q occurs once, under no negation.
      const auto q = fresh("L"), x = fresh("u"), y = fresh("w");
      scope.push_back(x);
      Formula base = gen(depth - 2, scope, rels);
      scope.push_back(y);
      Formula step = gen(depth - 2, scope, rels);
      scope.resize(scope.size() - 2);
      Formula body = Formula::disjunction(
          base, Formula::exists(y, Formula::conjunction(step, Formula::atom(q, {y}))));
      return Formula::lfp(q, {x}, body, {pick(scope)});
    }
    default: {
      const auto q = fresh("P"), x = fresh("u");
      scope.push_back(x);
      rels.emplace_back(q, 1);
      Formula body = gen(depth - 1, scope, rels);
      rels.pop_back();
      scope.pop_back();
      return Formula::pfp(q, {x}, body, {pick(scope)});
    }
  }
}

Formula FormulaGen::sentence() {
  std::vector<std::string> scope;
  std::vector<std::pair<std::string, int>> rels;
  return gen(max_depth, scope, rels);
}

Formula FormulaGen::so_sentence(bool existential, int block) {
  std::vector<std::string> scope;
  std::vector<std::pair<std::string, int>> rels;
  std::vector<std::pair<std::string, int>> bound;
  for (int i = 0; i < block; ++i) {
    bound.emplace_back("Q" + std::to_string(++counter_), 1 + std::uniform_int_distribution<int>(0, 1)(rng));
    rels.push_back(bound.back());
  }
  const bool saved = fixpoints;
  fixpoints = false;
  Formula body = gen(max_depth, scope, rels);
  fixpoints = saved;
  for (auto it = bound.rbegin(); it != bound.rend(); ++it)
    body = existential ? Formula::so_exists(it->first, it->second, body)
                       : Formula::so_forall(it->first, it->second, body);
  return body;
}

// ---------------------------------------------------------------------------
// Random machines

OracleMachine random_machine(std::mt19937_64& rng, MachineKind kind) {
  auto roll = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  OracleMachine::Spec s;
  s.states = 5 + roll(4);
  s.start = 0;
  s.accept = 1;
  s.query = 2;
  s.yes = roll(2) == 0 ? 1 : 3;
  s.no = 4;
  s.kind = kind;
  s.clock_c = 1 + roll(3);
  s.step_c = 1 + roll(3);
  for (int q = 0; q < s.states; ++q) {
    if (q == s.accept || q == s.query) continue;
    for (int in = 0; in < 3; ++in) {
      for (int st = 0; st < 3; ++st) {
        if (roll(3) == 0) continue;
        Transition t;
        t.from = q;
        t.input = static_cast<Sym>(in);
        t.storage = static_cast<Sym>(st);
        t.to = roll(s.states);
        t.write = static_cast<Sym>(roll(3));
        t.input_move = static_cast<Move>(roll(3));
        t.storage_move = static_cast<Move>(roll(3));
        t.oracle = static_cast<OracleOut>(roll(3));
        s.transitions.push_back(t);
      }
    }
  }
  return OracleMachine(std::move(s));
}

// ---------------------------------------------------------------------------
// Mutations

Formula with_children(const Formula& f, std::vector<Formula> c) {
  switch (f.kind()) {
    case NodeKind::Not: return Formula::negation(c.at(0));
    case NodeKind::And: return Formula::conjunction(c.at(0), c.at(1));
    case NodeKind::Or: return Formula::disjunction(c.at(0), c.at(1));
    case NodeKind::Implies: return Formula::implication(c.at(0), c.at(1));
    case NodeKind::Exists: return Formula::exists(f.name(), c.at(0));
    case NodeKind::Forall: return Formula::forall(f.name(), c.at(0));
    case NodeKind::SoExists: return Formula::so_exists(f.name(), f.arity(), c.at(0));
    case NodeKind::SoForall: return Formula::so_forall(f.name(), f.arity(), c.at(0));
    case NodeKind::Tc: return Formula::tc(f.vars(), c.at(0), f.args());
    case NodeKind::Lfp: return Formula::lfp(f.name(), f.vars(), c.at(0), f.args());
    case NodeKind::Pfp: return Formula::pfp(f.name(), f.vars(), c.at(0), f.args());
    default: return f;
  }
}

namespace {

std::vector<Formula> local_mutations(const Formula& f) {
  std::vector<Formula> out;
  auto attempt = [&](const std::function<Formula()>& make) {
    try {
      out.push_back(make());
    } catch (const Error&) {
    }
  };
  out.push_back(Formula::negation(f));
  switch (f.kind()) {
    case NodeKind::Not: out.push_back(f.child()); break;
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Implies:
      for (auto k : {NodeKind::And, NodeKind::Or, NodeKind::Implies}) {
        if (k == f.kind()) continue;
        if (k == NodeKind::And) out.push_back(Formula::conjunction(f.child(0), f.child(1)));
        if (k == NodeKind::Or) out.push_back(Formula::disjunction(f.child(0), f.child(1)));
        if (k == NodeKind::Implies) out.push_back(Formula::implication(f.child(0), f.child(1)));
      }
      out.push_back(with_children(f, {f.child(1), f.child(0)}));
      break;
    case NodeKind::Exists: out.push_back(Formula::forall(f.name(), f.child())); break;
    case NodeKind::Forall: out.push_back(Formula::exists(f.name(), f.child())); break;
    case NodeKind::SoExists: out.push_back(Formula::so_forall(f.name(), f.arity(), f.child())); break;
    case NodeKind::SoForall: out.push_back(Formula::so_exists(f.name(), f.arity(), f.child())); break;
    case NodeKind::Eq: out.push_back(Formula::neq(f.vars()[0], f.vars()[1])); break;
    case NodeKind::Neq: out.push_back(Formula::eq(f.vars()[0], f.vars()[1])); break;
    case NodeKind::Atom: {
      auto args = f.vars();
      std::reverse(args.begin(), args.end());
      if (args != f.vars()) out.push_back(Formula::atom(f.name(), args));
      out.push_back(Formula::atom(f.name() + "X", f.vars()));
      break;
    }
    case NodeKind::Char: {
      const auto& p = f.payloads();
      if (p.size() == 3) {
        for (auto k : {CharKind::Ord, CharKind::Unord, CharKind::CoUnord})
          if (k != f.char_kind()) attempt([&] { return Formula::char_leaf(k, p); });
        attempt([&] { return Formula::char_leaf(f.char_kind(), {p[0], encode_tm(reject_machine()), p[2]}); });
        attempt([&] { return Formula::char_leaf(f.char_kind(), {p[2], p[1], p[0]}); });
      } else if (p.size() == 2) {
        attempt([&] { return Formula::char_leaf(f.char_kind(), {p[1], p[0]}); });
        attempt([&] { return Formula::char_leaf(f.char_kind(), {p[0], p[0]}); });
      }
      break;
    }
    default: break;
  }
  out.erase(std::remove_if(out.begin(), out.end(), [&](const Formula& m) { return m == f; }), out.end());
  return out;
}

void mutate_into(const Formula& f, std::vector<Formula>& out) {
  for (auto& m : local_mutations(f)) out.push_back(std::move(m));
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    std::vector<Formula> inner;
    mutate_into(f.child(i), inner);
    for (auto& m : inner) {
      auto kids = f.children();
      kids[i] = std::move(m);
      out.push_back(with_children(f, std::move(kids)));
    }
  }
}

}  // namespace

std::vector<Formula> single_node_mutations(const Formula& f) {
  std::vector<Formula> out;
  mutate_into(f, out);
  return out;
}

namespace {

// by_size[s] holds every formula with exactly s nodes whose free variables lie
// among x1..x{depth}.
std::vector<std::vector<Formula>> formulas_by_size(int max_nodes, int depth) {
  std::vector<std::vector<Formula>> by_size(static_cast<std::size_t>(max_nodes + 1));
  if (max_nodes < 1) return by_size;
  std::vector<std::vector<Formula>> deeper;
  if (max_nodes >= 2) deeper = formulas_by_size(max_nodes - 1, depth + 1);
  for (int i = 1; i <= depth; ++i) {
    for (int j = 1; j <= depth; ++j) {
      const auto a = "x" + std::to_string(i), b = "x" + std::to_string(j);
      by_size[1].push_back(Formula::atom("E", {a, b}));
      by_size[1].push_back(Formula::eq(a, b));
      by_size[1].push_back(Formula::neq(a, b));
    }
  }
  const auto var = "x" + std::to_string(depth + 1);
  for (int s = 2; s <= max_nodes; ++s) {
    auto& out = by_size[static_cast<std::size_t>(s)];
    for (const auto& f : by_size[static_cast<std::size_t>(s - 1)]) out.push_back(Formula::negation(f));
    for (int l = 1; l + 1 < s; ++l) {
      for (const auto& a : by_size[static_cast<std::size_t>(l)]) {
        for (const auto& b : by_size[static_cast<std::size_t>(s - 1 - l)]) {
          out.push_back(Formula::conjunction(a, b));
          out.push_back(Formula::disjunction(a, b));
          out.push_back(Formula::implication(a, b));
        }
      }
    }
    for (const auto& body : deeper[static_cast<std::size_t>(s - 1)]) {
      out.push_back(Formula::exists(var, body));
      out.push_back(Formula::forall(var, body));
    }
  }
  return by_size;
}

}  // namespace

std::vector<Formula> small_fo_sentences(int max_nodes) {
  std::vector<Formula> out;
  for (auto& bucket : formulas_by_size(max_nodes, 0))
    for (auto& f : bucket) out.push_back(std::move(f));
  return out;
}

Formula two_colorability() {
  return parse_formula("EC:1 Ax Ay (E(x,y) -> ((C(x) & ~C(y)) | (~C(x) & C(y))))");
}

}  // namespace fmw::testing

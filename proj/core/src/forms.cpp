#include "fmw/forms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fmw/charsets.hpp"
#include "fmw/error.hpp"
#include "fmw/godel.hpp"
#include "fmw/operators.hpp"
#include "fmw/prefix_code.hpp"
#include "fmw/psi.hpp"

namespace fmw {

std::string_view to_string(FormKind k) {
  switch (k) {
    case FormKind::Ord2: return "ord2";
    case FormKind::Unord4: return "unord4";
    case FormKind::Ord5: return "ord5";
    case FormKind::Unord6: return "unord6";
    case FormKind::NpConp8: return "npconp8";
  }
  return "?";
}

std::optional<FormKind> parse_form_kind(std::string_view text) {
  for (auto k : {FormKind::Ord2, FormKind::Unord4, FormKind::Ord5, FormKind::Unord6, FormKind::NpConp8}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

bool is_ordered(FormKind k) noexcept { return k == FormKind::Ord2 || k == FormKind::Ord5; }

MachineKind machine_kind_for(ComplexityClass c) {
  return c == ComplexityClass::NL || c == ComplexityClass::P ? MachineKind::Logspace : MachineKind::Polytime;
}

namespace {

bool has_psi(FormKind k) { return k == FormKind::Ord5 || k == FormKind::Unord6 || k == FormKind::NpConp8; }

void require_plain_sentence(const Formula& f, const Vocabulary& tau, Fragment logic, const char* what) {
  if (f.empty()) fail(ErrorCode::InvalidArgument, std::string(what) + " is empty");
  if (f.contains_char()) fail(ErrorCode::PayloadNotCharFree, std::string(what) + " contains a CHAR leaf");
  check_sentence(f, tau);
  if (!in_fragment(f, logic))
    fail(ErrorCode::FragmentMismatch, std::string(what) + " is " + std::string(to_string(fragment_of(f))) +
                                          ", not in " + std::string(to_string(logic)));
}

void check_target(FormKind kind, ComplexityClass cls, const Vocabulary& tau) {
  if (is_ordered(kind)) {
    if (!tau.has_order()) fail(ErrorCode::NoOrderInTarget, "ordered forms need < in " + tau.to_string());
    return;
  }
  if (tau.has_order()) fail(ErrorCode::OrderInTarget, "unordered forms need a vocabulary without <");
  if (std::none_of(tau.symbols().begin(), tau.symbols().end(), [](const Symbol& s) { return s.arity > 1; }))
    fail(ErrorCode::AristotelianTarget, tau.to_string() + " is Aristotelian");
  if (cls != ComplexityClass::NP && cls != ComplexityClass::CoNP && cls != ComplexityClass::PSPACE)
    fail(ErrorCode::InvalidArgument, "unordered forms exist for NP, coNP and PSPACE only");
}

Formula move_upsilon(FormKind kind, const Formula& upsilon, const Vocabulary& tau) {
  return is_ordered(kind) ? apply_T_ord(upsilon, tau) : apply_T_unord(upsilon, tau);
}

}  // namespace

CanonicalForm build_form(FormKind kind, ComplexityClass cls, const Formula& gamma, const FormExtra& extra,
                         const Vocabulary& tau, const Formula& upsilon) {
  CanonicalForm out;
  out.kind = kind;
  out.cls = cls;
  out.tau = tau;
  out.gamma = gamma;
  if (kind == FormKind::NpConp8) {
    const auto* lambda = std::get_if<Formula>(&extra);
    if (!lambda) fail(ErrorCode::InvalidArgument, "npconp8 needs a sentence Lambda");
    require_plain_sentence(gamma, tau, Fragment::SOExists, "Gamma");
    require_plain_sentence(*lambda, tau, Fragment::SOExists, "Lambda");
    out.lambda = *lambda;
    out.formula = Formula::disjunction(Formula::conjunction(char_npconp(*lambda, gamma), gamma),
                                       psi_encode(godel_encode(*lambda)));
    return out;
  }
  check_target(kind, cls, tau);
  const auto* t = std::get_if<OracleMachine>(&extra);
  if (!t) fail(ErrorCode::InvalidArgument, std::string(to_string(kind)) + " needs an oracle machine");
  if (t->kind() != machine_kind_for(cls))
    fail(ErrorCode::MachineKindMismatch, std::string(to_string(cls)) + " needs a " +
                                             std::string(to_string(machine_kind_for(cls))) + " machine");
  require_plain_sentence(gamma, tau, logic_of(cls), "Gamma");
  out.machine = *t;
  out.upsilon_tau = move_upsilon(kind, upsilon, tau);
  const Formula& u = out.upsilon_tau;
  Formula core;
  if (is_ordered(kind)) {
    const Formula g = char_ord(gamma, *t, u);
    core = Formula::disjunction(Formula::conjunction(g, gamma), Formula::conjunction(Formula::negation(g), u));
  } else {
    core = Formula::disjunction(Formula::conjunction(char_unord(gamma, *t, u), gamma),
                                Formula::conjunction(cochar_unord(gamma, *t, u), u));
  }
  out.formula = has_psi(kind) ? Formula::disjunction(core, psi_encode(encode_tm(*t))) : core;
  return out;
}

std::optional<CanonicalForm> recognize(FormKind kind, ComplexityClass cls, const Formula& phi,
                                       const Vocabulary& tau, const Formula& upsilon) {
  try {
    if (phi.empty()) return std::nullopt;
    Formula core = phi;
    std::optional<BitString> w;
    if (has_psi(kind)) {
      if (phi.kind() != NodeKind::Or) return std::nullopt;
      w = psi_recognize(phi.child(1));
      if (!w) return std::nullopt;
      core = phi.child(0);
    }
    if (kind == FormKind::NpConp8) {
      if (core.kind() != NodeKind::And) return std::nullopt;
      auto built = build_form(kind, cls, core.child(1), godel_decode(*w), tau, upsilon);
      if (built.formula == phi) return built;
      return std::nullopt;
    }
    if (core.kind() != NodeKind::Or || core.child(0).kind() != NodeKind::And) return std::nullopt;
    const Formula& leaf = core.child(0).child(0);
    if (leaf.kind() != NodeKind::Char || leaf.payloads().size() != 3) return std::nullopt;
    // With psi the machine comes from the encoding sentence, otherwise from the
    // characteristic leaf; the rebuilt leaf must match either way.
    const OracleMachine t = decode_tm(w ? *w : leaf.payloads()[1]);
    auto built = build_form(kind, cls, core.child(0).child(1), t, tau, upsilon);
    if (built.formula == phi) return built;
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

std::size_t nat_bits(std::uint64_t x) { return encode_nat(x).size(); }

BitString nat_code(std::uint64_t x) { return encode_nat(x); }

BitString name_code(const std::string& n) {
  BitWriter out;
  write_name(out, n);
  return std::move(out).str();
}

// Names of the given style whose codes fit in `budget` bits, shortest first.
std::vector<std::string> names_within(std::size_t budget, bool relation) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1;; ++len) {
    const std::size_t cost = nat_bits(len) + 6 * len;
    if (cost > budget) break;
    std::vector<std::string> next;
    const std::string first = relation ? "ABCDEFGHIJKLMNOPQRSTUVWXYZ" : "abcdefghijklmnopqrstuvwxyz";
    const std::string rest = relation ? "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_" : "abcdefghijklmnopqrstuvwxyz0123456789_";
    for (const auto& p : layer) {
      for (char c : (len == 1 ? first : rest)) next.push_back(p + c);
    }
    for (const auto& n : next) {
      if (relation ? is_relation_name(n) : is_variable_name(n)) out.push_back(n);
    }
    layer = std::move(next);
  }
  return out;
}

// All codes of CHAR-free formulas over a vocabulary up to a length budget.
// Variables are only used inside their binders and atoms respect arities, so
// every code produced decodes; membership in the logic is checked afterwards.
class FormulaCodes {
 public:
  FormulaCodes(Vocabulary tau, Fragment logic) : tau_(std::move(tau)), logic_(logic) {
    auto allow = [&](NodeKind k) { allowed_.insert(k); };
    for (auto k : {NodeKind::Atom, NodeKind::Eq, NodeKind::Neq, NodeKind::Not, NodeKind::And, NodeKind::Or,
                   NodeKind::Implies, NodeKind::Exists, NodeKind::Forall})
      allow(k);
    if (tau_.has_order()) {
      allow(NodeKind::Less);
      allow(NodeKind::Bit);
    }
    switch (logic_) {
      case Fragment::FO: break;
      case Fragment::FOTC: allow(NodeKind::Tc); break;
      case Fragment::FOLFP:
        allow(NodeKind::Tc);
        allow(NodeKind::Lfp);
        break;
      case Fragment::SOExists: allow(NodeKind::SoExists); break;
      case Fragment::SOForall: allow(NodeKind::SoForall); break;
      case Fragment::SOPFP:
      case Fragment::Other:
        for (auto k : {NodeKind::Tc, NodeKind::Lfp, NodeKind::Pfp, NodeKind::SoExists, NodeKind::SoForall}) allow(k);
        break;
    }
  }

  /// Sentence codes in the logic with length <= max_len, bucketed by length
  /// and sorted within each bucket.
  const std::map<std::size_t, std::vector<BitString>>& upto(std::size_t max_len) {
    if (max_len <= generated_) return by_length_;
    memo_.clear();
    by_length_.clear();
    for (const auto& code : gen(Scope{}, max_len)) {
      Formula f;
      try {
        BitReader in(code);
        f = read_formula(in, DecodeScope{&tau_, false});
        if (!in.at_end()) continue;
        check_sentence(f, tau_);
      } catch (const Error&) {
        continue;
      }
      if (in_fragment(f, logic_)) by_length_[code.size()].push_back(code);
    }
    for (auto& [len, codes] : by_length_) std::sort(codes.begin(), codes.end());
    generated_ = max_len;
    return by_length_;
  }

 private:
  struct Scope {
    std::set<std::string> vars;
    std::map<std::string, int> rels;

    std::string key() const {
      std::string k;
      for (const auto& v : vars) k += v + ",";
      k += ";";
      for (const auto& [r, a] : rels) k += r + ":" + std::to_string(a) + ",";
      return k;
    }
  };

  // Shortest formula code: an (in)equality between two one-letter variables.
  static constexpr std::size_t kMinFormula = 27;

  Vocabulary tau_;
  Fragment logic_;
  std::set<NodeKind> allowed_;
  std::size_t generated_ = 0;
  std::map<std::size_t, std::vector<BitString>> by_length_;
  std::map<std::pair<std::string, std::size_t>, std::vector<BitString>> memo_;

  bool allowed(NodeKind k) const { return allowed_.contains(k); }

  static BitString tag(NodeKind k) { return nat_code(node_tag(k)); }

  // Sequences of `count` names drawn from `pool` whose codes fit in budget.
  static void name_tuples(const std::vector<std::string>& pool, std::size_t count, std::size_t budget, bool distinct,
                          std::vector<std::string>& cur, const std::function<void(const std::vector<std::string>&, std::size_t)>& visit,
                          std::size_t used = 0) {
    if (cur.size() == count) {
      visit(cur, used);
      return;
    }
    for (const auto& n : pool) {
      const std::size_t c = nat_bits(n.size()) + 6 * n.size();
      if (used + c > budget) continue;
      if (distinct && std::find(cur.begin(), cur.end(), n) != cur.end()) continue;
      cur.push_back(n);
      name_tuples(pool, count, budget, distinct, cur, visit, used + c);
      cur.pop_back();
    }
  }

  const std::vector<BitString>& gen(const Scope& s, std::size_t max) {
    const auto key = std::make_pair(s.key(), max);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<BitString> out;
    const std::vector<std::string> vars(s.vars.begin(), s.vars.end());

    auto leaf_pairs = [&](NodeKind k) {
      if (!allowed(k)) return;
      const BitString t = tag(k);
      if (t.size() >= max) return;
      std::vector<std::string> cur;
      name_tuples(vars, 2, max - t.size(), false, cur, [&](const std::vector<std::string>& ns, std::size_t) {
        out.push_back(t + name_code(ns[0]) + name_code(ns[1]));
      });
    };
    for (auto k : {NodeKind::Eq, NodeKind::Neq, NodeKind::Less, NodeKind::Bit}) leaf_pairs(k);

    if (allowed(NodeKind::Atom)) {
      std::map<std::string, int> rels;
      for (const auto& sym : tau_.symbols()) rels[sym.name] = sym.arity;
      for (const auto& [r, a] : s.rels) rels[r] = a;
      const BitString t = tag(NodeKind::Atom);
      for (const auto& [r, a] : rels) {
        const BitString head = t + name_code(r) + nat_code(static_cast<std::uint64_t>(a));
        if (head.size() >= max) continue;
        std::vector<std::string> cur;
        name_tuples(vars, static_cast<std::size_t>(a), max - head.size(), false, cur,
                    [&](const std::vector<std::string>& ns, std::size_t) {
                      BitString code = head;
                      for (const auto& n : ns) code += name_code(n);
                      out.push_back(std::move(code));
                    });
      }
    }

    if (allowed(NodeKind::Not)) {
      const BitString t = tag(NodeKind::Not);
      if (t.size() + kMinFormula <= max) {
        for (const auto& c : gen(s, max - t.size())) out.push_back(t + c);
      }
    }

    for (auto k : {NodeKind::And, NodeKind::Or, NodeKind::Implies}) {
      if (!allowed(k)) continue;
      const BitString t = tag(k);
      if (t.size() + 2 * kMinFormula > max) continue;
      const auto left = gen(s, max - t.size() - kMinFormula);
      for (const auto& l : left) {
        for (const auto& r : gen(s, max - t.size() - l.size())) out.push_back(t + l + r);
      }
    }

    for (auto k : {NodeKind::Exists, NodeKind::Forall}) {
      if (!allowed(k)) continue;
      const BitString t = tag(k);
      if (t.size() + 10 + kMinFormula > max) continue;
      for (const auto& v : names_within(max - t.size() - kMinFormula, false)) {
        const BitString head = t + name_code(v);
        Scope inner = s;
        inner.vars.insert(v);
        for (const auto& c : gen(inner, max - head.size())) out.push_back(head + c);
      }
    }

    for (auto k : {NodeKind::SoExists, NodeKind::SoForall}) {
      if (!allowed(k)) continue;
      const BitString t = tag(k);
      if (t.size() + 10 + 4 + kMinFormula > max) continue;
      for (const auto& r : names_within(max - t.size() - 4 - kMinFormula, true)) {
        for (std::uint64_t a = 1; a <= 64; ++a) {
          const BitString head = t + name_code(r) + nat_code(a);
          if (head.size() + kMinFormula > max) break;
          Scope inner = s;
          inner.rels[r] = static_cast<int>(a);
          for (const auto& c : gen(inner, max - head.size())) out.push_back(head + c);
        }
      }
    }

    for (auto k : {NodeKind::Tc, NodeKind::Lfp, NodeKind::Pfp}) {
      if (!allowed(k)) continue;
      fixpoints(k, s, vars, max, out);
    }

    std::sort(out.begin(), out.end(), [](const BitString& a, const BitString& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return memo_.emplace(key, std::move(out)).first->second;
  }

  void fixpoints(NodeKind k, const Scope& s, const std::vector<std::string>& outer, std::size_t max,
                 std::vector<BitString>& out) {
    const BitString t = tag(k);
    std::vector<std::string> relnames{""};
    if (k != NodeKind::Tc) {
      if (t.size() + 10 > max) return;
      relnames = names_within(max - t.size(), true);
    }
    for (const auto& r : relnames) {
      const BitString head0 = t + (r.empty() ? BitString() : name_code(r));
      for (std::uint64_t count = (k == NodeKind::Tc ? 2 : 1);; count += (k == NodeKind::Tc ? 2 : 1)) {
        const BitString head1 = head0 + nat_code(count);
        // Bound names, body and arguments all cost at least 10 bits per name.
        if (head1.size() + 20 * count + kMinFormula > max) break;
        const auto pool = names_within(max - head1.size() - 10 * count - kMinFormula, false);
        std::vector<std::string> cur;
        name_tuples(pool, count, max - head1.size() - 10 * count - kMinFormula, true, cur,
                    [&](const std::vector<std::string>& bound, std::size_t) {
                      BitString head = head1;
                      for (const auto& n : bound) head += name_code(n);
                      Scope inner = s;
                      for (const auto& n : bound) inner.vars.insert(n);
                      if (!r.empty()) inner.rels[r] = static_cast<int>(count);
                      const std::size_t arg_min = 10 * count;
                      if (head.size() + kMinFormula + arg_min > max) return;
                      for (const auto& body : gen(inner, max - head.size() - arg_min)) {
                        std::vector<std::string> args;
                        name_tuples(outer, count, max - head.size() - body.size(), false, args,
                                    [&](const std::vector<std::string>& as, std::size_t) {
                                      BitString code = head + body;
                                      for (const auto& a : as) code += name_code(a);
                                      out.push_back(std::move(code));
                                    });
                      }
                    });
      }
    }
  }
};

// All canonical codes of machines of one kind up to a length budget.
class MachineCodes {
 public:
  explicit MachineCodes(MachineKind kind) : kind_(kind) {}

  const std::map<std::size_t, std::vector<BitString>>& upto(std::size_t max_len) {
    if (max_len <= generated_) return by_length_;
    by_length_.clear();
    max_ = max_len;
    header();
    for (auto& [len, codes] : by_length_) std::sort(codes.begin(), codes.end());
    generated_ = max_len;
    return by_length_;
  }

 private:
  // Five state fields, the kind bit, two exponents and the transition count.
  static constexpr std::size_t kMinAfterStates = 5 * 4 + 1 + 4 + 4 + 4;
  static constexpr std::size_t kMinTransition = 4 + 2 + 2 + 4 + 2 + 2 + 2 + 2;

  MachineKind kind_;
  std::size_t max_ = 0;
  std::size_t generated_ = 0;
  std::map<std::size_t, std::vector<BitString>> by_length_;

  void header() {
    for (std::uint64_t states = 3; states <= static_cast<std::uint64_t>(kMaxStates); ++states) {
      const BitString code = nat_code(states);
      if (code.size() + kMinAfterStates > max_) break;
      std::vector<int> fields;
      state_fields(static_cast<int>(states), code, fields);
    }
  }

  void state_fields(int states, const BitString& code, std::vector<int>& fields) {
    if (fields.size() == 5) {
      const int acc = fields[1], que = fields[2], yes = fields[3], no = fields[4];
      if (que == acc || que == yes || que == no || yes == no || acc == no) return;
      exponents(states, code + (kind_ == MachineKind::Logspace ? "1" : "0"), fields);
      return;
    }
    const std::size_t rest = (4 - fields.size()) * 4 + 1 + 4 + 4 + 4;
    for (int q = 0; q < states; ++q) {
      const BitString c = nat_code(static_cast<std::uint64_t>(q));
      if (code.size() + c.size() + rest > max_) break;
      fields.push_back(q);
      state_fields(states, code + c, fields);
      fields.pop_back();
    }
  }

  void exponents(int states, const BitString& code, const std::vector<int>& fields) {
    for (std::uint64_t clock = 1; clock <= static_cast<std::uint64_t>(kMaxExponent); ++clock) {
      const BitString c1 = code + nat_code(clock);
      if (c1.size() + 8 > max_) break;
      for (std::uint64_t step = 1; step <= static_cast<std::uint64_t>(kMaxExponent); ++step) {
        const BitString c2 = c1 + nat_code(step);
        if (c2.size() + 4 > max_) break;
        for (std::uint64_t count = 0;; ++count) {
          const BitString c3 = c2 + nat_code(count);
          if (c3.size() + count * kMinTransition > max_) break;
          if (count > static_cast<std::uint64_t>(3 * states * 9)) break;
          transitions(states, fields, c3, count, std::nullopt);
        }
      }
    }
  }

  void transitions(int states, const std::vector<int>& fields, const BitString& code, std::uint64_t left,
                   std::optional<std::tuple<int, int, int>> last) {
    if (left == 0) {
      try {
        decode_tm(code);
      } catch (const Error&) {
        return;
      }
      by_length_[code.size()].push_back(code);
      return;
    }
    const int acc = fields[1], que = fields[2];
    for (int from = last ? std::get<0>(*last) : 0; from < states; ++from) {
      if (from == acc || from == que) continue;
      const BitString cf = code + nat_code(static_cast<std::uint64_t>(from));
      if (cf.size() + left * kMinTransition - 4 > max_) break;
      for (int in = 0; in < 3; ++in) {
        for (int st = 0; st < 3; ++st) {
          const auto k = std::make_tuple(from, in, st);
          if (last && !(*last < k)) continue;
          BitWriter w;
          w.write_fixed(static_cast<std::uint64_t>(in), 2);
          w.write_fixed(static_cast<std::uint64_t>(st), 2);
          const BitString ck = cf + w.str();
          for (int to = 0; to < states; ++to) {
            const BitString ct = ck + nat_code(static_cast<std::uint64_t>(to));
            if (ct.size() + 8 + (left - 1) * kMinTransition > max_) break;
            for (unsigned rest = 0; rest < 81; ++rest) {
              BitWriter r;
              unsigned x = rest;
              for (int f = 0; f < 4; ++f) {
                r.write_fixed(x / 27, 2);
                x = (x % 27) * 3;
              }
              transitions(states, fields, ct + r.str(), left - 1, k);
            }
          }
        }
      }
    }
  }
};

template <class Source>
const std::map<std::size_t, std::vector<BitString>>& grow(Source& src, std::size_t need, std::size_t& have) {
  if (need > have) have = std::max(need, have + 8);
  return src.upto(have);
}

template <class Source>
std::size_t shortest(Source& src, std::size_t& have) {
  for (std::size_t m = 32;; m += 8) {
    const auto& codes = grow(src, m, have);
    if (!codes.empty()) return codes.begin()->first;
    if (m > 4096) fail(ErrorCode::InvalidArgument, "no codes to enumerate");
  }
}

}  // namespace

void enumerate_logic(FormKind kind, ComplexityClass cls, const Vocabulary& tau, const Formula& upsilon,
                     std::size_t budget, const std::function<bool(const CanonicalForm&)>& emit) {
  if (budget == 0) return;
  const bool npconp = kind == FormKind::NpConp8;
  if (!npconp) {
    check_target(kind, cls, tau);
    move_upsilon(kind, upsilon, tau);
  }
  FormulaCodes first(tau, npconp ? Fragment::SOExists : logic_of(cls));
  FormulaCodes second_formulas(tau, Fragment::SOExists);
  MachineCodes second_machines(machine_kind_for(cls));
  std::size_t have1 = 0, have2 = 0;
  auto second = [&](std::size_t need) -> const std::map<std::size_t, std::vector<BitString>>& {
    return npconp ? grow(second_formulas, need, have2) : grow(second_machines, need, have2);
  };
  const std::size_t min1 = shortest(first, have1);
  const std::size_t min2 = npconp ? shortest(second_formulas, have2) : shortest(second_machines, have2);

  std::size_t emitted = 0;
  for (std::size_t total = min1 + min2;; ++total) {
    const auto& c1 = grow(first, total - min2, have1);
    const auto& c2 = second(total - min1);
    std::vector<std::pair<const BitString*, const BitString*>> pairs;
    for (const auto& [l1, codes1] : c1) {
      if (l1 + min2 > total) break;
      auto it = c2.find(total - l1);
      if (it == c2.end()) continue;
      for (const auto& a : codes1) {
        for (const auto& b : it->second) pairs.emplace_back(&a, &b);
      }
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
      return *x.first != *y.first ? *x.first < *y.first : *x.second < *y.second;
    });
    for (const auto& [a, b] : pairs) {
      const Formula gamma = npconp ? godel_decode(*b) : godel_decode(*a);
      const FormExtra extra = npconp ? FormExtra(godel_decode(*a)) : FormExtra(decode_tm(*b));
      if (!emit(build_form(kind, cls, gamma, extra, tau, upsilon))) return;
      if (++emitted == budget) return;
    }
  }
}

std::vector<CanonicalForm> enumerate_logic(FormKind kind, ComplexityClass cls, const Vocabulary& tau,
                                           const Formula& upsilon, std::size_t budget) {
  std::vector<CanonicalForm> out;
  enumerate_logic(kind, cls, tau, upsilon, budget, [&](const CanonicalForm& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace fmw

#include "fmw/godel.hpp"

#include <algorithm>
#include <array>

#include "fmw/error.hpp"

namespace fmw {

namespace {

constexpr std::string_view kNameChars = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
constexpr std::size_t kMaxNameLength = 64;
constexpr std::uint64_t kMaxListLength = 1 << 16;

// Frequent kinds get the short codewords.
constexpr std::array<NodeKind, 17> kTagOrder = {
    NodeKind::Exists, NodeKind::Forall,   NodeKind::Eq,       NodeKind::Neq, NodeKind::Atom, NodeKind::Not,
    NodeKind::And,    NodeKind::Or,       NodeKind::Implies,  NodeKind::Less, NodeKind::Bit, NodeKind::SoExists,
    NodeKind::SoForall, NodeKind::Tc,     NodeKind::Lfp,      NodeKind::Pfp, NodeKind::Char,
};

[[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::Malformed, what); }

void write_names(BitWriter& out, const std::vector<std::string>& names) {
  for (const auto& n : names) write_name(out, n);
}

class Reader {
 public:
  Reader(BitReader& in, const DecodeScope& scope) : in_(in), scope_(scope) {}

  Formula formula() {
    const auto tag = in_.read_nat();
    if (tag >= kTagOrder.size()) malformed("unknown node tag");
    const NodeKind kind = kTagOrder[tag];
    switch (kind) {
      case NodeKind::Atom: {
        const auto rel = relation_name();
        const auto count = list_length();
        if (count == 0) malformed("atom without arguments");
        std::vector<std::string> args;
        for (std::uint64_t i = 0; i < count; ++i) args.push_back(used_variable());
        check_atom(rel, static_cast<int>(count));
        return wrap([&] { return Formula::atom(rel, args); });
      }
      case NodeKind::Eq:
      case NodeKind::Neq:
      case NodeKind::Less:
      case NodeKind::Bit: {
        if ((kind == NodeKind::Less || kind == NodeKind::Bit) && scope_.vocab && !scope_.vocab->has_order())
          malformed("numeric predicate without order");
        auto a = used_variable();
        auto b = used_variable();
        return wrap([&] {
          switch (kind) {
            case NodeKind::Eq: return Formula::eq(a, b);
            case NodeKind::Neq: return Formula::neq(a, b);
            case NodeKind::Less: return Formula::less(a, b);
            default: return Formula::bit(a, b);
          }
        });
      }
      case NodeKind::Not: {
        auto c = formula();
        return Formula::negation(std::move(c));
      }
      case NodeKind::And:
      case NodeKind::Or:
      case NodeKind::Implies: {
        auto a = formula();
        auto b = formula();
        if (kind == NodeKind::And) return Formula::conjunction(std::move(a), std::move(b));
        if (kind == NodeKind::Or) return Formula::disjunction(std::move(a), std::move(b));
        return Formula::implication(std::move(a), std::move(b));
      }
      case NodeKind::Exists:
      case NodeKind::Forall: {
        auto v = variable_name();
        vars_.push_back(v);
        auto body = formula();
        vars_.pop_back();
        return kind == NodeKind::Exists ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
      }
      case NodeKind::SoExists:
      case NodeKind::SoForall: {
        auto r = relation_name();
        const auto arity = in_.read_nat();
        if (arity == 0 || arity > 64) malformed("bad relation variable arity");
        rels_.emplace_back(r, static_cast<int>(arity));
        auto body = formula();
        rels_.pop_back();
        return wrap([&] {
          return kind == NodeKind::SoExists ? Formula::so_exists(r, static_cast<int>(arity), body)
                                            : Formula::so_forall(r, static_cast<int>(arity), body);
        });
      }
      case NodeKind::Tc:
      case NodeKind::Lfp:
      case NodeKind::Pfp: {
        std::string r;
        if (kind != NodeKind::Tc) r = relation_name();
        const auto count = list_length();
        if (count == 0 || (kind == NodeKind::Tc && count % 2 != 0)) malformed("bad fixpoint variable count");
        std::vector<std::string> vars;
        for (std::uint64_t i = 0; i < count; ++i) vars.push_back(variable_name());
        for (const auto& v : vars) vars_.push_back(v);
        if (kind != NodeKind::Tc) rels_.emplace_back(r, static_cast<int>(count));
        auto body = formula();
        if (kind != NodeKind::Tc) rels_.pop_back();
        vars_.resize(vars_.size() - vars.size());
        std::vector<std::string> args;
        for (std::uint64_t i = 0; i < count; ++i) args.push_back(used_variable());
        return wrap([&] {
          if (kind == NodeKind::Tc) return Formula::tc(vars, body, args);
          if (kind == NodeKind::Lfp) return Formula::lfp(r, vars, body, args);
          return Formula::pfp(r, vars, body, args);
        });
      }
      case NodeKind::Char: {
        if (!scope_.allow_char) malformed("CHAR leaf not allowed here");
        const auto k = in_.read_nat();
        if (k > static_cast<std::uint64_t>(CharKind::Cfg)) malformed("unknown CHAR kind");
        const auto ck = static_cast<CharKind>(k);
        std::vector<BitString> payloads;
        for (std::size_t i = 0; i < char_payload_count(ck); ++i) {
          const auto len = in_.read_nat();
          payloads.emplace_back(in_.read(len));
        }
        return wrap([&] { return Formula::char_leaf(ck, payloads); });
      }
    }
    malformed("unreachable");
  }

 private:
  BitReader& in_;
  const DecodeScope& scope_;
  std::vector<std::string> vars_;
  std::vector<std::pair<std::string, int>> rels_;

  template <class F>
  Formula wrap(F&& build) {
    try {
      return build();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IncompleteInput) throw;
      malformed(e.what());
    }
  }

  std::uint64_t list_length() {
    const auto n = in_.read_nat();
    if (n > kMaxListLength) malformed("list too long");
    return n;
  }

  std::string variable_name() {
    auto n = read_name(in_);
    if (!is_variable_name(n)) malformed("bad variable name");
    return n;
  }

  std::string relation_name() {
    auto n = read_name(in_);
    if (!is_relation_name(n)) malformed("bad relation name");
    return n;
  }

  std::string used_variable() {
    auto n = variable_name();
    if (scope_.vocab && std::find(vars_.begin(), vars_.end(), n) == vars_.end()) malformed("free variable");
    return n;
  }

  void check_atom(const std::string& rel, int arity) {
    if (!scope_.vocab) return;
    for (auto it = rels_.rbegin(); it != rels_.rend(); ++it) {
      if (it->first == rel) {
        if (it->second != arity) malformed("relation variable arity");
        return;
      }
    }
    const auto idx = scope_.vocab->index_of(rel);
    if (!idx || (*scope_.vocab)[*idx].arity != arity) malformed("symbol outside the vocabulary");
  }
};

}  // namespace

std::uint64_t node_tag(NodeKind kind) {
  for (std::size_t i = 0; i < kTagOrder.size(); ++i) {
    if (kTagOrder[i] == kind) return i;
  }
  fail(ErrorCode::InvalidArgument, "unknown node kind");
}

void write_name(BitWriter& out, std::string_view name) {
  if (name.empty() || name.size() > kMaxNameLength) fail(ErrorCode::InvalidArgument, "name length out of range");
  out.write_nat(name.size());
  for (char c : name) {
    const auto idx = kNameChars.find(c);
    if (idx == std::string_view::npos) fail(ErrorCode::InvalidArgument, "name character out of range");
    out.write_fixed(idx, 6);
  }
}

std::string read_name(BitReader& in) {
  const auto len = in.read_nat();
  if (len == 0 || len > kMaxNameLength) fail(ErrorCode::Malformed, "name length out of range");
  std::string out;
  for (std::uint64_t i = 0; i < len; ++i) {
    const auto idx = in.read_fixed(6);
    if (idx >= kNameChars.size()) fail(ErrorCode::Malformed, "name character out of range");
    out += kNameChars[idx];
  }
  return out;
}

void write_formula(BitWriter& out, const Formula& f) {
  if (f.empty()) fail(ErrorCode::InvalidArgument, "empty formula");
  out.write_nat(node_tag(f.kind()));
  switch (f.kind()) {
    case NodeKind::Atom:
      write_name(out, f.name());
      out.write_nat(f.vars().size());
      write_names(out, f.vars());
      return;
    case NodeKind::Eq:
    case NodeKind::Neq:
    case NodeKind::Less:
    case NodeKind::Bit: write_names(out, f.vars()); return;
    case NodeKind::Not:
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Implies:
      for (const auto& c : f.children()) write_formula(out, c);
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
      write_name(out, f.name());
      write_formula(out, f.child());
      return;
    case NodeKind::SoExists:
    case NodeKind::SoForall:
      write_name(out, f.name());
      out.write_nat(static_cast<std::uint64_t>(f.arity()));
      write_formula(out, f.child());
      return;
    case NodeKind::Tc:
    case NodeKind::Lfp:
    case NodeKind::Pfp:
      if (f.kind() != NodeKind::Tc) write_name(out, f.name());
      out.write_nat(f.vars().size());
      write_names(out, f.vars());
      write_formula(out, f.child());
      write_names(out, f.args());
      return;
    case NodeKind::Char:
      out.write_nat(static_cast<std::uint64_t>(f.char_kind()));
      for (const auto& p : f.payloads()) {
        out.write_nat(p.size());
        out.write_bits(p);
      }
      return;
  }
}

Formula read_formula(BitReader& in, const DecodeScope& scope) {
  Reader r(in, scope);
  return r.formula();
}

BitString godel_encode(const Formula& f) {
  BitWriter out;
  write_formula(out, f);
  return std::move(out).str();
}

Formula godel_decode(std::string_view bits) {
  if (!is_bitstring(bits)) fail(ErrorCode::Malformed, "not a bit string");
  BitReader in(bits);
  Formula f;
  try {
    f = read_formula(in);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IncompleteInput) fail(ErrorCode::Malformed, "formula code is truncated");
    throw;
  }
  if (!in.at_end()) fail(ErrorCode::Malformed, "trailing bits after formula code");
  return f;
}

}  // namespace fmw

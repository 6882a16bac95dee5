#include "fmw/syntax.hpp"

#include <cctype>
#include <charconv>

#include "fmw/error.hpp"

namespace fmw {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::optional<CharKind> char_kind_of(std::string_view word) {
  for (CharKind k : {CharKind::Ord, CharKind::Unord, CharKind::CoUnord, CharKind::NpConp, CharKind::Cfg}) {
    if (char_keyword(k) == word) return k;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Formula parse() {
    Formula f = implication();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::SyntaxError, msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) error("expected '" + std::string(tok) + "'");
  }

  std::string_view peek_ident() {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) return {};
    std::size_t end = pos_;
    while (end < s_.size() && ident_char(s_[end])) ++end;
    return s_.substr(pos_, end - pos_);
  }

  char char_after(std::size_t len) {
    std::size_t p = pos_ + len;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p < s_.size() ? s_[p] : '\0';
  }

  std::string variable() {
    auto id = peek_ident();
    if (id.empty() || !is_variable_name(id)) error("expected a variable");
    pos_ += id.size();
    return std::string(id);
  }

  std::string relation() {
    auto id = peek_ident();
    if (id.empty() || !is_relation_name(id)) error("expected a relation name");
    pos_ += id.size();
    return std::string(id);
  }

  int number() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc{} || value < 1) error("expected a positive arity");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }

  std::vector<std::string> variable_list(std::string_view close) {
    std::vector<std::string> out;
    out.push_back(variable());
    while (accept(",")) out.push_back(variable());
    expect(close);
    return out;
  }

  Formula implication() {
    Formula left = disjunction();
    if (accept("->")) return Formula::implication(std::move(left), implication());
    return left;
  }

  bool accept_or() {
    if (accept("|")) return true;
    if (peek_ident() == "v") {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept_or()) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conjunction(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (accept("~")) return Formula::negation(unary());
    auto id = peek_ident();
    if (id.size() >= 2 && (id[0] == 'E' || id[0] == 'A')) {
      const bool ex = id[0] == 'E';
      auto rest = id.substr(1);
      if (is_variable_name(rest)) {
        pos_ += id.size();
        std::string var(rest);
        return ex ? Formula::exists(var, unary()) : Formula::forall(var, unary());
      }
      if (is_relation_name(rest) && char_after(id.size()) == ':') {
        pos_ += id.size();
        expect(":");
        const int arity = number();
        std::string rel(rest);
        return ex ? Formula::so_exists(rel, arity, unary()) : Formula::so_forall(rel, arity, unary());
      }
    }
    return primary();
  }

  Formula fixpoint(NodeKind kind) {
    expect("[");
    std::string rel;
    if (kind != NodeKind::Tc) {
      rel = relation();
      expect(",");
    }
    auto vars = variable_list(":");
    Formula body = implication();
    expect("]");
    expect("(");
    auto args = variable_list(")");
    switch (kind) {
      case NodeKind::Tc: return Formula::tc(std::move(vars), std::move(body), std::move(args));
      case NodeKind::Lfp: return Formula::lfp(rel, std::move(vars), std::move(body), std::move(args));
      default: return Formula::pfp(rel, std::move(vars), std::move(body), std::move(args));
    }
  }

  Formula char_leaf(CharKind kind) {
    expect("{");
    std::vector<BitString> payloads;
    for (;;) {
      skip_ws();
      std::size_t end = pos_;
      while (end < s_.size() && s_[end] != ';' && s_[end] != '}') ++end;
      std::string_view text = s_.substr(pos_, end - pos_);
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
      try {
        payloads.push_back(hex_to_bits(text));
      } catch (const Error&) {
        error("bad payload");
      }
      pos_ = end;
      if (accept(";")) continue;
      expect("}");
      break;
    }
    return Formula::char_leaf(kind, std::move(payloads));
  }

  Formula primary() {
    if (accept("(")) {
      Formula f = implication();
      expect(")");
      return f;
    }
    if (accept("[")) {
      Formula f = implication();
      expect("]");
      return f;
    }
    auto id = peek_ident();
    if (id.empty()) error("expected a formula");
    if (id == "TC" || id == "LFP" || id == "PFP") {
      pos_ += id.size();
      return fixpoint(id == "TC" ? NodeKind::Tc : id == "LFP" ? NodeKind::Lfp : NodeKind::Pfp);
    }
    if (auto k = char_kind_of(id)) {
      pos_ += id.size();
      return char_leaf(*k);
    }
    if (id == "BIT") {
      pos_ += id.size();
      expect("(");
      auto a = variable();
      expect(",");
      auto b = variable();
      expect(")");
      return Formula::bit(a, b);
    }
    if (is_relation_name(id)) {
      pos_ += id.size();
      expect("(");
      return Formula::atom(std::string(id), variable_list(")"));
    }
    if (is_variable_name(id)) {
      auto a = variable();
      if (accept("!=")) return Formula::neq(a, variable());
      if (accept("=")) return Formula::eq(a, variable());
      if (accept("<")) return Formula::less(a, variable());
      error("expected '=', '!=' or '<'");
    }
    error("unexpected identifier '" + std::string(id) + "'");
  }
};

void join(std::string& out, const std::vector<std::string>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i];
  }
}

void print(std::string& out, const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Atom:
      out += f.name();
      out += '(';
      join(out, f.vars());
      out += ')';
      return;
    case NodeKind::Eq: out += f.vars()[0] + " = " + f.vars()[1]; return;
    case NodeKind::Neq: out += f.vars()[0] + " != " + f.vars()[1]; return;
    case NodeKind::Less: out += f.vars()[0] + " < " + f.vars()[1]; return;
    case NodeKind::Bit: out += "BIT(" + f.vars()[0] + "," + f.vars()[1] + ")"; return;
    case NodeKind::Not:
      out += '~';
      print(out, f.child());
      return;
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Implies: {
      out += '(';
      print(out, f.child(0));
      out += f.kind() == NodeKind::And ? " & " : f.kind() == NodeKind::Or ? " | " : " -> ";
      print(out, f.child(1));
      out += ')';
      return;
    }
    case NodeKind::Exists:
    case NodeKind::Forall:
      out += f.kind() == NodeKind::Exists ? 'E' : 'A';
      out += f.name();
      out += ' ';
      print(out, f.child());
      return;
    case NodeKind::SoExists:
    case NodeKind::SoForall:
      out += f.kind() == NodeKind::SoExists ? 'E' : 'A';
      out += f.name() + ":" + std::to_string(f.arity()) + " ";
      print(out, f.child());
      return;
    case NodeKind::Tc:
    case NodeKind::Lfp:
    case NodeKind::Pfp:
      out += f.kind() == NodeKind::Tc ? "TC[" : f.kind() == NodeKind::Lfp ? "LFP[" : "PFP[";
      if (f.kind() != NodeKind::Tc) out += f.name() + ",";
      join(out, f.vars());
      out += ": ";
      print(out, f.child());
      out += "](";
      join(out, f.args());
      out += ')';
      return;
    case NodeKind::Char:
      out += char_keyword(f.char_kind());
      out += '{';
      for (std::size_t i = 0; i < f.payloads().size(); ++i) {
        if (i) out += ';';
        out += bits_to_hex(f.payloads()[i]);
      }
      out += '}';
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
  if (f.empty()) return {};
  std::string out;
  print(out, f);
  return out;
}

}  // namespace fmw

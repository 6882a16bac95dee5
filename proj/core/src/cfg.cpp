#include "fmw/cfg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "fmw/error.hpp"
#include "fmw/godel.hpp"

namespace fmw {

namespace {

[[noreturn]] void invalid(const std::string& what) { fail(ErrorCode::InvalidGrammar, what); }

bool terminal_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isgraph(u) != 0 && std::isupper(u) == 0 && c != '|';
}

bool nonterminal_name(std::string_view s) {
  if (s.empty() || s.size() > 64 || std::isupper(static_cast<unsigned char>(s[0])) == 0) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; });
}

GSymbol terminal_sym(char c) { return GSymbol{true, c, -1}; }
GSymbol nonterminal_sym(int i) { return GSymbol{false, 0, i}; }

}  // namespace

Grammar::Grammar(std::string alphabet, std::vector<std::string> nonterminals, std::vector<Production> productions,
                 int start)
    : alphabet_(std::move(alphabet)),
      nonterminals_(std::move(nonterminals)),
      productions_(std::move(productions)),
      start_(start) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  if (alphabet_.size() < 2) invalid("the terminal alphabet needs at least two symbols");
  for (char c : alphabet_) {
    if (!terminal_char(c)) invalid(std::string("bad terminal '") + c + "'");
  }
  std::set<std::string> seen;
  for (const auto& n : nonterminals_) {
    if (!nonterminal_name(n)) invalid("bad nonterminal name '" + n + "'");
    if (!seen.insert(n).second) invalid("duplicate nonterminal " + n);
  }
  const int nts = static_cast<int>(nonterminals_.size());
  if (start_ < 0 || start_ >= nts) invalid("start symbol is not a nonterminal");
  for (const auto& p : productions_) {
    if (p.lhs < 0 || p.lhs >= nts) invalid("production with an undeclared left-hand side");
    for (const auto& s : p.rhs) {
      if (s.terminal ? alphabet_.find(s.ch) == std::string::npos : (s.nt < 0 || s.nt >= nts))
        invalid("production refers to an undeclared symbol");
      if (s.terminal && s.nt != -1) invalid("malformed terminal symbol");
      if (!s.terminal && s.ch != 0) invalid("malformed nonterminal symbol");
    }
  }
  std::sort(productions_.begin(), productions_.end());
  productions_.erase(std::unique(productions_.begin(), productions_.end()), productions_.end());
}

bool Grammar::is_cnf() const {
  for (const auto& p : productions_) {
    if (p.rhs.empty()) {
      if (p.lhs != start_) return false;
      continue;
    }
    if (p.rhs.size() == 1) {
      if (!p.rhs[0].terminal) return false;
      continue;
    }
    if (p.rhs.size() != 2 || p.rhs[0].terminal || p.rhs[1].terminal) return false;
    if (p.rhs[0].nt == start_ || p.rhs[1].nt == start_) return false;
  }
  return true;
}

Grammar parse_grammar(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  auto nt = [&](const std::string& n) {
    if (!nonterminal_name(n)) invalid("bad nonterminal name '" + n + "'");
    auto [it, fresh] = index.emplace(n, static_cast<int>(names.size()));
    if (fresh) names.push_back(n);
    return it->second;
  };
  std::string alphabet;
  bool explicit_alphabet = false;
  std::string used;
  std::optional<std::string> start;
  std::vector<Production> prods;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (tok[0] == "alphabet") {
      explicit_alphabet = true;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i].size() != 1) invalid("alphabet symbols are single characters" + where);
        alphabet += tok[i];
      }
      continue;
    }
    if (tok[0] == "start") {
      if (tok.size() != 2) invalid("expected `start <nonterminal>`" + where);
      start = tok[1];
      nt(tok[1]);
      continue;
    }
    if (tok.size() < 2 || tok[1] != "->") invalid("expected `A -> ...`" + where);
    const int lhs = nt(tok[0]);
    Production cur{lhs, {}};
    bool empty_alt = true;
    auto flush = [&] {
      if (empty_alt) invalid("empty alternative; write eps" + where);
      prods.push_back(cur);
      cur.rhs.clear();
      empty_alt = true;
    };
    for (std::size_t i = 2; i < tok.size(); ++i) {
      const auto& t = tok[i];
      if (t == "|") {
        flush();
      } else if (t == "eps") {
        empty_alt = false;
      } else if (std::isupper(static_cast<unsigned char>(t[0]))) {
        cur.rhs.push_back(nonterminal_sym(nt(t)));
        empty_alt = false;
      } else if (t.size() == 1 && terminal_char(t[0])) {
        cur.rhs.push_back(terminal_sym(t[0]));
        used += t;
        empty_alt = false;
      } else {
        invalid("bad symbol '" + t + "'" + where);
      }
    }
    flush();
  }
  if (names.empty()) invalid("grammar has no nonterminals");
  if (!explicit_alphabet) alphabet = used;
  for (char c : used) {
    if (alphabet.find(c) == std::string::npos) invalid(std::string("terminal '") + c + "' is not in the alphabet");
  }
  const int s = start ? index.at(*start) : prods.empty() ? 0 : prods.front().lhs;
  return Grammar(alphabet, names, prods, s);
}

std::string print_grammar(const Grammar& g) {
  std::ostringstream out;
  out << "alphabet";
  for (char c : g.alphabet()) out << ' ' << c;
  out << "\nstart " << g.nonterminals()[static_cast<std::size_t>(g.start())] << "\n";
  for (std::size_t a = 0; a < g.nonterminals().size(); ++a) {
    bool first = true;
    for (const auto& p : g.productions()) {
      if (p.lhs != static_cast<int>(a)) continue;
      out << (first ? g.nonterminals()[a] + " ->" : std::string(" |"));
      first = false;
      if (p.rhs.empty()) out << " eps";
      for (const auto& s : p.rhs) {
        out << ' ';
        if (s.terminal) {
          out << s.ch;
        } else {
          out << g.nonterminals()[static_cast<std::size_t>(s.nt)];
        }
      }
    }
    if (!first) out << "\n";
  }
  return out.str();
}

namespace {

class CnfBuilder {
 public:
  explicit CnfBuilder(const Grammar& g)
      : alphabet_(g.alphabet()), names_(g.nonterminals()), prods_(g.productions()) {
    for (const auto& n : names_) used_.insert(n);
    start_ = add("S0");
    prods_.push_back({start_, {nonterminal_sym(g.start())}});
  }

  Grammar run() {
    term();
    bin();
    del();
    unit();
    useless();
    return Grammar(alphabet_, names_, prods_, start_);
  }

 private:
  std::string alphabet_;
  std::vector<std::string> names_;
  std::vector<Production> prods_;
  std::set<std::string> used_;
  int start_ = 0;

  int add(const std::string& base) {
    std::string name = base;
    for (int i = 1; used_.contains(name); ++i) name = base + "_" + std::to_string(i);
    used_.insert(name);
    names_.push_back(name);
    return static_cast<int>(names_.size()) - 1;
  }

  void term() {
    std::map<char, int> proxy;
    for (auto& p : prods_) {
      if (p.rhs.size() < 2) continue;
      for (auto& s : p.rhs) {
        if (!s.terminal) continue;
        auto it = proxy.find(s.ch);
        if (it == proxy.end()) {
          const std::string base = std::isalnum(static_cast<unsigned char>(s.ch))
                                       ? std::string("T_") + s.ch
                                       : "T_" + std::to_string(static_cast<int>(static_cast<unsigned char>(s.ch)));
          it = proxy.emplace(s.ch, add(base)).first;
        }
        s = nonterminal_sym(it->second);
      }
    }
    for (const auto& [c, a] : proxy) prods_.push_back({a, {terminal_sym(c)}});
  }

  void bin() {
    std::vector<Production> out;
    for (const auto& p : prods_) {
      if (p.rhs.size() <= 2) {
        out.push_back(p);
        continue;
      }
      int lhs = p.lhs;
      for (std::size_t i = 0; i + 2 < p.rhs.size(); ++i) {
        const int next = add(names_[static_cast<std::size_t>(p.lhs)] + "_B");
        out.push_back({lhs, {p.rhs[i], nonterminal_sym(next)}});
        lhs = next;
      }
      out.push_back({lhs, {p.rhs[p.rhs.size() - 2], p.rhs.back()}});
    }
    prods_ = std::move(out);
  }

  void del() {
    std::vector<std::uint8_t> nullable(names_.size(), 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : prods_) {
        if (nullable[static_cast<std::size_t>(p.lhs)]) continue;
        if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSymbol& s) { return !s.terminal && nullable[static_cast<std::size_t>(s.nt)]; })) {
          nullable[static_cast<std::size_t>(p.lhs)] = 1;
          changed = true;
        }
      }
    }
    std::set<Production> out;
    for (const auto& p : prods_) {
      const std::size_t k = p.rhs.size();
      for (unsigned mask = 0; mask < (1U << k); ++mask) {
        Production q{p.lhs, {}};
        bool ok = true;
        for (std::size_t i = 0; i < k; ++i) {
          if (mask & (1U << i)) {
            const auto& s = p.rhs[i];
            if (s.terminal || !nullable[static_cast<std::size_t>(s.nt)]) ok = false;
          } else {
            q.rhs.push_back(p.rhs[i]);
          }
        }
        if (ok && !q.rhs.empty()) out.insert(q);
      }
    }
    if (nullable[static_cast<std::size_t>(start_)]) out.insert({start_, {}});
    prods_.assign(out.begin(), out.end());
  }

  void unit() {
    const std::size_t n = names_.size();
    // reach[a][b]: a =>* b through unit productions.
    std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) reach[a][a] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : prods_) {
        if (p.rhs.size() != 1 || p.rhs[0].terminal) continue;
        const auto b = static_cast<std::size_t>(p.lhs);
        const auto c = static_cast<std::size_t>(p.rhs[0].nt);
        for (std::size_t a = 0; a < n; ++a) {
          if (reach[a][b] && !reach[a][c]) {
            reach[a][c] = 1;
            changed = true;
          }
        }
      }
    }
    std::set<Production> out;
    for (std::size_t a = 0; a < n; ++a) {
      for (const auto& p : prods_) {
        if (!reach[a][static_cast<std::size_t>(p.lhs)]) continue;
        if (p.rhs.size() == 1 && !p.rhs[0].terminal) continue;
        if (p.rhs.empty() && static_cast<int>(a) != start_) continue;
        out.insert({static_cast<int>(a), p.rhs});
      }
    }
    prods_.assign(out.begin(), out.end());
  }

  void useless() {
    const std::size_t n = names_.size();
    std::vector<std::uint8_t> gen(n, 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : prods_) {
        if (gen[static_cast<std::size_t>(p.lhs)]) continue;
        if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSymbol& s) { return s.terminal || gen[static_cast<std::size_t>(s.nt)]; })) {
          gen[static_cast<std::size_t>(p.lhs)] = 1;
          changed = true;
        }
      }
    }
    std::vector<Production> kept;
    for (const auto& p : prods_) {
      if (!gen[static_cast<std::size_t>(p.lhs)]) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSymbol& s) { return s.terminal || gen[static_cast<std::size_t>(s.nt)]; }))
        kept.push_back(p);
    }
    std::vector<std::uint8_t> reach(n, 0);
    reach[static_cast<std::size_t>(start_)] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& p : kept) {
        if (!reach[static_cast<std::size_t>(p.lhs)]) continue;
        for (const auto& s : p.rhs) {
          if (!s.terminal && !reach[static_cast<std::size_t>(s.nt)]) {
            reach[static_cast<std::size_t>(s.nt)] = 1;
            changed = true;
          }
        }
      }
    }
    // Renumber the surviving nonterminals, keeping the start symbol.
    std::vector<int> map(n, -1);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
      if (reach[a] && (gen[a] || static_cast<int>(a) == start_)) {
        map[a] = static_cast<int>(names.size());
        names.push_back(names_[a]);
      }
    }
    std::vector<Production> out;
    for (auto p : kept) {
      if (map[static_cast<std::size_t>(p.lhs)] < 0) continue;
      p.lhs = map[static_cast<std::size_t>(p.lhs)];
      for (auto& s : p.rhs) {
        if (!s.terminal) s.nt = map[static_cast<std::size_t>(s.nt)];
      }
      out.push_back(p);
    }
    start_ = map[static_cast<std::size_t>(start_)];
    names_ = std::move(names);
    prods_ = std::move(out);
  }
};

}  // namespace

Grammar to_cnf(const Grammar& g) { return CnfBuilder(g).run(); }

struct CykRecognizer::Impl {
  std::string alphabet;
  std::size_t nts = 0;
  bool accepts_empty = false;
  int start = 0;
  std::map<char, std::vector<int>> unary;           // a -> {A : A -> a}
  std::vector<std::tuple<int, int, int>> binary;    // A -> B C
};

CykRecognizer::CykRecognizer(const Grammar& g) : impl_(std::make_unique<Impl>()) {
  const Grammar cnf = to_cnf(g);
  impl_->alphabet = cnf.alphabet();
  impl_->nts = cnf.nonterminals().size();
  impl_->start = cnf.start();
  for (const auto& p : cnf.productions()) {
    if (p.rhs.empty()) {
      impl_->accepts_empty = true;
    } else if (p.rhs.size() == 1) {
      impl_->unary[p.rhs[0].ch].push_back(p.lhs);
    } else {
      impl_->binary.emplace_back(p.lhs, p.rhs[0].nt, p.rhs[1].nt);
    }
  }
}

CykRecognizer::~CykRecognizer() = default;
CykRecognizer::CykRecognizer(CykRecognizer&&) noexcept = default;
CykRecognizer& CykRecognizer::operator=(CykRecognizer&&) noexcept = default;

const std::string& CykRecognizer::alphabet() const noexcept { return impl_->alphabet; }

bool CykRecognizer::operator()(std::string_view w) const {
  const Impl& g = *impl_;
  for (char c : w) {
    if (g.alphabet.find(c) == std::string::npos)
      fail(ErrorCode::AlphabetMismatch, std::string("character '") + c + "' is not in the alphabet");
  }
  const std::size_t n = w.size();
  if (n == 0) return g.accepts_empty;
  // table[len-1][i] is the set of nonterminals deriving w[i, i+len).
  std::vector<std::vector<std::vector<std::uint8_t>>> table(
      n, std::vector<std::vector<std::uint8_t>>(n, std::vector<std::uint8_t>(g.nts, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (auto it = g.unary.find(w[i]); it != g.unary.end()) {
      for (int a : it->second) table[0][i][static_cast<std::size_t>(a)] = 1;
    }
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      auto& cell = table[len - 1][i];
      for (std::size_t split = 1; split < len; ++split) {
        const auto& left = table[split - 1][i];
        const auto& right = table[len - split - 1][i + split];
        for (const auto& [a, b, c] : g.binary) {
          if (left[static_cast<std::size_t>(b)] && right[static_cast<std::size_t>(c)]) cell[static_cast<std::size_t>(a)] = 1;
        }
      }
    }
  }
  return table[n - 1][0][static_cast<std::size_t>(g.start)] != 0;
}

bool cyk_member(const Grammar& g, std::string_view w) { return CykRecognizer(g)(w); }

std::optional<std::string> find_missing(const CykRecognizer& g, int len_max) {
  const std::string& sigma = g.alphabet();
  for (int len = 0; len <= len_max; ++len) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
    for (;;) {
      std::string w;
      for (auto d : digits) w += sigma[d];
      if (!g(w)) return w;
      std::size_t i = digits.size();
      while (i > 0 && digits[i - 1] + 1 == sigma.size()) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return std::nullopt;
}

std::optional<std::string> find_missing(const Grammar& g, int len_max) { return find_missing(CykRecognizer(g), len_max); }

BitString encode_grammar(const Grammar& g) {
  BitWriter out;
  out.write_nat(g.alphabet().size());
  for (char c : g.alphabet()) out.write_fixed(static_cast<unsigned char>(c), 8);
  out.write_nat(g.nonterminals().size());
  for (const auto& n : g.nonterminals()) write_name(out, n);
  out.write_nat(static_cast<std::uint64_t>(g.start()));
  out.write_nat(g.productions().size());
  for (const auto& p : g.productions()) {
    out.write_nat(static_cast<std::uint64_t>(p.lhs));
    out.write_nat(p.rhs.size());
    for (const auto& s : p.rhs) {
      out.write_fixed(s.terminal ? 1 : 0, 1);
      out.write_nat(s.terminal ? g.alphabet().find(s.ch) : static_cast<std::uint64_t>(s.nt));
    }
  }
  return std::move(out).str();
}

Grammar decode_grammar(std::string_view bits) {
  if (!is_bitstring(bits)) fail(ErrorCode::Malformed, "not a bit string");
  BitReader in(bits);
  constexpr std::uint64_t kLimit = 1 << 12;
  auto bounded = [&](std::uint64_t limit) {
    const auto v = in.read_nat();
    if (v >= limit) fail(ErrorCode::Malformed, "grammar field out of range");
    return v;
  };
  try {
    std::string alphabet;
    const auto na = bounded(256);
    for (std::uint64_t i = 0; i < na; ++i) alphabet.push_back(static_cast<char>(in.read_fixed(8)));
    std::vector<std::string> names;
    const auto nn = bounded(kLimit);
    for (std::uint64_t i = 0; i < nn; ++i) names.push_back(read_name(in));
    const auto start = bounded(kLimit);
    std::vector<Production> prods;
    const auto np = bounded(kLimit);
    for (std::uint64_t i = 0; i < np; ++i) {
      Production p;
      p.lhs = static_cast<int>(bounded(kLimit));
      const auto len = bounded(kLimit);
      for (std::uint64_t j = 0; j < len; ++j) {
        if (in.read_fixed(1)) {
          const auto k = bounded(na == 0 ? 1 : na);
          if (k >= alphabet.size()) fail(ErrorCode::Malformed, "terminal index out of range");
          p.rhs.push_back(terminal_sym(alphabet[k]));
        } else {
          p.rhs.push_back(nonterminal_sym(static_cast<int>(bounded(kLimit))));
        }
      }
      prods.push_back(std::move(p));
    }
    if (!in.at_end()) fail(ErrorCode::Malformed, "trailing bits after grammar code");
    Grammar g(alphabet, names, prods, static_cast<int>(start));
    if (encode_grammar(g) != bits) fail(ErrorCode::Malformed, "grammar code is not canonical");
    return g;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Malformed) throw;
    fail(ErrorCode::Malformed, e.what());
  }
}

}  // namespace fmw

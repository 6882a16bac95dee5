#include "fmw/machine.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "fmw/error.hpp"
#include "fmw/eval.hpp"

namespace fmw {

std::string_view to_string(MachineKind k) { return k == MachineKind::Polytime ? "polytime" : "logspace"; }

namespace {

[[noreturn]] void invalid(const std::string& what) { fail(ErrorCode::InvalidMachine, what); }

auto key(const Transition& t) { return std::tuple(t.from, t.input, t.storage); }

bool valid_name(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
  });
}

}  // namespace

OracleMachine::OracleMachine(Spec spec) : spec_(std::move(spec)) {
  auto& s = spec_;
  if (s.states < 3 || s.states > kMaxStates) invalid("state count out of range");
  for (int q : {s.start, s.accept, s.query, s.yes, s.no}) {
    if (q < 0 || q >= s.states) invalid("distinguished state out of range");
  }
  if (s.query == s.accept || s.query == s.yes || s.query == s.no) invalid("the query state must be distinct");
  if (s.yes == s.no || s.accept == s.no) invalid("yes/no/accept states clash");
  if (s.clock_c < 1 || s.clock_c > kMaxExponent || s.step_c < 1 || s.step_c > kMaxExponent)
    invalid("clock and step exponents must lie in [1, 16]");
  std::sort(s.transitions.begin(), s.transitions.end(), [](const Transition& a, const Transition& b) { return key(a) < key(b); });
  for (std::size_t i = 0; i < s.transitions.size(); ++i) {
    const auto& t = s.transitions[i];
    if (t.from < 0 || t.from >= s.states || t.to < 0 || t.to >= s.states) invalid("transition state out of range");
    if (t.from == s.accept) invalid("the accept state has no transitions");
    if (t.from == s.query) invalid("the query state has no transitions");
    if (i > 0 && key(s.transitions[i - 1]) == key(t)) invalid("machine is not deterministic");
  }
  if (s.names.empty()) {
    for (int q = 0; q < s.states; ++q) s.names.push_back("q" + std::to_string(q));
  } else {
    if (static_cast<int>(s.names.size()) != s.states) invalid("one name per state required");
    std::set<std::string> seen;
    for (const auto& n : s.names) {
      if (!valid_name(n) || !seen.insert(n).second) invalid("bad or duplicate state name '" + n + "'");
    }
  }
}

const Transition* OracleMachine::find(int state, Sym input, Sym storage) const {
  const auto& ts = spec_.transitions;
  Transition probe;
  probe.from = state;
  probe.input = input;
  probe.storage = storage;
  auto it = std::lower_bound(ts.begin(), ts.end(), probe, [](const Transition& a, const Transition& b) { return key(a) < key(b); });
  if (it != ts.end() && key(*it) == key(probe)) return &*it;
  return nullptr;
}

bool operator==(const OracleMachine& a, const OracleMachine& b) {
  const auto& x = a.spec_;
  const auto& y = b.spec_;
  return std::tie(x.states, x.start, x.accept, x.query, x.yes, x.no, x.kind, x.clock_c, x.step_c, x.transitions) ==
         std::tie(y.states, y.start, y.accept, y.query, y.yes, y.no, y.kind, y.clock_c, y.step_c, y.transitions);
}

BitString encode_tm(const OracleMachine& t) {
  const auto& s = t.spec();
  BitWriter out;
  for (int v : {s.states, s.start, s.accept, s.query, s.yes, s.no}) out.write_nat(static_cast<std::uint64_t>(v));
  out.write_fixed(s.kind == MachineKind::Logspace ? 1 : 0, 1);
  out.write_nat(static_cast<std::uint64_t>(s.clock_c));
  out.write_nat(static_cast<std::uint64_t>(s.step_c));
  out.write_nat(s.transitions.size());
  for (const auto& tr : s.transitions) {
    out.write_nat(static_cast<std::uint64_t>(tr.from));
    out.write_fixed(static_cast<std::uint64_t>(tr.input), 2);
    out.write_fixed(static_cast<std::uint64_t>(tr.storage), 2);
    out.write_nat(static_cast<std::uint64_t>(tr.to));
    out.write_fixed(static_cast<std::uint64_t>(tr.write), 2);
    out.write_fixed(static_cast<std::uint64_t>(tr.input_move), 2);
    out.write_fixed(static_cast<std::uint64_t>(tr.storage_move), 2);
    out.write_fixed(static_cast<std::uint64_t>(tr.oracle), 2);
  }
  return std::move(out).str();
}

OracleMachine read_tm(BitReader& in) {
  auto bounded = [&](std::uint64_t limit) {
    const auto v = in.read_nat();
    if (v > limit) fail(ErrorCode::Malformed, "machine field out of range");
    return static_cast<int>(v);
  };
  auto field = [&] {
    const auto v = in.read_fixed(2);
    if (v > 2) fail(ErrorCode::Malformed, "machine symbol out of range");
    return static_cast<std::uint8_t>(v);
  };
  OracleMachine::Spec s;
  s.states = bounded(kMaxStates);
  if (s.states < 3) fail(ErrorCode::Malformed, "too few states");
  const auto state = [&] {
    const int q = bounded(kMaxStates);
    if (q >= s.states) fail(ErrorCode::Malformed, "state out of range");
    return q;
  };
  s.start = state();
  s.accept = state();
  s.query = state();
  s.yes = state();
  s.no = state();
  if (s.query == s.accept || s.query == s.yes || s.query == s.no || s.yes == s.no || s.accept == s.no)
    fail(ErrorCode::Malformed, "distinguished states clash");
  s.kind = in.read_fixed(1) ? MachineKind::Logspace : MachineKind::Polytime;
  s.clock_c = bounded(kMaxExponent);
  s.step_c = bounded(kMaxExponent);
  if (s.clock_c < 1 || s.step_c < 1) fail(ErrorCode::Malformed, "exponents must be positive");
  const int count = bounded(3 * static_cast<std::uint64_t>(s.states) * 9);
  for (int i = 0; i < count; ++i) {
    Transition t;
    t.from = state();
    t.input = static_cast<Sym>(field());
    t.storage = static_cast<Sym>(field());
    if (t.from == s.accept || t.from == s.query) fail(ErrorCode::Malformed, "transition leaves a halting state");
    if (!s.transitions.empty() && !(key(s.transitions.back()) < key(t)))
      fail(ErrorCode::Malformed, "transitions are not strictly sorted");
    t.to = state();
    t.write = static_cast<Sym>(field());
    t.input_move = static_cast<Move>(field());
    t.storage_move = static_cast<Move>(field());
    t.oracle = static_cast<OracleOut>(field());
    s.transitions.push_back(t);
  }
  try {
    return OracleMachine(std::move(s));
  } catch (const Error& e) {
    fail(ErrorCode::Malformed, e.what());
  }
}

OracleMachine decode_tm(std::string_view bits) {
  if (!is_bitstring(bits)) fail(ErrorCode::Malformed, "not a bit string");
  BitReader in(bits);
  try {
    auto t = read_tm(in);
    if (!in.at_end()) fail(ErrorCode::Malformed, "trailing bits after machine code");
    return t;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IncompleteInput) fail(ErrorCode::Malformed, "machine code is truncated");
    throw;
  }
}

namespace {

char sym_char(Sym s) { return s == Sym::Zero ? '0' : s == Sym::One ? '1' : '_'; }
char move_char(Move m) { return m == Move::Left ? 'L' : m == Move::Right ? 'R' : 'S'; }
char oracle_char(OracleOut o) { return o == OracleOut::Zero ? '0' : o == OracleOut::One ? '1' : '-'; }

Sym parse_sym(const std::string& t) {
  if (t == "0") return Sym::Zero;
  if (t == "1") return Sym::One;
  if (t == "_") return Sym::Blank;
  invalid("bad tape symbol '" + t + "'");
}

Move parse_move(const std::string& t) {
  if (t == "L") return Move::Left;
  if (t == "R") return Move::Right;
  if (t == "S") return Move::Stay;
  invalid("bad head move '" + t + "'");
}

OracleOut parse_oracle(const std::string& t) {
  if (t == "0") return OracleOut::Zero;
  if (t == "1") return OracleOut::One;
  if (t == "-") return OracleOut::None;
  invalid("bad oracle output '" + t + "'");
}

int parse_positive(const std::string& t) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(t, &used);
    if (used == t.size()) return v;
  } catch (const std::exception&) {
  }
  invalid("expected an integer, got '" + t + "'");
}

}  // namespace

OracleMachine parse_machine(std::string_view text) {
  OracleMachine::Spec s;
  std::map<std::string, int> index;
  std::vector<std::string> names;
  auto state = [&](const std::string& n) {
    if (!valid_name(n)) invalid("bad state name '" + n + "'");
    auto [it, fresh] = index.emplace(n, static_cast<int>(names.size()));
    if (fresh) names.push_back(n);
    return it->second;
  };
  std::map<std::string, std::string> headers;
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
    if (tok.size() >= 2 && tok[1] == "->") invalid("transition needs state, input and storage symbols" + where);
    if (tok.size() >= 4 && tok[3] == "->") {
      if (tok.size() != 9) invalid("transition needs 9 fields" + where);
      Transition t;
      t.from = state(tok[0]);
      t.input = parse_sym(tok[1]);
      t.storage = parse_sym(tok[2]);
      t.to = state(tok[4]);
      t.write = parse_sym(tok[5]);
      t.input_move = parse_move(tok[6]);
      t.storage_move = parse_move(tok[7]);
      t.oracle = parse_oracle(tok[8]);
      s.transitions.push_back(t);
      continue;
    }
    if (tok[0] == "states") {
      for (std::size_t i = 1; i < tok.size(); ++i) state(tok[i]);
      continue;
    }
    if (tok.size() != 2) invalid("expected `key value`" + where);
    if (headers.count(tok[0])) invalid("duplicate header " + tok[0] + where);
    headers[tok[0]] = tok[1];
    if (tok[0] == "start" || tok[0] == "accept" || tok[0] == "query" || tok[0] == "yes" || tok[0] == "no") {
      state(tok[1]);
    } else if (tok[0] != "kind" && tok[0] != "clockC" && tok[0] != "stepC") {
      invalid("unknown header " + tok[0] + where);
    }
  }
  auto need = [&](const char* k) -> const std::string& {
    auto it = headers.find(k);
    if (it == headers.end()) invalid(std::string("missing header ") + k);
    return it->second;
  };
  const auto& kind = need("kind");
  if (kind == "polytime") {
    s.kind = MachineKind::Polytime;
  } else if (kind == "logspace") {
    s.kind = MachineKind::Logspace;
  } else {
    invalid("kind must be polytime or logspace");
  }
  s.clock_c = parse_positive(need("clockC"));
  s.step_c = parse_positive(need("stepC"));
  s.start = index.at(need("start"));
  s.accept = index.at(need("accept"));
  s.query = index.at(need("query"));
  s.yes = index.at(need("yes"));
  s.no = index.at(need("no"));
  s.states = static_cast<int>(names.size());
  s.names = names;
  return OracleMachine(std::move(s));
}

std::string print_machine(const OracleMachine& t) {
  const auto& s = t.spec();
  std::ostringstream out;
  out << "kind " << to_string(s.kind) << "\n";
  out << "clockC " << s.clock_c << "\n";
  out << "stepC " << s.step_c << "\n";
  out << "states";
  for (const auto& n : s.names) out << ' ' << n;
  out << "\n";
  out << "start " << t.name(s.start) << "\n";
  out << "accept " << t.name(s.accept) << "\n";
  out << "query " << t.name(s.query) << "\n";
  out << "yes " << t.name(s.yes) << "\n";
  out << "no " << t.name(s.no) << "\n";
  for (const auto& tr : s.transitions) {
    out << t.name(tr.from) << ' ' << sym_char(tr.input) << ' ' << sym_char(tr.storage) << " -> " << t.name(tr.to) << ' '
        << sym_char(tr.write) << ' ' << move_char(tr.input_move) << ' ' << move_char(tr.storage_move) << ' '
        << oracle_char(tr.oracle) << "\n";
  }
  return out.str();
}

OracleFn sentence_oracle(const Formula& sentence, const Vocabulary& vocab) {
  auto check = std::make_shared<const ModelChecker>(sentence, vocab);
  return [check, vocab](std::string_view tape) {
    std::optional<Structure> b;
    try {
      b.emplace(decode_bin(vocab, tape));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoIntegerUniverse || e.code() == ErrorCode::Malformed) return false;
      throw;
    }
    return (*check)(*b);
  };
}

std::uint64_t poly_bound(std::size_t n, int exponent) {
  const std::uint64_t base = static_cast<std::uint64_t>(n) + 2;
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

std::uint64_t step_limit(const OracleMachine& t, std::size_t input_length) {
  const auto& s = t.spec();
  const auto steps = poly_bound(input_length, s.step_c);
  if (s.kind == MachineKind::Polytime) return std::min(steps, poly_bound(input_length, s.clock_c));
  return steps;
}

std::uint64_t storage_limit(const OracleMachine& t, std::size_t input_length) {
  const auto& s = t.spec();
  if (s.kind == MachineKind::Polytime) return UINT64_MAX;
  // floor(c * log2(n + 2)): the largest k with 2^k <= (n + 2)^c.
  using boost::multiprecision::cpp_int;
  cpp_int power = 1;
  for (int i = 0; i < s.clock_c; ++i) power *= static_cast<std::uint64_t>(input_length) + 2;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(power));
}

RunResult simulate(const OracleMachine& t, std::string_view input, const OracleFn& oracle, const RunLimits& limits) {
  const auto& s = t.spec();
  const std::size_t len = input.size();
  std::uint64_t limit = step_limit(t, len);
  if (limits.max_steps) limit = std::min(limit, *limits.max_steps);
  const std::uint64_t space = storage_limit(t, len);

  RunResult r;
  std::size_t in_head = 1;  // cells 0 and len+1 are end markers
  std::size_t st_head = 0;
  std::vector<Sym> storage;
  std::string tape;
  int q = s.start;
  auto in_sym = [&] {
    if (in_head == 0 || in_head > len) return Sym::Blank;
    return input[in_head - 1] == '1' ? Sym::One : Sym::Zero;
  };
  auto reject = [&](std::string_view why) {
    r.accepted = false;
    r.reason = why;
    return r;
  };
  for (;;) {
    if (q == s.accept) {
      r.accepted = true;
      r.reason = "accept";
      return r;
    }
    if (r.steps >= limit) return reject("steps");
    if (q == s.query) {
      ++r.steps;
      ++r.queries;
      const bool yes = oracle(tape);
      tape.clear();
      q = yes ? s.yes : s.no;
      continue;
    }
    const Sym st = st_head < storage.size() ? storage[st_head] : Sym::Blank;
    const Transition* tr = t.find(q, in_sym(), st);
    if (!tr) return reject("halt");
    ++r.steps;
    if (st_head >= storage.size()) storage.resize(st_head + 1, Sym::Blank);
    storage[st_head] = tr->write;
    if (tr->oracle != OracleOut::None) tape.push_back(tr->oracle == OracleOut::One ? '1' : '0');
    if (tr->input_move == Move::Left && in_head > 0) --in_head;
    if (tr->input_move == Move::Right && in_head < len + 1) ++in_head;
    if (tr->storage_move == Move::Left && st_head > 0) --st_head;
    if (tr->storage_move == Move::Right) ++st_head;
    if (st_head >= space) return reject("space");
    q = tr->to;
  }
}

bool run(const OracleMachine& t, std::string_view input, const Formula& oracle_sentence, const Vocabulary& oracle_vocab,
         const RunLimits& limits) {
  return simulate(t, input, sentence_oracle(oracle_sentence, oracle_vocab), limits).accepted;
}

std::optional<Structure> is_reduction_upto(const OracleMachine& t, const Formula& gamma, const Formula& target,
                                           const Vocabulary& vocab, int n_max, unsigned jobs) {
  const auto oracle = sentence_oracle(gamma, vocab);
  const ModelChecker holds(target, vocab);
  return find_first_structure(
      vocab, n_max, [&](const Structure& b) { return simulate(t, encode_bin(b), oracle).accepted != holds(b); }, jobs);
}

namespace {

OracleMachine::Spec three_states(MachineKind kind, int start) {
  OracleMachine::Spec s;
  s.states = 3;
  s.start = start;
  s.no = 0;
  s.query = 1;
  s.accept = s.yes = 2;
  s.kind = kind;
  s.names = {"no", "query", "accept"};
  return s;
}

}  // namespace

OracleMachine identity_machine(MachineKind kind) {
  OracleMachine::Spec s;
  s.states = 4;
  s.start = 0;
  s.query = 1;
  s.accept = s.yes = 2;
  s.no = 3;
  s.kind = kind;
  s.names = {"copy", "query", "accept", "no"};
  s.transitions = {
      {0, Sym::Zero, Sym::Blank, 0, Sym::Blank, Move::Right, Move::Stay, OracleOut::Zero},
      {0, Sym::One, Sym::Blank, 0, Sym::Blank, Move::Right, Move::Stay, OracleOut::One},
      {0, Sym::Blank, Sym::Blank, 1, Sym::Blank, Move::Stay, Move::Stay, OracleOut::None},
  };
  return OracleMachine(std::move(s));
}

OracleMachine reject_machine(MachineKind kind) { return OracleMachine(three_states(kind, 0)); }

OracleMachine accept_machine(MachineKind kind) { return OracleMachine(three_states(kind, 2)); }

OracleMachine walker_machine(MachineKind kind) {
  auto s = three_states(kind, 0);
  for (Sym in : {Sym::Zero, Sym::One, Sym::Blank}) {
    s.transitions.push_back({0, in, Sym::Blank, 0, Sym::Blank, Move::Stay, Move::Right, OracleOut::None});
  }
  return OracleMachine(std::move(s));
}

}  // namespace fmw

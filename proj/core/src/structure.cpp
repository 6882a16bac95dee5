#include "fmw/structure.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "fmw/error.hpp"

namespace fmw {

std::size_t checked_pow(std::size_t n, int arity) {
  std::size_t out = 1;
  for (int i = 0; i < arity; ++i) {
    if (n != 0 && out > std::numeric_limits<std::size_t>::max() / n) fail(ErrorCode::InvalidArgument, "n^arity overflows");
    out *= n;
  }
  return out;
}

Relation::Relation(int arity, int n) : arity_(arity), n_(n), bits_(checked_pow(static_cast<std::size_t>(n), arity), 0) {}

std::size_t Relation::index(std::span<const Element> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) fail(ErrorCode::InvalidStructure, "tuple length differs from arity");
  std::size_t idx = 0;
  for (Element t : tuple) {
    if (t < 0 || t >= n_) fail(ErrorCode::InvalidStructure, "tuple component out of range");
    idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(t);
  }
  return idx;
}

Tuple Relation::tuple_at(std::size_t index) const {
  Tuple t(static_cast<std::size_t>(arity_));
  for (int j = arity_ - 1; j >= 0; --j) {
    t[static_cast<std::size_t>(j)] = static_cast<Element>(index % static_cast<std::size_t>(n_));
    index /= static_cast<std::size_t>(n_);
  }
  return t;
}

std::size_t Relation::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Tuple> Relation::tuples() const {
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(tuple_at(i));
  }
  return out;
}

bool Relation::increment() noexcept {
  for (std::size_t i = bits_.size(); i-- > 0;) {
    if (bits_[i] == 0) {
      bits_[i] = 1;
      return true;
    }
    bits_[i] = 0;
  }
  return false;
}

Structure::Structure(Vocabulary vocab, int n) : vocab_(std::move(vocab)), n_(n) {
  if (n < 2) fail(ErrorCode::InvalidStructure, "universe size must be at least 2");
  relations_.reserve(vocab_.size());
  for (const auto& s : vocab_.symbols()) relations_.emplace_back(s.arity, n);
}

const Relation& Structure::relation(std::string_view name) const {
  const auto idx = vocab_.index_of(name);
  if (!idx) fail(ErrorCode::InvalidStructure, "unknown symbol " + std::string(name));
  return relations_[*idx];
}

void Structure::add(std::string_view name, std::span<const Element> tuple) {
  const auto idx = vocab_.index_of(name);
  if (!idx) fail(ErrorCode::InvalidStructure, "unknown symbol " + std::string(name));
  relations_[*idx].set(tuple);
}

Structure Structure::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) fail(ErrorCode::InvalidArgument, "permutation size mismatch");
  Structure out(vocab_, n_);
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const auto& src = relations_[r];
    for (std::size_t i = 0; i < src.slots(); ++i) {
      if (!src.test(i)) continue;
      auto t = src.tuple_at(i);
      for (auto& e : t) e = perm[static_cast<std::size_t>(e)];
      out.relations_[r].set(t);
    }
  }
  return out;
}

std::uint64_t ell(std::uint64_t x, unsigned k) {
  if (x == 0) fail(ErrorCode::InvalidArgument, "ell(0) is undefined");
  if (k == 0) fail(ErrorCode::InvalidArgument, "ell iteration count must be positive");
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t len = 0;
    for (std::uint64_t v = x; v != 0; v >>= 1U) ++len;
    x = len;
  }
  return x;
}

std::size_t encoding_length(const Vocabulary& vocab, int n) {
  std::size_t total = 0;
  for (const auto& s : vocab.symbols()) total += checked_pow(static_cast<std::size_t>(n), s.arity);
  return total;
}

BitString encode_bin(const Structure& a) {
  BitString out;
  out.reserve(encoding_length(a.vocab(), a.size()));
  for (std::size_t r = 0; r < a.vocab().size(); ++r) {
    for (auto b : a.relation(r).raw()) out.push_back(b ? '1' : '0');
  }
  return out;
}

std::optional<int> universe_for_length(const Vocabulary& vocab, std::size_t length) {
  // encoding_length is strictly increasing in n.
  for (int n = 2;; ++n) {
    std::size_t len = 0;
    try {
      len = encoding_length(vocab, n);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (len == length) return n;
    if (len > length) return std::nullopt;
  }
}

Structure decode_bin(const Vocabulary& vocab, std::string_view bits) {
  if (!is_bitstring(bits)) fail(ErrorCode::Malformed, "structure encoding must be a bit string");
  const auto n = universe_for_length(vocab, bits.size());
  if (!n) fail(ErrorCode::NoIntegerUniverse, "no universe size matches encoding length " + std::to_string(bits.size()));
  Structure out(vocab, *n);
  std::size_t pos = 0;
  for (std::size_t r = 0; r < vocab.size(); ++r) {
    auto& rel = out.relation_mut(r);
    for (std::size_t i = 0; i < rel.slots(); ++i) rel.set_index(i, bits[pos++] == '1');
  }
  return out;
}

bool for_each_structure(const Vocabulary& vocab, int n_max, const std::function<bool(const Structure&)>& visit) {
  for (int n = 2; n <= n_max; ++n) {
    Structure s(vocab, n);
    for (;;) {
      if (!visit(s)) return false;
      bool advanced = false;
      for (std::size_t r = vocab.size(); r-- > 0;) {
        if (s.relation_mut(r).increment()) {
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return true;
}

std::vector<Structure> enumerate_structures(const Vocabulary& vocab, int n_max) {
  std::vector<Structure> out;
  for_each_structure(vocab, n_max, [&](const Structure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::uint64_t count_structures(const Vocabulary& vocab, int n) {
  const auto len = encoding_length(vocab, n);
  if (len >= 64) fail(ErrorCode::InvalidArgument, "structure count overflows");
  return std::uint64_t{1} << len;
}

bool is_isomorphic(const Structure& a, const Structure& b) {
  if (!(a.vocab() == b.vocab())) fail(ErrorCode::VocabMismatch, "isomorphism needs a common vocabulary");
  if (a.size() != b.size()) return false;
  if (a.vocab().has_order()) return a == b;
  for (std::size_t r = 0; r < a.vocab().size(); ++r) {
    if (a.relation(r).count() != b.relation(r).count()) return false;
  }
  std::vector<int> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.permuted(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Tuple> parse_tuples(std::string_view body, const std::string& name) {
  std::vector<Tuple> out;
  std::size_t i = 0;
  while (true) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i >= body.size()) break;
    if (body[i] != '(') fail(ErrorCode::SyntaxError, "expected '(' in tuples of " + name);
    const auto close = body.find(')', i);
    if (close == std::string_view::npos) fail(ErrorCode::SyntaxError, "unterminated tuple in " + name);
    Tuple t;
    std::string_view inner = body.substr(i + 1, close - i - 1);
    while (!inner.empty()) {
      const auto comma = inner.find(',');
      const auto part = trim(inner.substr(0, comma));
      int v = 0;
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc{} || ptr != part.data() + part.size())
        fail(ErrorCode::SyntaxError, "bad tuple component in " + name);
      t.push_back(v);
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
    out.push_back(std::move(t));
    i = close + 1;
  }
  return out;
}

}  // namespace

Structure parse_structure(std::string_view text) {
  std::optional<Vocabulary> vocab;
  std::optional<int> n;
  std::vector<std::pair<std::string, std::vector<Tuple>>> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.starts_with("vocab")) {
      vocab = Vocabulary::parse(line);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(ErrorCode::SyntaxError, "expected '=' in line '" + std::string(line) + "'");
    const std::string lhs(trim(line.substr(0, eq)));
    const auto rhs = trim(line.substr(eq + 1));
    if (lhs == "n") {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), v);
      if (ec != std::errc{} || ptr != rhs.data() + rhs.size()) fail(ErrorCode::SyntaxError, "bad universe size");
      n = v;
    } else {
      lines.emplace_back(lhs, parse_tuples(rhs, lhs));
    }
  }
  if (!vocab) fail(ErrorCode::SyntaxError, "missing `vocab` header");
  if (!n) fail(ErrorCode::SyntaxError, "missing `n = <int>` line");
  Structure s(*vocab, *n);
  for (const auto& [name, tuples] : lines) {
    if (!vocab->index_of(name)) fail(ErrorCode::InvalidStructure, "symbol " + name + " is not in the vocabulary");
    for (const auto& t : tuples) s.add(name, t);
  }
  return s;
}

std::string print_structure(const Structure& a) {
  std::string out = a.vocab().to_string() + "\n";
  out += "n = " + std::to_string(a.size()) + "\n";
  for (std::size_t r = 0; r < a.vocab().size(); ++r) {
    out += a.vocab()[r].name + " =";
    for (const auto& t : a.relation(r).tuples()) {
      out += " (";
      for (std::size_t j = 0; j < t.size(); ++j) out += (j ? "," : "") + std::to_string(t[j]);
      out += ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace fmw

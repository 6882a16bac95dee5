#include "fmw/vocabulary.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <set>

#include "fmw/error.hpp"

namespace fmw {

namespace {

constexpr std::array<std::string_view, 9> kReserved = {
    "TC", "LFP", "PFP", "BIT", "CHAR_ORD", "CHAR_UNORD", "COCHAR_UNORD", "CHAR_NPCONP", "CHAR_CFG"};

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_relation_name(std::string_view name) noexcept {
  if (name.empty() || !is_upper(name[0])) return false;
  for (char c : name.substr(1)) {
    if (!is_upper(c) && !is_digit(c) && c != '_') return false;
  }
  return std::find(kReserved.begin(), kReserved.end(), name) == kReserved.end();
}

bool is_variable_name(std::string_view name) noexcept {
  if (name.empty() || !is_lower(name[0])) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return is_lower(c) || is_digit(c) || c == '_'; });
}

Vocabulary::Vocabulary(std::vector<Symbol> symbols, bool has_order)
    : symbols_(std::move(symbols)), has_order_(has_order) {
  if (symbols_.empty()) fail(ErrorCode::InvalidVocabulary, "a vocabulary needs at least one relation symbol");
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.name == "<") fail(ErrorCode::InvalidVocabulary, "`<` is reserved; use the order flag");
    if (!is_relation_name(s.name)) fail(ErrorCode::InvalidVocabulary, "bad relation name '" + s.name + "'");
    if (s.arity < 1) fail(ErrorCode::InvalidVocabulary, "arity of " + s.name + " must be positive");
    if (!seen.insert(s.name).second) fail(ErrorCode::InvalidVocabulary, "duplicate symbol " + s.name);
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

bool Vocabulary::is_aristotelian() const noexcept {
  return !has_order_ && std::all_of(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.arity == 1; });
}

std::string Vocabulary::to_string() const {
  std::string out = "vocab";
  for (const auto& s : symbols_) out += " " + s.name + ":" + std::to_string(s.arity);
  if (has_order_) out += " <";
  return out;
}

Vocabulary Vocabulary::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  bool order = false;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                               text[i] == '{' || text[i] == '}'))
      ++i;
  };
  skip();
  if (text.substr(i, 5) == "vocab") i += 5;
  for (skip(); i < text.size(); skip()) {
    if (text[i] == '<') {
      if (order) fail(ErrorCode::InvalidVocabulary, "`<` listed twice");
      order = true;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ':' && !std::isspace(static_cast<unsigned char>(text[j])) &&
           text[j] != ',' && text[j] != '}')
      ++j;
    const std::string name(text.substr(i, j - i));
    if (j >= text.size() || text[j] != ':') fail(ErrorCode::InvalidVocabulary, "expected name:arity near '" + name + "'");
    std::size_t k = j + 1;
    int arity = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + k, text.data() + text.size(), arity);
    if (ec != std::errc{}) fail(ErrorCode::InvalidVocabulary, "bad arity for " + name);
    symbols.push_back({name, arity});
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Vocabulary(std::move(symbols), order);
}

}  // namespace fmw

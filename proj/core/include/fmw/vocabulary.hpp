#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fmw {

struct Symbol {
  std::string name;
  int arity = 1;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Ordered list of relation symbols, plus a flag for the built-in order `<`.
/// The order symbol is never stored as a relation and never encoded.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<Symbol> symbols, bool has_order);

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  bool has_order() const noexcept { return has_order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// All arities are one and there is no order.
  bool is_aristotelian() const noexcept;

  /// `vocab R:1 E:2 <` header form, also used as a cache key.
  std::string to_string() const;
  static Vocabulary parse(std::string_view text);

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<Symbol> symbols_;
  bool has_order_ = false;
};

/// Relation names are `[A-Z][A-Z0-9_]*`; the logic keywords are reserved.
bool is_relation_name(std::string_view name) noexcept;
/// First-order variables are `[a-z][a-z0-9_]*`.
bool is_variable_name(std::string_view name) noexcept;

}  // namespace fmw

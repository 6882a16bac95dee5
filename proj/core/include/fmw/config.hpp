#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fmw/formula.hpp"
#include "fmw/fragment.hpp"

namespace fmw {

/// Distinguished sentences keyed by setting and class:
///   # comment
///   ord.NP = upsilon/ord-np.sent
///   unord.NP = upsilon/three-colorability.sent
/// Relative paths resolve against the configuration file's directory.
class UpsilonConfig {
 public:
  static UpsilonConfig load(const std::filesystem::path& file);
  static UpsilonConfig parse(std::string_view text, const std::filesystem::path& base_dir);

  std::optional<std::filesystem::path> path(bool ordered, ComplexityClass cls) const;
  /// Throws Config when the entry is missing or unreadable.
  Formula sentence(bool ordered, ComplexityClass cls) const;

 private:
  std::map<std::string, std::filesystem::path> entries_;
};

std::string read_text_file(const std::filesystem::path& file);

}  // namespace fmw

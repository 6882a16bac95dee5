#include "fmw/config.hpp"

#include <fstream>
#include <sstream>

#include "fmw/error.hpp"
#include "fmw/syntax.hpp"

namespace fmw {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string key_of(bool ordered, ComplexityClass cls) {
  return std::string(ordered ? "ord." : "unord.") + std::string(to_string(cls));
}

}  // namespace

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) fail(ErrorCode::Config, "cannot read " + file.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

UpsilonConfig UpsilonConfig::load(const std::filesystem::path& file) {
  return parse(read_text_file(file), file.parent_path());
}

UpsilonConfig UpsilonConfig::parse(std::string_view text, const std::filesystem::path& base_dir) {
  UpsilonConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (eq == std::string::npos) fail(ErrorCode::Config, "expected `key = path`" + where);
    const auto key = trim(std::string_view(line).substr(0, eq));
    const auto value = trim(std::string_view(line).substr(eq + 1));
    const auto dot = key.find('.');
    if (dot == std::string::npos || value.empty()) fail(ErrorCode::Config, "expected `ord.<class> = path`" + where);
    const auto setting = key.substr(0, dot);
    const auto cls = parse_complexity_class(key.substr(dot + 1));
    if ((setting != "ord" && setting != "unord") || !cls) fail(ErrorCode::Config, "unknown key " + key + where);
    std::filesystem::path p(value);
    if (p.is_relative()) p = base_dir / p;
    cfg.entries_[key_of(setting == "ord", *cls)] = p;
  }
  return cfg;
}

std::optional<std::filesystem::path> UpsilonConfig::path(bool ordered, ComplexityClass cls) const {
  if (auto it = entries_.find(key_of(ordered, cls)); it != entries_.end()) return it->second;
  return std::nullopt;
}

Formula UpsilonConfig::sentence(bool ordered, ComplexityClass cls) const {
  const auto p = path(ordered, cls);
  if (!p) fail(ErrorCode::Config, "no distinguished sentence configured for " + key_of(ordered, cls));
  try {
    return parse_formula(read_text_file(*p));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Config) throw;
    fail(ErrorCode::Config, p->string() + ": " + e.what());
  }
}

}  // namespace fmw

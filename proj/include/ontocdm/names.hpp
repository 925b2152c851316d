#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

namespace ontocdm {

// Canonical spelling of a concept or property name: surrounding whitespace
// stripped, internal whitespace runs replaced by a single hyphen, case kept.
inline std::string normalize_name(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
  std::string out;
  out.reserve(end - begin);
  bool in_gap = false;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = raw[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_gap = true;
      continue;
    }
    if (in_gap) {
      out.push_back('-');
      in_gap = false;
    }
    out.push_back(c);
  }
  return out;
}

// Comparison key; names compare case-insensitively.
inline std::string fold_name(std::string_view name) {
  std::string out(name);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline bool name_eq(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

inline bool name_lt(std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ca = std::tolower(static_cast<unsigned char>(a[i]));
    const int cb = std::tolower(static_cast<unsigned char>(b[i]));
    if (ca != cb) return ca < cb;
  }
  return a.size() < b.size();
}

// Orders by folded name; fold-equal spellings are the same key.
struct NameLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return name_lt(a, b); }
};

}  // namespace ontocdm

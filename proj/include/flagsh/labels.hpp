#pragma once

#include <algorithm>
#include <cctype>
#include <concepts>
#include <string>
#include <string_view>
#include <vector>

#include "flagsh/error.hpp"

namespace flagsh {

using Label = std::string;

/// Sorted, duplicate-free list of labels.
using LabelSet = std::vector<Label>;

inline void normalize(LabelSet& labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}

inline LabelSet normalized(LabelSet labels) {
  normalize(labels);
  return labels;
}

/// Label of a derived vertex standing for a set of labels: members sorted,
/// joined by ',' and wrapped in brackets, e.g. "[a,b,c]". Every derived
/// structure (subdivisions, clique posets, face posets, Γ) uses this scheme so
/// that compositions of maps agree label for label.
inline Label bracket_label(LabelSet members) {
  normalize(members);
  Label out = "[";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  out += ']';
  return out;
}

inline bool valid_label(std::string_view label) {
  if (label.empty() || label.front() == '#') return false;
  return std::none_of(label.begin(), label.end(),
                      [](unsigned char c) { return std::isspace(c); });
}

inline void require_valid_label(std::string_view label) {
  if (!valid_label(label)) throw InvalidStructure("invalid label '" + std::string(label) + "'");
}

/// Smallest "_x<k>" (k >= 1) for which `taken` returns false.
template <class Taken>
  requires std::predicate<Taken&, const Label&>
Label fresh_label(Taken&& taken, std::string_view stem = "_x") {
  for (std::size_t k = 1;; ++k) {
    Label candidate = std::string(stem) + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

namespace detail {

/// Splits on `sep` outside of bracket nesting, so "[a,b],c" -> {"[a,b]", "c"}.
inline std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(std::move(current));
  return parts;
}

inline bool has_top_level(std::string_view text, char sep) {
  return split_top_level(text, sep).size() > 1;
}

/// Whitespace tokens of a line with any '#'-comment removed.
inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(lineno, line);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace detail
}  // namespace flagsh

#include "syndiv/punctuation.hpp"

#include <fstream>

#include "syndiv/error.hpp"

namespace syndiv {

namespace {

// Returns the length of the class starting at pattern[pos] == '[',
// including both brackets, or 0 if the class is unterminated.
std::size_t class_length(std::string_view pattern, std::size_t pos) {
  std::size_t i = pos + 1;
  if (i < pattern.size() && pattern[i] == '!') {
    ++i;
  }
  if (i < pattern.size() && pattern[i] == ']') {
    ++i;  // a literal ']' first
  }
  while (i < pattern.size() && pattern[i] != ']') {
    ++i;
  }
  return i < pattern.size() ? i - pos + 1 : 0;
}

bool class_match(std::string_view cls, char c) {
  // cls excludes the surrounding brackets
  bool negate = false;
  std::size_t i = 0;
  if (!cls.empty() && cls[0] == '!') {
    negate = true;
    i = 1;
  }
  bool hit = false;
  while (i < cls.size()) {
    if (i + 2 < cls.size() && cls[i + 1] == '-') {
      if (cls[i] <= c && c <= cls[i + 2]) {
        hit = true;
      }
      i += 3;
    } else {
      if (cls[i] == c) {
        hit = true;
      }
      ++i;
    }
  }
  return hit != negate;
}

void validate_pattern(const std::string& pattern, std::size_t lineno) {
  if (pattern.empty()) {
    throw Error(ErrorKind::InvalidPattern,
                "empty pattern (line " + std::to_string(lineno) + ")");
  }
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (c == '\\') {
      if (i + 1 == pattern.size()) {
        throw Error(ErrorKind::InvalidPattern,
                    "trailing backslash in '" + pattern + "' (line " +
                        std::to_string(lineno) + ")");
      }
      ++i;
    } else if (c == '[') {
      std::size_t len = class_length(pattern, i);
      if (len == 0) {
        throw Error(ErrorKind::InvalidPattern,
                    "unterminated character class in '" + pattern + "' (line " +
                        std::to_string(lineno) + ")");
      }
      i += len - 1;
    }
  }
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view text) {
  // Iterative match with single-star backtracking.
  std::size_t p = 0, t = 0;
  std::size_t star_p = std::string_view::npos, star_t = 0;
  while (t < text.size()) {
    bool advanced = false;
    if (p < pattern.size()) {
      char pc = pattern[p];
      if (pc == '*') {
        star_p = ++p;
        star_t = t;
        continue;
      }
      if (pc == '\\' && p + 1 < pattern.size()) {
        if (pattern[p + 1] == text[t]) {
          p += 2;
          ++t;
          advanced = true;
        }
      } else if (pc == '[') {
        std::size_t len = class_length(pattern, p);
        if (len > 0 && class_match(pattern.substr(p + 1, len - 2), text[t])) {
          p += len;
          ++t;
          advanced = true;
        }
      } else if (pc == '?' || pc == text[t]) {
        ++p;
        ++t;
        advanced = true;
      }
    }
    if (!advanced) {
      if (star_p == std::string_view::npos) {
        return false;
      }
      p = star_p;
      t = ++star_t;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') {
    ++p;
  }
  return p == pattern.size();
}

PunctuationConfig PunctuationConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open punctuation config: " + path);
  }
  PunctuationConfig config;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) {
      continue;
    }
    std::string pattern = line.substr(start);
    validate_pattern(pattern, lineno);
    config.patterns_.push_back(std::move(pattern));
  }
  return config;
}

PunctuationConfig PunctuationConfig::from_patterns(std::vector<std::string> patterns) {
  PunctuationConfig config;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    validate_pattern(patterns[i], i + 1);
  }
  config.patterns_ = std::move(patterns);
  return config;
}

bool PunctuationConfig::is_punctuation(std::string_view label) const {
  for (const std::string& pattern : patterns_) {
    if (glob_match(pattern, label)) {
      return true;
    }
  }
  return false;
}

}  // namespace syndiv

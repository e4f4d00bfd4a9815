#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace syndiv {

/// Glob match supporting `*`, `?`, `[set]` (leading `!` negates) and
/// backslash escapes. Matching is byte-wise and case-sensitive.
bool glob_match(std::string_view pattern, std::string_view text);

/// Pattern list deciding which lexical-type labels count as punctuation.
/// Patterns are validated when the config is built; classification itself
/// never fails.
class PunctuationConfig {
 public:
  PunctuationConfig() = default;

  /// One glob per line; `#` starts a comment, blank lines are skipped.
  /// Throws InvalidPattern naming the offending line.
  static PunctuationConfig load(const std::string& path);

  /// Throws InvalidPattern for a malformed glob.
  static PunctuationConfig from_patterns(std::vector<std::string> patterns);

  /// True iff the label matches any configured pattern. An empty pattern
  /// list classifies nothing as punctuation.
  bool is_punctuation(std::string_view label) const;

  const std::vector<std::string>& patterns() const { return patterns_; }

 private:
  std::vector<std::string> patterns_;
};

}  // namespace syndiv

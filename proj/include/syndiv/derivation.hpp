#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "syndiv/error.hpp"

namespace syndiv {

/// Label multiset, kept ordered so iteration is deterministic.
using LabelCounts = std::map<std::string, std::uint32_t>;

/// A derivation-tree node. Internal nodes carry a rule or lexical-entry
/// label and children; leaves carry the surface token (label == surface).
struct DerivationTree {
  std::string label;
  std::vector<DerivationTree> children;
  std::optional<std::string> surface;

  bool is_leaf() const { return surface.has_value(); }
  bool operator==(const DerivationTree&) const = default;

  static DerivationTree leaf(std::string token);
  static DerivationTree node(std::string label, std::vector<DerivationTree> children);
};

/// Parses one s-expression into a tree. Internal nodes are written
/// `(label child...)`, leaves `("token")`. Throws ParseError with the byte
/// offset of the problem: UnbalancedParens, EmptyInput, EmptyLabel, or
/// MalformedDerivation for structurally invalid input.
DerivationTree parse_derivation(std::string_view text);

/// Canonical single-line form; parse_derivation(serialize(t)) == t.
std::string serialize(const DerivationTree& tree);

/// Lexical-entry name -> lexical-type label.
struct LexiconMap {
  std::unordered_map<std::string, std::string> entries;
};

/// Two-column tab-separated `entry<TAB>lextype` file.
LexiconMap load_lexicon(const std::string& path);

inline constexpr const char* kUnknownLextype = "__unknown_lextype__";

struct ExtractedLabels {
  LabelCounts constructions;  // internal nodes above preterminals
  LabelCounts lextypes;       // lexicon-mapped preterminal labels
  std::uint32_t unknown_lextypes = 0;
};

/// Walks the tree once. A node whose children are all leaves is a
/// preterminal (its label is a lexical-entry name); every other internal
/// node is a construction. Entries missing from the lexicon map to
/// kUnknownLextype and bump the warning tally instead of failing.
ExtractedLabels extract_labels(const DerivationTree& tree, const LexiconMap& lexicon);

}  // namespace syndiv

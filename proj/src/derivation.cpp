#include "syndiv/derivation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace syndiv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnbalancedParens: return "UnbalancedParens";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::EmptyLabel: return "EmptyLabel";
    case ErrorKind::MalformedDerivation: return "MalformedDerivation";
    case ErrorKind::Io: return "Io";
    case ErrorKind::MalformedRecord: return "MalformedRecord";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::InvalidPattern: return "InvalidPattern";
    case ErrorKind::FilterOnConstructions: return "FilterOnConstructions";
    case ErrorKind::EmptyDistribution: return "EmptyDistribution";
    case ErrorKind::CategoryMismatch: return "CategoryMismatch";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::BadTargetN: return "BadTargetN";
    case ErrorKind::BadIterations: return "BadIterations";
    case ErrorKind::BadTopK: return "BadTopK";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::BadTask: return "BadTask";
    case ErrorKind::EmptyAfterCleaning: return "EmptyAfterCleaning";
    case ErrorKind::Transport: return "Transport";
    case ErrorKind::AuthFailure: return "AuthFailure";
    case ErrorKind::RateLimited: return "RateLimited";
    case ErrorKind::MalformedResponse: return "MalformedResponse";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Error";
}

DerivationTree DerivationTree::leaf(std::string token) {
  DerivationTree t;
  t.label = token;
  t.surface = std::move(token);
  return t;
}

DerivationTree DerivationTree::node(std::string label, std::vector<DerivationTree> children) {
  DerivationTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

namespace {

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  DerivationTree parse() {
    skip_ws();
    if (pos_ == text_.size()) {
      throw ParseError(ErrorKind::EmptyInput, pos_, "empty input");
    }
    DerivationTree root = parse_node();
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') {
        throw ParseError(ErrorKind::UnbalancedParens, pos_, "unmatched ')'");
      }
      throw ParseError(ErrorKind::MalformedDerivation, pos_,
                       "trailing content after expression");
    }
    return root;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ == text_.size(); }

  DerivationTree parse_node() {
    if (peek() != '(') {
      throw ParseError(ErrorKind::MalformedDerivation, pos_, "expected '('");
    }
    ++pos_;
    skip_ws();
    if (at_end()) {
      throw ParseError(ErrorKind::UnbalancedParens, pos_, "unexpected end of input");
    }
    if (peek() == '"') {
      return parse_leaf();
    }
    return parse_internal();
  }

  DerivationTree parse_leaf() {
    std::string token = parse_quoted();
    skip_ws();
    if (at_end()) {
      throw ParseError(ErrorKind::UnbalancedParens, pos_, "unexpected end of input");
    }
    if (peek() != ')') {
      throw ParseError(ErrorKind::MalformedDerivation, pos_,
                       "leaf must contain a single quoted token");
    }
    ++pos_;
    return DerivationTree::leaf(std::move(token));
  }

  DerivationTree parse_internal() {
    std::size_t label_pos = pos_;
    std::string label = parse_label();
    if (label.empty()) {
      throw ParseError(ErrorKind::EmptyLabel, label_pos, "node label is empty");
    }
    std::vector<DerivationTree> children;
    while (true) {
      skip_ws();
      if (at_end()) {
        throw ParseError(ErrorKind::UnbalancedParens, pos_, "unexpected end of input");
      }
      if (peek() == ')') {
        if (children.empty()) {
          throw ParseError(ErrorKind::MalformedDerivation, pos_,
                           "internal node '" + label + "' has no children");
        }
        ++pos_;
        return DerivationTree::node(std::move(label), std::move(children));
      }
      if (peek() != '(') {
        throw ParseError(ErrorKind::MalformedDerivation, pos_,
                         "expected '(' or ')' inside node '" + label + "'");
      }
      children.push_back(parse_node());
    }
  }

  std::string parse_label() {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = peek();
      if (c == '(' || c == ')' || c == '"' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string parse_quoted() {
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (at_end()) {
        throw ParseError(ErrorKind::UnbalancedParens, pos_, "unterminated string");
      }
      char c = text_[pos_++];
      if (c == '"') {
        return out;
      }
      if (c == '\\') {
        if (at_end()) {
          throw ParseError(ErrorKind::UnbalancedParens, pos_, "unterminated escape");
        }
        out.push_back(text_[pos_++]);
      } else {
        out.push_back(c);
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void escape_into(const std::string& token, std::string& out) {
  for (char c : token) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
    }
    out.push_back(c);
  }
}

bool valid_bare_label(const std::string& label) {
  if (label.empty()) {
    return false;
  }
  for (char c : label) {
    if (c == '(' || c == ')' || c == '"' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

void serialize_into(const DerivationTree& tree, std::string& out) {
  if (tree.is_leaf()) {
    if (!tree.children.empty()) {
      throw Error(ErrorKind::MalformedDerivation, "leaf node has children");
    }
    out += "(\"";
    escape_into(*tree.surface, out);
    out += "\")";
    return;
  }
  if (tree.children.empty()) {
    throw Error(ErrorKind::MalformedDerivation,
                "node '" + tree.label + "' has neither children nor surface");
  }
  if (!valid_bare_label(tree.label)) {
    throw Error(ErrorKind::EmptyLabel, "label '" + tree.label + "' cannot be serialized");
  }
  out.push_back('(');
  out += tree.label;
  for (const DerivationTree& child : tree.children) {
    out.push_back(' ');
    serialize_into(child, out);
  }
  out.push_back(')');
}

}  // namespace

DerivationTree parse_derivation(std::string_view text) {
  return SexprParser(text).parse();
}

std::string serialize(const DerivationTree& tree) {
  std::string out;
  serialize_into(tree, out);
  return out;
}

LexiconMap load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open lexicon file: " + path);
  }
  LexiconMap lexicon;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw RecordError(ErrorKind::MalformedRecord, lineno, "expected entry<TAB>lextype");
    }
    std::string entry = line.substr(0, tab);
    std::string lextype = line.substr(tab + 1);
    if (entry.empty() || lextype.empty()) {
      throw RecordError(ErrorKind::MalformedRecord, lineno, "empty entry or lextype");
    }
    if (!lexicon.entries.emplace(std::move(entry), std::move(lextype)).second) {
      throw RecordError(ErrorKind::MalformedRecord, lineno,
                        "duplicate lexical entry '" + line.substr(0, tab) + "'");
    }
  }
  return lexicon;
}

namespace {

bool is_preterminal(const DerivationTree& node) {
  if (node.is_leaf() || node.children.empty()) {
    return false;
  }
  for (const DerivationTree& child : node.children) {
    if (!child.is_leaf()) {
      return false;
    }
  }
  return true;
}

void extract_into(const DerivationTree& node, const LexiconMap& lexicon, ExtractedLabels& out) {
  if (node.is_leaf()) {
    return;
  }
  if (is_preterminal(node)) {
    auto it = lexicon.entries.find(node.label);
    if (it == lexicon.entries.end()) {
      ++out.lextypes[kUnknownLextype];
      ++out.unknown_lextypes;
    } else {
      ++out.lextypes[it->second];
    }
    return;
  }
  ++out.constructions[node.label];
  for (const DerivationTree& child : node.children) {
    extract_into(child, lexicon, out);
  }
}

}  // namespace

ExtractedLabels extract_labels(const DerivationTree& tree, const LexiconMap& lexicon) {
  ExtractedLabels out;
  extract_into(tree, lexicon, out);
  return out;
}

}  // namespace syndiv

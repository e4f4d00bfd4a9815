#include "syndiv/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace syndiv {

using nlohmann::json;

const char* to_string(SourceKind kind) {
  return kind == SourceKind::human ? "human" : "llm";
}

SourceKind source_kind_from_string(std::string_view text) {
  if (text == "human") {
    return SourceKind::human;
  }
  if (text == "llm") {
    return SourceKind::llm;
  }
  throw Error(ErrorKind::MalformedRecord, "unknown source kind '" + std::string(text) + "'");
}

namespace {

LabelCounts parse_label_counts(const json& value, std::size_t lineno, const char* field) {
  LabelCounts counts;
  if (value.is_array()) {
    for (const json& entry : value) {
      if (!entry.is_string()) {
        throw RecordError(ErrorKind::MalformedRecord, lineno,
                          std::string(field) + " array must contain strings");
      }
      ++counts[entry.get<std::string>()];
    }
  } else if (value.is_object()) {
    for (const auto& [label, count] : value.items()) {
      if (!count.is_number_unsigned() || count.get<std::uint64_t>() == 0) {
        throw RecordError(ErrorKind::MalformedRecord, lineno,
                          std::string(field) + " counts must be positive integers");
      }
      counts[label] = static_cast<std::uint32_t>(count.get<std::uint64_t>());
    }
  } else {
    throw RecordError(ErrorKind::MalformedRecord, lineno,
                      std::string(field) + " must be an array or object");
  }
  return counts;
}

std::optional<double> parse_optional_nonneg(const json& record, const char* field,
                                            std::size_t lineno) {
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) {
    return std::nullopt;
  }
  if (!it->is_number()) {
    throw RecordError(ErrorKind::MalformedRecord, lineno,
                      std::string(field) + " must be a number");
  }
  double value = it->get<double>();
  if (value < 0.0) {
    throw RecordError(ErrorKind::MalformedRecord, lineno,
                      std::string(field) + " must be >= 0");
  }
  return value;
}

void collect_surface(const DerivationTree& node, std::vector<std::string_view>& out) {
  if (node.is_leaf()) {
    out.push_back(*node.surface);
    return;
  }
  for (const DerivationTree& child : node.children) {
    collect_surface(child, out);
  }
}

ItemRecord parse_item(const json& record, std::size_t lineno) {
  if (!record.is_object()) {
    throw RecordError(ErrorKind::MalformedRecord, lineno, "record is not a JSON object");
  }
  ItemRecord item;
  auto require = [&](const char* field) -> const json& {
    auto it = record.find(field);
    if (it == record.end()) {
      throw RecordError(ErrorKind::MalformedRecord, lineno,
                        std::string("missing field '") + field + "'");
    }
    return *it;
  };

  const json& id = require("id");
  if (!id.is_string() || id.get<std::string>().empty()) {
    throw RecordError(ErrorKind::MalformedRecord, lineno, "id must be a non-empty string");
  }
  item.id = id.get<std::string>();

  const json& sentence = require("sentence");
  if (!sentence.is_string()) {
    throw RecordError(ErrorKind::MalformedRecord, lineno, "sentence must be a string");
  }
  item.sentence = sentence.get<std::string>();

  const json& token_count = require("token_count");
  if (!token_count.is_number_unsigned()) {
    throw RecordError(ErrorKind::MalformedRecord, lineno,
                      "token_count must be a non-negative integer");
  }
  item.token_count = token_count.get<std::uint32_t>();

  const json& parsed = require("parsed");
  if (!parsed.is_boolean()) {
    throw RecordError(ErrorKind::MalformedRecord, lineno, "parsed must be a boolean");
  }
  item.parsed = parsed.get<bool>();

  for (const char* field : {"fragment", "exceeded_limit"}) {
    auto it = record.find(field);
    if (it != record.end()) {
      if (!it->is_boolean()) {
        throw RecordError(ErrorKind::MalformedRecord, lineno,
                          std::string(field) + " must be a boolean");
      }
      (field[0] == 'f' ? item.fragment : item.exceeded_limit) = it->get<bool>();
    }
  }

  item.cpu_seconds = parse_optional_nonneg(record, "cpu_seconds", lineno);
  item.memory_gb = parse_optional_nonneg(record, "memory_gb", lineno);

  if (auto it = record.find("construction_labels"); it != record.end()) {
    item.construction_labels = parse_label_counts(*it, lineno, "construction_labels");
  }
  if (auto it = record.find("lextype_labels"); it != record.end()) {
    item.lextype_labels = parse_label_counts(*it, lineno, "lextype_labels");
  }

  if (!item.parsed &&
      (!item.construction_labels.empty() || !item.lextype_labels.empty())) {
    throw RecordError(ErrorKind::MalformedRecord, lineno,
                      "unparsed item carries label multisets");
  }
  if (!item.sentence.empty() && item.token_count == 0) {
    throw RecordError(ErrorKind::MalformedRecord, lineno,
                      "token_count must be >= 1 for a non-empty sentence");
  }
  return item;
}

}  // namespace

Corpus load_corpus_jsonl(const std::string& path, const std::string& name,
                         SourceKind kind, const std::string& year_tag) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open corpus file: " + path);
  }
  Corpus corpus;
  corpus.name = name;
  corpus.kind = kind;
  corpus.year_tag = year_tag;

  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded()) {
      throw RecordError(ErrorKind::MalformedRecord, lineno, "invalid JSON");
    }
    ItemRecord item = parse_item(record, lineno);
    if (!seen.insert(item.id).second) {
      throw Error(ErrorKind::DuplicateId,
                  "duplicate item id '" + item.id + "' (line " + std::to_string(lineno) + ")");
    }
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

Corpus load_corpus_derivations(const std::string& deriv_path, const LexiconMap& lexicon,
                               const std::string& name, SourceKind kind,
                               const std::string& year_tag) {
  std::ifstream in(deriv_path);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open derivation file: " + deriv_path);
  }
  Corpus corpus;
  corpus.name = name;
  corpus.kind = kind;
  corpus.year_tag = year_tag;

  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.find_first_not_of(" \t") == std::string::npos) {
      continue;
    }
    std::string id;
    std::string_view expr = line;
    std::size_t tab = line.find('\t');
    if (tab != std::string::npos) {
      id = line.substr(0, tab);
      expr = std::string_view(line).substr(tab + 1);
    } else {
      id = "line-" + std::to_string(lineno);
    }

    DerivationTree tree;
    try {
      tree = parse_derivation(expr);
    } catch (const ParseError& e) {
      throw RecordError(ErrorKind::MalformedRecord, lineno, e.what());
    }
    ExtractedLabels labels = extract_labels(tree, lexicon);

    ItemRecord item;
    item.id = id;
    item.parsed = true;
    std::vector<std::string_view> surface;
    collect_surface(tree, surface);
    std::string sentence;
    for (std::string_view token : surface) {
      if (!sentence.empty()) {
        sentence.push_back(' ');
      }
      sentence += token;
    }
    item.sentence = std::move(sentence);
    item.token_count = static_cast<std::uint32_t>(surface.size());
    item.construction_labels = std::move(labels.constructions);
    item.lextype_labels = std::move(labels.lextypes);

    if (!seen.insert(item.id).second) {
      throw Error(ErrorKind::DuplicateId,
                  "duplicate item id '" + item.id + "' (line " + std::to_string(lineno) + ")");
    }
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

Corpus load_corpus(const CorpusSpec& spec) {
  Corpus corpus;
  if (spec.format == CorpusFormat::jsonl) {
    corpus = load_corpus_jsonl(spec.path, spec.name, spec.kind, spec.year_tag);
  } else {
    if (spec.lexicon_path.empty()) {
      throw Error(ErrorKind::Io, "derivations format requires a lexicon path (corpus '" +
                                     spec.name + "')");
    }
    LexiconMap lexicon = load_lexicon(spec.lexicon_path);
    corpus = load_corpus_derivations(spec.path, lexicon, spec.name, spec.kind, spec.year_tag);
  }
  corpus.ram_limit_gb = spec.ram_limit_gb;
  return corpus;
}

namespace {

json label_counts_to_json(const LabelCounts& counts) {
  json obj = json::object();
  for (const auto& [label, count] : counts) {
    obj[label] = count;
  }
  return obj;
}

}  // namespace

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::string out;
  for (const ItemRecord& item : corpus.items) {
    json record;
    record["id"] = item.id;
    record["sentence"] = item.sentence;
    record["token_count"] = item.token_count;
    record["parsed"] = item.parsed;
    record["fragment"] = item.fragment;
    record["exceeded_limit"] = item.exceeded_limit;
    if (item.cpu_seconds) {
      record["cpu_seconds"] = *item.cpu_seconds;
    }
    if (item.memory_gb) {
      record["memory_gb"] = *item.memory_gb;
    }
    record["construction_labels"] = label_counts_to_json(item.construction_labels);
    record["lextype_labels"] = label_counts_to_json(item.lextype_labels);
    out += record.dump();
    out.push_back('\n');
  }
  return out;
}

void save_corpus_jsonl(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::Io, "cannot write corpus file: " + path);
  }
  out << corpus_to_jsonl(corpus);
  if (!out) {
    throw Error(ErrorKind::Io, "write failed: " + path);
  }
}

}  // namespace syndiv

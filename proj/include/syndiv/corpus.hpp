#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syndiv/derivation.hpp"

namespace syndiv {

enum class SourceKind { human, llm };

const char* to_string(SourceKind kind);
SourceKind source_kind_from_string(std::string_view text);

/// One sentence/item of a parse profile. Unparsed items carry empty label
/// multisets; they stay in the corpus for parsability statistics but never
/// contribute to distributions.
struct ItemRecord {
  std::string id;
  std::string sentence;
  std::uint32_t token_count = 0;
  bool parsed = false;
  bool fragment = false;
  bool exceeded_limit = false;
  std::optional<double> cpu_seconds;
  std::optional<double> memory_gb;
  LabelCounts construction_labels;
  LabelCounts lextype_labels;

  /// Items that exceeded resource limits count as unparsed everywhere
  /// except the over-limit column.
  bool effectively_parsed() const { return parsed && !exceeded_limit; }
};

struct Corpus {
  std::string name;
  SourceKind kind = SourceKind::human;
  std::string year_tag;
  std::vector<ItemRecord> items;
  std::optional<double> ram_limit_gb;  // pass-through profile metadata
};

enum class CorpusFormat { jsonl, derivations };

struct CorpusSpec {
  std::string name;
  std::string path;
  CorpusFormat format = CorpusFormat::jsonl;
  std::string lexicon_path;  // derivations format only
  SourceKind kind = SourceKind::human;
  std::string year_tag;
  std::optional<double> ram_limit_gb;
};

/// JSONL item records, one per line, field names as in ItemRecord.
/// Label multisets may be JSON arrays (with repeats) or label->count
/// objects. Errors: Io, MalformedRecord(line), DuplicateId(id).
Corpus load_corpus_jsonl(const std::string& path, const std::string& name,
                         SourceKind kind = SourceKind::human,
                         const std::string& year_tag = "");

/// Derivation export: one s-expression per line with an optional leading
/// `id<TAB>` prefix, plus an entry->lextype lexicon for the preterminals.
Corpus load_corpus_derivations(const std::string& deriv_path, const LexiconMap& lexicon,
                               const std::string& name,
                               SourceKind kind = SourceKind::human,
                               const std::string& year_tag = "");

Corpus load_corpus(const CorpusSpec& spec);

/// Canonical JSONL with sorted keys; loading it back yields an equal corpus.
void save_corpus_jsonl(const Corpus& corpus, const std::string& path);
std::string corpus_to_jsonl(const Corpus& corpus);

}  // namespace syndiv

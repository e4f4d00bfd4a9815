#include "syndiv/generation.hpp"

#include <cctype>
#include <unordered_set>

namespace syndiv {

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) {
      tokens.push_back(text.substr(start, i - start));
    }
  }
  return tokens;
}

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return text.substr(begin, end - begin);
}

void replace_all(std::string& text, std::string_view placeholder, std::string_view value) {
  std::size_t pos = 0;
  while ((pos = text.find(placeholder, pos)) != std::string::npos) {
    text.replace(pos, placeholder.size(), value);
    pos += value.size();
  }
}

// Strips one leading `Lead:` / `Paragraph:` / `Output:` label. Returns
// whether anything was removed.
bool strip_label(std::string_view& text) {
  for (std::string_view label : {"Lead", "Paragraph", "Output"}) {
    if (text.size() <= label.size() || text.substr(0, label.size()) != label) {
      continue;
    }
    std::size_t i = label.size();
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
      ++i;
    }
    if (i < text.size() && text[i] == ':') {
      text.remove_prefix(i + 1);
      text = trim(text);
      return true;
    }
  }
  return false;
}

}  // namespace

PromptPair render_prompts(const GenerationTask& task) {
  if (task.headline.empty()) {
    throw Error(ErrorKind::BadTask, "headline is empty (task '" + task.source_id + "')");
  }
  if (split_tokens(task.lead_three_words).size() != 3) {
    throw Error(ErrorKind::BadTask, "lead_three_words must contain exactly three tokens "
                                    "(task '" + task.source_id + "')");
  }
  PromptPair prompts;
  prompts.system = std::string(kSystemPrompt);
  prompts.user = std::string(kUserPromptTemplate);
  replace_all(prompts.user, "{headline}", task.headline);
  replace_all(prompts.user, "{lead_three_words}", task.lead_three_words);
  return prompts;
}

std::string clean_output(const std::string& raw) {
  std::string_view text = trim(raw);
  while (strip_label(text)) {
  }
  // first blank-line-separated paragraph
  std::size_t pos = 0;
  while ((pos = text.find('\n', pos)) != std::string_view::npos) {
    std::size_t next = pos + 1;
    while (next < text.size() && (text[next] == ' ' || text[next] == '\t' ||
                                  text[next] == '\r')) {
      ++next;
    }
    if (next < text.size() && text[next] == '\n') {
      text = text.substr(0, pos);
      break;
    }
    pos = next;
  }
  text = trim(text);
  if (text.empty()) {
    throw Error(ErrorKind::EmptyAfterCleaning, "no content left after cleaning");
  }
  return std::string(text);
}

std::vector<std::string> default_abbreviations() {
  std::vector<std::string> abbreviations = {
      "Mr.",   "Mrs.",  "Ms.",   "Dr.",   "Prof.", "Gen.",  "Sen.",  "Rep.",
      "Gov.",  "Lt.",   "Col.",  "Sgt.",  "Capt.", "St.",   "Ave.",  "Blvd.",
      "Jr.",   "Sr.",   "Co.",   "Corp.", "Inc.",  "Ltd.",  "vs.",   "etc.",
      "e.g.",  "i.e.",  "cf.",   "approx.", "No.", "U.S.",  "U.K.",  "U.N.",
      "a.m.",  "p.m.",  "Jan.",  "Feb.",  "Mar.",  "Apr.",  "Jun.",  "Jul.",
      "Aug.",  "Sep.",  "Sept.", "Oct.",  "Nov.",  "Dec.",  "Mon.",  "Tue.",
      "Wed.",  "Thu.",  "Fri.",  "Sat.",  "Sun.",
  };
  for (char c = 'A'; c <= 'Z'; ++c) {
    abbreviations.push_back(std::string(1, c) + ".");
  }
  return abbreviations;
}

std::vector<std::string> segment_sentences(std::string_view paragraph) {
  return segment_sentences(paragraph, default_abbreviations());
}

std::vector<std::string> segment_sentences(std::string_view paragraph,
                                           const std::vector<std::string>& abbreviations) {
  std::unordered_set<std::string_view> exceptions(abbreviations.begin(), abbreviations.end());
  std::vector<std::string> sentences;
  std::size_t start = 0;
  auto is_space = [&](std::size_t i) {
    return std::isspace(static_cast<unsigned char>(paragraph[i])) != 0;
  };

  for (std::size_t i = 0; i < paragraph.size(); ++i) {
    char c = paragraph[i];
    if (c != '.' && c != '!' && c != '?') {
      continue;
    }
    if (c == '.' && i > 0 && i + 1 < paragraph.size() &&
        std::isdigit(static_cast<unsigned char>(paragraph[i - 1])) &&
        std::isdigit(static_cast<unsigned char>(paragraph[i + 1]))) {
      continue;  // decimal point
    }
    if (c == '.') {
      // token ending at this period, e.g. "Mr." or "U.S."
      std::size_t tok_start = i;
      while (tok_start > 0 && !is_space(tok_start - 1)) {
        --tok_start;
      }
      if (exceptions.contains(paragraph.substr(tok_start, i - tok_start + 1))) {
        continue;
      }
    }
    // absorb closing quotes/brackets
    std::size_t end = i + 1;
    while (end < paragraph.size() &&
           (paragraph[end] == '"' || paragraph[end] == '\'' || paragraph[end] == ')' ||
            paragraph[end] == ']')) {
      ++end;
    }
    if (end < paragraph.size() && !is_space(end)) {
      continue;  // mid-token terminator
    }
    std::string_view sentence = trim(paragraph.substr(start, end - start));
    if (!sentence.empty()) {
      sentences.emplace_back(sentence);
    }
    start = end;
    i = end - 1;
  }
  std::string_view tail = trim(paragraph.substr(start));
  if (!tail.empty()) {
    sentences.emplace_back(tail);
  }
  return sentences;
}

std::string lead_three_words(std::string_view lead) {
  std::vector<std::string_view> tokens = split_tokens(lead);
  if (tokens.size() < 3) {
    return "";
  }
  std::string out(tokens[0]);
  out += ' ';
  out += tokens[1];
  out += ' ';
  out += tokens[2];
  return out;
}

}  // namespace syndiv

#include "rag/segmenter.hpp"

#include <array>
#include <cctype>

namespace rag::seg {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Closing quote/bracket staying with the preceding sentence. Returns the byte
// length of the closing char at pos, or 0.
std::size_t closing_len(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  // U+201D and U+2019
  if (pos + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(text[pos + 1]) == 0x80) {
    const unsigned char b3 = static_cast<unsigned char>(text[pos + 2]);
    if (b3 == 0x9D || b3 == 0x99) return 3;
  }
  return 0;
}

// Uppercase letter, digit, or opening quote: the characters that may begin a
// new sentence after a terminator.
bool starts_sentence(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= '0' && c <= '9') return true;
  if (c == '"' || c == '\'') return true;
  // U+201C and U+2018
  if (pos + 2 < text.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(text[pos + 1]) == 0x80) {
    const unsigned char b3 = static_cast<unsigned char>(text[pos + 2]);
    if (b3 == 0x9C || b3 == 0x98) return true;
  }
  return false;
}

constexpr std::array<std::string_view, 10> kAbbreviations = {
    "Mr.", "Mrs.", "Dr.", "e.g.", "i.e.", "etc.", "vs.", "Fig.", "No.", "U.S.",
};

// The maximal run of [alnum .] ending at dot_pos (inclusive), matched
// case-sensitively against the abbreviation list.
bool ends_with_abbreviation(std::string_view text, std::size_t dot_pos) {
  std::size_t begin = dot_pos;
  while (begin > 0) {
    const char c = text[begin - 1];
    if (c == '.' || std::isalnum(static_cast<unsigned char>(c))) {
      --begin;
    } else {
      break;
    }
  }
  const std::string_view token = text.substr(begin, dot_pos - begin + 1);
  for (std::string_view abbr : kAbbreviations) {
    if (token == abbr) return true;
  }
  return false;
}

std::size_t last_non_space(std::string_view text) {
  std::size_t end = text.size();
  while (end > 0 && is_space(text[end - 1])) --end;
  return end;
}

std::string make_tag(TagScheme scheme, std::size_t index) {
  return std::string("<") + scheme_char(scheme) + std::to_string(index) + "> ";
}

std::string render_tags(std::string_view original, const std::vector<SentenceSpan>& spans,
                        TagScheme scheme, std::size_t tag_base) {
  std::string out;
  out.reserve(original.size() + spans.size() * 6);
  std::size_t cursor = 0;
  for (const SentenceSpan& span : spans) {
    out.append(original.substr(cursor, span.start - cursor));  // gap before the sentence
    out.append(make_tag(scheme, tag_base + span.index));
    out.append(original.substr(span.start, span.end - span.start));
    cursor = span.end;
  }
  out.append(original.substr(cursor));
  return out;
}

}  // namespace

char scheme_char(TagScheme scheme) {
  switch (scheme) {
    case TagScheme::i: return 'i';
    case TagScheme::r: return 'r';
    case TagScheme::c: return 'c';
  }
  return '?';
}

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  std::vector<SentenceSpan> spans;
  const std::size_t n = text.size();
  const std::size_t content_end = last_non_space(text);

  std::size_t start = 0;
  while (start < content_end && is_space(text[start])) ++start;
  if (start >= content_end) return spans;

  std::size_t pos = start;
  while (pos < content_end) {
    if (!is_terminator(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t first_term = pos;
    std::size_t q = pos;
    while (q < n && is_terminator(text[q])) ++q;
    const std::size_t term_run = q - first_term;
    while (q < n) {
      const std::size_t len = closing_len(text, q);
      if (len == 0) break;
      q += len;
    }
    if (q >= content_end) {
      // Sentence closes the remaining content.
      spans.push_back({spans.size(), start, q});
      return spans;
    }
    if (!is_space(text[q])) {
      pos = q;
      continue;
    }
    std::size_t next = q;
    while (next < n && is_space(text[next])) ++next;
    const bool abbreviation =
        term_run == 1 && text[first_term] == '.' && ends_with_abbreviation(text, first_term);
    if (!abbreviation && next < n && starts_sentence(text, next)) {
      spans.push_back({spans.size(), start, q});
      start = next;
      pos = next;
    } else {
      pos = q;
    }
  }
  spans.push_back({spans.size(), start, content_end});
  return spans;
}

TaggedText tag_response(std::string_view response, TagScheme scheme) {
  if (trim(response).empty()) {
    throw ValidationError(ErrorKind::empty_response, "response is empty after trimming");
  }
  TaggedText tagged;
  tagged.original = std::string(response);
  tagged.spans = split_sentences(response);
  tagged.scheme = scheme;
  tagged.rendered = render_tags(tagged.original, tagged.spans, scheme, 0);
  return tagged;
}

ContextIndex tag_documents(const std::vector<Document>& docs) {
  if (docs.empty()) {
    throw ValidationError(ErrorKind::empty_document_list, "no documents to tag");
  }
  ContextIndex index;
  std::size_t next_id = 0;
  for (std::size_t ordinal = 0; ordinal < docs.size(); ++ordinal) {
    const Document& doc = docs[ordinal];
    if (trim(doc.text).empty()) {
      throw ValidationError(ErrorKind::empty_document_text, "document \"" + doc.doc_id + "\"");
    }
    TaggedText tagged;
    tagged.original = doc.text;
    tagged.spans = split_sentences(doc.text);
    tagged.scheme = TagScheme::c;
    tagged.tag_base = next_id;
    tagged.rendered = render_tags(tagged.original, tagged.spans, TagScheme::c, next_id);
    for (const SentenceSpan& span : tagged.spans) {
      index.global.push_back({ordinal, span});
    }
    next_id += tagged.spans.size();
    index.documents.push_back(std::move(tagged));
  }
  return index;
}

namespace {

void check_id(int id, std::size_t count) {
  if (id < 0 || static_cast<std::size_t>(id) >= count) {
    throw ValidationError(ErrorKind::id_out_of_range,
                          "id " + std::to_string(id) + " outside [0, " + std::to_string(count) + ")");
  }
}

}  // namespace

std::vector<SentenceSpan> spans_for_ids(const TaggedText& tagged, const std::vector<int>& ids) {
  std::vector<SentenceSpan> out;
  out.reserve(ids.size());
  for (int id : ids) {
    check_id(id, tagged.spans.size());
    out.push_back(tagged.spans[static_cast<std::size_t>(id)]);
  }
  return out;
}

std::vector<ContextIndex::Entry> spans_for_ids(const ContextIndex& index,
                                               const std::vector<int>& ids) {
  std::vector<ContextIndex::Entry> out;
  out.reserve(ids.size());
  for (int id : ids) {
    check_id(id, index.global.size());
    out.push_back(index.global[static_cast<std::size_t>(id)]);
  }
  return out;
}

std::string strip_tags(std::string_view rendered) {
  std::string out;
  out.reserve(rendered.size());
  std::size_t pos = 0;
  while (pos < rendered.size()) {
    if (rendered[pos] == '<' && pos + 3 < rendered.size() &&
        (rendered[pos + 1] == 'i' || rendered[pos + 1] == 'r' || rendered[pos + 1] == 'c')) {
      std::size_t d = pos + 2;
      while (d < rendered.size() && std::isdigit(static_cast<unsigned char>(rendered[d]))) ++d;
      if (d > pos + 2 && d + 1 < rendered.size() && rendered[d] == '>' && rendered[d + 1] == ' ') {
        pos = d + 2;
        continue;
      }
      if (d > pos + 2 && d < rendered.size() && rendered[d] == '>' && d + 1 == rendered.size()) {
        pos = d + 1;
        continue;
      }
    }
    out.push_back(rendered[pos]);
    ++pos;
  }
  return out;
}

}  // namespace rag::seg

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rag/core.hpp"

namespace rag::seg {

// Byte-exact sentence span: [start, end) offsets into the original UTF-8
// text, never character counts.
struct SentenceSpan {
  std::size_t index;
  std::size_t start;
  std::size_t end;

  bool operator==(const SentenceSpan&) const = default;
};

// Tag schemes: <iI> for hallucination detection, <rI> for citation responses,
// <cI> for context sentences.
enum class TagScheme { i, r, c };

char scheme_char(TagScheme scheme);

// A text with its sentence spans and the rendered form where every sentence
// is prefixed with "<i0> "-style tags. Stripping the tags (tag plus the one
// inserted space) from rendered reproduces original byte-exactly.
struct TaggedText {
  std::string original;
  std::vector<SentenceSpan> spans;
  TagScheme scheme;
  std::string rendered;
  // First tag number used in rendered; 0 except for documents inside a
  // ContextIndex, whose numbering continues across documents.
  std::size_t tag_base = 0;
};

// Per-document tagged texts plus the global map from context sentence id to
// its owning document and span. Global ids are consecutive from 0 across
// documents in input order.
struct ContextIndex {
  struct Entry {
    std::size_t doc_ordinal;
    SentenceSpan span;  // offsets into that document's text

    bool operator==(const Entry&) const = default;
  };

  std::vector<TaggedText> documents;
  std::vector<Entry> global;  // position == global context sentence id
};

// Deterministic rule-based splitter. A sentence ends after a run of terminal
// punctuation (. ! ?) plus any closing quotes/brackets, when followed by
// whitespace and an uppercase letter, opening quote, or digit. No split after
// the fixed abbreviation list (Mr. Mrs. Dr. e.g. i.e. etc. vs. Fig. No. U.S.)
// and none inside decimal numbers (no whitespace after the dot). Spans cover
// all non-whitespace content; empty text yields an empty list.
std::vector<SentenceSpan> split_sentences(std::string_view text);

// Renders "<{scheme}{k}> " before each sentence, preserving the original
// inter-sentence whitespace. Throws EmptyResponse on whitespace-only input.
TaggedText tag_response(std::string_view response, TagScheme scheme);

// Tags every document with scheme c; document k continues the numbering of
// document k-1. Throws EmptyDocumentList / EmptyDocumentText.
ContextIndex tag_documents(const std::vector<Document>& docs);

// Resolve response sentence ids / global context ids to spans, in input
// order. Throws IdOutOfRange naming the offending id and the valid range.
std::vector<SentenceSpan> spans_for_ids(const TaggedText& tagged, const std::vector<int>& ids);
std::vector<ContextIndex::Entry> spans_for_ids(const ContextIndex& index,
                                               const std::vector<int>& ids);

// Removes every "<i3> "-style tag (tag plus one space); inverse of rendering.
std::string strip_tags(std::string_view rendered);

}  // namespace rag::seg

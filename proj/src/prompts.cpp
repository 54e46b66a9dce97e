#include "rag/prompts.hpp"

namespace rag::prompts {

const std::string kQueryRewriteRole =
    "rewrite: Reword the final utterance from the USER into a single utterance that doesn't "
    "need the prior conversation history to understand the user's intent. If the final "
    "utterance is a clear and standalone question, please DO NOT attempt to rewrite it, rather "
    "output the last utterance as is. Your output format should be in JSON: "
    "{ \"rewritten_question\": <REWRITE> }";

const std::string kContextRelevanceRole = "context_relevance";
const std::string kAnswerabilityRole = "answerability";
const std::string kCertaintyRole = "certainty";

const std::string kHallucinationInstruction =
    "Split the last assistant response into individual sentences. For each sentence in the "
    "last assistant response, identify the faithfulness by comparing with the provided "
    "documents and generate the faithfulness reasoning and faithfulness decision. Ensure that "
    "your output includes all response sentence IDs, and for each response sentence ID, "
    "provide the corresponding faithfulness reasoning and faithfulness decision. The output "
    "must be a json structure.";

const std::string kCitationInstruction =
    "Split the last assistant response into individual sentences. For each sentence in the "
    "response, identify the statement IDs from the documents that it references. Ensure that "
    "your output includes all response sentence IDs, and for each response sentence ID, "
    "provide the corresponding referring document sentence IDs.";

// Doubled spaces are in the source prompt.
const std::string kRerankJudgePrompt =
    "You are a smart and helpful AI assistant with in-depth knowledge about how people search "
    "for information using search engines. In this task, you are  given two passages, and a "
    "query, your job is to judge which passage is relatively more suitable to answer that "
    "query. The first passage will start with \"passage A\" and the  second passage with start "
    "with \"passage B\". Output the preferred passage index, i.e. A  or B and followed by an "
    "explanation, if none of the passage answer the query directly,  pick the one that has "
    "more relevant information.";

const char* to_string(Trigger trigger) {
  switch (trigger) {
    case Trigger::qr: return "qr";
    case Trigger::cr: return "cr";
    case Trigger::ad: return "ad";
    case Trigger::uq: return "uq";
    case Trigger::hd: return "hd";
    case Trigger::cg: return "cg";
    case Trigger::prr: return "prr";
    case Trigger::generate: return "generate";
  }
  return "?";
}

std::string default_document_block(const Document& doc) {
  std::string block = "[Document " + doc.doc_id + "]";
  if (doc.title) block += " " + *doc.title;
  block += "\n" + doc.text;
  return block;
}

namespace {

TerminalRole expected_end(Trigger trigger) {
  switch (trigger) {
    case Trigger::qr:
    case Trigger::cr:
    case Trigger::ad:
    case Trigger::prr:
      return TerminalRole::user_query;
    case Trigger::hd:
    case Trigger::cg:
      return TerminalRole::assistant_response;
    case Trigger::uq:
    case Trigger::generate:
      return TerminalRole::either;
  }
  return TerminalRole::either;
}

std::string block_for(const PromptTemplate& tmpl, const Document& doc) {
  return tmpl.document_block ? tmpl.document_block(doc) : default_document_block(doc);
}

struct Writer {
  const PromptTemplate& tmpl;
  std::string text;

  void turn(std::string_view role, std::string_view content) {
    text += tmpl.role_open;
    text += role;
    text += tmpl.role_close;
    text += content;
    text += tmpl.turn_end;
  }

  void documents(const std::vector<Document>& docs) {
    if (docs.empty()) return;
    std::string joined;
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (i > 0) joined += "\n\n";
      joined += block_for(tmpl, docs[i]);
    }
    turn("documents", joined);
  }

  // Trailing role awaiting completion; no turn_end.
  void generation_suffix(std::string_view role) {
    text += tmpl.role_open;
    text += role;
    text += tmpl.role_close;
  }
};

void check_terminal(const Conversation& conv, Trigger trigger) {
  try {
    validate_conversation(conv, expected_end(trigger));
  } catch (const ValidationError& e) {
    if (e.kind() == ErrorKind::wrong_terminal_role) {
      throw ValidationError(ErrorKind::terminal_role_mismatch, e.message());
    }
    throw;
  }
}

// System turn (if any) first, then the document block, then the remaining turns.
void write_body(Writer& w, const Conversation& conv, const std::vector<Document>& docs) {
  std::size_t first = 0;
  if (!conv.turns.empty() && conv.turns.front().role == Role::system) {
    w.turn("system", conv.turns.front().content);
    first = 1;
  }
  w.documents(docs);
  for (std::size_t i = first; i < conv.turns.size(); ++i) {
    w.turn(to_string(conv.turns[i].role), conv.turns[i].content);
  }
}

RenderedPrompt finish(Writer& w, std::string generation_role, PromptMeta meta = {}) {
  w.generation_suffix(generation_role);
  return RenderedPrompt{std::move(w.text), std::move(generation_role), meta};
}

}  // namespace

RenderedPrompt render(const Conversation& conv, Trigger trigger, const PromptTemplate& tmpl) {
  return render(conv, {}, trigger, tmpl);
}

RenderedPrompt render(const Conversation& conv, const std::vector<Document>& docs,
                      Trigger trigger, const PromptTemplate& tmpl) {
  check_terminal(conv, trigger);
  switch (trigger) {
    case Trigger::cr:
      if (docs.empty()) {
        throw ValidationError(ErrorKind::missing_documents, "context relevance needs one passage");
      }
      if (docs.size() != 1) {
        throw ValidationError(ErrorKind::invalid_params,
                              "context relevance judges exactly one passage per call");
      }
      break;
    case Trigger::ad:
      if (docs.empty()) {
        throw ValidationError(ErrorKind::missing_documents, "answerability needs passages");
      }
      break;
    case Trigger::prr: {
      if (docs.size() != 2) {
        throw ValidationError(docs.empty() ? ErrorKind::missing_documents : ErrorKind::invalid_params,
                              "rerank pair prompt takes exactly two passages");
      }
      return render_rerank_pair(conv.last_user_content(), docs[0], docs[1], kRerankJudgePrompt,
                                tmpl);
    }
    case Trigger::hd:
      return render_hd(conv, docs, tmpl);
    case Trigger::cg:
      return render_cg(conv, docs, tmpl);
    default:
      break;
  }

  Writer w{tmpl, {}};
  write_body(w, conv, docs);
  switch (trigger) {
    case Trigger::qr: return finish(w, kQueryRewriteRole);
    case Trigger::cr: return finish(w, kContextRelevanceRole);
    case Trigger::ad: return finish(w, kAnswerabilityRole);
    case Trigger::uq: return finish(w, kCertaintyRole);
    case Trigger::generate: return finish(w, "assistant");
    default: break;
  }
  throw ValidationError(ErrorKind::invalid_params, "unreachable trigger");
}

namespace {

RenderedPrompt render_tagged(const Conversation& conv, const std::vector<Document>& docs,
                             bool citation_mode, const PromptTemplate& tmpl) {
  check_terminal(conv, citation_mode ? Trigger::cg : Trigger::hd);
  if (docs.empty()) {
    throw ValidationError(ErrorKind::empty_document_list,
                          citation_mode ? "citation generation needs passages"
                                        : "hallucination detection needs passages");
  }

  PromptMeta meta;
  const seg::TaggedText response =
      seg::tag_response(conv.last().content, citation_mode ? seg::TagScheme::r : seg::TagScheme::i);
  meta.n_response_sentences = response.spans.size();

  std::vector<Document> rendered_docs = docs;
  if (citation_mode) {
    const seg::ContextIndex index = seg::tag_documents(docs);
    meta.n_context_sentences = index.global.size();
    for (std::size_t k = 0; k < rendered_docs.size(); ++k) {
      rendered_docs[k].text = index.documents[k].rendered;
    }
  }

  Conversation augmented = conv;
  augmented.turns.back().content = response.rendered;

  Writer w{tmpl, {}};
  write_body(w, augmented, rendered_docs);
  w.turn("system", citation_mode ? kCitationInstruction : kHallucinationInstruction);
  return finish(w, "assistant", meta);
}

}  // namespace

RenderedPrompt render_hd(const Conversation& conv, const std::vector<Document>& docs,
                         const PromptTemplate& tmpl) {
  return render_tagged(conv, docs, /*citation_mode=*/false, tmpl);
}

RenderedPrompt render_cg(const Conversation& conv, const std::vector<Document>& docs,
                         const PromptTemplate& tmpl) {
  return render_tagged(conv, docs, /*citation_mode=*/true, tmpl);
}

RenderedPrompt render_rerank_pair(const std::string& query, const Document& passage_a,
                                  const Document& passage_b, const std::string& judge_prompt,
                                  const PromptTemplate& tmpl) {
  std::string content = judge_prompt;
  content += "\n\nQuery: " + query;
  content += "\n\npassage A: " + passage_a.text;
  content += "\n\npassage B: " + passage_b.text;
  Writer w{tmpl, {}};
  w.turn("user", content);
  return finish(w, "assistant");
}

}  // namespace rag::prompts

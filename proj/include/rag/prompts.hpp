#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rag/core.hpp"
#include "rag/segmenter.hpp"

namespace rag::prompts {

// The documented default chat markup. The intrinsic contract is the role and
// instruction strings below, not this markup; swap the template to target a
// different server-side chat format.
struct PromptTemplate {
  std::string role_open = "<|start_of_role|>";
  std::string role_close = "<|end_of_role|>";
  std::string turn_end = "<|end_of_text|>";
  std::function<std::string(const Document&)> document_block;  // defaults to default_document_block
};

// "[Document <doc_id>] <title>\n<text>"; the title part is dropped when absent.
std::string default_document_block(const Document& doc);

enum class Trigger { qr, cr, ad, uq, hd, cg, prr, generate };

const char* to_string(Trigger trigger);

// Sentence counts recorded while tagging for HD/CG renders.
struct PromptMeta {
  std::size_t n_response_sentences = 0;
  std::size_t n_context_sentences = 0;
};

struct RenderedPrompt {
  std::string text;             // ends with role_open + generation_role + role_close
  std::string generation_role;  // the trailing role awaiting completion
  PromptMeta meta;
};

// Verbatim trigger strings; these are the wire contract with the adapters.
extern const std::string kQueryRewriteRole;
extern const std::string kContextRelevanceRole;   // "context_relevance"
extern const std::string kAnswerabilityRole;      // "answerability"
extern const std::string kCertaintyRole;          // "certainty"
extern const std::string kHallucinationInstruction;
extern const std::string kCitationInstruction;
extern const std::string kRerankJudgePrompt;

// Serializes the conversation (plus optional document block after the system
// turn) and appends the trigger's generation suffix. Requirements per
// trigger: cr takes exactly one document, ad/hd/cg at least one, prr exactly
// two (the pair, lower original index first = "passage A"), uq/qr/generate
// render documents only when given.
RenderedPrompt render(const Conversation& conv, const std::vector<Document>& docs,
                      Trigger trigger, const PromptTemplate& tmpl = {});
RenderedPrompt render(const Conversation& conv, Trigger trigger, const PromptTemplate& tmpl = {});

// HD: final assistant turn replaced by its <iI>-tagged form, documents kept
// plain, instruction appended as a final system turn.
RenderedPrompt render_hd(const Conversation& conv, const std::vector<Document>& docs,
                         const PromptTemplate& tmpl = {});

// CG: final assistant turn tagged with <rI>, documents replaced by their
// <cI>-tagged forms with numbering continuing across documents.
RenderedPrompt render_cg(const Conversation& conv, const std::vector<Document>& docs,
                         const PromptTemplate& tmpl = {});

// The pairwise judge prompt as a single user turn followed by the assistant
// generation role.
RenderedPrompt render_rerank_pair(const std::string& query, const Document& passage_a,
                                  const Document& passage_b,
                                  const std::string& judge_prompt = kRerankJudgePrompt,
                                  const PromptTemplate& tmpl = {});

}  // namespace rag::prompts

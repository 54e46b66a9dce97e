#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rag/errors.hpp"

namespace rag {

enum class Role { system, user, assistant };

const char* to_string(Role role);
Role role_from_string(std::string_view s);

// One conversational utterance. Content must be non-empty after trimming.
struct Turn {
  Role role;
  std::string content;

  bool operator==(const Turn&) const = default;
};

// Ordered turns: at most one leading system turn, then strictly alternating
// user/assistant roles. All intrinsics consume a Conversation.
struct Conversation {
  std::vector<Turn> turns;

  bool empty() const { return turns.empty(); }
  const Turn& last() const { return turns.back(); }

  // Content of the last user turn; throws if the conversation has none.
  const std::string& last_user_content() const;

  bool operator==(const Conversation&) const = default;
};

// Identified grounding passage. doc_id must be unique within any list it
// appears in; title is optional (the title+text shape and the doc_id+text
// shape are two serializations of this one type).
struct Document {
  std::string doc_id;
  std::optional<std::string> title;
  std::string text;

  bool operator==(const Document&) const = default;
};

enum class IntrinsicName { qr, qe, cr, ad, prr, uq, hd, cg };

enum class PassageNeed { none, one, many, optional };
enum class TerminalRole { user_query, assistant_response, either };
enum class Stage { pre_retrieval, pre_generation, post_generation, pre_or_post };

const char* to_string(IntrinsicName name);
IntrinsicName intrinsic_from_string(std::string_view s);  // accepts "QR", "qr", ...
const char* to_string(TerminalRole role);

// One registry row: what an intrinsic expects and where it sits in the flow.
struct IntrinsicSignature {
  IntrinsicName name;
  PassageNeed needs_passages;
  TerminalRole ends_with;
  Stage stage;
};

// The eight intrinsics with their expected inputs and stages.
const std::array<IntrinsicSignature, 8>& intrinsic_registry();
const IntrinsicSignature& registry_lookup(IntrinsicName name);

// Checks the Conversation invariants plus the expected terminal role and
// returns the conversation unchanged. Throws ValidationError with kinds
// empty_conversation, empty_turn_content, misplaced_system_turn,
// consecutive_same_role or wrong_terminal_role.
const Conversation& validate_conversation(const Conversation& conv, TerminalRole expected_end);

// JSON shapes: turns as {"role","content"}, documents as
// {"doc_id","title","text"} with title omitted when absent and doc_id
// auto-assigned "doc_<index>" when absent.
nlohmann::json to_json(const Turn& turn);
nlohmann::json to_json(const Conversation& conv);
nlohmann::json to_json(const Document& doc);
nlohmann::json to_json(const std::vector<Document>& docs);

Turn turn_from_json(const nlohmann::json& j);
Conversation conversation_from_json(const nlohmann::json& j);
Document document_from_json(const nlohmann::json& j, std::size_t index = 0);
std::vector<Document> documents_from_json(const nlohmann::json& j);

// Trims ASCII whitespace from both ends.
std::string trim(std::string_view s);

}  // namespace rag

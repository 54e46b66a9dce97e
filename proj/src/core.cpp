#include "rag/core.hpp"

#include <algorithm>
#include <cctype>

namespace rag {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::empty_conversation: return "EmptyConversation";
    case ErrorKind::wrong_terminal_role: return "WrongTerminalRole";
    case ErrorKind::consecutive_same_role: return "ConsecutiveSameRole";
    case ErrorKind::misplaced_system_turn: return "MisplacedSystemTurn";
    case ErrorKind::empty_turn_content: return "EmptyTurnContent";
    case ErrorKind::unknown_intrinsic: return "UnknownIntrinsic";
    case ErrorKind::empty_response: return "EmptyResponse";
    case ErrorKind::empty_document_list: return "EmptyDocumentList";
    case ErrorKind::empty_document_text: return "EmptyDocumentText";
    case ErrorKind::id_out_of_range: return "IdOutOfRange";
    case ErrorKind::missing_documents: return "MissingDocuments";
    case ErrorKind::terminal_role_mismatch: return "TerminalRoleMismatch";
    case ErrorKind::malformed_output: return "MalformedOutput";
    case ErrorKind::empty_rewrite: return "EmptyRewrite";
    case ErrorKind::unknown_label: return "UnknownLabel";
    case ErrorKind::no_percentage: return "NoPercentage";
    case ErrorKind::missing_sentence_ids: return "MissingSentenceIds";
    case ErrorKind::duplicate_sentence_id: return "DuplicateSentenceId";
    case ErrorKind::no_preference_token: return "NoPreferenceToken";
    case ErrorKind::backend_unavailable: return "BackendUnavailable";
    case ErrorKind::timeout: return "Timeout";
    case ErrorKind::no_script_match: return "NoScriptMatch";
    case ErrorKind::empty_corpus: return "EmptyCorpus";
    case ErrorKind::empty_gold: return "EmptyGold";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::unknown_metric: return "UnknownMetric";
    case ErrorKind::invalid_params: return "InvalidParams";
    case ErrorKind::io_error: return "IoError";
  }
  return "UnknownError";
}

const char* to_string(Role role) {
  switch (role) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
  }
  return "?";
}

Role role_from_string(std::string_view s) {
  if (s == "system") return Role::system;
  if (s == "user") return Role::user;
  if (s == "assistant") return Role::assistant;
  throw ValidationError(ErrorKind::invalid_params, "unknown role \"" + std::string(s) + "\"");
}

const char* to_string(IntrinsicName name) {
  switch (name) {
    case IntrinsicName::qr: return "QR";
    case IntrinsicName::qe: return "QE";
    case IntrinsicName::cr: return "CR";
    case IntrinsicName::ad: return "AD";
    case IntrinsicName::prr: return "PRR";
    case IntrinsicName::uq: return "UQ";
    case IntrinsicName::hd: return "HD";
    case IntrinsicName::cg: return "CG";
  }
  return "?";
}

IntrinsicName intrinsic_from_string(std::string_view s) {
  std::string upper(s);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& sig : intrinsic_registry()) {
    if (upper == to_string(sig.name)) return sig.name;
  }
  throw ValidationError(ErrorKind::unknown_intrinsic, "\"" + std::string(s) + "\"");
}

const char* to_string(TerminalRole role) {
  switch (role) {
    case TerminalRole::user_query: return "user_query";
    case TerminalRole::assistant_response: return "assistant_response";
    case TerminalRole::either: return "either";
  }
  return "?";
}

const std::string& Conversation::last_user_content() const {
  for (auto it = turns.rbegin(); it != turns.rend(); ++it) {
    if (it->role == Role::user) return it->content;
  }
  throw ValidationError(ErrorKind::wrong_terminal_role, "conversation has no user turn");
}

const std::array<IntrinsicSignature, 8>& intrinsic_registry() {
  static const std::array<IntrinsicSignature, 8> rows = {{
      {IntrinsicName::qr, PassageNeed::none, TerminalRole::user_query, Stage::pre_retrieval},
      {IntrinsicName::qe, PassageNeed::none, TerminalRole::user_query, Stage::pre_retrieval},
      {IntrinsicName::cr, PassageNeed::one, TerminalRole::user_query, Stage::pre_generation},
      {IntrinsicName::ad, PassageNeed::many, TerminalRole::user_query, Stage::pre_generation},
      {IntrinsicName::prr, PassageNeed::many, TerminalRole::user_query, Stage::pre_generation},
      {IntrinsicName::uq, PassageNeed::optional, TerminalRole::either, Stage::pre_or_post},
      {IntrinsicName::hd, PassageNeed::many, TerminalRole::assistant_response, Stage::post_generation},
      {IntrinsicName::cg, PassageNeed::many, TerminalRole::assistant_response, Stage::post_generation},
  }};
  return rows;
}

const IntrinsicSignature& registry_lookup(IntrinsicName name) {
  for (const auto& sig : intrinsic_registry()) {
    if (sig.name == name) return sig;
  }
  throw ValidationError(ErrorKind::unknown_intrinsic, "not a registry entry");
}

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

const Conversation& validate_conversation(const Conversation& conv, TerminalRole expected_end) {
  if (conv.turns.empty()) {
    throw ValidationError(ErrorKind::empty_conversation, "conversation has no turns");
  }
  for (std::size_t i = 0; i < conv.turns.size(); ++i) {
    const Turn& turn = conv.turns[i];
    if (trim(turn.content).empty()) {
      throw ValidationError(ErrorKind::empty_turn_content,
                            "turn " + std::to_string(i) + " is empty after trimming");
    }
    if (turn.role == Role::system && i != 0) {
      throw ValidationError(ErrorKind::misplaced_system_turn,
                            "system turn at position " + std::to_string(i) +
                                " (only a single leading system turn is allowed)");
    }
    if (i > 0 && turn.role == conv.turns[i - 1].role) {
      throw ValidationError(ErrorKind::consecutive_same_role,
                            "turns " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                " share role " + to_string(turn.role));
    }
  }
  const Role actual = conv.last().role;
  const bool ok = expected_end == TerminalRole::either
                      ? (actual == Role::user || actual == Role::assistant)
                      : (expected_end == TerminalRole::user_query ? actual == Role::user
                                                                  : actual == Role::assistant);
  if (!ok) {
    throw ValidationError(ErrorKind::wrong_terminal_role,
                          std::string("expected ") + to_string(expected_end) + ", conversation ends with " +
                              to_string(actual));
  }
  return conv;
}

nlohmann::json to_json(const Turn& turn) {
  return nlohmann::json{{"role", to_string(turn.role)}, {"content", turn.content}};
}

nlohmann::json to_json(const Conversation& conv) {
  nlohmann::json turns = nlohmann::json::array();
  for (const Turn& t : conv.turns) turns.push_back(to_json(t));
  return turns;
}

nlohmann::json to_json(const Document& doc) {
  nlohmann::json j{{"doc_id", doc.doc_id}, {"text", doc.text}};
  if (doc.title) j["title"] = *doc.title;
  return j;
}

nlohmann::json to_json(const std::vector<Document>& docs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Document& d : docs) arr.push_back(to_json(d));
  return arr;
}

Turn turn_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("role") || !j.contains("content") ||
      !j["role"].is_string() || !j["content"].is_string()) {
    throw ValidationError(ErrorKind::invalid_params,
                          "turn must be an object with string fields \"role\" and \"content\"");
  }
  return Turn{role_from_string(j["role"].get<std::string>()), j["content"].get<std::string>()};
}

Conversation conversation_from_json(const nlohmann::json& j) {
  const nlohmann::json* turns = &j;
  if (j.is_object() && j.contains("turns")) turns = &j["turns"];
  if (!turns->is_array()) {
    throw ValidationError(ErrorKind::invalid_params, "conversation must be an array of turns");
  }
  Conversation conv;
  for (const auto& t : *turns) conv.turns.push_back(turn_from_json(t));
  return conv;
}

Document document_from_json(const nlohmann::json& j, std::size_t index) {
  if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) {
    throw ValidationError(ErrorKind::invalid_params,
                          "document must be an object with a string \"text\" field");
  }
  Document doc;
  doc.text = j["text"].get<std::string>();
  if (j.contains("doc_id") && j["doc_id"].is_string()) {
    doc.doc_id = j["doc_id"].get<std::string>();
  } else {
    doc.doc_id = "doc_" + std::to_string(index);
  }
  if (j.contains("title") && j["title"].is_string()) doc.title = j["title"].get<std::string>();
  return doc;
}

std::vector<Document> documents_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw ValidationError(ErrorKind::invalid_params, "documents must be an array");
  }
  std::vector<Document> docs;
  docs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) docs.push_back(document_from_json(j[i], i));
  return docs;
}

}  // namespace rag

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rag {

// Library-wide error taxonomy. Every failure surfaces as one of these kinds;
// the class split (ValidationError vs BackendError) drives the CLI exit codes
// (2 for validation, 3 for backend).
enum class ErrorKind {
  // core / conversation
  empty_conversation,
  wrong_terminal_role,
  consecutive_same_role,
  misplaced_system_turn,
  empty_turn_content,
  unknown_intrinsic,
  // segmenter
  empty_response,
  empty_document_list,
  empty_document_text,
  id_out_of_range,
  // prompts
  missing_documents,
  terminal_role_mismatch,
  // parsing
  malformed_output,
  empty_rewrite,
  unknown_label,
  no_percentage,
  missing_sentence_ids,
  duplicate_sentence_id,
  no_preference_token,
  // backend
  backend_unavailable,
  timeout,
  no_script_match,
  // pipeline / evalkit / cli
  empty_corpus,
  empty_gold,
  length_mismatch,
  unknown_metric,
  invalid_params,
  io_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const { return kind_; }

  // Message without the kind prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

// Bad input, bad model output, bad file contents. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Transport, timeout, unmatched script. CLI exit code 3.
class BackendError : public Error {
 public:
  using Error::Error;
};

// Model-output parse failure carrying the raw completion for audit.
class ParseError : public ValidationError {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::string raw = {})
      : ValidationError(kind, message), raw_(std::move(raw)) {}

  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

}  // namespace rag

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace diag {

/// 1-based position in a source or generated text.
struct SourceLoc {
    int line = 1;
    int column = 1;

    bool operator==(const SourceLoc&) const = default;
};

enum class Severity { Error, Warning };

/// A single parse or lint finding. rule_id is always one of the constants
/// in diag::rules below; tools match on it, messages are for humans.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string rule_id;
    std::string message;
    SourceLoc location;
    std::optional<std::string> source_path;

    bool operator==(const Diagnostic&) const = default;
};

// The closed set of rule ids.
namespace rules {

// parser
inline constexpr std::string_view syntax_error = "syntax-error";
inline constexpr std::string_view unknown_keyword = "unknown-keyword";
inline constexpr std::string_view unknown_primitive = "unknown-primitive";
inline constexpr std::string_view unbalanced_delimiter = "unbalanced-delimiter";
inline constexpr std::string_view duplicate_feature = "duplicate-feature";
inline constexpr std::string_view duplicate_member = "duplicate-member";
inline constexpr std::string_view file_not_found = "file-not-found";
inline constexpr std::string_view invalid_utf8 = "invalid-utf8";
inline constexpr std::string_view io_error = "io-error";

// reference resolution
inline constexpr std::string_view unresolved_reference = "unresolved-reference";

// encoder
inline constexpr std::string_view gen_name_clash = "gen-name-clash";

// checker
inline constexpr std::string_view factory_input_contains_product = "factory-input-contains-product";
inline constexpr std::string_view factory_response_not_type = "factory-response-not-type";
inline constexpr std::string_view validator_response_not_bool = "validator-response-not-bool";
inline constexpr std::string_view validator_missing_specification = "validator-missing-specification";
inline constexpr std::string_view validator_arity = "validator-arity";
inline constexpr std::string_view cross_context_leaf = "cross-context-leaf";
inline constexpr std::string_view cross_context_operation = "cross-context-operation";
inline constexpr std::string_view aggregate_without_entity = "aggregate-without-entity";
inline constexpr std::string_view part_not_entity_or_vo = "part-not-entity-or-vo";

} // namespace rules

Diagnostic make_error(std::string_view rule_id, std::string message, SourceLoc loc = {});
Diagnostic make_warning(std::string_view rule_id, std::string message, SourceLoc loc = {});

/// Renders "severity rule_id: message (file:line:col)"; the parenthesised
/// part is dropped when no source path is attached.
std::string format(const Diagnostic& d);

} // namespace diag

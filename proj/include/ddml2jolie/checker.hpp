#pragma once

#include <vector>

#include "ddml2jolie/diagnostic.hpp"
#include "ddml2jolie/encoder.hpp"
#include "ddml2jolie/jolie/ast.hpp"

// Consistency rules over annotated Jolie documents, following the
// annotation breadcrumbs left by the encoder. The checks also accept
// reparsed documents that were written or edited by hand.
//
//   factory-input-contains-product   factory request leaves reference the
//                                    produced (response) type
//   factory-response-not-type        factory response is a basic type
//   validator-response-not-bool      validator response is not bool
//   validator-missing-specification  validator request type lacks the
//                                    specification annotation
//   validator-arity                  validator request does not have exactly
//                                    one non-self leaf typed by a declared
//                                    structure type
//   cross-context-leaf               leaf typed by a non-valueObject type
//                                    from another context
//   cross-context-operation          operation request/response from another
//                                    context without valueObject
//   aggregate-without-entity         (warning) aggregate type not an entity
//   part-not-entity-or-vo            (warning) part leaf typed by neither an
//                                    entity nor a value object
//
// All checks are pure; findings are ordered by document position, then rule.

namespace lint {

std::vector<diag::Diagnostic> check_factory(const jolie::JolieDocument& doc);
std::vector<diag::Diagnostic> check_validator(const jolie::JolieDocument& doc);
std::vector<diag::Diagnostic> check_context_boundaries(const jolie::JolieDocument& doc);
std::vector<diag::Diagnostic> check_entity(const jolie::JolieDocument& doc);

/// Union of all checks. Findings are enriched with the source location of
/// the offending item via the outcome's provenance map when available.
/// Returns nothing when the outcome carries no document.
std::vector<diag::Diagnostic> check_all(const codegen::EncodingOutcome& outcome);

/// Same union over a bare document (no provenance enrichment).
std::vector<diag::Diagnostic> check_document(const jolie::JolieDocument& doc);

} // namespace lint

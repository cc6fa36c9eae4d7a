#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddml2jolie/diagnostic.hpp"
#include "ddml2jolie/jolie/ast.hpp"
#include "ddml2jolie/lemma/ast.hpp"

// Maps a resolved domain model to a Jolie document.
//
// Per context: a beginCtx marker, the encodings of its complex types in
// source order, an endCtx marker. A structure becomes a void-rooted tree
// type (one child per field); its operations become request types plus one
// `<name>_interface` interface of RequestResponse operations. Procedures
// respond with the enclosing type (new-state convention); functions respond
// with their mapped return type. Request types carry an optional `self`
// leaf holding the enclosing structure, except for factory operations.
//
// Two elisions, mirroring the generated-code conventions:
//   - a field-less structure marked specification (with at least one
//     operation) produces no type of its own; its annotations move to the
//     first operation's request type, and its operations drop the self leaf
//     since there is no enclosing type to reference;
//   - a zero-parameter, non-factory function with no identifier/validator
//     marker takes the enclosing type directly as request instead of a
//     dedicated `<op>_type`.
//
// Annotations: structure features annotate the structure's type, field
// features their leaf, operation features the RequestResponse operation --
// except factory, which annotates the request type so that checks can
// follow the breadcrumb from the type to the produced value.

namespace codegen {

struct ProvenanceEntry {
    enum class Kind { StructureType, RequestType, CollectionType, EnumType, Interface };

    Kind kind = Kind::StructureType;
    std::string source_path; // "Context/Type" or "Context/Type/operation"
    diag::SourceLoc loc;

    bool operator==(const ProvenanceEntry&) const = default;
};

struct EncodingOutcome {
    std::optional<jolie::JolieDocument> document; // absent on generated-name clash
    std::map<std::string, ProvenanceEntry> provenance; // generated item name -> source node
    std::vector<diag::Diagnostic> diagnostics;

    bool ok() const { return document.has_value(); }
};

EncodingOutcome encode_model(const lemma::DomainModel& model);

struct StructureEncoding {
    std::optional<jolie::TypeDecl> type_decl; // absent for elided specifications
    std::vector<jolie::TypeDecl> request_types;
    std::optional<jolie::InterfaceDecl> interface_decl; // present iff operations exist
};

StructureEncoding encode_structure(const lemma::Structure& s);

jolie::TypeDecl encode_operation_request(const lemma::Operation& op, const lemma::Structure& enclosing);
jolie::RequestResponseOp encode_operation(const lemma::Operation& op, const lemma::Structure& enclosing);
jolie::TypeDecl encode_collection(const lemma::Collection& c);
jolie::TypeDecl encode_enum(const lemma::Enumeration& e);

/// Total: boolean->bool, int->int, long->long, float->double,
/// double->double, string->string, date->string, unspecified->undefined.
jolie::BasicType map_primitive(lemma::PrimitiveType p);

// Elision predicates, exposed so invariant checks can restate the laws.
bool structure_type_elided(const lemma::Structure& s);
bool request_type_elided(const lemma::Operation& op, const lemma::Structure& enclosing);

} // namespace codegen

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ddml2jolie/diagnostic.hpp"

// Object graph for LEMMA DDML domain models. All types are plain values;
// once built they are never mutated, so sharing across threads is safe.
//
// Equality is structural and ignores source locations, so a model compares
// equal to the reparse of its own rendering.

namespace lemma {

enum class PrimitiveType {
    Boolean,
    Int,
    Long,
    Float,
    Double,
    String,
    Date,
    Unspecified,
};

enum class StructureFeature {
    Aggregate,
    DomainEvent,
    Entity,
    Factory,
    Service,
    Repository,
    Specification,
    ValueObject,
};

enum class FieldFeature { Identifier, Part };

// Fig-style DDML keeps factory with the structure features, but concrete
// models attach it to the creating function, so it lives here as well.
enum class OperationFeature {
    Closure,
    Identifier,
    SideEffectFree,
    Validator,
    Factory,
};

enum class OperationKind { Procedure, Function };

/// Either a built-in primitive or a named reference to a complex type
/// declared in the same bounded context.
struct TypeRef {
    std::variant<PrimitiveType, std::string> value;
    diag::SourceLoc loc;

    bool is_primitive() const { return std::holds_alternative<PrimitiveType>(value); }
    bool is_named() const { return std::holds_alternative<std::string>(value); }
    PrimitiveType primitive() const { return std::get<PrimitiveType>(value); }
    const std::string& name() const { return std::get<std::string>(value); }

    static TypeRef primitive_ref(PrimitiveType p, diag::SourceLoc loc = {}) { return {p, loc}; }
    static TypeRef named(std::string name, diag::SourceLoc loc = {}) { return {std::move(name), loc}; }

    friend bool operator==(const TypeRef& a, const TypeRef& b) { return a.value == b.value; }
};

/// Data field of a structure, also reused for operation parameters.
/// Feature uniqueness is enforced at parse time; declaration order is kept
/// because annotations are emitted in that order.
struct Field {
    std::string name;
    TypeRef type;
    std::vector<FieldFeature> features;
    diag::SourceLoc loc;

    friend bool operator==(const Field& a, const Field& b) {
        return a.name == b.name && a.type == b.type && a.features == b.features;
    }
};

struct Operation {
    OperationKind kind = OperationKind::Procedure;
    std::string name;
    std::optional<TypeRef> return_type; // present iff kind == Function
    std::vector<OperationFeature> features;
    std::vector<Field> params;
    diag::SourceLoc loc;

    bool has_feature(OperationFeature f) const;

    friend bool operator==(const Operation& a, const Operation& b) {
        return a.kind == b.kind && a.name == b.name && a.return_type == b.return_type &&
               a.features == b.features && a.params == b.params;
    }
};

struct Structure {
    std::string name;
    std::vector<StructureFeature> features;
    std::vector<Field> fields;
    std::vector<Operation> operations;
    diag::SourceLoc loc;

    bool has_feature(StructureFeature f) const;

    friend bool operator==(const Structure& a, const Structure& b) {
        return a.name == b.name && a.features == b.features && a.fields == b.fields &&
               a.operations == b.operations;
    }
};

struct Collection {
    std::string name;
    TypeRef element_type;
    diag::SourceLoc loc;

    friend bool operator==(const Collection& a, const Collection& b) {
        return a.name == b.name && a.element_type == b.element_type;
    }
};

struct Enumeration {
    std::string name;
    std::vector<std::string> literals; // non-empty, unique, source order
    diag::SourceLoc loc;

    friend bool operator==(const Enumeration& a, const Enumeration& b) {
        return a.name == b.name && a.literals == b.literals;
    }
};

using ComplexType = std::variant<Structure, Collection, Enumeration>;

const std::string& complex_type_name(const ComplexType& t);

struct Context {
    std::string name;
    std::vector<ComplexType> complex_types;

    bool operator==(const Context&) const = default;
};

struct DomainModel {
    std::vector<Context> contexts;

    bool operator==(const DomainModel&) const = default;
};

// Name <-> enum mappings shared by the parser and both printers.
std::string_view to_keyword(PrimitiveType p);
std::string_view to_keyword(StructureFeature f);
std::string_view to_keyword(FieldFeature f);
std::string_view to_keyword(OperationFeature f);
std::optional<PrimitiveType> primitive_from_keyword(std::string_view s);
std::optional<StructureFeature> structure_feature_from_keyword(std::string_view s);
std::optional<FieldFeature> field_feature_from_keyword(std::string_view s);
std::optional<OperationFeature> operation_feature_from_keyword(std::string_view s);

/// Reports one error per named type reference that does not match a complex
/// type of its enclosing context. References never cross context boundaries.
/// Pure and idempotent; an empty result means the model is fully resolved.
std::vector<diag::Diagnostic> resolve_references(const DomainModel& model);

} // namespace lemma

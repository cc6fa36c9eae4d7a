#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

// Target AST for generated Jolie API documents: type declarations,
// request-response interfaces, and doc-comment annotations carrying the
// domain semantics. The shape is deliberately restricted to exactly what
// the encoder emits (flat one-level trees, enum refinements only, no range
// cardinalities), which keeps render/reparse a true bijection.

namespace jolie {

enum class BasicType { Bool, Int, Long, Double, String, Void, Undefined };

std::string_view to_keyword(BasicType b);
std::optional<BasicType> basic_from_keyword(std::string_view s);

enum class AnnotationKind {
    Aggregate,
    DomainEvent,
    Entity,
    Factory,
    Service,
    Repository,
    Specification,
    ValueObject,
    Identifier,
    Part,
    Closure,
    SideEffectFree,
    Validator,
};

std::string_view to_keyword(AnnotationKind a);
std::optional<AnnotationKind> annotation_from_keyword(std::string_view s);

/// Printed as `///@<name>` on its own line, directly above its owner.
struct Annotation {
    AnnotationKind kind;

    bool operator==(const Annotation&) const = default;
};

enum class Cardinality { One, Optional, Star };

/// `enum("A", ...)` refinement. Literals are identifier-like and printed
/// verbatim (the emitted subset never needs string escaping).
struct EnumRefinement {
    std::vector<std::string> literals; // non-empty, unique, order preserved

    bool operator==(const EnumRefinement&) const = default;
};

struct BasicNodeType {
    BasicType basic = BasicType::String; // Void is reserved for tree roots
    std::optional<EnumRefinement> refinement;

    bool operator==(const BasicNodeType&) const = default;
};

/// Leaf type of a tree node: a basic type or the name of a declared type.
using NodeType = std::variant<BasicNodeType, std::string>;

struct TypeNode {
    std::string name;
    Cardinality cardinality = Cardinality::One;
    std::vector<Annotation> annotations;
    NodeType type = BasicNodeType{};

    bool operator==(const TypeNode&) const = default;
};

/// `type Name: basic` or `type Name: basic( enum(...) )`. The basic type is
/// never Void or Undefined here; those have dedicated body forms.
struct BasicBody {
    BasicType basic = BasicType::String;
    std::optional<EnumRefinement> refinement;

    bool operator==(const BasicBody&) const = default;
};

/// `type Name { children }`; the root basic type is implicitly void.
struct TreeBody {
    std::vector<TypeNode> children; // names unique

    bool operator==(const TreeBody&) const = default;
};

/// `type Name: undefined`.
struct UndefinedBody {
    bool operator==(const UndefinedBody&) const = default;
};

using TypeBody = std::variant<BasicBody, TreeBody, UndefinedBody>;

struct TypeDecl {
    std::string name;
    std::vector<Annotation> annotations;
    TypeBody body = TreeBody{};

    bool operator==(const TypeDecl&) const = default;
};

/// Request/response position: a declared type name or a basic type.
using TypeParam = std::variant<std::string, BasicType>;

struct RequestResponseOp {
    std::string name;
    std::vector<Annotation> annotations;
    TypeParam request;
    TypeParam response;

    bool operator==(const RequestResponseOp&) const = default;
};

struct InterfaceDecl {
    std::string name;
    std::vector<Annotation> annotations;
    std::vector<RequestResponseOp> operations; // names unique

    bool operator==(const InterfaceDecl&) const = default;
};

/// `///@beginCtx(Name)` marker opening a bounded context.
struct CtxBegin {
    std::string name;

    bool operator==(const CtxBegin&) const = default;
};

/// `///@endCtx` marker closing the current bounded context.
struct CtxEnd {
    bool operator==(const CtxEnd&) const = default;
};

using DocumentItem = std::variant<CtxBegin, CtxEnd, TypeDecl, InterfaceDecl>;

struct JolieDocument {
    std::vector<DocumentItem> items;

    bool operator==(const JolieDocument&) const = default;
};

bool has_annotation(const std::vector<Annotation>& annotations, AnnotationKind kind);

} // namespace jolie

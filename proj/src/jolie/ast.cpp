#include "ddml2jolie/jolie/ast.hpp"

#include <algorithm>

namespace jolie {

std::string_view to_keyword(BasicType b) {
    switch (b) {
    case BasicType::Bool: return "bool";
    case BasicType::Int: return "int";
    case BasicType::Long: return "long";
    case BasicType::Double: return "double";
    case BasicType::String: return "string";
    case BasicType::Void: return "void";
    case BasicType::Undefined: return "undefined";
    }
    return "";
}

std::optional<BasicType> basic_from_keyword(std::string_view s) {
    static constexpr BasicType all[] = {
        BasicType::Bool, BasicType::Int,  BasicType::Long,      BasicType::Double,
        BasicType::String, BasicType::Void, BasicType::Undefined,
    };
    for (auto b : all)
        if (to_keyword(b) == s) return b;
    return std::nullopt;
}

std::string_view to_keyword(AnnotationKind a) {
    switch (a) {
    case AnnotationKind::Aggregate: return "aggregate";
    case AnnotationKind::DomainEvent: return "domainEvent";
    case AnnotationKind::Entity: return "entity";
    case AnnotationKind::Factory: return "factory";
    case AnnotationKind::Service: return "service";
    case AnnotationKind::Repository: return "repository";
    case AnnotationKind::Specification: return "specification";
    case AnnotationKind::ValueObject: return "valueObject";
    case AnnotationKind::Identifier: return "identifier";
    case AnnotationKind::Part: return "part";
    case AnnotationKind::Closure: return "closure";
    case AnnotationKind::SideEffectFree: return "sideEffectFree";
    case AnnotationKind::Validator: return "validator";
    }
    return "";
}

std::optional<AnnotationKind> annotation_from_keyword(std::string_view s) {
    static constexpr AnnotationKind all[] = {
        AnnotationKind::Aggregate,  AnnotationKind::DomainEvent,
        AnnotationKind::Entity,     AnnotationKind::Factory,
        AnnotationKind::Service,    AnnotationKind::Repository,
        AnnotationKind::Specification, AnnotationKind::ValueObject,
        AnnotationKind::Identifier, AnnotationKind::Part,
        AnnotationKind::Closure,    AnnotationKind::SideEffectFree,
        AnnotationKind::Validator,
    };
    for (auto a : all)
        if (to_keyword(a) == s) return a;
    return std::nullopt;
}

bool has_annotation(const std::vector<Annotation>& annotations, AnnotationKind kind) {
    return std::any_of(annotations.begin(), annotations.end(),
                       [kind](const Annotation& a) { return a.kind == kind; });
}

} // namespace jolie

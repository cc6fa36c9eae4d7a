#include "ddml2jolie/lemma/ast.hpp"

#include <algorithm>
#include <unordered_set>

namespace lemma {

bool Operation::has_feature(OperationFeature f) const {
    return std::find(features.begin(), features.end(), f) != features.end();
}

bool Structure::has_feature(StructureFeature f) const {
    return std::find(features.begin(), features.end(), f) != features.end();
}

const std::string& complex_type_name(const ComplexType& t) {
    return std::visit([](const auto& v) -> const std::string& { return v.name; }, t);
}

std::string_view to_keyword(PrimitiveType p) {
    switch (p) {
    case PrimitiveType::Boolean: return "boolean";
    case PrimitiveType::Int: return "int";
    case PrimitiveType::Long: return "long";
    case PrimitiveType::Float: return "float";
    case PrimitiveType::Double: return "double";
    case PrimitiveType::String: return "string";
    case PrimitiveType::Date: return "date";
    case PrimitiveType::Unspecified: return "unspecified";
    }
    return "";
}

std::string_view to_keyword(StructureFeature f) {
    switch (f) {
    case StructureFeature::Aggregate: return "aggregate";
    case StructureFeature::DomainEvent: return "domainEvent";
    case StructureFeature::Entity: return "entity";
    case StructureFeature::Factory: return "factory";
    case StructureFeature::Service: return "service";
    case StructureFeature::Repository: return "repository";
    case StructureFeature::Specification: return "specification";
    case StructureFeature::ValueObject: return "valueObject";
    }
    return "";
}

std::string_view to_keyword(FieldFeature f) {
    switch (f) {
    case FieldFeature::Identifier: return "identifier";
    case FieldFeature::Part: return "part";
    }
    return "";
}

std::string_view to_keyword(OperationFeature f) {
    switch (f) {
    case OperationFeature::Closure: return "closure";
    case OperationFeature::Identifier: return "identifier";
    case OperationFeature::SideEffectFree: return "sideEffectFree";
    case OperationFeature::Validator: return "validator";
    case OperationFeature::Factory: return "factory";
    }
    return "";
}

std::optional<PrimitiveType> primitive_from_keyword(std::string_view s) {
    static constexpr PrimitiveType all[] = {
        PrimitiveType::Boolean, PrimitiveType::Int,    PrimitiveType::Long,
        PrimitiveType::Float,   PrimitiveType::Double, PrimitiveType::String,
        PrimitiveType::Date,    PrimitiveType::Unspecified,
    };
    for (auto p : all)
        if (to_keyword(p) == s) return p;
    return std::nullopt;
}

std::optional<StructureFeature> structure_feature_from_keyword(std::string_view s) {
    static constexpr StructureFeature all[] = {
        StructureFeature::Aggregate,  StructureFeature::DomainEvent,
        StructureFeature::Entity,     StructureFeature::Factory,
        StructureFeature::Service,    StructureFeature::Repository,
        StructureFeature::Specification, StructureFeature::ValueObject,
    };
    for (auto f : all)
        if (to_keyword(f) == s) return f;
    return std::nullopt;
}

std::optional<FieldFeature> field_feature_from_keyword(std::string_view s) {
    if (s == "identifier") return FieldFeature::Identifier;
    if (s == "part") return FieldFeature::Part;
    return std::nullopt;
}

std::optional<OperationFeature> operation_feature_from_keyword(std::string_view s) {
    static constexpr OperationFeature all[] = {
        OperationFeature::Closure, OperationFeature::Identifier,
        OperationFeature::SideEffectFree, OperationFeature::Validator,
        OperationFeature::Factory,
    };
    for (auto f : all)
        if (to_keyword(f) == s) return f;
    return std::nullopt;
}

namespace {

void check_ref(const TypeRef& ref, const std::unordered_set<std::string_view>& declared,
               const std::string& context_name, std::vector<diag::Diagnostic>& out) {
    if (!ref.is_named()) return;
    if (declared.count(ref.name())) return;
    out.push_back(diag::make_error(
        diag::rules::unresolved_reference,
        "reference to '" + ref.name() + "' matches no complex type in context '" + context_name + "'",
        ref.loc));
}

} // namespace

std::vector<diag::Diagnostic> resolve_references(const DomainModel& model) {
    std::vector<diag::Diagnostic> out;
    for (const auto& ctx : model.contexts) {
        std::unordered_set<std::string_view> declared;
        for (const auto& ct : ctx.complex_types)
            declared.insert(complex_type_name(ct));

        for (const auto& ct : ctx.complex_types) {
            if (const auto* s = std::get_if<Structure>(&ct)) {
                for (const auto& f : s->fields)
                    check_ref(f.type, declared, ctx.name, out);
                for (const auto& op : s->operations) {
                    if (op.return_type)
                        check_ref(*op.return_type, declared, ctx.name, out);
                    for (const auto& p : op.params)
                        check_ref(p.type, declared, ctx.name, out);
                }
            } else if (const auto* c = std::get_if<Collection>(&ct)) {
                check_ref(c->element_type, declared, ctx.name, out);
            }
        }
    }
    return out;
}

} // namespace lemma

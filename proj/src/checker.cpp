#include "ddml2jolie/checker.hpp"

#include <algorithm>
#include <map>

namespace lint {

namespace {

using jolie::AnnotationKind;
using jolie::BasicType;
using jolie::InterfaceDecl;
using jolie::JolieDocument;
using jolie::TypeDecl;

struct Finding {
    size_t item_index = 0;
    diag::Severity severity = diag::Severity::Error;
    std::string rule;
    std::string message;
    std::string subject; // generated item name, used for provenance lookup
};

struct TypeInfo {
    const TypeDecl* decl = nullptr;
    size_t item_index = 0;
    std::string context; // empty when declared outside any context
};

struct InterfaceInfo {
    const InterfaceDecl* decl = nullptr;
    size_t item_index = 0;
    std::string context;
};

struct DocIndex {
    std::map<std::string, TypeInfo> types;
    std::vector<InterfaceInfo> interfaces;
};

DocIndex build_index(const JolieDocument& doc) {
    DocIndex index;
    std::string current_ctx;
    for (size_t i = 0; i < doc.items.size(); ++i) {
        const auto& item = doc.items[i];
        if (const auto* begin = std::get_if<jolie::CtxBegin>(&item)) {
            current_ctx = begin->name;
        } else if (std::holds_alternative<jolie::CtxEnd>(item)) {
            current_ctx.clear();
        } else if (const auto* type = std::get_if<TypeDecl>(&item)) {
            index.types.try_emplace(type->name, TypeInfo{type, i, current_ctx});
        } else if (const auto* iface = std::get_if<InterfaceDecl>(&item)) {
            index.interfaces.push_back({iface, i, current_ctx});
        }
    }
    return index;
}

const TypeInfo* find_type(const DocIndex& index, const jolie::TypeParam& param) {
    const auto* name = std::get_if<std::string>(&param);
    if (!name) return nullptr;
    auto it = index.types.find(*name);
    return it == index.types.end() ? nullptr : &it->second;
}

std::string param_text(const jolie::TypeParam& param) {
    if (const auto* name = std::get_if<std::string>(&param)) return *name;
    return std::string(jolie::to_keyword(std::get<BasicType>(param)));
}

const jolie::TreeBody* tree_of(const TypeDecl& decl) {
    return std::get_if<jolie::TreeBody>(&decl.body);
}

void add(std::vector<Finding>& out, size_t item_index, diag::Severity sev,
         std::string_view rule, std::string message, std::string subject) {
    out.push_back({item_index, sev, std::string(rule), std::move(message), std::move(subject)});
}

void factory_checks(const JolieDocument&, const DocIndex& index, std::vector<Finding>& out) {
    for (const auto& info : index.interfaces) {
        for (const auto& op : info.decl->operations) {
            const TypeInfo* request = find_type(index, op.request);
            if (!request || !jolie::has_annotation(request->decl->annotations, AnnotationKind::Factory))
                continue;
            if (std::holds_alternative<BasicType>(op.response)) {
                add(out, info.item_index, diag::Severity::Error,
                    diag::rules::factory_response_not_type,
                    "factory operation '" + op.name + "' must respond with the produced type, not '" +
                        param_text(op.response) + "'",
                    request->decl->name);
                continue;
            }
            const auto& produced = std::get<std::string>(op.response);
            if (const auto* tree = tree_of(*request->decl)) {
                for (const auto& node : tree->children) {
                    const auto* leaf_type = std::get_if<std::string>(&node.type);
                    if (leaf_type && *leaf_type == produced)
                        add(out, info.item_index, diag::Severity::Error,
                            diag::rules::factory_input_contains_product,
                            "factory request type '" + request->decl->name + "' has leaf '" +
                                node.name + "' typed by the produced type '" + produced + "'",
                            request->decl->name);
                }
            }
        }
    }
}

void validator_checks(const JolieDocument&, const DocIndex& index, std::vector<Finding>& out) {
    for (const auto& info : index.interfaces) {
        for (const auto& op : info.decl->operations) {
            if (!jolie::has_annotation(op.annotations, AnnotationKind::Validator)) continue;
            const TypeInfo* request = find_type(index, op.request);
            std::string subject = request ? request->decl->name : info.decl->name;

            const auto* response = std::get_if<BasicType>(&op.response);
            if (!response || *response != BasicType::Bool)
                add(out, info.item_index, diag::Severity::Error,
                    diag::rules::validator_response_not_bool,
                    "validator '" + op.name + "' must respond with bool, not '" +
                        param_text(op.response) + "'",
                    subject);

            if (!request) {
                add(out, info.item_index, diag::Severity::Error,
                    diag::rules::validator_missing_specification,
                    "validator '" + op.name + "' has no declared request type carrying the "
                    "specification annotation",
                    subject);
                continue;
            }
            if (!jolie::has_annotation(request->decl->annotations, AnnotationKind::Specification))
                add(out, info.item_index, diag::Severity::Error,
                    diag::rules::validator_missing_specification,
                    "request type '" + request->decl->name + "' of validator '" + op.name +
                        "' is not annotated as a specification",
                    subject);

            // exactly one non-self leaf, typed by a declared tree (structure) type
            bool arity_ok = false;
            if (const auto* tree = tree_of(*request->decl)) {
                const jolie::TypeNode* candidate = nullptr;
                int non_self = 0;
                for (const auto& node : tree->children) {
                    if (node.name == "self") continue;
                    ++non_self;
                    candidate = &node;
                }
                if (non_self == 1) {
                    if (const auto* leaf_type = std::get_if<std::string>(&candidate->type)) {
                        auto it = index.types.find(*leaf_type);
                        arity_ok = it != index.types.end() && tree_of(*it->second.decl) != nullptr;
                    }
                }
            }
            if (!arity_ok)
                add(out, info.item_index, diag::Severity::Error, diag::rules::validator_arity,
                    "request type '" + request->decl->name + "' of validator '" + op.name +
                        "' must have exactly one leaf, typed by the validated structure",
                    subject);
        }
    }
}

void context_checks(const JolieDocument&, const DocIndex& index, std::vector<Finding>& out) {
    auto foreign_non_vo = [&](const std::string& owner_ctx, const std::string& name) -> const TypeInfo* {
        auto it = index.types.find(name);
        if (it == index.types.end()) return nullptr;
        if (it->second.context == owner_ctx) return nullptr;
        if (jolie::has_annotation(it->second.decl->annotations, AnnotationKind::ValueObject))
            return nullptr;
        return &it->second;
    };

    for (const auto& [name, info] : index.types) {
        const auto* tree = tree_of(*info.decl);
        if (!tree) continue;
        for (const auto& node : tree->children) {
            const auto* leaf_type = std::get_if<std::string>(&node.type);
            if (!leaf_type) continue;
            if (const TypeInfo* target = foreign_non_vo(info.context, *leaf_type))
                add(out, info.item_index, diag::Severity::Error, diag::rules::cross_context_leaf,
                    "type '" + name + "' has leaf '" + node.name + "' typed by '" + *leaf_type +
                        "' from context '" + target->context +
                        "', which is not a value object",
                    name);
        }
    }
    for (const auto& info : index.interfaces) {
        for (const auto& op : info.decl->operations) {
            for (const auto* param : {&op.request, &op.response}) {
                const auto* name = std::get_if<std::string>(param);
                if (!name) continue;
                if (const TypeInfo* target = foreign_non_vo(info.context, *name))
                    add(out, info.item_index, diag::Severity::Error,
                        diag::rules::cross_context_operation,
                        "operation '" + op.name + "' of interface '" + info.decl->name +
                            "' uses type '" + *name + "' from context '" + target->context +
                            "', which is not a value object",
                        info.decl->name);
            }
        }
    }
}

void entity_checks(const JolieDocument&, const DocIndex& index, std::vector<Finding>& out) {
    for (const auto& [name, info] : index.types) {
        if (jolie::has_annotation(info.decl->annotations, AnnotationKind::Aggregate) &&
            !jolie::has_annotation(info.decl->annotations, AnnotationKind::Entity))
            add(out, info.item_index, diag::Severity::Warning,
                diag::rules::aggregate_without_entity,
                "aggregate type '" + name + "' does not specify a root entity", name);

        const auto* tree = tree_of(*info.decl);
        if (!tree) continue;
        for (const auto& node : tree->children) {
            if (!jolie::has_annotation(node.annotations, AnnotationKind::Part)) continue;
            bool ok = false;
            if (const auto* leaf_type = std::get_if<std::string>(&node.type)) {
                auto it = index.types.find(*leaf_type);
                if (it != index.types.end()) {
                    const auto& annos = it->second.decl->annotations;
                    ok = jolie::has_annotation(annos, AnnotationKind::Entity) ||
                         jolie::has_annotation(annos, AnnotationKind::ValueObject);
                }
            }
            if (!ok)
                add(out, info.item_index, diag::Severity::Warning,
                    diag::rules::part_not_entity_or_vo,
                    "part '" + node.name + "' of type '" + name +
                        "' is typed by neither an entity nor a value object",
                    name);
        }
    }
}

std::vector<Finding> sorted(std::vector<Finding> findings) {
    std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.item_index != b.item_index) return a.item_index < b.item_index;
        return a.rule < b.rule;
    });
    return findings;
}

std::vector<diag::Diagnostic> to_diagnostics(const std::vector<Finding>& findings) {
    std::vector<diag::Diagnostic> out;
    out.reserve(findings.size());
    for (const auto& f : findings)
        out.push_back({f.severity, f.rule, f.message, diag::SourceLoc{}, std::nullopt});
    return out;
}

template <typename CheckFn>
std::vector<diag::Diagnostic> run_one(const JolieDocument& doc, CheckFn check) {
    DocIndex index = build_index(doc);
    std::vector<Finding> findings;
    check(doc, index, findings);
    return to_diagnostics(sorted(std::move(findings)));
}

std::vector<Finding> run_all(const JolieDocument& doc) {
    DocIndex index = build_index(doc);
    std::vector<Finding> findings;
    factory_checks(doc, index, findings);
    validator_checks(doc, index, findings);
    context_checks(doc, index, findings);
    entity_checks(doc, index, findings);
    return sorted(std::move(findings));
}

} // namespace

std::vector<diag::Diagnostic> check_factory(const JolieDocument& doc) {
    return run_one(doc, factory_checks);
}

std::vector<diag::Diagnostic> check_validator(const JolieDocument& doc) {
    return run_one(doc, validator_checks);
}

std::vector<diag::Diagnostic> check_context_boundaries(const JolieDocument& doc) {
    return run_one(doc, context_checks);
}

std::vector<diag::Diagnostic> check_entity(const JolieDocument& doc) {
    return run_one(doc, entity_checks);
}

std::vector<diag::Diagnostic> check_document(const JolieDocument& doc) {
    return to_diagnostics(run_all(doc));
}

std::vector<diag::Diagnostic> check_all(const codegen::EncodingOutcome& outcome) {
    if (!outcome.document) return {};
    std::vector<Finding> findings = run_all(*outcome.document);
    std::vector<diag::Diagnostic> out = to_diagnostics(findings);
    for (size_t i = 0; i < findings.size(); ++i) {
        auto it = outcome.provenance.find(findings[i].subject);
        if (it != outcome.provenance.end()) out[i].location = it->second.loc;
    }
    return out;
}

} // namespace lint

#include "ddml2jolie/encoder.hpp"

namespace codegen {

namespace {

jolie::AnnotationKind annotation_for(lemma::StructureFeature f) {
    using SF = lemma::StructureFeature;
    using AK = jolie::AnnotationKind;
    switch (f) {
    case SF::Aggregate: return AK::Aggregate;
    case SF::DomainEvent: return AK::DomainEvent;
    case SF::Entity: return AK::Entity;
    case SF::Factory: return AK::Factory;
    case SF::Service: return AK::Service;
    case SF::Repository: return AK::Repository;
    case SF::Specification: return AK::Specification;
    case SF::ValueObject: return AK::ValueObject;
    }
    return AK::Entity;
}

jolie::AnnotationKind annotation_for(lemma::FieldFeature f) {
    return f == lemma::FieldFeature::Identifier ? jolie::AnnotationKind::Identifier
                                                : jolie::AnnotationKind::Part;
}

jolie::AnnotationKind annotation_for(lemma::OperationFeature f) {
    using OF = lemma::OperationFeature;
    using AK = jolie::AnnotationKind;
    switch (f) {
    case OF::Closure: return AK::Closure;
    case OF::Identifier: return AK::Identifier;
    case OF::SideEffectFree: return AK::SideEffectFree;
    case OF::Validator: return AK::Validator;
    case OF::Factory: return AK::Factory;
    }
    return AK::Closure;
}

jolie::NodeType node_type_for(const lemma::TypeRef& ref) {
    if (ref.is_named()) return jolie::NodeType{ref.name()};
    return jolie::NodeType{jolie::BasicNodeType{map_primitive(ref.primitive()), std::nullopt}};
}

jolie::TypeParam type_param_for(const lemma::TypeRef& ref) {
    if (ref.is_named()) return jolie::TypeParam{ref.name()};
    return jolie::TypeParam{map_primitive(ref.primitive())};
}

// Features on operation parameters are carried by the model but have no
// encoding, so parameter nodes never take annotations.
jolie::TypeNode field_node(const lemma::Field& f, bool with_features) {
    jolie::TypeNode node;
    node.name = f.name;
    node.cardinality = jolie::Cardinality::One;
    if (with_features)
        for (auto feat : f.features)
            node.annotations.push_back({annotation_for(feat)});
    node.type = node_type_for(f.type);
    return node;
}

bool is_first_operation(const lemma::Operation& op, const lemma::Structure& enclosing) {
    return !enclosing.operations.empty() && enclosing.operations.front().name == op.name;
}

} // namespace

jolie::BasicType map_primitive(lemma::PrimitiveType p) {
    using PT = lemma::PrimitiveType;
    using BT = jolie::BasicType;
    switch (p) {
    case PT::Boolean: return BT::Bool;
    case PT::Int: return BT::Int;
    case PT::Long: return BT::Long;
    case PT::Float: return BT::Double;
    case PT::Double: return BT::Double;
    case PT::String: return BT::String;
    case PT::Date: return BT::String;
    case PT::Unspecified: return BT::Undefined;
    }
    return BT::Undefined;
}

bool structure_type_elided(const lemma::Structure& s) {
    return s.fields.empty() && s.has_feature(lemma::StructureFeature::Specification) &&
           !s.operations.empty();
}

bool request_type_elided(const lemma::Operation& op, const lemma::Structure& enclosing) {
    // The degenerate request is the enclosing type itself, so it must exist.
    if (structure_type_elided(enclosing)) return false;
    if (op.kind != lemma::OperationKind::Function) return false;
    if (!op.params.empty()) return false;
    return !op.has_feature(lemma::OperationFeature::Factory) &&
           !op.has_feature(lemma::OperationFeature::Identifier) &&
           !op.has_feature(lemma::OperationFeature::Validator);
}

jolie::TypeDecl encode_operation_request(const lemma::Operation& op,
                                         const lemma::Structure& enclosing) {
    jolie::TypeDecl decl;
    decl.name = op.name + "_type";
    bool enclosing_elided = structure_type_elided(enclosing);
    if (enclosing_elided && is_first_operation(op, enclosing))
        for (auto feat : enclosing.features)
            decl.annotations.push_back({annotation_for(feat)});
    if (op.has_feature(lemma::OperationFeature::Factory))
        decl.annotations.push_back({jolie::AnnotationKind::Factory});

    jolie::TreeBody tree;
    if (!op.has_feature(lemma::OperationFeature::Factory) && !enclosing_elided) {
        jolie::TypeNode self;
        self.name = "self";
        self.cardinality = jolie::Cardinality::Optional;
        self.type = jolie::NodeType{enclosing.name};
        tree.children.push_back(std::move(self));
    }
    for (const auto& p : op.params)
        tree.children.push_back(field_node(p, /*with_features=*/false));
    decl.body = std::move(tree);
    return decl;
}

jolie::RequestResponseOp encode_operation(const lemma::Operation& op,
                                          const lemma::Structure& enclosing) {
    jolie::RequestResponseOp rr;
    rr.name = op.name;
    rr.request = request_type_elided(op, enclosing) ? jolie::TypeParam{enclosing.name}
                                                    : jolie::TypeParam{op.name + "_type"};
    if (op.kind == lemma::OperationKind::Procedure)
        rr.response = jolie::TypeParam{enclosing.name}; // new-state convention
    else
        rr.response = type_param_for(*op.return_type);
    for (auto feat : op.features)
        if (feat != lemma::OperationFeature::Factory)
            rr.annotations.push_back({annotation_for(feat)});
    return rr;
}

StructureEncoding encode_structure(const lemma::Structure& s) {
    StructureEncoding enc;
    if (!structure_type_elided(s)) {
        jolie::TypeDecl decl;
        decl.name = s.name;
        for (auto feat : s.features)
            decl.annotations.push_back({annotation_for(feat)});
        jolie::TreeBody tree;
        for (const auto& f : s.fields)
            tree.children.push_back(field_node(f, /*with_features=*/true));
        decl.body = std::move(tree);
        enc.type_decl = std::move(decl);
    }
    for (const auto& op : s.operations)
        if (!request_type_elided(op, s))
            enc.request_types.push_back(encode_operation_request(op, s));
    if (!s.operations.empty()) {
        jolie::InterfaceDecl iface;
        iface.name = s.name + "_interface";
        for (const auto& op : s.operations)
            iface.operations.push_back(encode_operation(op, s));
        enc.interface_decl = std::move(iface);
    }
    return enc;
}

jolie::TypeDecl encode_collection(const lemma::Collection& c) {
    jolie::TypeDecl decl;
    decl.name = c.name;
    jolie::TypeNode node;
    node.name = c.name;
    node.cardinality = jolie::Cardinality::Star;
    node.type = node_type_for(c.element_type);
    decl.body = jolie::TreeBody{{std::move(node)}};
    return decl;
}

jolie::TypeDecl encode_enum(const lemma::Enumeration& e) {
    jolie::TypeDecl decl;
    decl.name = e.name;
    decl.body = jolie::BasicBody{jolie::BasicType::String, jolie::EnumRefinement{e.literals}};
    return decl;
}

EncodingOutcome encode_model(const lemma::DomainModel& model) {
    EncodingOutcome outcome;
    jolie::JolieDocument doc;

    // Generated type and interface names share one namespace: the checker
    // follows names, so a silent rename or shadowing would break it.
    auto register_name = [&outcome](const std::string& name, ProvenanceEntry entry) {
        std::string path = entry.source_path;
        diag::SourceLoc loc = entry.loc;
        auto [it, inserted] = outcome.provenance.try_emplace(name, std::move(entry));
        if (!inserted)
            outcome.diagnostics.push_back(diag::make_error(
                diag::rules::gen_name_clash,
                "generated name '" + name + "' for " + path +
                    " collides with the one generated for " + it->second.source_path,
                loc));
    };

    for (const auto& ctx : model.contexts) {
        doc.items.emplace_back(jolie::CtxBegin{ctx.name});
        for (const auto& ct : ctx.complex_types) {
            if (const auto* s = std::get_if<lemma::Structure>(&ct)) {
                std::string base_path = ctx.name + "/" + s->name;
                StructureEncoding enc = encode_structure(*s);
                if (enc.type_decl) {
                    register_name(enc.type_decl->name,
                                  {ProvenanceEntry::Kind::StructureType, base_path, s->loc});
                    doc.items.emplace_back(std::move(*enc.type_decl));
                }
                for (auto& request : enc.request_types) {
                    // request decls are named <op>_type
                    std::string op_name = request.name.substr(0, request.name.size() - 5);
                    diag::SourceLoc loc = s->loc;
                    for (const auto& op : s->operations)
                        if (op.name == op_name) loc = op.loc;
                    register_name(request.name, {ProvenanceEntry::Kind::RequestType,
                                                 base_path + "/" + op_name, loc});
                    doc.items.emplace_back(std::move(request));
                }
                if (enc.interface_decl) {
                    register_name(enc.interface_decl->name,
                                  {ProvenanceEntry::Kind::Interface, base_path, s->loc});
                    doc.items.emplace_back(std::move(*enc.interface_decl));
                }
            } else if (const auto* c = std::get_if<lemma::Collection>(&ct)) {
                register_name(c->name, {ProvenanceEntry::Kind::CollectionType,
                                        ctx.name + "/" + c->name, c->loc});
                doc.items.emplace_back(encode_collection(*c));
            } else {
                const auto& e = std::get<lemma::Enumeration>(ct);
                register_name(e.name, {ProvenanceEntry::Kind::EnumType,
                                       ctx.name + "/" + e.name, e.loc});
                doc.items.emplace_back(encode_enum(e));
            }
        }
        doc.items.emplace_back(jolie::CtxEnd{});
    }

    if (outcome.diagnostics.empty())
        outcome.document = std::move(doc);
    else
        outcome.provenance.clear();
    return outcome;
}

} // namespace codegen

#pragma once

#include <string>
#include <vector>

#include "ddml2jolie/jolie/ast.hpp"
#include "ddml2jolie/lemma/ast.hpp"

// Terse constructors for hand-built models and documents in tests.

namespace tb {

// --- lemma side ---

inline lemma::TypeRef prim(lemma::PrimitiveType p) { return lemma::TypeRef::primitive_ref(p); }
inline lemma::TypeRef named(std::string n) { return lemma::TypeRef::named(std::move(n)); }

inline lemma::Field fld(std::string name, lemma::TypeRef type,
                        std::vector<lemma::FieldFeature> features = {}) {
    lemma::Field f;
    f.name = std::move(name);
    f.type = std::move(type);
    f.features = std::move(features);
    return f;
}

inline lemma::Operation func(std::string name, lemma::TypeRef return_type,
                             std::vector<lemma::Field> params = {},
                             std::vector<lemma::OperationFeature> features = {}) {
    lemma::Operation op;
    op.kind = lemma::OperationKind::Function;
    op.name = std::move(name);
    op.return_type = std::move(return_type);
    op.params = std::move(params);
    op.features = std::move(features);
    return op;
}

inline lemma::Operation proc(std::string name, std::vector<lemma::Field> params = {},
                             std::vector<lemma::OperationFeature> features = {}) {
    lemma::Operation op;
    op.kind = lemma::OperationKind::Procedure;
    op.name = std::move(name);
    op.params = std::move(params);
    op.features = std::move(features);
    return op;
}

inline lemma::Structure strct(std::string name, std::vector<lemma::StructureFeature> features,
                              std::vector<lemma::Field> fields,
                              std::vector<lemma::Operation> operations = {}) {
    lemma::Structure s;
    s.name = std::move(name);
    s.features = std::move(features);
    s.fields = std::move(fields);
    s.operations = std::move(operations);
    return s;
}

inline lemma::Collection coll(std::string name, lemma::TypeRef element) {
    lemma::Collection c;
    c.name = std::move(name);
    c.element_type = std::move(element);
    return c;
}

inline lemma::Enumeration enm(std::string name, std::vector<std::string> literals) {
    lemma::Enumeration e;
    e.name = std::move(name);
    e.literals = std::move(literals);
    return e;
}

inline lemma::Context ctx(std::string name, std::vector<lemma::ComplexType> types) {
    return lemma::Context{std::move(name), std::move(types)};
}

inline lemma::DomainModel model(std::vector<lemma::Context> contexts) {
    return lemma::DomainModel{std::move(contexts)};
}

// --- jolie side ---

inline std::vector<jolie::Annotation> annos(std::vector<jolie::AnnotationKind> kinds) {
    std::vector<jolie::Annotation> out;
    for (auto k : kinds)
        out.push_back({k});
    return out;
}

inline jolie::NodeType basic_node(jolie::BasicType b) {
    return jolie::NodeType{jolie::BasicNodeType{b, std::nullopt}};
}

inline jolie::NodeType named_node(std::string n) { return jolie::NodeType{std::move(n)}; }

inline jolie::TypeNode node(std::string name, jolie::NodeType type,
                            jolie::Cardinality card = jolie::Cardinality::One,
                            std::vector<jolie::AnnotationKind> annotations = {}) {
    jolie::TypeNode n;
    n.name = std::move(name);
    n.cardinality = card;
    n.annotations = annos(std::move(annotations));
    n.type = std::move(type);
    return n;
}

inline jolie::TypeDecl tree_type(std::string name, std::vector<jolie::TypeNode> children,
                                 std::vector<jolie::AnnotationKind> annotations = {}) {
    jolie::TypeDecl d;
    d.name = std::move(name);
    d.annotations = annos(std::move(annotations));
    d.body = jolie::TreeBody{std::move(children)};
    return d;
}

inline jolie::TypeDecl enum_type(std::string name, std::vector<std::string> literals) {
    jolie::TypeDecl d;
    d.name = std::move(name);
    d.body = jolie::BasicBody{jolie::BasicType::String,
                              jolie::EnumRefinement{std::move(literals)}};
    return d;
}

inline jolie::RequestResponseOp rr(std::string name, jolie::TypeParam request,
                                   jolie::TypeParam response,
                                   std::vector<jolie::AnnotationKind> annotations = {}) {
    jolie::RequestResponseOp op;
    op.name = std::move(name);
    op.annotations = annos(std::move(annotations));
    op.request = std::move(request);
    op.response = std::move(response);
    return op;
}

inline jolie::InterfaceDecl iface(std::string name, std::vector<jolie::RequestResponseOp> ops,
                                  std::vector<jolie::AnnotationKind> annotations = {}) {
    jolie::InterfaceDecl d;
    d.name = std::move(name);
    d.annotations = annos(std::move(annotations));
    d.operations = std::move(ops);
    return d;
}

inline jolie::JolieDocument doc(std::vector<jolie::DocumentItem> items) {
    return jolie::JolieDocument{std::move(items)};
}

} // namespace tb

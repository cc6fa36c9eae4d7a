#include "ddml2jolie/jolie/printer.hpp"

namespace jolie {

namespace {

constexpr std::string_view kIndent = "    ";

void render_annotations(std::string& out, const std::vector<Annotation>& annotations,
                        int depth) {
    for (const auto& a : annotations) {
        for (int i = 0; i < depth; ++i)
            out += kIndent;
        out += "///@";
        out += to_keyword(a.kind);
        out += '\n';
    }
}

void render_refinement(std::string& out, const EnumRefinement& r) {
    out += "( enum( [";
    for (size_t i = 0; i < r.literals.size(); ++i) {
        if (i) out += ", ";
        out += '"';
        out += r.literals[i];
        out += '"';
    }
    out += "] ) )";
}

void render_node_type(std::string& out, const NodeType& t) {
    if (const auto* basic = std::get_if<BasicNodeType>(&t)) {
        out += to_keyword(basic->basic);
        if (basic->refinement) render_refinement(out, *basic->refinement);
    } else {
        out += std::get<std::string>(t);
    }
}

std::string_view cardinality_suffix(Cardinality c) {
    switch (c) {
    case Cardinality::One: return "";
    case Cardinality::Optional: return "?";
    case Cardinality::Star: return "*";
    }
    return "";
}

void render_type_decl(std::string& out, const TypeDecl& decl) {
    render_annotations(out, decl.annotations, 0);
    if (const auto* tree = std::get_if<TreeBody>(&decl.body)) {
        out += "type " + decl.name + " {\n";
        for (const auto& node : tree->children) {
            render_annotations(out, node.annotations, 1);
            out += kIndent;
            out += node.name;
            out += cardinality_suffix(node.cardinality);
            out += ": ";
            render_node_type(out, node.type);
            out += '\n';
        }
        out += "}";
    } else if (const auto* basic = std::get_if<BasicBody>(&decl.body)) {
        out += "type " + decl.name + ": ";
        out += to_keyword(basic->basic);
        if (basic->refinement) render_refinement(out, *basic->refinement);
    } else {
        out += "type " + decl.name + ": undefined";
    }
}

void render_type_param(std::string& out, const TypeParam& p) {
    if (const auto* name = std::get_if<std::string>(&p))
        out += *name;
    else
        out += to_keyword(std::get<BasicType>(p));
}

void render_interface(std::string& out, const InterfaceDecl& decl) {
    render_annotations(out, decl.annotations, 0);
    out += "interface " + decl.name + " {\n";
    out += kIndent;
    out += "RequestResponse:\n";
    for (const auto& op : decl.operations) {
        render_annotations(out, op.annotations, 2);
        out += kIndent;
        out += kIndent;
        out += op.name;
        out += '(';
        render_type_param(out, op.request);
        out += ")(";
        render_type_param(out, op.response);
        out += ")\n";
    }
    out += "}";
}

} // namespace

std::string render(const JolieDocument& doc) {
    if (doc.items.empty()) return "";
    std::string out;
    bool first = true;
    for (const auto& item : doc.items) {
        if (!first) out += "\n\n";
        first = false;
        if (const auto* begin = std::get_if<CtxBegin>(&item)) {
            out += "///@beginCtx(" + begin->name + ")";
        } else if (std::holds_alternative<CtxEnd>(item)) {
            out += "///@endCtx";
        } else if (const auto* type = std::get_if<TypeDecl>(&item)) {
            render_type_decl(out, *type);
        } else {
            render_interface(out, std::get<InterfaceDecl>(item));
        }
    }
    out += '\n';
    return out;
}

} // namespace jolie

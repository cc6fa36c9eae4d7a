#include "ddml2jolie/lemma/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace lemma {

namespace {

// Full-LEMMA primitives outside the supported set. Recognised so that a
// model using them fails loudly at parse time instead of surfacing later
// as a bogus unresolved type reference.
bool is_unsupported_primitive(std::string_view s) {
    return s == "byte" || s == "char" || s == "short";
}

struct Token {
    enum class Kind { Ident, LBrace, RBrace, LAngle, RAngle, LParen, RParen, Comma, End };

    Kind kind = Kind::End;
    std::string_view text;
    diag::SourceLoc loc;
};

bool is_closer(Token::Kind k) {
    return k == Token::Kind::RBrace || k == Token::Kind::RAngle || k == Token::Kind::RParen;
}

std::string describe(const Token& t) {
    switch (t.kind) {
    case Token::Kind::Ident: return "'" + std::string(t.text) + "'";
    case Token::Kind::End: return "end of input";
    default: return "'" + std::string(t.text) + "'";
    }
}

struct ParseAbort {
    diag::Diagnostic diagnostic;
};

[[noreturn]] void fail(std::string_view rule, std::string message, diag::SourceLoc loc) {
    throw ParseAbort{diag::make_error(rule, std::move(message), loc)};
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        Token t;
        t.loc = loc();
        if (pos_ >= src_.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        char c = src_[pos_];
        switch (c) {
        case '{': return punct(Token::Kind::LBrace);
        case '}': return punct(Token::Kind::RBrace);
        case '<': return punct(Token::Kind::LAngle);
        case '>': return punct(Token::Kind::RAngle);
        case '(': return punct(Token::Kind::LParen);
        case ')': return punct(Token::Kind::RParen);
        case ',': return punct(Token::Kind::Comma);
        default: break;
        }
        if (is_ident_start(c)) {
            size_t begin = pos_;
            while (pos_ < src_.size() && is_ident_char(src_[pos_]))
                advance();
            t.kind = Token::Kind::Ident;
            t.text = src_.substr(begin, pos_ - begin);
            return t;
        }
        fail(diag::rules::syntax_error, std::string("unexpected character '") + c + "'", t.loc);
    }

private:
    static bool is_ident_start(char c) {
        return c == '_' || std::isalpha(static_cast<unsigned char>(c));
    }
    static bool is_ident_char(char c) {
        return c == '_' || std::isalnum(static_cast<unsigned char>(c));
    }

    diag::SourceLoc loc() const { return {line_, col_}; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    Token punct(Token::Kind kind) {
        Token t;
        t.kind = kind;
        t.loc = loc();
        t.text = src_.substr(pos_, 1);
        advance();
        return t;
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { cur_ = lexer_.next(); }

    DomainModel parse_model() {
        DomainModel model;
        std::unordered_set<std::string> names;
        while (cur_.kind != Token::Kind::End) {
            if (cur_.kind != Token::Kind::Ident) {
                if (is_closer(cur_.kind))
                    fail(diag::rules::unbalanced_delimiter,
                         "unmatched " + describe(cur_) + " at top level", cur_.loc);
                fail(diag::rules::syntax_error, "expected 'context', found " + describe(cur_),
                     cur_.loc);
            }
            if (cur_.text != "context")
                fail(diag::rules::unknown_keyword,
                     "expected 'context', found " + describe(cur_), cur_.loc);
            diag::SourceLoc kw_loc = cur_.loc;
            advance();
            Context ctx = parse_context();
            if (!names.insert(ctx.name).second)
                fail(diag::rules::duplicate_member, "duplicate context name '" + ctx.name + "'",
                     kw_loc);
            model.contexts.push_back(std::move(ctx));
        }
        return model;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    std::string expect_ident(std::string_view what) {
        if (cur_.kind != Token::Kind::Ident)
            fail(diag::rules::syntax_error,
                 "expected " + std::string(what) + ", found " + describe(cur_), cur_.loc);
        std::string name(cur_.text);
        advance();
        return name;
    }

    void expect(Token::Kind kind, std::string_view what) {
        if (cur_.kind != kind) {
            if (cur_.kind == Token::Kind::End)
                fail(diag::rules::unbalanced_delimiter,
                     "missing " + std::string(what) + " before end of input", cur_.loc);
            fail(diag::rules::syntax_error,
                 "expected " + std::string(what) + ", found " + describe(cur_), cur_.loc);
        }
        advance();
    }

    bool at_ident(std::string_view kw) const {
        return cur_.kind == Token::Kind::Ident && cur_.text == kw;
    }

    Context parse_context() {
        Context ctx;
        ctx.name = expect_ident("context name");
        expect(Token::Kind::LBrace, "'{'");
        std::unordered_set<std::string> names;
        while (true) {
            if (cur_.kind == Token::Kind::RBrace) {
                advance();
                return ctx;
            }
            if (cur_.kind == Token::Kind::End)
                fail(diag::rules::unbalanced_delimiter,
                     "missing '}' closing context '" + ctx.name + "'", cur_.loc);
            if (cur_.kind != Token::Kind::Ident)
                fail(diag::rules::syntax_error,
                     "expected a type declaration, found " + describe(cur_), cur_.loc);

            diag::SourceLoc loc = cur_.loc;
            ComplexType ct = [&]() -> ComplexType {
                if (at_ident("structure")) {
                    advance();
                    return parse_structure(loc);
                }
                if (at_ident("collection")) {
                    advance();
                    return parse_collection(loc);
                }
                if (at_ident("enum")) {
                    advance();
                    return parse_enum(loc);
                }
                fail(diag::rules::unknown_keyword,
                     "expected 'structure', 'collection' or 'enum', found " + describe(cur_),
                     cur_.loc);
            }();
            if (!names.insert(complex_type_name(ct)).second)
                fail(diag::rules::duplicate_member,
                     "duplicate type name '" + complex_type_name(ct) + "' in context '" +
                         ctx.name + "'",
                     loc);
            ctx.complex_types.push_back(std::move(ct));
        }
    }

    // '<' already not consumed; returns feature names (unvalidated) with locs.
    std::vector<std::pair<std::string, diag::SourceLoc>> parse_feature_names() {
        std::vector<std::pair<std::string, diag::SourceLoc>> out;
        if (cur_.kind != Token::Kind::LAngle) return out;
        advance();
        // comma separators are optional inside feature lists
        while (cur_.kind != Token::Kind::RAngle) {
            if (cur_.kind == Token::Kind::Comma) {
                advance();
                continue;
            }
            if (cur_.kind != Token::Kind::Ident) {
                if (cur_.kind == Token::Kind::End)
                    fail(diag::rules::unbalanced_delimiter, "missing '>' in feature list",
                         cur_.loc);
                fail(diag::rules::syntax_error,
                     "expected a feature name, found " + describe(cur_), cur_.loc);
            }
            out.emplace_back(std::string(cur_.text), cur_.loc);
            advance();
        }
        advance(); // '>'
        return out;
    }

    template <typename FeatureT, typename LookupFn>
    std::vector<FeatureT> parse_features(LookupFn lookup, std::string_view position) {
        std::vector<FeatureT> out;
        for (auto& [name, loc] : parse_feature_names()) {
            auto f = lookup(name);
            if (!f)
                fail(diag::rules::unknown_keyword,
                     "'" + name + "' is not a " + std::string(position) + " feature", loc);
            if (std::find(out.begin(), out.end(), *f) != out.end())
                fail(diag::rules::duplicate_feature,
                     "duplicate feature '" + name + "'", loc);
            out.push_back(*f);
        }
        return out;
    }

    TypeRef parse_type_ref() {
        diag::SourceLoc loc = cur_.loc;
        std::string name = expect_ident("a type");
        if (auto p = primitive_from_keyword(name)) return TypeRef::primitive_ref(*p, loc);
        if (is_unsupported_primitive(name))
            fail(diag::rules::unknown_primitive,
                 "primitive type '" + name + "' is not supported", loc);
        return TypeRef::named(std::move(name), loc);
    }

    Field parse_field() {
        Field f;
        f.loc = cur_.loc;
        f.type = parse_type_ref();
        f.name = expect_ident("a field name");
        f.features = parse_features<FieldFeature>(field_feature_from_keyword, "field");
        return f;
    }

    Operation parse_operation() {
        Operation op;
        op.loc = cur_.loc;
        if (at_ident("procedure")) {
            op.kind = OperationKind::Procedure;
            advance();
        } else {
            op.kind = OperationKind::Function;
            advance();
            op.return_type = parse_type_ref();
        }
        op.name = expect_ident("an operation name");
        op.features = parse_features<OperationFeature>(operation_feature_from_keyword, "operation");
        if (cur_.kind == Token::Kind::LParen) {
            advance();
            std::unordered_set<std::string> names;
            while (cur_.kind != Token::Kind::RParen) {
                if (cur_.kind == Token::Kind::End)
                    fail(diag::rules::unbalanced_delimiter,
                         "missing ')' in parameter list of '" + op.name + "'", cur_.loc);
                Field param = parse_field();
                if (!names.insert(param.name).second)
                    fail(diag::rules::duplicate_member,
                         "duplicate parameter name '" + param.name + "' in operation '" +
                             op.name + "'",
                         param.loc);
                op.params.push_back(std::move(param));
                if (cur_.kind == Token::Kind::Comma) {
                    advance();
                    continue;
                }
                if (cur_.kind == Token::Kind::End)
                    fail(diag::rules::unbalanced_delimiter,
                         "missing ')' in parameter list of '" + op.name + "'", cur_.loc);
                if (cur_.kind != Token::Kind::RParen)
                    fail(diag::rules::syntax_error,
                         "expected ',' or ')', found " + describe(cur_), cur_.loc);
            }
            advance(); // ')'
        }
        return op;
    }

    Structure parse_structure(diag::SourceLoc loc) {
        Structure s;
        s.loc = loc;
        s.name = expect_ident("a structure name");
        s.features =
            parse_features<StructureFeature>(structure_feature_from_keyword, "structure");
        expect(Token::Kind::LBrace, "'{'");
        std::unordered_set<std::string> names; // fields and operations share one namespace
        while (cur_.kind != Token::Kind::RBrace) {
            if (cur_.kind == Token::Kind::End)
                fail(diag::rules::unbalanced_delimiter,
                     "missing '}' closing structure '" + s.name + "'", cur_.loc);
            diag::SourceLoc member_loc = cur_.loc;
            std::string member_name;
            if (at_ident("procedure") || at_ident("function")) {
                Operation op = parse_operation();
                member_name = op.name;
                s.operations.push_back(std::move(op));
            } else {
                Field f = parse_field();
                member_name = f.name;
                s.fields.push_back(std::move(f));
            }
            if (!names.insert(member_name).second)
                fail(diag::rules::duplicate_member,
                     "duplicate member name '" + member_name + "' in structure '" + s.name + "'",
                     member_loc);
            if (cur_.kind == Token::Kind::Comma) {
                advance();
                continue;
            }
            if (cur_.kind == Token::Kind::End)
                fail(diag::rules::unbalanced_delimiter,
                     "missing '}' closing structure '" + s.name + "'", cur_.loc);
            if (cur_.kind != Token::Kind::RBrace)
                fail(diag::rules::syntax_error, "expected ',' or '}', found " + describe(cur_),
                     cur_.loc);
        }
        advance(); // '}'
        return s;
    }

    Collection parse_collection(diag::SourceLoc loc) {
        Collection c;
        c.loc = loc;
        c.name = expect_ident("a collection name");
        expect(Token::Kind::LBrace, "'{'");
        c.element_type = parse_type_ref();
        if (cur_.kind == Token::Kind::End)
            fail(diag::rules::unbalanced_delimiter,
                 "missing '}' closing collection '" + c.name + "'", cur_.loc);
        expect(Token::Kind::RBrace, "'}'");
        return c;
    }

    Enumeration parse_enum(diag::SourceLoc loc) {
        Enumeration e;
        e.loc = loc;
        e.name = expect_ident("an enum name");
        expect(Token::Kind::LBrace, "'{'");
        std::unordered_set<std::string> seen;
        while (cur_.kind != Token::Kind::RBrace) {
            if (cur_.kind == Token::Kind::End)
                fail(diag::rules::unbalanced_delimiter,
                     "missing '}' closing enum '" + e.name + "'", cur_.loc);
            diag::SourceLoc lit_loc = cur_.loc;
            std::string lit = expect_ident("an enum literal");
            if (!seen.insert(lit).second)
                fail(diag::rules::duplicate_member,
                     "duplicate literal '" + lit + "' in enum '" + e.name + "'", lit_loc);
            e.literals.push_back(std::move(lit));
            if (cur_.kind == Token::Kind::Comma) {
                advance();
                continue;
            }
            if (cur_.kind == Token::Kind::End)
                fail(diag::rules::unbalanced_delimiter,
                     "missing '}' closing enum '" + e.name + "'", cur_.loc);
            if (cur_.kind != Token::Kind::RBrace)
                fail(diag::rules::syntax_error, "expected ',' or '}', found " + describe(cur_),
                     cur_.loc);
        }
        if (e.literals.empty())
            fail(diag::rules::syntax_error, "enum '" + e.name + "' declares no literals",
                 cur_.loc);
        advance(); // '}'
        return e;
    }

    Lexer lexer_;
    Token cur_;
};

} // namespace

ParseResult parse(std::string_view source_text, std::optional<std::string> source_path) {
    ParseResult result;
    try {
        Parser parser(source_text);
        result.model = parser.parse_model();
    } catch (ParseAbort& abort) {
        abort.diagnostic.source_path = source_path;
        result.diagnostics.push_back(std::move(abort.diagnostic));
    }
    return result;
}

namespace {

// Returns the 1-based location of the first invalid byte, or nullopt.
std::optional<diag::SourceLoc> find_invalid_utf8(std::string_view bytes) {
    int line = 1, col = 1;
    size_t i = 0;
    auto loc_here = [&] { return diag::SourceLoc{line, col}; };
    while (i < bytes.size()) {
        unsigned char b = static_cast<unsigned char>(bytes[i]);
        size_t len;
        unsigned cp_min;
        if (b < 0x80) {
            len = 1;
            cp_min = 0;
        } else if ((b & 0xE0) == 0xC0) {
            len = 2;
            cp_min = 0x80;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            cp_min = 0x800;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            cp_min = 0x10000;
        } else {
            return loc_here();
        }
        if (i + len > bytes.size()) return loc_here();
        unsigned cp = len == 1 ? b : b & (0x7F >> len);
        for (size_t k = 1; k < len; ++k) {
            unsigned char cont = static_cast<unsigned char>(bytes[i + k]);
            if ((cont & 0xC0) != 0x80) return loc_here();
            cp = (cp << 6) | (cont & 0x3F);
        }
        if (len > 1 && cp < cp_min) return loc_here();          // overlong
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return loc_here();
        if (b == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        i += len;
    }
    return std::nullopt;
}

} // namespace

ParseResult parse_file(const std::filesystem::path& path) {
    ParseResult result;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        auto d = diag::make_error(diag::rules::file_not_found,
                                  "no such file: " + path.string());
        d.source_path = path.string();
        result.diagnostics.push_back(std::move(d));
        return result;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        auto d = diag::make_error(diag::rules::io_error, "cannot open " + path.string());
        d.source_path = path.string();
        result.diagnostics.push_back(std::move(d));
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);
    if (auto bad = find_invalid_utf8(text)) {
        auto d = diag::make_error(diag::rules::invalid_utf8,
                                  path.string() + " is not valid UTF-8", *bad);
        d.source_path = path.string();
        result.diagnostics.push_back(std::move(d));
        return result;
    }
    return parse(text, path.string());
}

namespace {

void render_features(std::string& out, const std::vector<std::string_view>& names) {
    if (names.empty()) return;
    out += '<';
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    out += '>';
}

std::string render_type_ref(const TypeRef& ref) {
    return ref.is_primitive() ? std::string(to_keyword(ref.primitive())) : ref.name();
}

std::string render_field(const Field& f) {
    std::string out = render_type_ref(f.type) + " " + f.name;
    std::vector<std::string_view> names;
    for (auto feat : f.features)
        names.push_back(to_keyword(feat));
    render_features(out, names);
    return out;
}

std::string render_member(const Operation& op) {
    std::string out;
    if (op.kind == OperationKind::Procedure)
        out = "procedure " + op.name;
    else
        out = "function " + render_type_ref(*op.return_type) + " " + op.name;
    std::vector<std::string_view> names;
    for (auto feat : op.features)
        names.push_back(to_keyword(feat));
    render_features(out, names);
    out += '(';
    for (size_t i = 0; i < op.params.size(); ++i) {
        if (i) out += ", ";
        out += render_field(op.params[i]);
    }
    out += ')';
    return out;
}

} // namespace

std::string render_source(const DomainModel& model) {
    std::string out;
    for (const auto& ctx : model.contexts) {
        out += "context " + ctx.name + " {\n";
        for (const auto& ct : ctx.complex_types) {
            if (const auto* s = std::get_if<Structure>(&ct)) {
                out += "    structure " + s->name;
                std::vector<std::string_view> names;
                for (auto feat : s->features)
                    names.push_back(to_keyword(feat));
                render_features(out, names);
                size_t member_count = s->fields.size() + s->operations.size();
                if (member_count == 0) {
                    out += " {}\n";
                    continue;
                }
                out += " {\n";
                size_t emitted = 0;
                for (const auto& f : s->fields) {
                    out += "        " + render_field(f);
                    out += ++emitted < member_count ? ",\n" : "\n";
                }
                for (const auto& op : s->operations) {
                    out += "        " + render_member(op);
                    out += ++emitted < member_count ? ",\n" : "\n";
                }
                out += "    }\n";
            } else if (const auto* c = std::get_if<Collection>(&ct)) {
                out += "    collection " + c->name + " { " + render_type_ref(c->element_type) +
                       " }\n";
            } else {
                const auto& e = std::get<Enumeration>(ct);
                out += "    enum " + e.name + " { ";
                for (size_t i = 0; i < e.literals.size(); ++i) {
                    if (i) out += ", ";
                    out += e.literals[i];
                }
                out += " }\n";
            }
        }
        out += "}\n";
    }
    return out;
}

} // namespace lemma

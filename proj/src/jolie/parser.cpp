#include "ddml2jolie/jolie/parser.hpp"

#include <cctype>

namespace jolie {

namespace {

struct Token {
    enum class Kind {
        Ident,
        Annotation, // ///@name, payload in text
        String,     // "literal", payload without quotes
        LBrace,
        RBrace,
        LParen,
        RParen,
        LBracket,
        RBracket,
        Colon,
        Comma,
        Question,
        Star,
        End,
    };

    Kind kind = Kind::End;
    std::string text;
    diag::SourceLoc loc;
};

struct ParseAbort {
    diag::Diagnostic diagnostic;
};

[[noreturn]] void fail(std::string message, diag::SourceLoc loc) {
    throw ParseAbort{diag::make_error(diag::rules::syntax_error, std::move(message), loc)};
}

std::string describe(const Token& t) {
    switch (t.kind) {
    case Token::Kind::Ident: return "'" + t.text + "'";
    case Token::Kind::Annotation: return "'///@" + t.text + "'";
    case Token::Kind::String: return "string literal";
    case Token::Kind::End: return "end of input";
    default: return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        Token t;
        t.loc = {line_, col_};
        if (pos_ >= src_.size()) return t;
        char c = src_[pos_];
        switch (c) {
        case '{': return punct(Token::Kind::LBrace, t);
        case '}': return punct(Token::Kind::RBrace, t);
        case '(': return punct(Token::Kind::LParen, t);
        case ')': return punct(Token::Kind::RParen, t);
        case '[': return punct(Token::Kind::LBracket, t);
        case ']': return punct(Token::Kind::RBracket, t);
        case ':': return punct(Token::Kind::Colon, t);
        case ',': return punct(Token::Kind::Comma, t);
        case '?': return punct(Token::Kind::Question, t);
        case '*': return punct(Token::Kind::Star, t);
        default: break;
        }
        if (c == '/') {
            if (src_.substr(pos_).rfind("///@", 0) != 0)
                fail("unexpected '/'", t.loc);
            advance_n(4);
            t.kind = Token::Kind::Annotation;
            t.text = read_ident(t.loc);
            return t;
        }
        if (c == '"') {
            advance();
            std::string value;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                if (src_[pos_] == '\n') fail("unterminated string literal", t.loc);
                value += src_[pos_];
                advance();
            }
            if (pos_ >= src_.size()) fail("unterminated string literal", t.loc);
            advance();
            t.kind = Token::Kind::String;
            t.text = std::move(value);
            return t;
        }
        if (is_ident_start(c)) {
            t.kind = Token::Kind::Ident;
            t.text = read_ident(t.loc);
            return t;
        }
        fail(std::string("unexpected character '") + c + "'", t.loc);
    }

private:
    static bool is_ident_start(char c) {
        return c == '_' || std::isalpha(static_cast<unsigned char>(c));
    }
    static bool is_ident_char(char c) {
        return c == '_' || std::isalnum(static_cast<unsigned char>(c));
    }

    std::string read_ident(diag::SourceLoc loc) {
        if (pos_ >= src_.size() || !is_ident_start(src_[pos_]))
            fail("expected an identifier", loc);
        size_t begin = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_]))
            advance();
        return std::string(src_.substr(begin, pos_ - begin));
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance_n(size_t n) {
        for (size_t i = 0; i < n; ++i)
            advance();
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
                advance();
            else
                break;
        }
    }

    Token punct(Token::Kind kind, Token t) {
        t.kind = kind;
        t.text = std::string(src_.substr(pos_, 1));
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

    JolieDocument parse_document() {
        JolieDocument doc;
        std::vector<Annotation> pending;
        while (cur_.kind != Token::Kind::End) {
            if (cur_.kind == Token::Kind::Annotation) {
                if (cur_.text == "beginCtx") {
                    require_no_pending(pending);
                    advance();
                    expect(Token::Kind::LParen, "'('");
                    std::string name = expect_ident("a context name");
                    expect(Token::Kind::RParen, "')'");
                    doc.items.emplace_back(CtxBegin{std::move(name)});
                } else if (cur_.text == "endCtx") {
                    require_no_pending(pending);
                    advance();
                    doc.items.emplace_back(CtxEnd{});
                } else {
                    pending.push_back(parse_annotation());
                }
                continue;
            }
            if (cur_.kind == Token::Kind::Ident && cur_.text == "type") {
                advance();
                doc.items.emplace_back(parse_type_decl(std::move(pending)));
                pending.clear();
                continue;
            }
            if (cur_.kind == Token::Kind::Ident && cur_.text == "interface") {
                advance();
                doc.items.emplace_back(parse_interface(std::move(pending)));
                pending.clear();
                continue;
            }
            if (cur_.kind == Token::Kind::RBrace)
                fail_with(diag::rules::unbalanced_delimiter, "unmatched '}'", cur_.loc);
            fail("expected 'type', 'interface' or a context marker, found " + describe(cur_),
                 cur_.loc);
        }
        require_no_pending(pending);
        return doc;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] static void fail_with(std::string_view rule, std::string message,
                                       diag::SourceLoc loc) {
        throw ParseAbort{diag::make_error(rule, std::move(message), loc)};
    }

    void require_no_pending(const std::vector<Annotation>& pending) {
        if (!pending.empty())
            fail("annotation is not attached to a type or interface", cur_.loc);
    }

    Annotation parse_annotation() {
        auto kind = annotation_from_keyword(cur_.text);
        if (!kind) fail("unknown annotation '///@" + cur_.text + "'", cur_.loc);
        advance();
        return Annotation{*kind};
    }

    std::string expect_ident(std::string_view what) {
        if (cur_.kind != Token::Kind::Ident)
            fail("expected " + std::string(what) + ", found " + describe(cur_), cur_.loc);
        std::string text = std::move(cur_.text);
        advance();
        return text;
    }

    void expect(Token::Kind kind, std::string_view what) {
        if (cur_.kind != kind) {
            if (cur_.kind == Token::Kind::End)
                fail_with(diag::rules::unbalanced_delimiter,
                          "missing " + std::string(what) + " before end of input", cur_.loc);
            fail("expected " + std::string(what) + ", found " + describe(cur_), cur_.loc);
        }
        advance();
    }

    EnumRefinement parse_refinement() {
        // '(' already consumed: enum( ["A", "B"] ) )
        diag::SourceLoc loc = cur_.loc;
        std::string kw = expect_ident("'enum'");
        if (kw != "enum") fail("expected 'enum', found '" + kw + "'", loc);
        expect(Token::Kind::LParen, "'('");
        expect(Token::Kind::LBracket, "'['");
        EnumRefinement refinement;
        while (true) {
            if (cur_.kind != Token::Kind::String)
                fail("expected a string literal, found " + describe(cur_), cur_.loc);
            refinement.literals.push_back(std::move(cur_.text));
            advance();
            if (cur_.kind == Token::Kind::Comma) {
                advance();
                continue;
            }
            break;
        }
        expect(Token::Kind::RBracket, "']'");
        expect(Token::Kind::RParen, "')'");
        expect(Token::Kind::RParen, "')'");
        return refinement;
    }

    NodeType parse_node_type() {
        diag::SourceLoc loc = cur_.loc;
        std::string name = expect_ident("a type");
        auto basic = basic_from_keyword(name);
        if (!basic) return NodeType{std::move(name)};
        if (*basic == BasicType::Void)
            fail("'void' is only valid as a tree root", loc);
        BasicNodeType node;
        node.basic = *basic;
        if (cur_.kind == Token::Kind::LParen) {
            advance();
            node.refinement = parse_refinement();
        }
        return NodeType{node};
    }

    TypeDecl parse_type_decl(std::vector<Annotation> annotations) {
        TypeDecl decl;
        decl.annotations = std::move(annotations);
        decl.name = expect_ident("a type name");
        if (cur_.kind == Token::Kind::LBrace) {
            advance();
            TreeBody tree;
            std::vector<Annotation> pending;
            while (cur_.kind != Token::Kind::RBrace) {
                if (cur_.kind == Token::Kind::End)
                    fail_with(diag::rules::unbalanced_delimiter,
                              "missing '}' closing type '" + decl.name + "'", cur_.loc);
                if (cur_.kind == Token::Kind::Annotation) {
                    if (cur_.text == "beginCtx" || cur_.text == "endCtx")
                        fail("context marker inside a type body", cur_.loc);
                    pending.push_back(parse_annotation());
                    continue;
                }
                TypeNode node;
                node.annotations = std::move(pending);
                pending.clear();
                node.name = expect_ident("a node name");
                if (cur_.kind == Token::Kind::Question) {
                    node.cardinality = Cardinality::Optional;
                    advance();
                } else if (cur_.kind == Token::Kind::Star) {
                    node.cardinality = Cardinality::Star;
                    advance();
                }
                expect(Token::Kind::Colon, "':'");
                node.type = parse_node_type();
                tree.children.push_back(std::move(node));
            }
            if (!pending.empty())
                fail("annotation is not attached to a node", cur_.loc);
            advance(); // '}'
            decl.body = std::move(tree);
            return decl;
        }
        expect(Token::Kind::Colon, "':' or '{'");
        diag::SourceLoc loc = cur_.loc;
        std::string name = expect_ident("a basic type");
        auto basic = basic_from_keyword(name);
        if (!basic) fail("expected a basic type, found '" + name + "'", loc);
        if (*basic == BasicType::Undefined) {
            decl.body = UndefinedBody{};
            return decl;
        }
        if (*basic == BasicType::Void)
            fail("'void' is only valid as a tree root", loc);
        BasicBody body;
        body.basic = *basic;
        if (cur_.kind == Token::Kind::LParen) {
            advance();
            body.refinement = parse_refinement();
        }
        decl.body = body;
        return decl;
    }

    TypeParam parse_type_param() {
        std::string name = expect_ident("a type");
        if (auto basic = basic_from_keyword(name)) return TypeParam{*basic};
        return TypeParam{std::move(name)};
    }

    InterfaceDecl parse_interface(std::vector<Annotation> annotations) {
        InterfaceDecl decl;
        decl.annotations = std::move(annotations);
        decl.name = expect_ident("an interface name");
        expect(Token::Kind::LBrace, "'{'");
        diag::SourceLoc loc = cur_.loc;
        std::string header = expect_ident("'RequestResponse'");
        if (header != "RequestResponse")
            fail("expected 'RequestResponse', found '" + header + "'", loc);
        expect(Token::Kind::Colon, "':'");
        std::vector<Annotation> pending;
        while (cur_.kind != Token::Kind::RBrace) {
            if (cur_.kind == Token::Kind::End)
                fail_with(diag::rules::unbalanced_delimiter,
                          "missing '}' closing interface '" + decl.name + "'", cur_.loc);
            if (cur_.kind == Token::Kind::Annotation) {
                if (cur_.text == "beginCtx" || cur_.text == "endCtx")
                    fail("context marker inside an interface body", cur_.loc);
                pending.push_back(parse_annotation());
                continue;
            }
            RequestResponseOp op;
            op.annotations = std::move(pending);
            pending.clear();
            op.name = expect_ident("an operation name");
            expect(Token::Kind::LParen, "'('");
            op.request = parse_type_param();
            expect(Token::Kind::RParen, "')'");
            expect(Token::Kind::LParen, "'('");
            op.response = parse_type_param();
            expect(Token::Kind::RParen, "')'");
            decl.operations.push_back(std::move(op));
        }
        if (!pending.empty())
            fail("annotation is not attached to an operation", cur_.loc);
        advance(); // '}'
        return decl;
    }

    Lexer lexer_;
    Token cur_;
};

} // namespace

ReparseResult reparse_subset(std::string_view text) {
    ReparseResult result;
    try {
        Parser parser(text);
        result.document = parser.parse_document();
    } catch (ParseAbort& abort) {
        result.diagnostics.push_back(std::move(abort.diagnostic));
    }
    return result;
}

} // namespace jolie

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ddml2jolie/diagnostic.hpp"
#include "ddml2jolie/lemma/ast.hpp"

// Recursive-descent parser for the DDML concrete syntax:
//
//   model      := context*
//   context    := 'context' id '{' complexType* '}'
//   structure  := 'structure' id features? '{' members? '}'
//   members    := member (',' member)* ','?
//   member     := field | operation
//   field      := type id features?
//   operation  := 'procedure' id features? params?
//               | 'function' type id features? params?
//   params     := '(' (field (',' field)* ','?)? ')'
//   collection := 'collection' id '{' type '}'
//   enum       := 'enum' id '{' id (',' id)* ','? '}'
//   features   := '<' (id (','? id)*)? '>'
//
// Whitespace is free-form, '//' comments run to end of line, feature names
// are contextual keywords. Parameter lists may be omitted entirely for
// zero-parameter operations. There is no error recovery: the first syntax
// error aborts the parse.

namespace lemma {

struct ParseResult {
    std::optional<DomainModel> model;
    std::vector<diag::Diagnostic> diagnostics;

    bool ok() const { return model.has_value(); }
};

ParseResult parse(std::string_view source_text,
                  std::optional<std::string> source_path = std::nullopt);

/// Reads the file as UTF-8 (validating it, stripping a leading BOM) and
/// delegates to parse. I/O problems come back as diagnostics, not exceptions.
ParseResult parse_file(const std::filesystem::path& path);

/// Debugging emitter for the source syntax; parse(render_source(m)) == m.
std::string render_source(const DomainModel& model);

} // namespace lemma

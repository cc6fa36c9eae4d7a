#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddml2jolie/diagnostic.hpp"
#include "ddml2jolie/jolie/ast.hpp"

namespace jolie {

struct ReparseResult {
    std::optional<JolieDocument> document;
    std::vector<diag::Diagnostic> diagnostics;

    bool ok() const { return document.has_value(); }
};

/// Parses exactly the subset emitted by render (including `///@`
/// annotations and context markers) back into a document. Serves as the
/// self-check oracle: reparse_subset(render(d)) == d for well-formed d.
/// Layout is free-form at the token level, so hand-written one-liners such
/// as `type T { self?: PSB }` are accepted too.
ReparseResult reparse_subset(std::string_view text);

} // namespace jolie

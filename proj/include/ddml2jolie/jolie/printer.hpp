#pragma once

#include <string>

#include "ddml2jolie/jolie/ast.hpp"

namespace jolie {

// Deterministic pretty-printer. Layout canon:
//   - 4-space indentation, no tabs, no trailing whitespace
//   - annotations on their own line at the owner's indentation
//   - tree types as `type Name {` / `    child<card>: type` / `}`
//   - basic types as `type Name: basic( enum( ["A", "B"] ) )`
//   - interfaces with a single `RequestResponse:` section
//   - one blank line between top-level items, trailing newline at EOF
std::string render(const JolieDocument& doc);

} // namespace jolie

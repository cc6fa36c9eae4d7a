#include "ddml2jolie/diagnostic.hpp"

namespace diag {

Diagnostic make_error(std::string_view rule_id, std::string message, SourceLoc loc) {
    return Diagnostic{Severity::Error, std::string(rule_id), std::move(message), loc, std::nullopt};
}

Diagnostic make_warning(std::string_view rule_id, std::string message, SourceLoc loc) {
    return Diagnostic{Severity::Warning, std::string(rule_id), std::move(message), loc, std::nullopt};
}

std::string format(const Diagnostic& d) {
    std::string out = d.severity == Severity::Error ? "error " : "warning ";
    out += d.rule_id;
    out += ": ";
    out += d.message;
    if (d.source_path) {
        out += " (" + *d.source_path + ":" + std::to_string(d.location.line) + ":" +
               std::to_string(d.location.column) + ")";
    }
    return out;
}

} // namespace diag

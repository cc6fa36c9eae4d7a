#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ddml2jolie/checker.hpp"
#include "ddml2jolie/diagnostic.hpp"
#include "ddml2jolie/encoder.hpp"
#include "ddml2jolie/jolie/printer.hpp"
#include "ddml2jolie/lemma/parser.hpp"

// Pipeline: parse the domain model, resolve references, encode to a Jolie
// document, lint it, serialise to <target>/<basename>.ol.
//
// Exit codes: 0 success (warnings allowed), 1 parse/encode/check errors,
// 2 usage errors. Diagnostics go to stderr; stdout carries only the path of
// the written file, so scripts can pipe it.

namespace {

namespace fs = std::filesystem;

bool print_diagnostics(const std::vector<diag::Diagnostic>& diagnostics) {
    bool has_error = false;
    for (const auto& d : diagnostics) {
        std::cerr << diag::format(d) << '\n';
        has_error |= d.severity == diag::Severity::Error;
    }
    return has_error;
}

// Writes via a temp file + rename so a failed run never leaves a truncated
// document behind.
bool write_atomically(const fs::path& target, const std::string& content, std::string& error) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            error = "cannot open " + tmp.string() + " for writing";
            return false;
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            error = "failed writing " + tmp.string();
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        error = "cannot move " + tmp.string() + " to " + target.string() + ": " + ec.message();
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generates Jolie API documents from LEMMA domain models"};
    std::string source;
    std::string target;
    bool check_only = false;
    bool no_check = false;
    app.add_option("-s,--source", source, "path of the LEMMA domain model (.data)")->required();
    app.add_option("-t,--target", target, "target folder for the generated .ol file")->required();
    auto* check_only_flag =
        app.add_flag("--check-only", check_only, "run the consistency checks, write nothing");
    auto* no_check_flag =
        app.add_flag("--no-check", no_check, "skip the consistency checks");
    check_only_flag->excludes(no_check_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto parsed = lemma::parse_file(source);
    bool failed = print_diagnostics(parsed.diagnostics);
    if (!parsed.model) return 1;

    auto resolution = lemma::resolve_references(*parsed.model);
    for (auto& d : resolution)
        d.source_path = source;
    failed |= print_diagnostics(resolution);
    if (failed) return 1;

    auto outcome = codegen::encode_model(*parsed.model);
    for (auto& d : outcome.diagnostics)
        d.source_path = source;
    failed |= print_diagnostics(outcome.diagnostics);
    if (!outcome.document) return 1;

    if (!no_check) {
        auto findings = lint::check_all(outcome);
        for (auto& d : findings)
            d.source_path = source;
        failed |= print_diagnostics(findings);
    }

    if (!check_only) {
        std::error_code ec;
        fs::create_directories(target, ec);
        if (ec) {
            std::cerr << diag::format(diag::make_error(
                             diag::rules::io_error,
                             "cannot create target folder " + target + ": " + ec.message()))
                      << '\n';
            return 1;
        }
        fs::path out_path = fs::path(target) / (fs::path(source).stem().string() + ".ol");
        std::string error;
        if (!write_atomically(out_path, jolie::render(*outcome.document), error)) {
            std::cerr << diag::format(diag::make_error(diag::rules::io_error, error)) << '\n';
            return 1;
        }
        std::cout << out_path.string() << '\n';
    }

    return failed ? 1 : 0;
}

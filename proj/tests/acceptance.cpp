// Acceptance suite. Runs every contract criterion end to end and prints one
// PASS/FAIL line per criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#ifdef __unix__
#include <sys/wait.h>
#endif

#include "ddml2jolie/checker.hpp"
#include "ddml2jolie/encoder.hpp"
#include "ddml2jolie/jolie/parser.hpp"
#include "ddml2jolie/jolie/printer.hpp"
#include "ddml2jolie/lemma/parser.hpp"
#include "support/model_generator.hpp"

namespace fs = std::filesystem;

namespace {

// ---------- helpers ----------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(DDML2JOLIE_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
#ifdef __unix__
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    return status;
#endif
}

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

// Whitespace-normalised comparison: collapse whitespace runs to one space,
// then drop spaces adjacent to punctuation. Token content and order survive;
// line breaks and indentation do not.
std::string normalize_ws(const std::string& text) {
    auto is_punct = [](char c) {
        return std::string_view("(){}[]<>:,?*\"").find(c) != std::string_view::npos;
    };
    std::string collapsed;
    bool in_ws = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            in_ws = true;
            continue;
        }
        if (in_ws && !collapsed.empty()) collapsed += ' ';
        in_ws = false;
        collapsed += c;
    }
    std::string out;
    for (size_t i = 0; i < collapsed.size(); ++i) {
        char c = collapsed[i];
        if (c == ' ') {
            bool prev_punct = !out.empty() && is_punct(out.back());
            bool next_punct = i + 1 < collapsed.size() && is_punct(collapsed[i + 1]);
            if (prev_punct || next_punct) continue;
        }
        out += c;
    }
    return out;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const char* tag)
        : path(fs::temp_directory_path() / (std::string("ddml2jolie-acc-") + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

jolie::JolieDocument encode_or_die(const std::string& source, std::string& error,
                                   codegen::EncodingOutcome* outcome_out = nullptr) {
    auto parsed = lemma::parse(source);
    if (!parsed.ok()) {
        error = "model does not parse: " + diag::format(parsed.diagnostics.at(0));
        return {};
    }
    auto unresolved = lemma::resolve_references(*parsed.model);
    if (!unresolved.empty()) {
        error = "model does not resolve: " + diag::format(unresolved.at(0));
        return {};
    }
    auto outcome = codegen::encode_model(*parsed.model);
    if (!outcome.ok()) {
        error = "model does not encode: " + diag::format(outcome.diagnostics.at(0));
        return {};
    }
    auto doc = *outcome.document;
    if (outcome_out) *outcome_out = std::move(outcome);
    return doc;
}

// ---------- fixture models ----------

const char* kBookingManagementModel = R"(// Booking management domain of the park-and-charge platform
context BookingManagement {
    structure PSB<aggregate, entity> {
        long bookingID<identifier>,
        TimeSlot timeSlot<part>,
        double priceInEuro,
        function PSB create<factory>(TimeSlot timeSlot, double priceInEuro)
    }
    structure TimeSlot<valueObject> {
        string startTime,
        string endTime
    }
    structure BookingExpiration<specification> {
        function boolean isExpired<validator>(PSB p)
    }
}
context Billing {
    structure Invoice<entity> {
        long invoiceID<identifier>,
        double amount,
        procedure pay()
    }
}
)";

const char* kBadValidatorModel = R"(context C {
    structure PSB { double priceInEuro }
    structure Exp<specification> {
        function int bad<validator>(PSB p)
    }
}
)";

// ---------- criterion 1: golden listings ----------

struct GoldenPair {
    const char* name;
    const char* ddml;
    const char* jolie;
};

const GoldenPair kGoldenPairs[] = {
    {"booking management",
     R"(context BookingManagement {
    structure ParkingSpaceBooking<entity> {
        long bookingID<identifier>,
        double priceInEuro,
        function double priceInDollars
    }
})",
     R"(///@beginCtx(BookingManagement)
///@entity
type ParkingSpaceBooking {
    ///@identifier
    bookingID: long
    priceInEuro: double
}
interface ParkingSpaceBooking_interface {
    RequestResponse:
        priceInDollars(ParkingSpaceBooking)(double)
}
///@endCtx)"},

    {"aggregate and part",
     R"(context BookingManagement {
    structure PSB<aggregate> {
        TimeSlot timeSlot<part>,
        double priceInEuro
    }
    structure TimeSlot {
        string startTime,
        string endTime
    }
})",
     R"(///@beginCtx(BookingManagement)
///@aggregate
type PSB {
    ///@part
    timeSlot: TimeSlot
    priceInEuro: double
}
type TimeSlot {
    startTime: string
    endTime: string
}
///@endCtx)"},

    {"entity with identifier field",
     R"(context BookingManagement {
    structure PSB<aggregate, entity> {
        long bookingID<identifier>,
        TimeSlot timeSlot<part>,
        double priceInEuro
    }
    structure TimeSlot {
        string startTime,
        string endTime
    }
})",
     R"(///@beginCtx(BookingManagement)
///@aggregate
///@entity
type PSB {
    ///@identifier
    bookingID: long
    ///@part
    timeSlot: TimeSlot
    priceInEuro: double
}
type TimeSlot {
    startTime: string
    endTime: string
}
///@endCtx)"},

    {"entity with identifier function",
     R"(context BookingManagement {
    structure PSB<entity> {
        double priceInEuro,
        function long bookingID<identifier>()
    }
})",
     R"(///@beginCtx(BookingManagement)
///@entity
type PSB {
    priceInEuro: double
}
type bookingID_type { self?: PSB }
interface PSB_interface {
    RequestResponse:
        ///@identifier
        bookingID( bookingID_type )( long )
}
///@endCtx)"},

    {"factory",
     R"(context BookingManagement {
    structure PSB {
        TimeSlot timeSlot,
        double priceInEuro,
        function PSB create<factory>(
            TimeSlot timeSlot,
            double priceInEuro
        )
    }
    structure TimeSlot {
        string startTime,
        string endTime
    }
})",
     R"(///@beginCtx(BookingManagement)
type PSB {
    timeSlot: TimeSlot
    priceInEuro: double
}
///@factory
type create_type {
    timeSlot: TimeSlot
    priceInEuro: double
}
interface PSB_interface {
    RequestResponse:
        create(create_type)(PSB)
}
type TimeSlot {
    startTime: string
    endTime: string
}
///@endCtx)"},

    {"specification and validator",
     R"(context BookingManagement {
    structure PSB {
        TimeSlot timeSlot,
        double priceInEuro
    }
    structure TimeSlot {
        string startTime,
        string endTime
    }
    structure BookingExpiration<specification> {
        function boolean isExpired<validator>(PSB p)
    }
})",
     R"(///@beginCtx(BookingManagement)
type PSB {
    timeSlot: TimeSlot
    priceInEuro: double
}
type TimeSlot {
    startTime: string
    endTime: string
}
///@specification
type isExpired_type { p: PSB }
interface BookingExpiration_interface {
    RequestResponse:
        ///@validator
        isExpired(isExpired_type)(bool)
}
///@endCtx)"},

    {"value object and context",
     R"(context BookingManagement {
    structure PSB {
        TimeSlot timeSlot,
        double priceInEuro
    }
    structure PSB_VO<valueObject> {
        TimeSlot timeSlot,
        double price,
        string currency
    }
    structure TimeSlot<valueObject> {
        string startTime,
        string endTime
    }
})",
     R"(///@beginCtx(BookingManagement)
type PSB {
    timeSlot: TimeSlot
    priceInEuro: double
}
///@valueObject
type PSB_VO {
    timeSlot: TimeSlot
    price: double
    currency: string
}
///@valueObject
type TimeSlot {
    startTime: string
    endTime: string
}
///@endCtx)"},
};

std::string criterion_golden_listings() {
    auto start = std::chrono::steady_clock::now();
    for (const auto& pair : kGoldenPairs) {
        std::string error;
        auto document = encode_or_die(pair.ddml, error);
        if (!error.empty()) return std::string(pair.name) + ": " + error;
        std::string rendered = jolie::render(document);
        if (normalize_ws(rendered) != normalize_ws(pair.jolie))
            return std::string(pair.name) + ": rendered output differs from the listing\n--- got\n" +
                   rendered + "--- want\n" + pair.jolie;
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed > std::chrono::seconds(1)) return "exceeded the 1 s budget";
    return "";
}

// ---------- criterion 2: render/reparse round trip ----------

std::string criterion_round_trip() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(424242);
    for (int i = 0; i < 200; ++i) {
        auto model = testgen::random_model(rng);
        auto outcome = codegen::encode_model(model);
        if (!outcome.ok()) return "model " + std::to_string(i) + " failed to encode";
        auto text = jolie::render(*outcome.document);
        auto reparsed = jolie::reparse_subset(text);
        if (!reparsed.ok())
            return "model " + std::to_string(i) +
                   ": rendered document does not reparse: " + diag::format(reparsed.diagnostics[0]);
        if (!(*reparsed.document == *outcome.document))
            return "model " + std::to_string(i) + ": round trip changed the document";
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed > std::chrono::seconds(10)) return "exceeded the 10 s budget";
    return "";
}

// ---------- criterion 3: encoding invariants ----------

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> out;
    std::string part;
    for (char c : path) {
        if (c == '/') {
            out.push_back(part);
            part.clear();
        } else {
            part += c;
        }
    }
    out.push_back(part);
    return out;
}

const lemma::Structure* find_structure(const lemma::DomainModel& model, const std::string& ctx,
                                       const std::string& name) {
    for (const auto& c : model.contexts) {
        if (c.name != ctx) continue;
        for (const auto& t : c.complex_types)
            if (const auto* s = std::get_if<lemma::Structure>(&t))
                if (s->name == name) return s;
    }
    return nullptr;
}

std::string check_invariants(const lemma::DomainModel& model,
                             const codegen::EncodingOutcome& outcome) {
    const auto& doc = *outcome.document;

    // structure-count law
    size_t model_structures = 0;
    size_t model_interfaces = 0;
    size_t model_operations = 0;
    size_t elided_requests = 0;
    std::map<std::string, size_t> model_features;
    for (const auto& ctx : model.contexts) {
        for (const auto& ct : ctx.complex_types) {
            const auto* s = std::get_if<lemma::Structure>(&ct);
            if (!s) continue;
            if (!codegen::structure_type_elided(*s)) ++model_structures;
            if (!s->operations.empty()) ++model_interfaces;
            for (auto f : s->features)
                ++model_features[std::string(lemma::to_keyword(f))];
            for (const auto& f : s->fields)
                for (auto feat : f.features)
                    ++model_features[std::string(lemma::to_keyword(feat))];
            for (const auto& op : s->operations) {
                ++model_operations;
                if (codegen::request_type_elided(op, *s)) ++elided_requests;
                for (auto feat : op.features)
                    ++model_features[std::string(lemma::to_keyword(feat))];
            }
        }
    }

    size_t doc_structure_types = 0;
    size_t doc_request_types = 0;
    size_t doc_interfaces = 0;
    for (const auto& [name, entry] : outcome.provenance) {
        switch (entry.kind) {
        case codegen::ProvenanceEntry::Kind::StructureType: ++doc_structure_types; break;
        case codegen::ProvenanceEntry::Kind::RequestType: ++doc_request_types; break;
        case codegen::ProvenanceEntry::Kind::Interface: ++doc_interfaces; break;
        default: break;
        }
    }
    if (doc_structure_types != model_structures)
        return "structure-count law violated";
    if (doc_interfaces != model_interfaces)
        return "interface-iff-operations law violated (count)";
    if (doc_request_types != model_operations - elided_requests)
        return "request-type count law violated";

    // document-side walk: bracketing, self-leaf law, annotation conservation
    std::map<std::string, size_t> doc_annotations;
    auto count_annotations = [&doc_annotations](const std::vector<jolie::Annotation>& annos) {
        for (const auto& a : annos)
            ++doc_annotations[std::string(jolie::to_keyword(a.kind))];
    };

    std::string current_ctx;
    bool in_ctx = false;
    for (const auto& item : doc.items) {
        if (const auto* begin = std::get_if<jolie::CtxBegin>(&item)) {
            if (in_ctx) return "nested beginCtx marker";
            current_ctx = begin->name;
            in_ctx = true;
            continue;
        }
        if (std::holds_alternative<jolie::CtxEnd>(item)) {
            if (!in_ctx) return "endCtx without beginCtx";
            in_ctx = false;
            continue;
        }
        if (!in_ctx) return "declaration outside any context";

        std::string name;
        if (const auto* type = std::get_if<jolie::TypeDecl>(&item)) {
            name = type->name;
            count_annotations(type->annotations);
            if (const auto* tree = std::get_if<jolie::TreeBody>(&type->body))
                for (const auto& node : tree->children)
                    count_annotations(node.annotations);
        } else {
            const auto& iface = std::get<jolie::InterfaceDecl>(item);
            name = iface.name;
            count_annotations(iface.annotations);
            for (const auto& op : iface.operations)
                count_annotations(op.annotations);
        }

        auto it = outcome.provenance.find(name);
        if (it == outcome.provenance.end()) return "missing provenance for '" + name + "'";
        auto segments = split_path(it->second.source_path);
        if (segments.empty() || segments[0] != current_ctx)
            return "context bracketing violated for '" + name + "'";

        // self-leaf law on request types
        if (it->second.kind == codegen::ProvenanceEntry::Kind::RequestType) {
            if (segments.size() != 3) return "request provenance path malformed";
            const auto* s = find_structure(model, segments[0], segments[1]);
            if (!s) return "request provenance names an unknown structure";
            const lemma::Operation* op = nullptr;
            for (const auto& candidate : s->operations)
                if (candidate.name == segments[2]) op = &candidate;
            if (!op) return "request provenance names an unknown operation";
            bool expect_self = !op->has_feature(lemma::OperationFeature::Factory) &&
                               !codegen::structure_type_elided(*s);
            const auto& tree = std::get<jolie::TreeBody>(std::get<jolie::TypeDecl>(item).body);
            bool has_self = false;
            for (const auto& node : tree.children)
                if (node.name == "self" && node.cardinality == jolie::Cardinality::Optional)
                    has_self = true;
            if (has_self != expect_self)
                return "self-leaf law violated for '" + name + "'";
        }
    }
    if (in_ctx) return "beginCtx without endCtx";

    if (model_features != doc_annotations) return "annotation conservation violated";
    return "";
}

std::string criterion_invariants() {
    std::mt19937 rng(424242); // same corpus as the round-trip criterion
    for (int i = 0; i < 200; ++i) {
        auto model = testgen::random_model(rng);
        auto outcome = codegen::encode_model(model);
        if (!outcome.ok()) return "model " + std::to_string(i) + " failed to encode";
        std::string error = check_invariants(model, outcome);
        if (!error.empty()) return "model " + std::to_string(i) + ": " + error;
    }
    return "";
}

// ---------- criterion 4: checker soundness and sensitivity ----------

jolie::TypeDecl* find_type_decl(jolie::JolieDocument& doc, std::string_view name) {
    for (auto& item : doc.items)
        if (auto* type = std::get_if<jolie::TypeDecl>(&item))
            if (type->name == name) return type;
    return nullptr;
}

jolie::RequestResponseOp* find_operation(jolie::JolieDocument& doc, std::string_view iface,
                                         std::string_view op) {
    for (auto& item : doc.items)
        if (auto* decl = std::get_if<jolie::InterfaceDecl>(&item))
            if (decl->name == iface)
                for (auto& candidate : decl->operations)
                    if (candidate.name == op) return &candidate;
    return nullptr;
}

std::string criterion_checker() {
    // soundness: convention-respecting random models lint clean
    std::mt19937 rng(777);
    testgen::Options options;
    options.ddd_conventions = true;
    for (int i = 0; i < 200; ++i) {
        auto model = testgen::random_model(rng, options);
        auto outcome = codegen::encode_model(model);
        if (!outcome.ok()) return "model " + std::to_string(i) + " failed to encode";
        auto findings = lint::check_all(outcome);
        for (const auto& f : findings)
            if (f.severity == diag::Severity::Error)
                return "model " + std::to_string(i) + " raised " + f.rule_id + ": " + f.message;
    }

    // sensitivity: each rule fires on exactly its seeded mutation
    std::string error;
    auto base = encode_or_die(kBookingManagementModel, error);
    if (!error.empty()) return "base model: " + error;
    if (!lint::check_document(base).empty()) return "base document is not clean";

    using Mutation = std::function<bool(jolie::JolieDocument&)>;
    struct Mutant {
        std::string_view rule;
        Mutation mutate;
    };
    const Mutant mutants[] = {
        {diag::rules::factory_input_contains_product,
         [](jolie::JolieDocument& d) {
             auto* t = find_type_decl(d, "create_type");
             if (!t) return false;
             std::get<jolie::TreeBody>(t->body).children.push_back(
                 {"made", jolie::Cardinality::One, {}, jolie::NodeType{std::string("PSB")}});
             return true;
         }},
        {diag::rules::factory_response_not_type,
         [](jolie::JolieDocument& d) {
             auto* op = find_operation(d, "PSB_interface", "create");
             if (!op) return false;
             op->response = jolie::TypeParam{jolie::BasicType::Double};
             return true;
         }},
        {diag::rules::validator_response_not_bool,
         [](jolie::JolieDocument& d) {
             auto* op = find_operation(d, "BookingExpiration_interface", "isExpired");
             if (!op) return false;
             op->response = jolie::TypeParam{jolie::BasicType::Int};
             return true;
         }},
        {diag::rules::validator_missing_specification,
         [](jolie::JolieDocument& d) {
             auto* t = find_type_decl(d, "isExpired_type");
             if (!t) return false;
             t->annotations.clear();
             return true;
         }},
        {diag::rules::validator_arity,
         [](jolie::JolieDocument& d) {
             auto* t = find_type_decl(d, "isExpired_type");
             if (!t) return false;
             std::get<jolie::TreeBody>(t->body).children.push_back(
                 {"q", jolie::Cardinality::One, {}, jolie::NodeType{std::string("PSB")}});
             return true;
         }},
        {diag::rules::cross_context_leaf,
         [](jolie::JolieDocument& d) {
             auto* t = find_type_decl(d, "Invoice");
             if (!t) return false;
             std::get<jolie::TreeBody>(t->body).children.push_back(
                 {"slot", jolie::Cardinality::One, {}, jolie::NodeType{std::string("PSB")}});
             return true;
         }},
        {diag::rules::cross_context_operation,
         [](jolie::JolieDocument& d) {
             auto* op = find_operation(d, "Invoice_interface", "pay");
             if (!op) return false;
             op->response = jolie::TypeParam{std::string("PSB")};
             return true;
         }},
        {diag::rules::aggregate_without_entity,
         [](jolie::JolieDocument& d) {
             auto* t = find_type_decl(d, "PSB");
             if (!t) return false;
             std::erase_if(t->annotations, [](const jolie::Annotation& a) {
                 return a.kind == jolie::AnnotationKind::Entity;
             });
             return true;
         }},
        {diag::rules::part_not_entity_or_vo,
         [](jolie::JolieDocument& d) {
             auto* t = find_type_decl(d, "TimeSlot");
             if (!t) return false;
             t->annotations.clear();
             return true;
         }},
    };

    for (const auto& mutant : mutants) {
        auto mutated = base;
        if (!mutant.mutate(mutated))
            return std::string(mutant.rule) + ": mutation target not found";
        auto findings = lint::check_document(mutated);
        if (findings.size() != 1)
            return std::string(mutant.rule) + ": expected exactly one finding, got " +
                   std::to_string(findings.size());
        if (findings[0].rule_id != mutant.rule)
            return std::string(mutant.rule) + ": reported " + findings[0].rule_id + " instead";
    }
    return "";
}

// ---------- criterion 5: CLI determinism ----------

std::string criterion_determinism() {
    auto start = std::chrono::steady_clock::now();
    TempDir dir("det");
    std::ofstream(dir.path / "BookingManagement.data") << kBookingManagementModel;
    auto model_arg = (dir.path / "BookingManagement.data").string();
    if (run_cli("-s " + model_arg + " -t " + (dir.path / "a").string()) != 0)
        return "first run failed";
    if (run_cli("-s " + model_arg + " -t " + (dir.path / "b").string()) != 0)
        return "second run failed";
    auto a = slurp(dir.path / "a" / "BookingManagement.ol");
    auto b = slurp(dir.path / "b" / "BookingManagement.ol");
    if (a.empty()) return "no output written";
    if (fnv1a(a) != fnv1a(b) || a != b) return "outputs differ between runs";
    auto elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed > std::chrono::seconds(1)) return "exceeded the 1 s budget";
    return "";
}

// ---------- criterion 6: CLI contract ----------

std::string criterion_cli_contract() {
    TempDir dir("cli");
    std::ofstream(dir.path / "model.data") << kBookingManagementModel;

    int code = run_cli("-s " + (dir.path / "model.data").string() + " -t " +
                       (dir.path / "out").string());
    if (code != 0) return "generation run exited " + std::to_string(code);
    if (!fs::exists(dir.path / "out" / "model.ol")) return "out/model.ol was not created";

    if (run_cli("-t " + dir.path.string()) != 2) return "missing -s did not exit 2";

    std::ofstream(dir.path / "bad.data") << kBadValidatorModel;
    code = run_cli("-s " + (dir.path / "bad.data").string() + " -t " +
                   (dir.path / "out2").string());
    if (code != 1) return "checker error run exited " + std::to_string(code);
    if (!fs::exists(dir.path / "out2" / "bad.ol"))
        return "file with checker findings was not written";
    return "";
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::string (*run)();
    };
    const Criterion criteria[] = {
        {"1 golden listings reproduce the published pairs", criterion_golden_listings},
        {"2 render/reparse round trip on 200 random models", criterion_round_trip},
        {"3 encoding invariants hold on 200 random models", criterion_invariants},
        {"4 checker soundness and single-rule sensitivity", criterion_checker},
        {"5 CLI output is byte-identical across runs", criterion_determinism},
        {"6 CLI invocation contract and exit codes", criterion_cli_contract},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error = criterion.run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (error.empty()) {
            std::cout << "PASS  " << criterion.name << " (" << ms << " ms)\n";
        } else {
            ++failures;
            std::cout << "FAIL  " << criterion.name << " (" << ms << " ms): " << error << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

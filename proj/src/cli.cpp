#include "mpp/cli.hpp"

#include "mpp/corpus.hpp"
#include "mpp/document.hpp"
#include "mpp/ehrhart.hpp"
#include "mpp/error.hpp"
#include "mpp/marked_polytopes.hpp"
#include "mpp/two_level.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace mpp {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::string builtin;
    std::string family = "order";
    std::string emit = "hrep";
    std::string method = "both";
    std::uint64_t seed = 1;
    std::size_t trials = 50;
    std::size_t max_unmarked = 5;
    bool json = false;
};

/// A loaded input: the document, its marked poset and an optional partition.
struct Input {
    PosetDocument doc;
    MarkedPoset mp;
    std::optional<ChainOrderPartition> part;
};

Input load(const Options& o)
{
    if (o.file.empty() == o.builtin.empty())
        throw UsageError("give exactly one of an input file or --builtin");
    Input in;
    in.doc = o.builtin.empty() ? read_document(o.file) : builtin_document(o.builtin);
    in.mp = to_marked_poset(in.doc);
    in.part = to_partition(in.doc, in.mp);
    return in;
}

json rational_array(const std::vector<Rational>& values)
{
    json out = json::array();
    for (const auto& v : values)
        out.push_back(to_fraction_string(v));
    return out;
}

json hrep_json(const HRepresentation& h)
{
    HRepresentation sorted = h;
    sorted.sort();
    json rows = json::array();
    for (const auto& r : sorted.inequalities())
        rows.push_back({{"coeffs", rational_array(r.coeffs)}, {"relation", "<="}, {"rhs", to_fraction_string(r.rhs)}});
    for (const auto& r : sorted.equalities())
        rows.push_back({{"coeffs", rational_array(r.coeffs)}, {"relation", "="}, {"rhs", to_fraction_string(r.rhs)}});
    return {{"coordinates", sorted.coordinates()}, {"rows", rows}};
}

HRepresentation family_hrep(const Input& in, const std::string& family)
{
    if (family == "order")
        return build_order_hrep(in.mp);
    if (family == "chain")
        return build_chain_hrep(in.mp);
    if (!in.part)
        throw UsageError("family chain-order needs a \"partition\" in the input document");
    return build_chain_order_hrep(in.mp, *in.part);
}

/// Each command fills `text` and `result` and returns its exit code.
struct Outcome {
    int code = kOk;
    std::ostringstream text;
    json result = json::object();
};

void cmd_validate(const Input& in, Outcome& out)
{
    ValidationReport report = validate_marked(in.mp);
    out.text << "strict: " << (report.strict ? "true" : "false") << '\n';
    out.text << "regular: " << (report.regular ? "true" : "false") << '\n';
    json violations = json::array();
    for (const auto& v : report.violations) {
        out.text << "violation: " << describe(in.mp, v) << '\n';
        violations.push_back(describe(in.mp, v));
    }
    out.result = {{"strict", report.strict}, {"regular", report.regular}, {"violations", violations}};
    out.code = report.strict && report.regular ? kOk : kDomain;
}

void cmd_polytope(const Input& in, const Options& o, Outcome& out)
{
    HRepresentation h = family_hrep(in, o.family);
    if (o.emit == "hrep") {
        out.text << format_hrep(h);
        out.result = hrep_json(h);
        return;
    }
    VRepresentation v = enumerate_vertices(h);
    if (o.emit == "vertices") {
        json vertices = json::array();
        for (const auto& x : v.vertices) {
            out.text << to_string(x) << '\n';
            vertices.push_back(rational_array(x));
        }
        out.result = {{"coordinates", h.coordinates()}, {"vertices", vertices}};
        return;
    }
    HRepresentation facets = irredundant(h, v);
    out.text << format_hrep(facets);
    out.result = hrep_json(facets);
}

void cmd_two_level(const Input& in, const Options& o, Outcome& out)
{
    const bool want_direct = o.method != "criterion";
    const bool want_criterion = o.method != "direct";
    HRepresentation h = family_hrep(in, o.family);
    std::optional<bool> direct, criterion;
    if (want_direct) {
        TwoLevelReport report = is_two_level_direct(h);
        direct = report.two_level;
        out.text << "direct: " << (report.two_level ? "true" : "false") << '\n';
        out.result["direct"] = report.two_level;
        if (report.witness) {
            std::string values;
            for (const auto& v : report.witness_values)
                values += (values.empty() ? "" : ", ") + to_string(v);
            out.text << "witness: " << format_inequality(*report.witness, h.coordinates()) << " takes {" << values
                     << "}\n";
            out.result["witness"] = {{"coeffs", rational_array(report.witness->coeffs)},
                                     {"rhs", to_fraction_string(report.witness->rhs)},
                                     {"values", rational_array(report.witness_values)}};
        }
    }
    if (want_criterion) {
        if (o.family == "order") {
            criterion = order_two_level_criterion(in.mp);
        } else if (o.family == "chain") {
            ChainCriterionReport report = chain_two_level_criterion(in.mp);
            criterion = report.two_level;
            if (report.scaling) {
                std::string s;
                for (const auto& f : *report.scaling)
                    s += (s.empty() ? "" : ", ") + to_string(f);
                out.text << "scaling: (" << s << ")\n";
                out.result["scaling"] = rational_array(*report.scaling);
            }
        } else {
            criterion = chain_order_two_level_criterion(in.mp, *in.part);
        }
        out.text << "criterion: " << (*criterion ? "true" : "false") << '\n';
        out.result["criterion"] = *criterion;
    }
    if (direct && criterion) {
        const bool agree = *direct == *criterion;
        out.text << (agree ? "AGREE" : "DISAGREE") << '\n';
        out.result["agree"] = agree;
        out.code = agree ? kOk : kDomain;
    }
}

void cmd_ehrhart(const Input& in, const Options& o, Outcome& out)
{
    std::optional<UnivariatePolynomial> formula, count;
    if (o.method != "count") {
        if (o.family != "order") {
            out.text << "note: formula evaluated on the marked order polytope, which has the same Ehrhart polynomial\n";
            out.result["note"] = "formula evaluated on the marked order polytope";
        }
        if (!in.mp.integral_marking())
            throw Error(ErrorKind::PreconditionViolated, "the extension formula needs an integral marking");
        formula = ehrhart_formula_marked_order(in.mp);
        out.text << "formula: " << to_string(*formula) << '\n';
        out.result["formula"] = to_fraction_strings(*formula);
    }
    if (o.method != "formula") {
        count = ehrhart_by_counting(family_hrep(in, o.family));
        out.text << "count: " << to_string(*count) << '\n';
        out.result["count"] = to_fraction_strings(*count);
    }
    if (formula && count) {
        const bool match = *formula == *count;
        out.text << (match ? "MATCH" : "MISMATCH") << '\n';
        out.result["match"] = match;
        out.code = match ? kOk : kDomain;
    }
}

void cmd_corpus(const Options& o, Outcome& out)
{
    CorpusOptions options;
    options.max_unmarked = o.max_unmarked;
    CorpusReport report = run_corpus(o.seed, o.trials, options);
    out.text << format_report(report);
    json suites = json::array();
    for (const auto& s : report.suites)
        suites.push_back({{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"failures", s.failures}});
    out.result = {{"seed", report.seed}, {"trials", report.trials}, {"suites", suites}, {"pass", report.all_passed()}};
    out.code = report.all_passed() ? kOk : kDomain;
}

bool is_input_error(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownElement:
    case ErrorKind::InvalidPoset:
    case ErrorKind::InvalidMarking:
        return true;
    default:
        return false;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Marked poset polytopes: construction, 2-level tests and Ehrhart polynomials", "mpp"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit {command, input, result} as JSON");

    const std::vector<std::string> families{"order", "chain", "chain-order"};
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "Marked poset JSON document");
        sub->add_option("--builtin", o.builtin, "pm:m,c | two-chains | diamond:lo,hi");
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "Polytope family")->check(CLI::IsMember(families));
    };

    CLI::App* validate = app.add_subcommand("validate", "Check strictness and regularity");
    add_input(validate);
    CLI::App* polytope = app.add_subcommand("polytope", "Print an H-representation, vertices or facets");
    add_input(polytope);
    add_family(polytope);
    polytope->add_option("--emit", o.emit, "hrep | vertices | facets")
        ->check(CLI::IsMember({"hrep", "vertices", "facets"}));
    CLI::App* two_level = app.add_subcommand("two-level", "Decide 2-levelness");
    add_input(two_level);
    add_family(two_level);
    two_level->add_option("--method", o.method, "direct | criterion | both")
        ->check(CLI::IsMember({"direct", "criterion", "both"}));
    CLI::App* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial, constant term first");
    add_input(ehrhart);
    add_family(ehrhart);
    ehrhart->add_option("--method", o.method, "formula | count | both")
        ->check(CLI::IsMember({"formula", "count", "both"}));
    CLI::App* corpus = app.add_subcommand("corpus", "Random agreement suites");
    corpus->add_option("--seed", o.seed, "Generator seed");
    corpus->add_option("--trials", o.trials, "Number of random marked posets");
    corpus->add_option("--max-unmarked", o.max_unmarked, "Largest number of unmarked elements")
        ->check(CLI::Range(1, 8));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    Outcome outcome;
    json input = nullptr;
    try {
        if (command == "corpus") {
            cmd_corpus(o, outcome);
        } else {
            Input in = load(o);
            input = to_json(in.doc);
            if (command == "validate")
                cmd_validate(in, outcome);
            else if (command == "polytope")
                cmd_polytope(in, o, outcome);
            else if (command == "two-level")
                cmd_two_level(in, o, outcome);
            else
                cmd_ehrhart(in, o, outcome);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? kUsage : kDomain;
    }

    if (o.json)
        out << json{{"command", command}, {"input", input}, {"result", outcome.result}}.dump(2) << '\n';
    else
        out << outcome.text.str();
    return outcome.code;
}

}  // namespace mpp

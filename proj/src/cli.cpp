#include "sheets/cli.hpp"

#include "sheets/epsilon.hpp"
#include "sheets/properties.hpp"
#include "sheets/sheet.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace sheets::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        out.push_back(item);
    }
    if (!text.empty() && text.back() == ',') {
        out.emplace_back();
    }
    return out;
}

Signature parse_signature(const std::string& text)
{
    const auto fields = split_commas(text);
    if (fields.size() != 2) {
        throw std::invalid_argument("signature must be 'Na,Nb', got '" + text + "'");
    }
    Signature sig;
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const long a = std::stol(fields[0], &used_a);
        const long b = std::stol(fields[1], &used_b);
        if (used_a != fields[0].size() || used_b != fields[1].size() || a < 0 || b < 0) {
            throw std::invalid_argument("");
        }
        sig = {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
    } catch (const std::exception&) {
        throw std::invalid_argument("signature must be two non-negative integers 'Na,Nb', got '" + text + "'");
    }
    return sig;
}

std::vector<Rational> parse_coordinates(const std::string& text)
{
    std::vector<Rational> out;
    for (const auto& field : split_commas(text)) {
        out.push_back(parse_rational(field));
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json matrix_json(const RatMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_fraction_string(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

json rationals_json(const std::vector<Rational>& values)
{
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(to_fraction_string(v));
    }
    return out;
}

json diagrams_json(const std::vector<ABDiagram>& ds)
{
    json out = json::array();
    for (const auto& d : ds) {
        out.push_back(d.to_string());
    }
    return out;
}

json dims_json(const SheetDimensions& d)
{
    return {{"g_orbit", d.g_orbit}, {"k_orbit", d.k_orbit}, {"slice_p", d.slice_p}, {"intersection", d.intersection}};
}

std::string dims_text(const SheetDimensions& d)
{
    std::ostringstream os;
    os << "dim G.e = " << d.g_orbit << "\n"
       << "dim K.e = " << d.k_orbit << "\n"
       << "dim X_p = " << d.slice_p << "\n"
       << "dim S_G cap p = " << d.intersection << "\n";
    return os.str();
}

std::string render(const Request& req, const json& j, const std::string& text)
{
    return req.output == OutputFormat::json ? j.dump(2) + "\n" : text;
}

// Required flags and cheap consistency checks, before any computation.
void validate(const Request& req)
{
    const auto& lambda = req.lambda;
    if (lambda.length() == 0) {
        throw std::invalid_argument("--partition is required and must be non-empty");
    }
    if (req.phi && req.phi->size() != lambda.length()) {
        throw DimensionError("phi has " + std::to_string(req.phi->size()) + " labels but " + lambda.to_string() +
                             " has delta = " + std::to_string(lambda.length()) + " parts");
    }
    if (req.phi && req.pair && *req.pair != PairType::AIII) {
        throw std::invalid_argument("--phi only applies to --pair AIII");
    }
    if (req.pair == PairType::AII) {
        check_pair(lambda, PairType::AII);
    }
    if (req.signature && req.signature->n_a + req.signature->n_b != lambda.size()) {
        throw std::invalid_argument("signature (" + std::to_string(req.signature->n_a) + "," +
                                    std::to_string(req.signature->n_b) + ") does not sum to N = " +
                                    std::to_string(lambda.size()));
    }
    if (req.signature && req.pair && *req.pair != PairType::AIII) {
        throw std::invalid_argument("--signature only applies to --pair AIII");
    }
    switch (req.subcommand) {
    case Subcommand::epsilon:
        if (!req.t) {
            throw std::invalid_argument("epsilon needs --t with lambda_1 = " + std::to_string(lambda.largest()) +
                                        " coordinates");
        }
        if (req.t->size() != lambda.largest()) {
            throw DimensionError("--t has " + std::to_string(req.t->size()) + " coordinates, expected lambda_1 = " +
                                 std::to_string(lambda.largest()));
        }
        if (req.pair == PairType::AIII && !req.phi) {
            throw std::invalid_argument("--pair AIII needs --phi to fix the splitting");
        }
        break;
    case Subcommand::orbits:
        if (!req.signature) {
            throw std::invalid_argument("orbits needs --signature Na,Nb");
        }
        break;
    case Subcommand::components:
        if (!req.signature && !req.phi && (!req.pair || *req.pair == PairType::AIII)) {
            throw std::invalid_argument("components needs --signature (AIII) or --pair AI|AII");
        }
        break;
    case Subcommand::dims:
        if (!req.pair) {
            throw std::invalid_argument("dims needs --pair AI|AII|AIII");
        }
        break;
    case Subcommand::verify:
        if (req.max_size == 0) {
            throw std::invalid_argument("--max-size must be at least 1");
        }
        break;
    case Subcommand::triple:
        break;
    }
}

Response run_triple(const Request& req)
{
    const auto triple = build_triple(req.lambda);
    std::ostringstream os;
    os << "partition " << req.lambda.to_string() << "\n"
       << "e =\n"
       << triple.e << "h =\n"
       << triple.h << "f =\n"
       << triple.f;
    const json j{{"partition", req.lambda.parts()},
                 {"e", matrix_json(triple.e)},
                 {"h", matrix_json(triple.h)},
                 {"f", matrix_json(triple.f)}};
    return {exit_ok, render(req, j, os.str()), ""};
}

Response run_epsilon(const Request& req)
{
    const auto triple = build_triple(req.lambda);
    const TorusElement t{*req.t};
    const auto start = triple.e + torus_matrix(req.lambda, t);
    json j{{"partition", req.lambda.parts()}, {"t", rationals_json(t.coords)}};
    std::ostringstream os;

    RatMatrix point;
    bool in_slice = false;
    std::optional<SliceMembership> membership;
    if (req.pair) {
        membership = verify_slice_membership(req.lambda, *req.pair, req.phi.value_or(LabelSequence{}), t);
        point = membership->point;
        in_slice = membership->in_slice;
    } else {
        point = epsilon_of_torus(triple, t);
        in_slice = slice_contains(triple, point);
    }
    const bool conjugate = same_rank_profile(start, point);

    os << "epsilon(e + t) =\n" << point << "in-slice: " << yes_no(in_slice) << "\n"
       << "conjugate to e + t: " << yes_no(conjugate) << "\n";
    j["matrix"] = matrix_json(point);
    j["in_slice"] = in_slice;
    j["conjugate"] = conjugate;
    if (membership) {
        os << "in-p: " << yes_no(membership->observed_in_p) << " (expected " << yes_no(membership->expected_in_p)
           << ")\n";
        j["pair"] = to_string(*req.pair);
        if (req.phi) {
            j["phi"] = to_string(*req.phi);
        }
        j["in_p"] = membership->observed_in_p;
        j["expected_in_p"] = membership->expected_in_p;
    }
    if (!in_slice || !conjugate || (membership && membership->observed_in_p != membership->expected_in_p)) {
        return {exit_internal, render(req, j, os.str()), "error: epsilon(e + t) failed its checks\n"};
    }
    return {exit_ok, render(req, j, os.str()), ""};
}

Response run_orbits(const Request& req)
{
    const auto& sig = *req.signature;
    const auto ds = enumerate_admissible(req.lambda, sig.n_a, sig.n_b);
    std::ostringstream os;
    for (const auto& d : ds) {
        os << d.to_string() << "\n";
    }
    const json j{{"partition", req.lambda.parts()}, {"signature", {sig.n_a, sig.n_b}}, {"diagrams", diagrams_json(ds)}};
    return {exit_ok, render(req, j, os.str()), ""};
}

Response run_components(const Request& req)
{
    std::optional<Signature> sig = req.signature;
    if (!sig && req.phi) {
        sig = signature_of_phi(req.lambda, *req.phi);
    }
    const SheetReport report = sig ? k_sheet_components(req.lambda, sig->n_a, sig->n_b)
                                   : sheet_report(req.lambda, *req.pair);

    std::size_t orbit_count = 0;
    json comps = json::array();
    std::ostringstream body;
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        const auto& c = report.components[i];
        orbit_count += c.orbits.size();
        body << "component " << i + 1;
        if (c.rigidified) {
            body << ": rigidified " << (c.rigidified->empty() ? "(empty)" : c.rigidified->to_string());
        }
        body << "\n";
        for (const auto& d : c.orbits) {
            body << "  " << d.to_string() << "\n";
        }
        comps.push_back({{"rigidified", c.rigidified ? json(c.rigidified->to_string()) : json(nullptr)},
                         {"orbits", diagrams_json(c.orbits)}});
    }

    std::ostringstream os;
    os << "partition " << report.lambda.to_string() << ", pair " << to_string(report.pair);
    if (report.signature) {
        os << ", signature (" << report.signature->n_a << "," << report.signature->n_b << ")";
    }
    os << "\n";
    if (report.signature) {
        os << report.components.size() << " components, " << orbit_count << " orbits, dim "
           << report.dims.intersection << "\n";
    } else {
        os << "1 component (irreducible), dim " << report.dims.intersection << "\n";
    }
    os << body.str() << dims_text(report.dims) << "dixmier: " << yes_no(report.dixmier) << "\n"
       << "rigid orbits: " << yes_no(report.rigid_orbits) << "\n";

    const json j{{"partition", report.lambda.parts()},
                 {"pair", to_string(report.pair)},
                 {"signature", report.signature ? json{report.signature->n_a, report.signature->n_b} : json(nullptr)},
                 {"components", comps},
                 {"dims", dims_json(report.dims)},
                 {"dixmier", report.dixmier},
                 {"rigid_orbits", report.rigid_orbits}};
    return {exit_ok, render(req, j, os.str()), ""};
}

Response run_dims(const Request& req)
{
    const auto dims = sheet_dimensions(req.lambda, *req.pair);
    const json j{{"partition", req.lambda.parts()}, {"pair", to_string(*req.pair)}, {"dims", dims_json(dims)}};
    return {exit_ok, render(req, j, dims_text(dims)), ""};
}

Response run_verify(const Request& req)
{
    const auto report = run_property_suite(req.max_size, req.seed);
    std::ostringstream os;
    json props = json::array();
    std::size_t passed = 0;
    std::size_t failed = 0;
    for (const auto& p : report.properties) {
        os << (p.failed == 0 ? "PASS " : "FAIL ") << p.name << ": " << p.passed << " passed, " << p.failed
           << " failed\n";
        props.push_back({{"name", p.name}, {"passed", p.passed}, {"failed", p.failed}});
        passed += p.passed;
        failed += p.failed;
    }
    os << "total: " << passed << " passed, " << failed << " failed (max size " << report.max_size << ", seed "
       << report.seed << ")\n";
    const json j{{"max_size", report.max_size},
                 {"seed", report.seed},
                 {"properties", props},
                 {"passed", passed},
                 {"failed", failed}};
    if (!report.all_passed()) {
        return {exit_internal, render(req, j, os.str()), "error: property suite reported failures\n"};
    }
    return {exit_ok, render(req, j, os.str()), ""};
}

}  // namespace

Request parse_request(const std::vector<std::string>& args)
{
    CLI::App app{"Sheets, Slodowy slices and ab-diagrams for symmetric pairs of type A", "sheets"};
    app.require_subcommand(1);

    struct {
        std::string partition;
        std::string pair;
        std::string phi;
        std::string signature;
        std::string t;
        std::string output = "text";
        std::uint64_t seed = 0;
        std::size_t max_size = 5;
    } raw;

    const std::vector<std::pair<Subcommand, std::string>> names{
        {Subcommand::triple, "triple"}, {Subcommand::epsilon, "epsilon"},       {Subcommand::orbits, "orbits"},
        {Subcommand::components, "components"}, {Subcommand::dims, "dims"}, {Subcommand::verify, "verify"}};
    const std::vector<std::string> descriptions{
        "print the standard sl2-triple (e, h, f)",
        "project e + t onto the Slodowy slice and check the result",
        "list admissible ab-diagrams for a signature",
        "group K-orbits into irreducible components of S_G cap p",
        "print orbit, slice and sheet dimensions",
        "run the property suite up to a size bound",
    };
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto* sub = app.add_subcommand(names[i].second, descriptions[i]);
        sub->add_option("--partition", raw.partition, "partition, e.g. 4,3,1")->required();
        sub->add_option("--pair", raw.pair, "AI, AII or AIII");
        sub->add_option("--phi", raw.phi, "labels over {a,b}, one per part (AIII)");
        sub->add_option("--signature", raw.signature, "Na,Nb (AIII)");
        sub->add_option("--t", raw.t, "torus coordinates x1,...,x_lambda1 (rationals p or p/q)");
        sub->add_option("--output", raw.output, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", raw.seed, "seed for randomized verification");
        sub->add_option("--max-size", raw.max_size, "largest N for verify");
        subs.push_back(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        if (app.exit(e, out, err) == 0) {
            throw HelpRequested(out.str());
        }
        std::string message = err.str();
        while (!message.empty() && message.back() == '\n') {
            message.pop_back();
        }
        throw std::invalid_argument(message);
    }

    Request req;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            req.subcommand = names[i].first;
        }
    }
    req.lambda = Partition::parse(raw.partition);
    if (!raw.pair.empty()) {
        req.pair = parse_pair_type(raw.pair);
    }
    if (!raw.phi.empty()) {
        req.phi = parse_labels(raw.phi);
    }
    if (!raw.signature.empty()) {
        req.signature = parse_signature(raw.signature);
    }
    if (!raw.t.empty()) {
        req.t = parse_coordinates(raw.t);
    }
    req.output = raw.output == "json" ? OutputFormat::json : OutputFormat::text;
    req.seed = raw.seed;
    req.max_size = raw.max_size;
    return req;
}

Response run(const Request& request)
{
    try {
        validate(request);
        switch (request.subcommand) {
        case Subcommand::triple:
            return run_triple(request);
        case Subcommand::epsilon:
            return run_epsilon(request);
        case Subcommand::orbits:
            return run_orbits(request);
        case Subcommand::components:
            return run_components(request);
        case Subcommand::dims:
            return run_dims(request);
        case Subcommand::verify:
            return run_verify(request);
        }
    } catch (const std::invalid_argument& e) {
        return {exit_validation, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {exit_internal, "", std::string("internal error: ") + e.what() + "\n"};
    }
    return {exit_internal, "", "internal error: unknown subcommand\n"};
}

Response run_command_line(const std::vector<std::string>& args)
{
    Request request;
    try {
        request = parse_request(args);
    } catch (const HelpRequested& help) {
        return {exit_ok, help.what(), ""};
    } catch (const std::invalid_argument& e) {
        return {exit_validation, "", std::string("error: ") + e.what() + "\n"};
    }
    return run(request);
}

}  // namespace sheets::cli

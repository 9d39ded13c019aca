#include "charcond/cli.hpp"

#include "charcond/expr.hpp"
#include "charcond/ffield.hpp"
#include "charcond/fields.hpp"
#include "charcond/report.hpp"
#include "charcond/vansum.hpp"
#include "charcond/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace charcond::cli {

namespace {

using chartab::CharacterId;
using chartab::Family;
using chartab::Group;
using cyclo::CyclotomicInteger;
using nlohmann::ordered_json;

struct GlobalOptions {
    std::string format = "text";
    std::string out_path;
    int jobs = std::max(1u, std::thread::hardware_concurrency());
    long long seed = 0;
};

/// Color is a terminal affordance only: never into --out files, captured
/// streams, pipes, or when NO_COLOR is set.
bool want_color(const GlobalOptions& g, const std::ostream& sink) {
    return g.format == "text" && g.out_path.empty() && &sink == &std::cout &&
           isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
}

std::string root_text(const cyclo::RootOfUnity& r) {
    cyclo::RootOfUnity reduced = r.reduced();
    return "z(" + std::to_string(reduced.modulus) + "," + std::to_string(reduced.exponent) + ")";
}

std::string joined_roots(const std::vector<cyclo::RootOfUnity>& roots) {
    std::string out;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (i) out += '+';
        out += root_text(roots[i]);
    }
    return out;
}

/// Residues of (Z/c)^x fixing the value, for c its conductor: the image of
/// the ambient stabilizer under restriction, which is onto the small
/// stabilizer because the value already lives in Q(zeta_c).
std::vector<long long> conductor_stabilizer(const CyclotomicInteger& v) {
    cyclo::FieldHandle handle = cyclo::field_of_element(v);
    if (handle.conductor == 1) return {1};
    std::set<long long> image;
    for (long long s : handle.stabilizer) image.insert(s % handle.conductor);
    return std::vector<long long>(image.begin(), image.end());
}

std::string join_ll(const std::vector<long long>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

void emit_json(std::ostream& os, const ordered_json& j) { os << j.dump(2) << "\n"; }

int cmd_conductor(const std::string& text, const GlobalOptions& g, std::ostream& os) {
    CyclotomicInteger value = expr::evaluate(expr::parse_expr(text));
    long long c = value.conductor();
    std::vector<long long> stabilizer = conductor_stabilizer(value);
    if (g.format == "json") {
        ordered_json j;
        j["expression"] = text;
        j["value"] = expr::to_expression(value);
        j["conductor"] = c;
        j["stabilizer_modulus"] = c;
        j["stabilizer"] = stabilizer;
        emit_json(os, j);
    } else if (g.format == "csv") {
        os << "expression,value,conductor,stabilizer\n";
        os << "\"" << text << "\",\"" << expr::to_expression(value) << "\"," << c << ","
           << "\"" << join_ll(stabilizer) << "\"\n";
    } else {
        os << c << "\n";
        os << "stabilizer mod " << c << ": " << join_ll(stabilizer) << "\n";
        os << "value: " << expr::to_expression(value) << "\n";
    }
    return 0;
}

int cmd_minrep(const std::string& text, int max_k, const GlobalOptions& g, std::ostream& os) {
    CyclotomicInteger value = expr::evaluate(expr::parse_expr(text));
    long long bound = vansum::min_rep_order_bound(value);
    std::optional<vansum::MinRepResult> res = vansum::min_rep(value, max_k);
    if (g.format == "json") {
        ordered_json j;
        j["expression"] = text;
        j["max_k"] = max_k;
        j["order_bound"] = bound;
        j["found"] = res.has_value();
        j["length"] = res ? ordered_json(res->length) : ordered_json(nullptr);
        if (res) {
            ordered_json terms = ordered_json::array();
            for (const auto& r : res->terms) terms.push_back(root_text(r));
            j["terms"] = terms;
        } else {
            j["terms"] = nullptr;
        }
        emit_json(os, j);
    } else if (g.format == "csv") {
        os << "expression,max_k,order_bound,found,length,terms\n";
        os << "\"" << text << "\"," << max_k << "," << bound << ","
           << (res ? "true" : "false") << ",";
        if (res)
            os << res->length << ",\"" << joined_roots(res->terms) << "\"";
        else
            os << ",";
        os << "\n";
    } else if (res) {
        os << "length " << res->length << "\n";
        os << "terms: " << (res->length ? joined_roots(res->terms) : std::string("0")) << "\n";
    } else {
        os << "no representation with at most " << max_k << " roots of order dividing "
           << bound << "\n";
    }
    return 0;
}

int cmd_vansum_table(int max_terms, const GlobalOptions& g, std::ostream& os) {
    std::vector<vansum::VanishingClass> rows;
    for (const auto& row : vansum::reference_table())
        if (row.term_count <= max_terms) rows.push_back(row);
    if (g.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json terms = ordered_json::array();
            for (const auto& r : row.canonical_terms) terms.push_back(root_text(r));
            j.push_back({{"label", row.label}, {"term_count", row.term_count}, {"terms", terms}});
        }
        emit_json(os, j);
    } else if (g.format == "csv") {
        os << "label,term_count,terms\n";
        for (const auto& row : rows)
            os << row.label << "," << row.term_count << ",\"" << joined_roots(row.canonical_terms)
               << "\"\n";
    } else {
        for (const auto& row : rows)
            os << row.label << "\t" << row.term_count << "\t" << joined_roots(row.canonical_terms)
               << "\n";
    }
    return 0;
}

struct Selection {
    long long q = 0;
    long long q_max = 0;  // 0: single q
    std::string family;
    std::vector<long long> params;
};

std::vector<long long> sweep_fields(Group group, const Selection& sel) {
    long long lo = sel.q, hi = sel.q_max ? sel.q_max : sel.q;
    if (group == Group::Suzuki) {
        // sel.q already expanded from the exponent; single field per run.
        return {lo};
    }
    auto valid = [](long long q) {
        auto pf = ffield::as_prime_power(q);
        return pf.has_value() && q >= 2;
    };
    if (!valid(lo))
        throw std::invalid_argument("q = " + std::to_string(lo) + " is not a prime power");
    if (hi < lo) throw std::invalid_argument("--q-max must be at least --q");
    std::vector<long long> out;
    for (long long q = lo; q <= hi; ++q)
        if (valid(q)) out.push_back(q);
    return out;
}

std::optional<Family> family_by_name(const std::string& name) {
    static const Family all[] = {Family::Linear,  Family::Steinberg, Family::X,
                                 Family::Y,       Family::Xp,        Family::Yp,
                                 Family::SplitXp, Family::SplitYp,   Family::SuX,
                                 Family::SuY,     Family::SuZ,       Family::SuUnipotent};
    for (Family f : all)
        if (chartab::family_name(f) == name) return f;
    return std::nullopt;
}

int emit_document(const report::ReportDocument& doc, const GlobalOptions& g, std::ostream& os,
                  bool color) {
    if (g.format == "json")
        emit_json(os, report::to_json(doc));
    else if (g.format == "csv")
        os << report::to_csv(doc.rows);
    else
        report::write_text(os, doc, color);
    return 0;
}

int cmd_check(Group group, const Selection& sel, int subset_cap, const std::string& command,
              const GlobalOptions& g, std::ostream& os, bool color) {
    std::vector<long long> fields = sweep_fields(group, sel);
    std::optional<Family> family;
    if (!sel.family.empty()) {
        family = family_by_name(sel.family);
        if (!family) throw std::invalid_argument("unknown family " + sel.family);
    }

    report::ReportDocument doc;
    doc.command = command;
    doc.q_min = fields.front();
    doc.q_max = fields.back();
    doc.seed = g.seed;
    for (long long q : fields) {
        if (!family && sel.params.empty()) {
            for (const auto& rep : verify::verify_group(group, q, subset_cap, g.jobs))
                doc.rows.push_back(report::to_row(rep));
            continue;
        }
        for (const CharacterId& c : chartab::enumerate(group, q)) {
            if (family && c.family != *family) continue;
            if (!sel.params.empty() && c.params != sel.params) continue;
            doc.rows.push_back(report::to_row(verify::verify_character(c, subset_cap)));
        }
    }
    if (doc.rows.empty()) throw std::invalid_argument("no characters match the selection");

    emit_document(doc, g, os, color);
    bool capped = std::any_of(doc.rows.begin(), doc.rows.end(),
                              [](const report::ReportRow& r) { return r.subset_size < 0; });
    return (doc.failed() == 0 && !capped) ? 0 : 1;
}

/**
 * Randomized property suites, reproducible from --seed: the two conductor
 * oracles must agree on random elements, and stabilizer indices of two- and
 * four-root sums must stay within the dissection bounds 2 and 6.
 */
int cmd_properties(int samples, long long max_modulus, const GlobalOptions& g, std::ostream& os) {
    std::mt19937_64 rng(static_cast<unsigned long long>(g.seed));
    std::uniform_int_distribution<long long> modulus_dist(3, max_modulus);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    std::uniform_int_distribution<int> term_count_dist(1, 4);

    struct Suite {
        std::string name;
        int violations = 0;
        std::optional<std::string> example;
    };
    Suite oracle{"conductor dual oracle agreement"};
    Suite two{"two-root stabilizer index <= 2"};
    Suite four{"four-root stabilizer index <= 6"};

    cyclo::MembershipCache cache;
    auto random_root = [&](long long n) {
        std::uniform_int_distribution<long long> e(0, n - 1);
        return CyclotomicInteger::root(n, e(rng));
    };
    for (int i = 0; i < samples; ++i) {
        long long n = modulus_dist(rng);
        std::vector<CyclotomicInteger::Term> terms;
        int k = term_count_dist(rng);
        std::uniform_int_distribution<long long> e(0, n - 1);
        for (int t = 0; t < k; ++t) terms.emplace_back(e(rng), coeff_dist(rng));
        CyclotomicInteger v = CyclotomicInteger::make(n, terms);
        if (v.conductor() != cyclo::conductor_by_membership(v, cache) && ++oracle.violations == 1)
            oracle.example = expr::to_expression(v);

        auto [a, b] = cyclo::lift_to_common(random_root(modulus_dist(rng)),
                                            random_root(modulus_dist(rng)));
        CyclotomicInteger pair = a + b;
        if (cyclo::index_in_conductor_field(pair) > 2 && ++two.violations == 1)
            two.example = expr::to_expression(pair);

        CyclotomicInteger quad = pair;
        for (int t = 0; t < 2; ++t) {
            auto [x, y] = cyclo::lift_to_common(quad, random_root(modulus_dist(rng)));
            quad = x + y;
        }
        if (cyclo::index_in_conductor_field(quad) > 6 && ++four.violations == 1)
            four.example = expr::to_expression(quad);
    }

    const Suite* suites[] = {&oracle, &two, &four};
    bool pass = true;
    for (const Suite* s : suites) pass = pass && s->violations == 0;
    if (g.format == "json") {
        ordered_json j;
        j["tool"] = report::kToolName;
        j["version"] = report::kToolVersion;
        j["command"] = "properties";
        j["seed"] = g.seed;
        j["samples"] = samples;
        j["max_modulus"] = max_modulus;
        j["suites"] = ordered_json::array();
        for (const Suite* s : suites)
            j["suites"].push_back({{"name", s->name},
                                   {"violations", s->violations},
                                   {"example", s->example ? ordered_json(*s->example)
                                                          : ordered_json(nullptr)}});
        j["pass"] = pass;
        emit_json(os, j);
    } else if (g.format == "csv") {
        os << "suite,samples,violations,example\n";
        for (const Suite* s : suites)
            os << "\"" << s->name << "\"," << samples << "," << s->violations << ",\""
               << s->example.value_or("") << "\"\n";
    } else {
        os << "properties  seed=" << g.seed << "  samples=" << samples
           << "  max-modulus=" << max_modulus << "\n";
        for (const Suite* s : suites) {
            os << "  " << s->name << ": " << (samples - s->violations) << "/" << samples;
            if (s->example) os << "  (first violation: " << *s->example << ")";
            os << "\n";
        }
        os << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

long long suzuki_field(long long exponent) {
    if (exponent < 0 || exponent > 8)
        throw std::invalid_argument("--exponent must be between 0 and 8");
    long long q = 2;
    for (long long i = 0; i < exponent; ++i) q *= 4;
    return q;
}

void add_selection_options(CLI::App* sub, Selection& sel, bool suzuki) {
    if (suzuki) {
        sub->add_option("--exponent", sel.q, "torus exponent n, checking q = 2^(2n+1)")
            ->required();
    } else {
        sub->add_option("--q", sel.q, "field size (a prime power)")->required();
        sub->add_option("--q-max", sel.q_max, "sweep prime powers up to this bound");
    }
    sub->add_option("--family", sel.family, "restrict to one character family");
    sub->add_option("--params", sel.params, "restrict to one parameter tuple");
    sub->fallthrough();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    GlobalOptions g;
    CLI::App app{"exact cyclotomic arithmetic and character conductor checks", "charcond"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(report::kToolName) + " " + report::kToolVersion);
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write the report to this file instead of stdout");
    app.add_option("--jobs", g.jobs, "max concurrent character verifications")
        ->check(CLI::Range(1, 4096))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for the randomized property suites")
        ->capture_default_str();

    std::string expr_text;
    CLI::App* conductor = app.add_subcommand(
        "conductor", "conductor and field stabilizer of a cyclotomic expression");
    conductor->add_option("expr", expr_text, "expression, e.g. \"z(5,1)+z(5,4)\"")->required();
    conductor->fallthrough();

    int max_k = 6;
    CLI::App* minrep =
        app.add_subcommand("minrep", "shortest root-of-unity representation of an expression");
    minrep->add_option("expr", expr_text, "expression to represent")->required();
    minrep->add_option("--max-k", max_k, "largest representation length tried")
        ->check(CLI::Range(0, 16))
        ->capture_default_str();
    minrep->fallthrough();

    int max_terms = 7;
    CLI::App* table =
        app.add_subcommand("vansum-table", "reference table of minimal vanishing sums");
    table->add_option("--max-terms", max_terms, "print classes with at most this many terms")
        ->check(CLI::Range(2, 7))
        ->capture_default_str();
    table->fallthrough();

    Selection check_sel, probe_sel;
    int probe_cap = 2;
    CLI::App* check = app.add_subcommand("check", "verify character conductor properties");
    check->require_subcommand(1);
    check->fallthrough();
    CLI::App* check_gl2 = check->add_subcommand("gl2", "general linear characters");
    CLI::App* check_sl2 = check->add_subcommand("sl2", "special linear characters");
    CLI::App* check_suzuki = check->add_subcommand("suzuki", "Suzuki-group characters");
    add_selection_options(check_gl2, check_sel, false);
    add_selection_options(check_sl2, check_sel, false);
    add_selection_options(check_suzuki, check_sel, true);

    CLI::App* probe = app.add_subcommand(
        "subset-probe", "smallest value subsets reaching the conductor, against a cap");
    probe->require_subcommand(1);
    probe->fallthrough();
    CLI::App* probe_gl2 = probe->add_subcommand("gl2", "general linear characters");
    CLI::App* probe_sl2 = probe->add_subcommand("sl2", "special linear characters");
    CLI::App* probe_suzuki = probe->add_subcommand("suzuki", "Suzuki-group characters");
    add_selection_options(probe_gl2, probe_sel, false);
    add_selection_options(probe_sl2, probe_sel, false);
    add_selection_options(probe_suzuki, probe_sel, true);
    for (CLI::App* sub : {probe_gl2, probe_sl2, probe_suzuki})
        sub->add_option("--cap", probe_cap, "largest subset size searched")
            ->check(CLI::Range(1, 8))
            ->capture_default_str();

    int samples = 200;
    long long max_modulus = 60;
    CLI::App* properties =
        app.add_subcommand("properties", "randomized dual-oracle and stabilizer-bound suites");
    properties->add_option("--samples", samples, "samples per suite")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    properties->add_option("--max-modulus", max_modulus, "largest root order drawn")
        ->check(CLI::Range(3, 512))
        ->capture_default_str();
    properties->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!g.out_path.empty()) {
        file.open(g.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << g.out_path << " for writing\n";
            return 2;
        }
        sink = &file;
    }
    bool color = want_color(g, out);

    try {
        if (conductor->parsed()) return cmd_conductor(expr_text, g, *sink);
        if (minrep->parsed()) return cmd_minrep(expr_text, max_k, g, *sink);
        if (table->parsed()) return cmd_vansum_table(max_terms, g, *sink);
        if (check->parsed()) {
            Group group = check_gl2->parsed()   ? Group::GL2
                          : check_sl2->parsed() ? Group::SL2
                                                : Group::Suzuki;
            if (check_suzuki->parsed()) check_sel.q = suzuki_field(check_sel.q);
            std::string name = "check " + std::string(check_gl2->parsed()   ? "gl2"
                                                      : check_sl2->parsed() ? "sl2"
                                                                            : "suzuki");
            return cmd_check(group, check_sel, 2, name, g, *sink, color);
        }
        if (probe->parsed()) {
            Group group = probe_gl2->parsed()   ? Group::GL2
                          : probe_sl2->parsed() ? Group::SL2
                                                : Group::Suzuki;
            if (probe_suzuki->parsed()) probe_sel.q = suzuki_field(probe_sel.q);
            std::string name = "subset-probe " + std::string(probe_gl2->parsed()   ? "gl2"
                                                             : probe_sl2->parsed() ? "sl2"
                                                                                   : "suzuki");
            return cmd_check(group, probe_sel, probe_cap, name, g, *sink, color);
        }
        return cmd_properties(samples, max_modulus, g, *sink);
    } catch (const expr::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace charcond::cli

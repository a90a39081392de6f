#include "cdg/cli.hpp"

#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdg/chartab.hpp"
#include "cdg/codegree.hpp"
#include "cdg/construct.hpp"
#include "cdg/families.hpp"
#include "cdg/numtheory.hpp"
#include "cdg/recognizer.hpp"
#include "cdg/verifier.hpp"

namespace cdg {

namespace {

using nlohmann::json;

/// Integers that fit 64 bits are emitted as JSON numbers, larger ones as decimal
/// strings (recognize inputs are unbounded).
json mpz_to_json(const mpz_class& v) {
    if (v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 63)
        return json(static_cast<uint64_t>(mpz_get_ui(v.get_mpz_t())));
    return json(v.get_str());
}

json set_to_json(const std::vector<mpz_class>& vals) {
    json arr = json::array();
    for (const auto& v : vals) arr.push_back(mpz_to_json(v));
    return arr;
}

json codegree_json(const CodegreeSet& s, const mpz_class& order) {
    json j;
    j["group"] = s.label;
    j["order"] = mpz_to_json(order);
    j["codegrees"] = set_to_json(s.values);
    j["source"] = to_string(s.source);
    return j;
}

json table_json(const CharacterTable& t) {
    json classes = json::array();
    for (const auto& c : t.classes.classes)
        classes.push_back({{"size", c.size}, {"element_order", c.element_order}});
    json rows = json::array();
    for (const auto& r : t.rows) {
        json values = json::array();
        for (const auto& v : r.values) {
            json coeffs = json::array();
            for (const auto& c : v.dense_coefficients()) coeffs.push_back(mpz_to_json(c));
            values.push_back(std::move(coeffs));
        }
        rows.push_back(
            {{"degree", r.degree}, {"values", std::move(values)}, {"kernel_order", r.kernel_order}});
    }
    return json{{"conductor", t.conductor}, {"classes", std::move(classes)}, {"rows", std::move(rows)}};
}

std::vector<mpz_class> parse_set_text(const std::string& text) {
    std::vector<mpz_class> vals;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        vals.emplace_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) cur += c;
        else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
        else throw std::invalid_argument(std::string("bad character in set: ") + c);
    }
    flush();
    if (vals.empty()) throw std::invalid_argument("empty set");
    return vals;
}

std::vector<mpz_class> parse_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file: " + path);
    std::vector<mpz_class> vals;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r\n");
        std::string tok = line.substr(first, last - first + 1);
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad integer in set file: " + tok);
        vals.emplace_back(tok);
    }
    if (vals.empty()) throw std::invalid_argument("set file has no integers: " + path);
    return vals;
}

FamilyParams params_from_flags(FamilyTag tag, uint64_t qflag, unsigned fflag) {
    if (tag == FamilyTag::SUZUKI && fflag > 0) return FamilyParams::for_suzuki_f(fflag);
    return FamilyParams::for_q(mpz_class(static_cast<unsigned long>(qflag)));
}

void print_reports_text(const std::vector<VerificationReport>& reports, std::ostream& os) {
    size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        os << "[" << to_string(r.outcome) << "] " << r.check << " " << r.params;
        if (!r.witness.empty()) os << " :: " << r.witness;
        if (!r.reason.empty()) os << " (" << r.reason << ")";
        os << " [" << static_cast<long>(r.millis) << " ms]\n";
        if (r.outcome == Outcome::PASS) ++pass;
        else if (r.outcome == Outcome::FAIL) ++fail;
        else ++skip;
    }
    os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"character codegree toolkit for finite simple groups"};
    app.require_subcommand(1);
    app.fallthrough();  // lets the global --format appear after a subcommand

    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* compute = app.add_subcommand("compute", "brute-force codegree set of a group");
    std::string group_spec;
    uint64_t ceiling = kDefaultCeiling;
    bool dump_table = false;
    bool verbose = false;
    compute->add_option("--group", group_spec,
                        "group spec: name:<tag>, psl:2:<q>, psl:3:<q>, psu:3:<q>, or a "
                        "generators file path")
        ->required();
    compute->add_option("--ceiling", ceiling, "brute-force group-order ceiling");
    compute->add_flag("--dump-table", dump_table, "include the full character table");
    compute->add_flag("--verbose", verbose, "include per-codegree character multiplicities");

    auto* formula = app.add_subcommand("formula", "table-row codegree set of a family");
    std::string family_name;
    uint64_t qflag = 0;
    unsigned fflag = 0;
    formula->add_option("--family", family_name, "family tag, e.g. PSL3 or M11")->required();
    formula->add_option("--q", qflag, "prime-power parameter");
    formula->add_option("--f", fflag, "Suzuki exponent parameter (q = 2^(2f+1))");

    auto* recog = app.add_subcommand("recognize", "identify a family from a bare codegree set");
    std::string set_text, set_file;
    auto* set_opt = recog->add_option("--set", set_text, "comma-separated positive integers");
    auto* file_opt = recog->add_option("--set-file", set_file, "file with one integer per line");
    set_opt->excludes(file_opt);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    SuiteOptions sopts;
    uint64_t bound_flag = 10000, kbound_flag = 100000000;
    verify->add_option("--suite", suite,
                       "table1 | distinctness | diophantine | indices | new-codegree | all")
        ->check(CLI::IsMember({"table1", "distinctness", "diophantine", "indices",
                               "new-codegree", "all"}));
    verify->add_option("--q-max", sopts.q_max, "instance range for table1/new-codegree");
    verify->add_option("--distinct-q-max", sopts.distinct_q_max, "range for distinctness");
    verify->add_option("--index-q-max", sopts.index_q_hi, "upper q for the index suite");
    verify->add_option("--bound", bound_flag, "q bound for diophantine scans");
    verify->add_option("--k-bound", kbound_flag, "bound for 2-power variables");
    verify->add_option("--ceiling", sopts.ceiling, "brute-force ceiling");
    verify->add_option("--threads", sopts.threads, "parallelism for independent reports");

    auto* info = app.add_subcommand("info", "orders, degree counts, maximal subgroup tables");
    std::string info_family;
    uint64_t info_q = 0;
    unsigned info_f = 0;
    info->add_option("--family", info_family, "family tag")->required();
    info->add_option("--q", info_q, "prime-power parameter");
    info->add_option("--f", info_f, "Suzuki exponent parameter");

    std::vector<std::string> argv_copy = args;
    std::vector<char*> argv;
    std::string prog = "codegree";
    argv.push_back(prog.data());
    for (auto& a : argv_copy) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            FiniteGroup g = parse_group_spec(group_spec);
            CharacterTable t = character_table(g, ceiling);
            CodegreeSet s = codegree_set(t, g.name.empty() ? group_spec : g.name);
            mpz_class order(static_cast<unsigned long>(t.group_order()));
            std::map<std::string, unsigned> multiplicity;
            if (verbose)
                for (size_t r = 0; r < t.rows.size(); ++r)
                    ++multiplicity[codegree_of(t, r).get_str()];
            if (format == "json") {
                json j = codegree_json(s, order);
                if (dump_table) j["table"] = table_json(t);
                if (verbose) j["codegree_multiplicities"] = multiplicity;
                out << j.dump() << "\n";
            } else {
                out << s.label << ": order " << order.get_str() << "\n";
                for (const auto& v : s.values) {
                    out << "  " << v.get_str() << " = " << nt::factored_string(v);
                    if (verbose) out << "  (x" << multiplicity[v.get_str()] << ")";
                    out << "\n";
                }
                if (dump_table) {
                    out << "degrees:";
                    for (const auto& r : t.rows) out << " " << r.degree;
                    out << "\n";
                }
            }
            return 0;
        }
        if (formula->parsed()) {
            FamilyTag tag = family_tag_from_string(family_name);
            std::optional<FamilyParams> params;
            if (is_parametric(tag)) params = params_from_flags(tag, qflag, fflag);
            const FamilyParams* p = params ? &*params : nullptr;
            auto entries = table1_entries(tag, p);
            CodegreeSet s = table1_set(tag, p);
            mpz_class order = expected_order(tag, p);
            if (format == "json") {
                json j = codegree_json(s, order);
                json fac = json::array();
                for (const auto& e : entries) fac.push_back(e.factored);
                j["factored"] = std::move(fac);
                out << j.dump() << "\n";
            } else {
                out << s.label << ": order " << order.get_str() << "\n";
                for (const auto& e : entries)
                    out << "  " << e.value.get_str() << " = " << e.factored << "\n";
            }
            return 0;
        }
        if (recog->parsed()) {
            if (set_text.empty() && set_file.empty())
                throw std::invalid_argument("recognize requires --set or --set-file");
            std::vector<mpz_class> vals =
                set_text.empty() ? parse_set_file(set_file) : parse_set_text(set_text);
            Identification id = recognize(vals);
            if (format == "json") {
                json matches = json::array();
                for (const auto& m : id.matches) {
                    json jm{{"family", to_string(m.tag)}};
                    if (is_parametric(m.tag)) jm["q"] = mpz_to_json(m.params.q);
                    matches.push_back(std::move(jm));
                }
                json diag{{"size", id.diagnostics.set_size},
                          {"odd_nontrivial", set_to_json(id.diagnostics.odd_nontrivial)},
                          {"two_parts", set_to_json(id.diagnostics.two_parts)},
                          {"divisor_counts", id.diagnostics.divisor_counts}};
                if (!id.diagnostics.note.empty()) diag["note"] = id.diagnostics.note;
                out << json{{"matches", std::move(matches)},
                            {"diagnostics", std::move(diag)}}.dump()
                    << "\n";
            } else {
                if (id.matches.empty()) out << "no matches\n";
                for (const auto& m : id.matches) {
                    out << "match: " << to_string(m.tag);
                    if (is_parametric(m.tag)) out << " q=" << m.params.q.get_str();
                    out << "\n";
                }
            }
            return 0;
        }
        if (verify->parsed()) {
            sopts.bound = mpz_class(static_cast<unsigned long>(bound_flag));
            sopts.k_bound = mpz_class(static_cast<unsigned long>(kbound_flag));
            auto reports = run_verify_suite(suite, sopts);
            bool any_fail = false;
            for (const auto& r : reports) any_fail |= r.outcome == Outcome::FAIL;
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : reports) {
                    json jr{{"check", r.check},
                            {"params", r.params},
                            {"outcome", to_string(r.outcome)},
                            {"millis", r.millis}};
                    if (!r.witness.empty()) jr["witness"] = r.witness;
                    if (!r.reason.empty()) jr["reason"] = r.reason;
                    arr.push_back(std::move(jr));
                }
                out << arr.dump() << "\n";
                print_reports_text(reports, err);
            } else {
                print_reports_text(reports, out);
            }
            return any_fail ? 1 : 0;
        }
        if (info->parsed()) {
            FamilyTag tag = family_tag_from_string(info_family);
            std::optional<FamilyParams> params;
            if (is_parametric(tag)) params = params_from_flags(tag, info_q, info_f);
            const FamilyParams* p = params ? &*params : nullptr;
            mpz_class order = expected_order(tag, p);
            json j{{"family", to_string(tag)},
                   {"expected_order", mpz_to_json(order)},
                   {"cd_count", cd_count(tag, p)}};
            if (params) j["q"] = mpz_to_json(params->q);
            if (tag == FamilyTag::PSL3 || tag == FamilyTag::PSU3) {
                MatrixKind kind = tag == FamilyTag::PSL3 ? MatrixKind::SL3 : MatrixKind::SU3;
                mpz_class full =
                    kind == MatrixKind::SL3 ? sl3_full_order(params->q) : su3_full_order(params->q);
                json rows = json::array();
                for (const auto& r : maximal_subgroup_orders(kind, params->q)) {
                    json jr{{"structure", r.structure},
                            {"conditions", r.conditions},
                            {"applicable", r.applicable},
                            {"order", mpz_to_json(r.order)},
                            {"order_exact", r.order_exact},
                            {"order_origin", r.order_origin}};
                    if (r.applicable && r.order != 0 && full % r.order == 0)
                        jr["index"] = mpz_to_json(full / r.order);
                    rows.push_back(std::move(jr));
                }
                j["max_subgroups"] = std::move(rows);
                j["matrix_group_order"] = mpz_to_json(full);
            }
            out << (format == "json" ? j.dump() : j.dump(2)) << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cdg

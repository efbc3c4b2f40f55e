// qhk: finite quandle homology toolkit.
//
// Subcommands: check | h2 | family | verify | census. JSON in, table or JSON
// out. Exit codes: 0 success / all-pass, 1 mathematical failure, 2 input
// error, 3 resource gate.

#include "qhk/qhk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace qhk;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBound = 3;

long env_max_order(long fallback) {
    if (const char* s = std::getenv("QHK_MAX_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

void emit(const json& j, const std::string& out_path, bool as_json, const std::string& table) {
    std::string text = as_json ? j.dump(2) + "\n" : table;
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw input_error("cannot write " + out_path);
        f << text;
    }
}

std::vector<Int> parse_factors(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(Int(std::stoll(item)));
    }
    if (out.empty()) throw input_error("factors: expected a comma-separated list, e.g. 3,3");
    return out;
}

IntMatrix parse_matrix(const std::string& s) {
    std::vector<std::vector<long long>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<long long> r;
        std::stringstream rs(row);
        std::string item;
        while (std::getline(rs, item, ',')) r.push_back(std::stoll(item));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw input_error("matrix: expected rows like \"0,1;1,1\"");
    IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows.front().size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size()) throw input_error("matrix: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
    }
    return m;
}

struct QuandleSummary {
    long order = 0, orbit_count = 0, type = 0, inn = 0, stab = 0;
    bool connected = false, quasigroup = false;
};

QuandleSummary summarize(const FiniteQuandle& q, long group_bound) {
    QuandleSummary s;
    s.order = q.order();
    s.orbit_count = static_cast<long>(orbits(q).size());
    s.connected = s.orbit_count == 1;
    s.quasigroup = is_quasigroup(q);
    s.type = type_of(q);
    PermGroup inn = inn_group(q, group_bound);
    s.inn = inn.order();
    s.stab = stabilizer(inn, 0).order();
    return s;
}

json summary_json(const QuandleSummary& s) {
    json j;
    j["schema"] = 1;
    j["order"] = s.order;
    j["orbits"] = s.orbit_count;
    j["connected"] = s.connected;
    j["quasigroup"] = s.quasigroup;
    j["type"] = s.type;
    j["inn_order"] = s.inn;
    j["stab_order"] = s.stab;
    return j;
}

// ----- check ---------------------------------------------------------------

int cmd_check(const std::string& file, bool as_json, const std::string& out, long group_bound) {
    json raw = load_json_file(file);
    long n = 0;
    std::vector<std::vector<long>> table;
    try {
        n = raw.at("order").get<long>();
        table = raw.at("table").get<std::vector<std::vector<long>>>();
    } catch (const json::exception& e) {
        throw input_error(file + ": " + e.what());
    }
    if (static_cast<long>(table.size()) != n) throw input_error(file + ": order does not match table");

    if (auto v = check_quandle_axioms(table)) {
        json j;
        j["schema"] = 1;
        j["valid"] = false;
        j["axiom"] = v->axiom;
        j["witness"] = v->witness;
        j["message"] = v->message;
        std::ostringstream t;
        t << "INVALID: axiom " << v->axiom << " fails (" << v->message << ")\n";
        emit(j, out, as_json, t.str());
        return kExitMathFail;
    }

    FiniteQuandle q{std::move(table)};
    QuandleSummary s = summarize(q, group_bound);
    json j = summary_json(s);
    j["valid"] = true;
    std::ostringstream t;
    t << "valid quandle of order " << s.order << "\n"
      << "orbits:     " << s.orbit_count << (s.connected ? " (connected)" : "") << "\n"
      << "quasigroup: " << (s.quasigroup ? "yes" : "no") << "\n"
      << "type:       " << s.type << "\n"
      << "|Inn|:      " << s.inn << "\n"
      << "|Stab(x0)|: " << s.stab << "\n";
    emit(j, out, as_json, t.str());
    return kExitOk;
}

// ----- h2 ------------------------------------------------------------------

int cmd_h2(const std::string& file, bool rack, std::optional<long> ell, long max_order, bool as_json,
           const std::string& out) {
    FiniteQuandle q = quandle_from_json(load_json_file(file));
    FinGenAb h = rack ? h2_rack(q, max_order) : h2_quandle(q, max_order);
    json j;
    j["schema"] = 1;
    j["order"] = q.order();
    j["variant"] = rack ? "rack" : "quandle";
    j["h2"] = h.to_string();
    j["free_rank"] = h.free_rank;
    json tors = json::array();
    for (const Int& d : h.invariant_factors) tors.push_back(static_cast<long long>(d));
    j["invariant_factors"] = tors;
    std::ostringstream t;
    t << (rack ? "H2^R = " : "H2^Q = ") << h.to_string() << "\n";
    if (ell) {
        long dim = h2_quandle_cohomology_dim(q, *ell, max_order);
        j["ell"] = *ell;
        j["cohomology_dim"] = dim;
        t << "dim_F" << *ell << " H^2_Q = " << dim << "\n";
    }
    emit(j, out, as_json, t.str());
    return kExitOk;
}

// ----- family --------------------------------------------------------------

struct FamilyRequest {
    std::string family;
    long n = 0;
    long p = 0;
    std::string factors, tmat;
};

struct BuiltFamily {
    FiniteQuandle quandle;
    std::optional<AlexanderSpec> spec;
    std::string label;
};

BuiltFamily build_family(const FamilyRequest& r) {
    if (r.family == "dihedral") {
        if (r.n < 1) throw input_error("dihedral: need -n >= 1");
        CheckedAlexander c = takasaki_spec({Int(r.n)});
        return {alexander_quandle(c), c.spec(), "R" + std::to_string(r.n)};
    }
    if (r.family == "takasaki") {
        if (r.factors.empty()) throw input_error("takasaki: need --factors, e.g. 3,3");
        CheckedAlexander c = takasaki_spec(parse_factors(r.factors));
        return {alexander_quandle(c), c.spec(), "takasaki(" + r.factors + ")"};
    }
    if (r.family == "phi") {
        if (r.p < 2 || r.n < 2) throw input_error("phi: need -p (prime) and -n with gcd(n,p) = 1");
        CheckedAlexander c = phi_family(r.p, r.n);
        return {alexander_quandle(c), c.spec(),
                "phi(p=" + std::to_string(r.p) + ",n=" + std::to_string(r.n) + ")"};
    }
    if (r.family == "alexander") {
        if (r.factors.empty() || r.tmat.empty())
            throw input_error("alexander: need --factors and --t (rows as \"0,1;1,1\")");
        CheckedAlexander c =
            CheckedAlexander::validate({parse_factors(r.factors), parse_matrix(r.tmat)});
        return {alexander_quandle(c), c.spec(), "alexander(" + r.factors + ")"};
    }
    if (r.family == "conj-transpositions") {
        if (r.n < 2) throw input_error("conj-transpositions: need -n >= 2");
        return {transposition_quandle(r.n), std::nullopt, "S" + std::to_string(r.n) + " transpositions"};
    }
    throw input_error("unknown family " + r.family +
                      " (expected dihedral|takasaki|phi|alexander|conj-transpositions)");
}

int cmd_family(const FamilyRequest& r, const std::string& out_prefix) {
    if (out_prefix.empty()) throw input_error("family: need -o <output prefix>");
    BuiltFamily b = build_family(r);
    save_json_file(out_prefix + ".quandle.json", quandle_to_json(b.quandle));
    std::cout << b.label << ": wrote " << out_prefix << ".quandle.json (order " << b.quandle.order()
              << ")\n";
    if (b.spec) {
        save_json_file(out_prefix + ".spec.json", spec_to_json(*b.spec));
        std::cout << "wrote " << out_prefix << ".spec.json\n";
    }
    return kExitOk;
}

// ----- verify ----------------------------------------------------------------

int cmd_verify(const std::string& theorem, const std::optional<FamilyRequest>& fam,
               const std::string& spec_file, std::optional<long> ell, long max_order,
               unsigned seed, long p_param, long n_param, bool as_json, const std::string& out) {
    auto need_spec = [&]() -> CheckedAlexander {
        if (!spec_file.empty())
            return CheckedAlexander::validate(spec_from_json(load_json_file(spec_file)));
        if (fam) {
            BuiltFamily b = build_family(*fam);
            if (!b.spec) throw input_error("verify: family " + fam->family + " has no Alexander spec");
            return CheckedAlexander::validate(*b.spec);
        }
        throw input_error("verify: need --spec <file> or a --family");
    };

    Report r;
    if (theorem == "thm4") {
        r = verify_thm4(need_spec(), max_order);
    } else if (theorem == "thm5") {
        if (!ell) throw input_error("thm5: need --l <prime>");
        r = verify_thm5(need_spec(), *ell, max_order);
    } else if (theorem == "thm6") {
        if (!ell) throw input_error("thm6: need --l <prime>");
        r = verify_thm6(need_spec(), *ell, max_order);
    } else if (theorem == "cor8") {
        r = verify_cor8(need_spec());
    } else if (theorem == "prop9") {
        if (p_param < 2) throw input_error("prop9: need -p <prime>");
        r = verify_prop9(p_param, max_order);
    } else if (theorem == "prop5") {
        if (p_param < 2 || n_param < 2) throw input_error("prop5: need -p and -n");
        r = verify_prop5(p_param, n_param, max_order);
    } else if (theorem == "brackets") {
        r = bracket_identities(need_spec(), seed);
    } else {
        throw input_error("unknown theorem " + theorem +
                          " (expected thm4|thm5|thm6|cor8|prop9|prop5|brackets)");
    }

    json j;
    j["schema"] = 1;
    j["title"] = r.title;
    j["overall"] = status_name(r.overall());
    json items = json::array();
    std::ostringstream t;
    t << r.title << "\n";
    for (const CheckItem& c : r.items) {
        json ji;
        ji["name"] = c.name;
        ji["status"] = status_name(c.status);
        if (!c.detail.empty()) ji["detail"] = c.detail;
        items.push_back(std::move(ji));
        t << "  [" << status_name(c.status) << "] " << c.name;
        if (!c.detail.empty()) t << "  -- " << c.detail;
        t << "\n";
    }
    j["checks"] = std::move(items);
    if (!r.note.empty()) {
        j["note"] = r.note;
        t << "  note: " << r.note << "\n";
    }
    t << "overall: " << status_name(r.overall()) << "\n";
    emit(j, out, as_json, t.str());
    return r.all_pass() ? kExitOk : kExitMathFail;
}

// ----- census ----------------------------------------------------------------

struct CensusRow {
    std::string family, params;
    long order = 0;
    std::string connected, type, inn, h2q, thm4;
    std::string error;
};

CensusRow census_row(const std::string& family, const std::string& params, const FiniteQuandle& q,
                     const std::optional<CheckedAlexander>& spec, long max_order, long group_bound) {
    CensusRow row;
    row.family = family;
    row.params = params;
    row.order = q.order();
    row.connected = is_connected(q) ? "yes" : "no";
    row.type = std::to_string(type_of(q));
    try {
        row.inn = std::to_string(inn_group(q, group_bound).order());
    } catch (const bound_error&) {
        row.inn = "gate";
    }
    try {
        row.h2q = h2_quandle(q, max_order).to_string();
    } catch (const bound_error&) {
        row.h2q = "gate(order>" + std::to_string(max_order) + ")";
    }
    row.thm4 = "-";
    if (spec && spec->connected()) {
        try {
            Report r = verify_thm4(*spec, max_order);
            row.thm4 = status_name(r.overall());
        } catch (const bound_error&) {
            row.thm4 = "gate";
        }
    }
    return row;
}

int cmd_census(long max_order_census, const std::vector<std::string>& families, long max_order,
               long group_bound, const std::string& format, const std::string& out) {
    auto wanted = [&](const std::string& f) {
        return families.empty() || std::find(families.begin(), families.end(), f) != families.end();
    };
    std::vector<CensusRow> rows;

    if (wanted("trivial"))
        for (long n = 1; n <= std::min<long>(max_order_census, 6); ++n)
            rows.push_back(census_row("trivial", "n=" + std::to_string(n), trivial_quandle(n),
                                      std::nullopt, max_order, group_bound));
    if (wanted("dihedral"))
        for (long n = 2; n <= max_order_census; ++n)
            rows.push_back(census_row("dihedral", "n=" + std::to_string(n),
                                      alexander_quandle(takasaki_spec({Int(n)})),
                                      takasaki_spec({Int(n)}), max_order, group_bound));
    if (wanted("takasaki")) {
        // non-cyclic invariant-factor lists d1 | d2 | ... with product <= bound
        std::vector<std::vector<Int>> shapes;
        for (long d1 = 2; d1 * d1 <= max_order_census; ++d1)
            for (long d2 = d1; d1 * d2 <= max_order_census; d2 += d1) {
                shapes.push_back({Int(d1), Int(d2)});
                for (long d3 = d2; d1 * d2 * d3 <= max_order_census; d3 += d2)
                    shapes.push_back({Int(d1), Int(d2), Int(d3)});
            }
        for (const auto& f : shapes) {
            std::ostringstream ps;
            for (size_t i = 0; i < f.size(); ++i) ps << (i ? "," : "") << f[i];
            CheckedAlexander c = takasaki_spec(f);
            rows.push_back(census_row("takasaki", ps.str(), alexander_quandle(c), c, max_order,
                                      group_bound));
        }
    }
    if (wanted("phi"))
        for (long p : {2L, 3L, 5L, 7L})
            for (long n = 2; n <= 8; ++n) {
                if (std::gcd(n, p) != 1) continue;
                double size = std::pow(static_cast<double>(p), n - 1);
                if (size > static_cast<double>(max_order_census)) continue;
                CheckedAlexander c = phi_family(p, n);
                rows.push_back(census_row("phi", "p=" + std::to_string(p) + ",n=" + std::to_string(n),
                                          alexander_quandle(c), c, max_order, group_bound));
            }
    if (wanted("conj-transpositions"))
        for (long n = 3; n * (n - 1) / 2 <= max_order_census; ++n)
            rows.push_back(census_row("conj-transpositions", "n=" + std::to_string(n),
                                      transposition_quandle(n), std::nullopt, max_order, group_bound));

    json j;
    j["schema"] = 1;
    json jrows = json::array();
    for (const CensusRow& r : rows) {
        json jr;
        jr["family"] = r.family;
        jr["params"] = r.params;
        jr["order"] = r.order;
        jr["connected"] = r.connected;
        jr["type"] = r.type;
        jr["inn_order"] = r.inn;
        jr["h2_quandle"] = r.h2q;
        jr["thm4"] = r.thm4;
        jrows.push_back(std::move(jr));
    }
    j["rows"] = std::move(jrows);

    std::ostringstream t;
    if (format == "csv") {
        t << "family,params,order,connected,type,inn,h2_quandle,thm4\n";
        for (const CensusRow& r : rows)
            t << r.family << "," << r.params << "," << r.order << "," << r.connected << "," << r.type
              << "," << r.inn << ",\"" << r.h2q << "\"," << r.thm4 << "\n";
    } else {
        std::vector<std::array<std::string, 8>> cells;
        cells.push_back({"family", "params", "order", "conn", "type", "|Inn|", "H2^Q", "thm4"});
        for (const CensusRow& r : rows)
            cells.push_back({r.family, r.params, std::to_string(r.order), r.connected, r.type, r.inn,
                             r.h2q, r.thm4});
        std::array<size_t, 8> w{};
        for (const auto& row : cells)
            for (size_t i = 0; i < 8; ++i) w[i] = std::max(w[i], row[i].size());
        for (const auto& row : cells) {
            for (size_t i = 0; i < 8; ++i) t << std::left << std::setw(static_cast<int>(w[i]) + 2) << row[i];
            t << "\n";
        }
    }
    emit(j, out, format == "json", t.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qhk: exact second homology of finite quandles, with closed-form models and "
                 "group-cohomology cross-checks"};
    app.require_subcommand(1);

    long max_order = env_max_order(kDefaultHomologyOrderBound);
    long group_bound = kDefaultGroupBound;
    std::string format = "table", out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: table or json")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("-o,--output", out_path, "write output to a file");
        sub->add_option("--max-order", max_order,
                        "homology size gate (env QHK_MAX_ORDER overrides the default)");
    };

    // check
    std::string check_file;
    CLI::App* check = app.add_subcommand("check", "validate a quandle file and print its profile");
    check->add_option("file", check_file, "quandle JSON file")->required();
    add_common(check);

    // h2
    std::string h2_file;
    bool rack = false, quandle_flag = false;
    std::optional<long> ell;
    CLI::App* h2 = app.add_subcommand("h2", "second rack/quandle homology of a quandle file");
    h2->add_option("file", h2_file, "quandle JSON file")->required();
    h2->add_flag("--rack", rack, "rack homology instead of quandle homology");
    h2->add_flag("--quandle", quandle_flag, "quandle homology (default)");
    h2->add_option("--l", ell, "also report the cohomology dimension over F_l");
    add_common(h2);

    // family
    FamilyRequest fam;
    std::string fam_out;
    CLI::App* family = app.add_subcommand("family", "generate a named family member");
    family->add_option("--family", fam.family,
                       "dihedral|takasaki|phi|alexander|conj-transpositions")->required();
    family->add_option("-n", fam.n, "family size parameter");
    family->add_option("-p", fam.p, "prime parameter (phi)");
    family->add_option("--factors", fam.factors, "invariant factors, e.g. 3,3");
    family->add_option("--t", fam.tmat, "automorphism rows, e.g. \"0,1;1,1\"");
    family->add_option("-o,--output", fam_out, "output path prefix")->required();

    // verify
    std::string theorem, verify_spec;
    FamilyRequest vfam;
    bool vfam_given = false;
    unsigned seed = 12345;
    long p_param = 0, n_param = 0;
    CLI::App* verify = app.add_subcommand("verify", "run a named consistency check");
    verify->add_option("--theorem", theorem, "thm4|thm5|thm6|cor8|prop9|prop5|brackets")->required();
    verify->add_option("--spec", verify_spec, "Alexander spec JSON file");
    verify->add_option("--family", vfam.family, "family name instead of --spec");
    verify->add_option("-n", n_param, "family / theorem parameter n");
    verify->add_option("-p", p_param, "family / theorem parameter p");
    verify->add_option("--factors", vfam.factors, "family factors");
    verify->add_option("--t", vfam.tmat, "family automorphism");
    verify->add_option("--l", ell, "prime for the localized checks");
    verify->add_option("--seed", seed, "seed for sampled checks");
    add_common(verify);

    // census
    long census_max = 12;
    std::vector<std::string> census_families;
    CLI::App* census = app.add_subcommand("census", "tabulate families up to an order bound");
    census->add_option("--max-order", census_max, "largest quandle order to enumerate");
    census->add_option("--families", census_families,
                       "subset of trivial,dihedral,takasaki,phi,conj-transpositions")
        ->delimiter(',');
    census->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    census->add_option("-o,--output", out_path, "write output to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(check)) return cmd_check(check_file, format == "json", out_path, group_bound);
        if (app.got_subcommand(h2)) {
            if (rack && quandle_flag) throw input_error("h2: choose one of --rack / --quandle");
            return cmd_h2(h2_file, rack, ell, max_order, format == "json", out_path);
        }
        if (app.got_subcommand(family)) return cmd_family(fam, fam_out);
        if (app.got_subcommand(verify)) {
            vfam.n = n_param;
            vfam.p = p_param;
            vfam_given = !vfam.family.empty();
            return cmd_verify(theorem, vfam_given ? std::optional<FamilyRequest>(vfam) : std::nullopt,
                              verify_spec, ell, max_order, seed, p_param, n_param, format == "json",
                              out_path);
        }
        if (app.got_subcommand(census))
            return cmd_census(census_max, census_families, max_order, group_bound, format, out_path);
    } catch (const bound_error& e) {
        std::cerr << "resource gate: " << e.what() << "\n";
        return kExitBound;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const quandle_error& e) {
        std::cerr << "invalid quandle: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "patternlab/closed_forms.hpp"
#include "patternlab/contfrac.hpp"
#include "patternlab/ft_engine.hpp"
#include "patternlab/motzkin.hpp"
#include "patternlab/occurrence_gf.hpp"
#include "patternlab/oracle.hpp"
#include "patternlab/pattern_set.hpp"
#include "patternlab/power_series.hpp"
#include "patternlab/tables.hpp"
#include "patternlab/trimatrix.hpp"

namespace {

using namespace patternlab;
using nlohmann::json;

int enumeration_limit(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PATTERNLAB_LIMIT")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultInvolutionLimit;
}

json pattern_set_json(const PatternSet& set) {
    json arr = json::array();
    for (const auto& p : set.members()) arr.push_back(p.str());
    return arr;
}

json series_json(const PatternSet& set, const PowerSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(boost::multiprecision::numerator(c).str());
    return json{{"pattern_set", pattern_set_json(set)},
                {"order", s.order()},
                {"coefficients", coeffs}};
}

json poly_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

json ratfunc_json(const RatFunc& f) {
    return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

void print_ratfunc(const RatFunc& f, bool as_json) {
    if (as_json)
        std::cout << ratfunc_json(f).dump() << "\n";
    else
        std::cout << "(" << f.num().str() << ") / (" << f.den().str() << ")\n";
}

const std::map<std::string, Statistic> kStatNames{
    {"inv", Statistic::Inv}, {"lrmax", Statistic::LrMax}, {"rlmin", Statistic::RlMin},
    {"fix", Statistic::Fix}, {"m", Statistic::M}};

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!token.empty()) parts.push_back(std::stoi(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    return parts;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact enumeration toolkit for 3412-avoiding involutions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // count
    auto* count = app.add_subcommand("count", "count avoiders at one length");
    std::string count_avoid;
    int count_n = 0, count_limit = 0;
    count->add_option("--avoid", count_avoid, "comma-separated forbidden patterns");
    count->add_option("--n", count_n, "length")->required();
    count->add_option("--limit", count_limit, "enumeration cap override");

    // series
    auto* series = app.add_subcommand("series", "engine series of avoider counts");
    std::string series_avoid;
    int series_order = 10, series_limit = 0;
    series->add_option("--avoid", series_avoid, "comma-separated forbidden patterns");
    series->add_option("--order,-N", series_order, "truncation order");
    series->add_option("--limit", series_limit, "order cap override");

    // closed
    auto* closed = app.add_subcommand("closed", "closed-form generating functions");
    int closed_decreasing = 0, closed_k = 0, closed_order = -1;
    std::string closed_family, closed_layered;
    closed->add_option("--decreasing", closed_decreasing, "decreasing pattern length");
    closed->add_option("--family", closed_family, "k312|k4231|k4132|k4213|k4123");
    closed->add_option("-k", closed_k, "family parameter (k >= 3)");
    closed->add_option("--layered", closed_layered, "layer sizes, e.g. 2,3");
    closed->add_option("--order,-N", closed_order, "also print series to this order");

    // cf
    auto* cf = app.add_subcommand("cf", "continued-fraction series");
    std::string cf_stat;
    int cf_avoid_dec = 0, cf_order = 10, cf_depth = -1;
    cf->add_option("--stat", cf_stat, "inv|m|lrmax|rlmin|fix");
    cf->add_option("--avoid-decreasing", cf_avoid_dec, "finite CF for m...21 avoidance");
    cf->add_option("--order,-N", cf_order, "truncation order");
    cf->add_option("--depth", cf_depth, "truncation depth override");

    // occurrences
    auto* occ = app.add_subcommand("occurrences", "exact-occurrence generating function");
    int occ_len = 0, occ_order = -1;
    std::uint64_t occ_r = 1;
    occ->add_option("--length", occ_len, "decreasing pattern length")->required();
    occ->add_option("--r", occ_r, "occurrence count")->required();
    occ->add_option("--order,-N", occ_order, "also print series to this order");

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "Motzkin-path bijection");
    std::string phi_path, phi_perm;
    phi_cmd->add_option("--path", phi_path, "path, e.g. ULUDDLUD");
    phi_cmd->add_option("--perm", phi_perm, "involution, e.g. 52431687");

    // paths
    auto* paths = app.add_subcommand("paths", "bounded lattice path generating function");
    std::string paths_family = "M";
    int paths_k = 0, paths_r = 0, paths_s = 0, paths_order = -1;
    paths->add_option("--family", paths_family, "M|N|O");
    paths->add_option("-k", paths_k, "height bound")->required();
    paths->add_option("-r", paths_r, "start height");
    paths->add_option("-s", paths_s, "end height");
    paths->add_option("--order,-N", paths_order, "also print series to this order");

    // dist
    auto* dist = app.add_subcommand("dist", "oracle statistic distribution");
    std::string dist_stat;
    int dist_n = 0, dist_limit = 0;
    dist->add_option("--stat", dist_stat, "inv|m|lrmax|rlmin|fix")->required();
    dist->add_option("--n", dist_n, "length")->required();
    dist->add_option("--limit", dist_limit, "enumeration cap override");

    // verify-tables
    auto* verify = app.add_subcommand("verify-tables", "check published tables");
    int verify_n_max = 10, verify_limit = 0;
    std::string verify_data = default_table_path();
    verify->add_option("--n-max", verify_n_max, "highest length checked");
    verify->add_option("--data", verify_data, "table data file");
    verify->add_option("--limit", verify_limit, "enumeration cap override");

    // conjecture
    auto* conj = app.add_subcommand("conjecture", "layered symmetry sweep");
    int conj_m = 3, conj_lmax = 5, conj_order = 15;
    conj->add_option("--m", conj_m, "number of layers");
    conj->add_option("--l-max", conj_lmax, "largest layer size");
    conj->add_option("--order,-N", conj_order, "series order");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    auto& engine = FtEngine::global();

    if (*count) {
        const PatternSet set = PatternSet::parse(count_avoid);
        const int limit = enumeration_limit(count_limit);
        const std::uint64_t oracle = count_avoiders(set, count_n, limit);
        const Int eng = engine.coefficient(set, count_n);
        if (as_json)
            std::cout << json{{"pattern_set", pattern_set_json(set)},
                              {"n", count_n},
                              {"count", std::to_string(oracle)}}
                             .dump()
                      << "\n";
        else
            std::cout << oracle << "\n";
        if (eng != Int(oracle)) {
            std::cerr << "engine/oracle mismatch at n = " << count_n << "\n";
            return 1;
        }
        return 0;
    }
    if (*series) {
        const PatternSet set = PatternSet::parse(series_avoid);
        const int limit = series_limit > 0 ? series_limit : kDefaultOrderLimit;
        const PowerSeries s = engine.series(set, series_order, limit);
        if (as_json) {
            std::cout << series_json(set, s).dump() << "\n";
        } else {
            for (int n = 0; n <= s.order(); ++n)
                std::cout << (n ? "," : "") << boost::multiprecision::numerator(s.coeff(n));
            std::cout << "\n";
        }
        return 0;
    }
    if (*closed) {
        RatFunc f;
        if (closed_decreasing > 0) {
            f = decreasing_closed(closed_decreasing);
        } else if (!closed_family.empty()) {
            const std::map<std::string, Family> names{{"k312", Family::K312},
                                                      {"k4231", Family::K4231},
                                                      {"k4132", Family::K4132},
                                                      {"k4213", Family::K4213},
                                                      {"k4123", Family::K4123}};
            auto it = names.find(closed_family);
            if (it == names.end()) throw std::invalid_argument("unknown family: " + closed_family);
            f = family_closed(it->second, closed_k);
        } else if (!closed_layered.empty()) {
            f = layered_closed(parse_parts(closed_layered));
        } else {
            throw std::invalid_argument("closed: pick --decreasing, --family or --layered");
        }
        print_ratfunc(f, as_json);
        if (closed_order >= 0) {
            const PowerSeries s = series_of(f, closed_order);
            for (int n = 0; n <= s.order(); ++n)
                std::cout << (n ? "," : "") << boost::multiprecision::numerator(s.coeff(n));
            std::cout << "\n";
        }
        return 0;
    }
    if (*cf) {
        CFSpec spec;
        if (cf_avoid_dec > 0) {
            spec = CFSpec::avoid_decreasing(cf_avoid_dec);
        } else {
            auto it = kStatNames.find(cf_stat);
            if (it == kStatNames.end())
                throw std::invalid_argument("cf: pick --stat or --avoid-decreasing");
            spec = CFSpec::statistic(it->second);
        }
        const QSeries s = cf_series(spec, cf_order, cf_depth);
        if (as_json) {
            json coeffs = json::array();
            for (const auto& p : s.coeffs) coeffs.push_back(poly_json(p));
            std::cout << json{{"order", s.order}, {"coefficients", coeffs}}.dump() << "\n";
        } else {
            for (int n = 0; n <= s.order; ++n)
                std::cout << "x^" << n << ": " << s.coeff(n).str() << "\n";
        }
        return 0;
    }
    if (*occ) {
        const RatFunc f = occurrence_gf(OccurrenceSpec::make(occ_len, occ_r));
        print_ratfunc(f, as_json);
        if (occ_order >= 0) {
            const PowerSeries s = series_of(f, occ_order);
            for (int n = 0; n <= s.order(); ++n)
                std::cout << (n ? "," : "") << boost::multiprecision::numerator(s.coeff(n));
            std::cout << "\n";
        }
        return 0;
    }
    if (*phi_cmd) {
        if (!phi_path.empty()) {
            std::cout << phi(MotzkinPath::parse(phi_path)).str() << "\n";
        } else if (!phi_perm.empty()) {
            std::cout << phi_inverse(Permutation::parse(phi_perm)).str() << "\n";
        } else {
            throw std::invalid_argument("phi: pick --path or --perm");
        }
        return 0;
    }
    if (*paths) {
        const std::map<std::string, PathFamily> names{
            {"M", PathFamily::M}, {"N", PathFamily::N}, {"O", PathFamily::O}};
        auto it = names.find(paths_family);
        if (it == names.end()) throw std::invalid_argument("unknown family: " + paths_family);
        const RatFunc f = bounded_path_gf(it->second, paths_r, paths_s, paths_k);
        print_ratfunc(f, as_json);
        if (paths_order >= 0) {
            const PowerSeries s = series_of(f, paths_order);
            for (int n = 0; n <= s.order(); ++n)
                std::cout << (n ? "," : "") << boost::multiprecision::numerator(s.coeff(n));
            std::cout << "\n";
        }
        return 0;
    }
    if (*dist) {
        auto it = kStatNames.find(dist_stat);
        if (it == kStatNames.end()) throw std::invalid_argument("unknown stat: " + dist_stat);
        const IntPoly p = statistic_distribution(it->second, dist_n,
                                                 enumeration_limit(dist_limit));
        if (as_json)
            std::cout << json{{"stat", dist_stat}, {"n", dist_n}, {"coefficients", poly_json(p)}}
                             .dump()
                      << "\n";
        else
            std::cout << p.str() << "\n";
        return 0;
    }
    if (*verify) {
        const auto rows = load_table_rows(verify_data);
        if (verify_n_max > enumeration_limit(verify_limit))
            throw std::invalid_argument("verify-tables: n-max exceeds enumeration limit");
        const VerifyResult result = verify_tables(rows, verify_n_max);
        json report = json::array();
        for (const auto& r : result.rows) {
            const bool pass = r.engine_matches_oracle;
            if (as_json) {
                report.push_back(json{{"sigma", r.row->sigma.str()},
                                      {"table", r.row->table},
                                      {"pass", pass},
                                      {"printed_matches", r.printed_matches},
                                      {"mismatch_n", r.mismatch_ns}});
            } else {
                std::cout << (pass ? "PASS" : "FAIL") << " table " << r.row->table << " sigma "
                          << r.row->sigma.str();
                if (!r.printed_matches) std::cout << "  [published value differs]";
                std::cout << "\n";
            }
        }
        if (as_json) {
            std::cout << json{{"ok", result.ok}, {"rows", report}}.dump() << "\n";
        } else {
            bool any_erratum = false;
            for (const auto& r : result.rows)
                if (!r.printed_matches) {
                    if (!any_erratum) std::cout << "\nErrata (published vs verified):\n";
                    any_erratum = true;
                    std::cout << "  sigma " << r.row->sigma.str() << " differs at n =";
                    for (int n : r.mismatch_ns) std::cout << " " << n;
                    std::cout << "\n";
                }
            std::cout << (result.ok ? "engine agrees with oracle on every row\n"
                                    : "ENGINE/ORACLE DISAGREEMENT\n");
        }
        return result.ok ? 0 : 1;
    }
    if (*conj) {
        // All compositions (l_1..l_m) with 1 <= l_i <= l_max, compared against
        // the sorted representative.
        std::vector<int> parts(static_cast<size_t>(conj_m), 1);
        bool all_symmetric = true;
        std::map<std::vector<int>, PowerSeries> reference;
        while (true) {
            std::vector<int> sorted = parts;
            std::sort(sorted.begin(), sorted.end());
            const PowerSeries s =
                engine.series(PatternSet({layered(parts)}), conj_order);
            auto [it, inserted] = reference.emplace(sorted, s);
            if (!inserted && !(it->second == s)) {
                all_symmetric = false;
                std::cout << "asymmetry at layers (";
                for (size_t i = 0; i < parts.size(); ++i)
                    std::cout << (i ? "," : "") << parts[i];
                std::cout << ")\n";
            }
            size_t j = 0;
            while (j < parts.size() && ++parts[j] > conj_lmax) parts[j++] = 1;
            if (j == parts.size()) break;
        }
        if (as_json)
            std::cout << json{{"m", conj_m},
                              {"l_max", conj_lmax},
                              {"order", conj_order},
                              {"symmetric", all_symmetric}}
                             .dump()
                      << "\n";
        else
            std::cout << (all_symmetric ? "all symmetric\n" : "asymmetries found\n");
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

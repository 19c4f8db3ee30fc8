// plateau_cli.cpp -- command-line front end: analyze / build-code / verify /
// search / tables over function-spec JSON files.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 budget
// exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plateau/plateau.hpp"

namespace {

using namespace plateau;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::BudgetExceeded: return 3;
        case Errc::NotPlateaued: return 2;
        default: return 2;
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(Errc::ParseError, "cannot open output file '" + out_path + "'");
    out << text;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::vector<uint64_t> parse_u64_list(const std::string& s) {
    std::vector<uint64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoull(tok));
    return out;
}

std::string classification_line(const PlateauedReport& rep, int p, int m) {
    std::ostringstream os;
    if (!rep.is_plateaued) {
        os << "not plateaued (two or more distinct nonzero |W|^2 values)";
        return os.str();
    }
    if (p == 2) {
        os << "binary " << rep.r << "-plateaued" << (rep.is_bent ? " (bent)" : "") << ", W in {0, +-2^"
           << (m + rep.r) / 2 << "}";
        return os.str();
    }
    os << to_string(rep.regularity) << " " << p << "-ary " << rep.r << "-plateaued" << (rep.is_bent ? " (bent)" : "");
    if (rep.regularity == Regularity::Regular || rep.regularity == Regularity::WeaklyRegular) {
        os << ", W in {0, ";
        if ((m + rep.r) % 2 == 0) {
            const int64_t amp = static_cast<int64_t>(big_pow(p, static_cast<unsigned>((m + rep.r) / 2)));
            os << (rep.unit == Unit::MinusOne ? "-" : "") << amp << "*xi^g(b)}";
        } else {
            os << "(" << to_string(rep.unit) << ")*sqrt(" << big_pow(p, static_cast<unsigned>(m + rep.r))
               << ")*xi^g(b)}";
        }
        os << ", epsilon=" << rep.epsilon;
    }
    return os.str();
}

struct CommonOpts {
    bool as_json = false;
    std::string out_path;
    int threads = 1;
    uint64_t budget = 100'000'000;
    uint64_t seed = 0;
};

int cmd_analyze(const std::string& spec_path, const CommonOpts& o, bool with_spectrum) {
    FunctionSpec spec = load_function_spec(spec_path);
    const int p = spec.field->p(), m = spec.field->m();
    PAryFunction f = evaluate(spec);
    WalshSpectrum s = walsh_fast(f);
    PlateauedReport rep = analyze(s);

    if (o.as_json) {
        json j;
        j["spec"] = spec_to_json(spec);
        j["report"] = report_to_json(rep);
        j["walsh"] = {{"support_size", s.support.size()},
                      {"moment_s1", big_to_json(moment(s, 1))},
                      {"moment_s2", big_to_json(moment(s, 2))}};
        if (rep.is_plateaued) j["walsh"]["magnitude_squared"] = big_to_json(big_pow(p, static_cast<unsigned>(m + rep.r)));
        if (with_spectrum) j["spectrum"] = spectrum_to_json(s);
        emit(j.dump(2), o.out_path);
    } else {
        std::ostringstream os;
        os << "field: GF(" << p << "^" << m << "), " << spec.terms.size() << " terms\n";
        os << "classification: " << classification_line(rep, p, m) << "\n";
        os << "walsh support: " << s.support.size() << " of " << s.values.size() << ", S1=" << moment(s, 1)
           << ", S2=" << moment(s, 2) << "\n";
        if (rep.is_plateaued && p != 2) {
            os << "dual value counts:";
            for (auto c : rep.ng_counts) os << " " << c;
            os << (rep.g_balanced ? "  (balanced)" : "  (unbalanced)") << "\n";
        }
        if (rep.is_plateaued && p == 2)
            os << "walsh value counts: +" << rep.count_plus << " / 0:" << rep.count_zero << " / -" << rep.count_minus
               << "\n";
        emit(os.str(), o.out_path);
    }
    return rep.is_plateaued ? 0 : 2;
}

int cmd_build_code(const std::string& spec_path, const CommonOpts& o, bool emit_codewords) {
    FunctionSpec spec = load_function_spec(spec_path);
    PAryFunction f = evaluate(spec);
    LinearCode code = build_code(f);
    WeightDistribution wd = weight_distribution(code, o.threads, o.budget);

    std::ostringstream os;
    if (o.as_json) {
        json j = code_report_to_json(code, wd);
        j["spec"] = spec_to_json(spec);
        os << j.dump(2);
    } else {
        os << "code: [" << code.n << "," << code.k << "]_" << code.p;
        if (code.degenerate) os << "  (warning: degenerate, expected k=" << spec.field->m() + 1 << ")";
        os << "\n";
        os << "weight distribution:";
        for (const auto& [w, a] : wd.rows) os << " " << w << ":" << a;
        os << "\n";
        os << "weight enumerator: " << format_enumerator(wd) << "\n";
        auto [lo, hi] = min_max_weights(wd);
        os << "w_min=" << lo << " w_max=" << hi << "\n";
    }
    if (emit_codewords) {
        std::vector<uint8_t> buf(code.n);
        for (int a = 0; a < code.p; ++a)
            for (uint32_t b = 0; b < code.field->size(); ++b) {
                codeword(code, a, b, buf);
                for (uint8_t v : buf) os << static_cast<int>(v);
                os << "\n";
            }
    }
    emit(os.str(), o.out_path);
    return 0;
}

int cmd_verify(const std::string& spec_path, const CommonOpts& o) {
    FunctionSpec spec = load_function_spec(spec_path);
    const int p = spec.field->p(), m = spec.field->m();
    const uint32_t q = spec.field->size();
    PAryFunction f = evaluate(spec);
    WalshSpectrum s = walsh_fast(f);
    PlateauedReport rep = analyze(s);

    std::ostringstream os;
    json jchecks = json::array();
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        all_ok = all_ok && ok;
        os << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty()) os << "  (" << detail << ")";
        os << "\n";
        jchecks.push_back({{"name", name}, {"pass", ok}, {"detail", detail}});
    };
    auto info = [&](const std::string& text) {
        os << "INFO  " << text << "\n";
        jchecks.push_back({{"name", text}, {"pass", true}, {"detail", "informational"}});
    };

    if (!rep.is_plateaued) {
        os << "not plateaued; nothing to verify\n";
        emit(os.str(), o.out_path);
        return 2;
    }
    os << "classification: " << classification_line(rep, p, m) << "\n";

    check("support size = p^(m-r)",
          static_cast<BigInt>(s.support.size()) == big_pow(p, static_cast<unsigned>(m - rep.r)));
    {
        auto [cw, cws] = set_cardinalities(p, m, rep.r);
        const int64_t zeros = static_cast<int64_t>(q) - static_cast<int64_t>(s.support.size());
        check("pair-set cardinalities", cw == (p - 1) * zeros && cws == static_cast<int64_t>((p - 1) * s.support.size()));
    }

    LinearCode code = build_code(f);
    WeightDistribution wd = weight_distribution(code, o.threads, o.budget);
    os << "code: [" << code.n << "," << code.k << "]_" << code.p << "  " << format_enumerator(wd) << "\n";
    if (code.degenerate) info("degenerate dimension: k < m+1");

    // per-codeword weights through the spectrum
    {
        bool ok = true;
        for (int a = 0; a < p && ok; ++a)
            for (uint32_t b = 0; b < q && ok; ++b) ok = weight_via_walsh(s, a, b) == hamming_weight(code, a, b);
        check("walsh-automorphism weights = direct counts", ok);
    }

    bool tables_checked = false;
    if (p == 2) {
        auto counts = binary_counts_expected(m, rep.r);
        const int64_t zeros = static_cast<int64_t>(q) - static_cast<int64_t>(s.support.size());
        check("binary walsh value counts",
              rep.count_plus == counts.first && rep.count_minus == counts.second && rep.count_zero == zeros);
        PredictedDistribution pd = predict_binary(m, rep.r);
        check("predicted distribution = enumerated", matches(pd, wd));
        tables_checked = true;
    } else if (rep.regularity == Regularity::Regular || rep.regularity == Regularity::WeaklyRegular) {
        check("dual value counts match closed form",
              rep.ng_counts == ng_predicted(p, m, rep.r, rep.epsilon_dual, rep.g_balanced));
        check("dual sign consistent with the exact identity", rep.epsilon_relation_consistent);
        auto dc = verify_dual_inverse(rep, f);
        check("dual inverse identity", dc.ok);
        PredictedDistribution pd = predict(rep, p, m);
        check("predicted distribution = enumerated", matches(pd, wd),
              "predicted " + std::to_string(pd.rows.size()) + " rows");
        tables_checked = true;
    } else {
        info("non-weakly regular: distribution tables not applicable");
    }

    // minimality suite
    json jmin;
    {
        const bool ab = ashikhmin_barg(wd, p);
        ParityCase pc = p == 2 ? ParityCase::BinaryEven : ((m + rep.r) % 2 == 0 ? ParityCase::OddEven : ParityCase::OddOdd);
        const bool rg = range_guarantee(p, m, rep.r, pc);
        std::string mininfo = std::string("ashikhmin_barg=") + (ab ? "true" : "false") +
                              " range_guarantee=" + (rg ? "true" : "false");
        try {
            MinimalityResult mr = all_minimal_exhaustive(code, o.budget / std::max<uint64_t>(1, code.n));
            jmin = minimality_to_json(ab, rg, mr);
            mininfo += std::string(" exhaustive=") + (mr.all_minimal ? "all-minimal" : "witness-found");
            check("minimality: sufficient condition sound", !ab || mr.all_minimal, mininfo);
            if (rg) check("minimality: in-range code is minimal", ab && mr.all_minimal);
        } catch (const Error& e) {
            if (e.code() != Errc::BudgetExceeded) throw;
            jmin = {{"ashikhmin_barg", ab}, {"range_guarantee", rg}, {"exhaustive", nullptr}};
            info("minimality oracle skipped: " + std::string(e.what()));
            info(mininfo);
        }
    }

    os << (all_ok ? "verify: all checks passed" : "verify: MISMATCH") << (tables_checked ? "" : " (tables not applicable)")
       << "\n";
    if (o.as_json) {
        json j;
        j["spec"] = spec_to_json(spec);
        j["report"] = report_to_json(rep);
        j["code"] = code_report_to_json(code, wd);
        j["minimality"] = jmin;
        j["checks"] = jchecks;
        j["ok"] = all_ok;
        emit(j.dump(2), o.out_path);
    } else {
        emit(os.str(), o.out_path);
    }
    return all_ok ? 0 : 1;
}

ReportFilter parse_filter(const std::string& expr) {
    std::vector<std::string> toks;
    std::stringstream ss(expr);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) toks.push_back(tok);
    return [toks](const PlateauedReport& rep) {
        for (const auto& t : toks) {
            if (t == "plateaued") {
                if (!rep.is_plateaued) return false;
            } else if (t == "bent") {
                if (rep.r != 0) return false;
            } else if (t == "regular") {
                if (rep.regularity != Regularity::Regular) return false;
            } else if (t == "weakly_regular") {
                if (rep.regularity != Regularity::Regular && rep.regularity != Regularity::WeaklyRegular) return false;
            } else if (t == "non_weakly_regular") {
                if (rep.regularity != Regularity::NonWeaklyRegular) return false;
            } else if (t == "balanced") {
                if (!rep.g_balanced) return false;
            } else if (t == "unbalanced") {
                if (rep.g_balanced) return false;
            } else if (t.rfind("r=", 0) == 0) {
                if (rep.r != std::stoi(t.substr(2))) return false;
            } else {
                fail(Errc::ParseError, "unknown filter token '" + t + "'");
            }
        }
        return true;
    };
}

int cmd_search(int p, int m, const std::string& modulus_csv, const std::string& exponents_csv, bool random_mode,
               uint64_t count, const std::string& filter_expr, uint64_t limit, const CommonOpts& o) {
    SweepOptions opt;
    opt.field = make_field(p, m, parse_int_list(modulus_csv));
    opt.exponents = parse_u64_list(exponents_csv);
    opt.exhaustive = !random_mode;
    opt.random_count = count;
    opt.seed = o.seed;
    opt.budget = o.budget;
    opt.threads = o.threads;

    std::ostringstream os;
    uint64_t emitted = 0;
    sweep(opt, parse_filter(filter_expr), [&](const FunctionSpec& spec, const PlateauedReport& rep) {
        json line;
        line["spec"] = spec_to_json(spec);
        line["report"] = report_to_json(rep);
        os << line.dump() << "\n";
        ++emitted;
        return limit == 0 || emitted < limit;
    });
    emit(os.str(), o.out_path);
    return 0;
}

int cmd_tables(int p, int m, int r, int eps, int eps_dual, bool balanced, const CommonOpts& o) {
    PredictedDistribution pd = p == 2 ? predict_binary(m, r)
                               : (m + r) % 2 == 0 ? predict_odd_even(p, m, r, eps, eps_dual, balanced)
                                                  : predict_odd_odd(p, m, r, eps, eps_dual, balanced);
    std::ostringstream os;
    if (o.as_json) {
        json rows = json::array();
        for (auto [w, a] : pd.rows) rows.push_back({{"w", w}, {"A", a}});
        os << json{{"p", pd.p},
                   {"m", pd.m},
                   {"r", pd.r},
                   {"epsilon", pd.eps},
                   {"epsilon_dual", pd.eps_dual},
                   {"balanced", pd.g_balanced},
                   {"provenance", pd.provenance},
                   {"rows", rows}}
                  .dump(2);
    } else {
        os << "table (" << pd.provenance << "), p=" << pd.p << " m=" << pd.m << " r=" << pd.r;
        if (p != 2) os << " epsilon=" << pd.eps << " epsilon_dual=" << pd.eps_dual;
        os << "\n";
        os << "  weight w        multiplicity A_w\n";
        for (auto [w, a] : pd.rows) {
            os << "  " << w;
            for (size_t pad = std::to_string(w).size(); pad < 16; ++pad) os << ' ';
            os << a << "\n";
        }
    }
    emit(os.str(), o.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic classifier for plateaued p-ary functions and their three-weight codes"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string spec_path, modulus_csv, exponents_csv, filter_expr = "plateaued";
    bool with_spectrum = false, emit_codewords = false, random_mode = false, balanced = false;
    uint64_t random_count = 10000, limit = 0;
    int p = 3, m = 3, r = 0, eps = 1, eps_dual = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", common.as_json, "emit JSON instead of text");
        sub->add_option("--out", common.out_path, "write output to a file");
        sub->add_option("--threads", common.threads, "worker threads")->default_val(1);
        sub->add_option("--budget", common.budget, "operation budget")->default_val(100000000);
        sub->add_option("--seed", common.seed, "RNG seed")->default_val(0);
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "classify a function from a spec file");
    analyze_cmd->add_option("spec", spec_path, "function-spec JSON file")->required();
    analyze_cmd->add_flag("--spectrum", with_spectrum, "include the full spectrum in JSON output");
    add_common(analyze_cmd);

    auto* build_cmd = app.add_subcommand("build-code", "build the linear code and enumerate its weights");
    build_cmd->add_option("spec", spec_path, "function-spec JSON file")->required();
    build_cmd->add_flag("--emit-codewords", emit_codewords, "dump all codewords as digit rows");
    add_common(build_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "classify, predict, enumerate, and cross-check");
    verify_cmd->add_option("spec", spec_path, "function-spec JSON file")->required();
    add_common(verify_cmd);

    auto* search_cmd = app.add_subcommand("search", "sweep coefficient assignments of a monomial template");
    search_cmd->add_option("--p", p, "field characteristic")->required();
    search_cmd->add_option("--m", m, "extension degree")->required();
    search_cmd->add_option("--modulus", modulus_csv, "modulus coefficients, constant first, comma separated")->required();
    search_cmd->add_option("--exponents", exponents_csv, "template exponents, comma separated")->required();
    search_cmd->add_flag("--random", random_mode, "random sampling instead of exhaustive");
    search_cmd->add_option("--count", random_count, "number of random samples")->default_val(10000);
    search_cmd->add_option("--filter", filter_expr, "comma list: plateaued,bent,regular,weakly_regular,non_weakly_regular,balanced,unbalanced,r=K");
    search_cmd->add_option("--limit", limit, "stop after this many hits (0 = no limit)");
    add_common(search_cmd);

    auto* tables_cmd = app.add_subcommand("tables", "print a predicted weight-distribution table");
    tables_cmd->add_option("--p", p, "field characteristic")->required();
    tables_cmd->add_option("--m", m, "extension degree")->required();
    tables_cmd->add_option("--r", r, "plateau amplitude")->required();
    tables_cmd->add_option("--epsilon", eps, "walsh sign (odd p)")->default_val(1);
    tables_cmd->add_option("--epsilon-dual", eps_dual, "dual walsh sign (defaults to epsilon)")->default_val(0);
    tables_cmd->add_flag("--balanced", balanced, "balanced dual");
    add_common(tables_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(spec_path, common, with_spectrum);
        if (app.got_subcommand(build_cmd)) return cmd_build_code(spec_path, common, emit_codewords);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(spec_path, common);
        if (app.got_subcommand(search_cmd))
            return cmd_search(p, m, modulus_csv, exponents_csv, random_mode, random_count, filter_expr, limit, common);
        if (app.got_subcommand(tables_cmd))
            return cmd_tables(p, m, r, eps, eps_dual == 0 ? eps : eps_dual, balanced, common);
    } catch (const plateau::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

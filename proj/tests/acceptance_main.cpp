// acceptance_main.cpp -- end-to-end acceptance suite. Runs every criterion at
// its stated tolerance (all checks here are exact) and prints one PASS/FAIL
// line per criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "plateau/plateau.hpp"

using namespace plateau;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    std::string name;
    bool pass = true;
    std::string detail;
};

std::vector<Outcome> g_results;

void record(const std::string& name, bool pass, const std::string& detail = "") {
    g_results.push_back({name, pass, detail});
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << std::endl;
}

std::string data_path(const std::string& name) { return std::string(PLATEAU_DATA_DIR) + "/" + name; }

std::vector<std::pair<uint32_t, int64_t>> wd_rows(const WeightDistribution& wd) { return wd.rows; }

struct FoundFunction {
    FunctionSpec spec;
    PAryFunction f;
    WalshSpectrum s;
    PlateauedReport rep;
};

struct Combo {
    int p, m, r;
    std::vector<int> modulus;
    bool listed;  // counts toward the required >= 20 set
};

// deterministic search for `want` distinct functions with the requested
// amplitude (weakly regular for odd p, any plateaued for p = 2)
std::vector<FoundFunction> collect(const Combo& c, size_t want, uint64_t seed) {
    auto F = make_field(c.p, c.m, c.modulus);
    SweepOptions opt;
    opt.field = F;
    opt.exponents = quadratic_exponents(c.p, c.m);
    opt.exhaustive = false;
    opt.random_count = 200000;
    opt.seed = seed;
    opt.threads = 4;
    std::vector<FoundFunction> out;
    std::set<std::vector<uint8_t>> seen;
    sweep(opt,
          [&](const PlateauedReport& rep) {
              if (rep.r != c.r) return false;
              if (c.p == 2) return true;
              return rep.regularity == Regularity::Regular || rep.regularity == Regularity::WeaklyRegular;
          },
          [&](const FunctionSpec& spec, const PlateauedReport& rep) {
              PAryFunction f = evaluate(spec);
              if (!seen.insert(f.table).second) return true;  // duplicate function
              WalshSpectrum s = walsh_fast(f);
              out.push_back({spec, std::move(f), std::move(s), rep});
              return out.size() < want;
          });
    return out;
}

PAryFunction load_f(const std::string& file) { return evaluate(load_function_spec(data_path(file))); }

void criterion1() {
    const auto t0 = Clock::now();
    LinearCode code = build_code(load_f("p2m5_r3.json"));
    WeightDistribution wd = weight_distribution(code);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    const bool params = code.n == 31 && code.k == 6;
    const bool dist = wd_rows(wd) == std::vector<std::pair<uint32_t, int64_t>>{{0, 1}, {8, 3}, {16, 59}, {24, 1}};
    std::ostringstream d;
    d << "[" << code.n << "," << code.k << "] " << format_enumerator(wd) << ", " << ms << " ms";
    record("criterion 1: [31,6] binary code reproduction", params && dist && ms < 1000, d.str());
}

void criterion2() {
    const auto t0 = Clock::now();
    PAryFunction f = load_f("p3m3_code_26_4.json");
    WalshSpectrum s = walsh_fast(f);
    PlateauedReport rep = analyze(s);
    LinearCode code = build_code(f);
    WeightDistribution wd = weight_distribution(code);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    const bool params = code.n == 26 && code.k == 4;
    const bool dist = wd_rows(wd) == std::vector<std::pair<uint32_t, int64_t>>{{0, 1}, {15, 16}, {18, 62}, {24, 2}};
    const bool cls = rep.regularity == Regularity::WeaklyRegular && rep.r == 1 && rep.epsilon == -1 && !rep.g_balanced;
    std::ostringstream d;
    d << "[" << code.n << "," << code.k << "]_3 " << format_enumerator(wd) << ", " << to_string(rep.regularity)
      << " r=" << rep.r << " eps=" << rep.epsilon << ", " << ms << " ms";
    record("criterion 2: [26,4]_3 code + classification reproduction", params && dist && cls && ms < 1000, d.str());
}

void criterion3() {
    PlateauedReport a = analyze(walsh_fast(load_f("p3m3_regular_r1.json")));
    PlateauedReport b = analyze(walsh_fast(load_f("p3m3_weakly_regular_r1.json")));
    PlateauedReport c = analyze(walsh_fast(load_f("p3m3_r2.json")));
    const bool ok_a = a.regularity == Regularity::Regular && a.r == 1;
    const bool ok_b = b.regularity == Regularity::WeaklyRegular && b.r == 1 && b.epsilon == -1;
    // stated expectation: non-weakly regular 2-plateaued
    const bool ok_c = c.regularity == Regularity::NonWeaklyRegular && c.r == 2;
    std::ostringstream d;
    d << "measured: " << to_string(a.regularity) << " r=" << a.r << "; " << to_string(b.regularity) << " r=" << b.r
      << " eps=" << b.epsilon << "; " << to_string(c.regularity) << " r=" << c.r << " u=" << to_string(c.unit);
    if (!ok_c)
        d << " | third function expected non_weakly_regular but its exact spectrum has a constant unit "
          << to_string(c.unit) << " on all " << c.support.size()
          << " support points (independently cross-checked), so it is weakly regular by definition";
    record("criterion 3: classification of the three GF(27) sample functions", ok_a && ok_b && ok_c, d.str());
}

// criteria 4 and 5 share the searched corpus; 6 and 7 reuse it
std::vector<std::pair<Combo, std::vector<FoundFunction>>> g_corpus;

void build_corpus() {
    const std::vector<Combo> combos = {
        {2, 4, 0, {1, 1, 0, 0, 1}, true},        {2, 4, 2, {1, 1, 0, 0, 1}, true},
        {2, 6, 2, {1, 1, 0, 0, 0, 0, 1}, true},  {3, 3, 1, {1, 2, 0, 1}, true},
        {3, 4, 0, {2, 0, 0, 2, 1}, true},        {3, 4, 2, {2, 0, 0, 2, 1}, true},
        {5, 2, 0, {2, 4, 1}, true},              {5, 3, 1, {2, 3, 0, 1}, true},
        // additional parity coverage: m+r odd for the odd-characteristic table
        {3, 3, 0, {1, 2, 0, 1}, false},          {3, 4, 1, {2, 0, 0, 2, 1}, false},
        {5, 2, 1, {2, 4, 1}, false},
    };
    uint64_t seed = 20240801;
    for (const auto& c : combos) g_corpus.emplace_back(c, collect(c, 3, seed++));
}

void criterion4() {
    size_t listed_found = 0, mismatches = 0, total = 0;
    std::ostringstream d;
    for (auto& [combo, fns] : g_corpus) {
        if (fns.empty()) {
            d << "(" << combo.p << "," << combo.m << "," << combo.r << "):none ";
            continue;
        }
        for (auto& ff : fns) {
            ++total;
            if (combo.listed) ++listed_found;
            WeightDistribution wd = weight_distribution(build_code(ff.f));
            PredictedDistribution pd = predict(ff.rep, combo.p, combo.m);
            if (!matches(pd, wd)) {
                ++mismatches;
                d << "mismatch(" << combo.p << "," << combo.m << "," << combo.r << ") ";
            }
        }
    }
    d << listed_found << " functions over the listed combos (+"
      << (total - listed_found) << " extra odd-parity), " << mismatches << " prediction mismatches";
    record("criterion 4: predicted = enumerated distributions for searched functions", listed_found >= 20 && mismatches == 0,
           d.str());
}

void criterion5() {
    size_t checked = 0, mismatches = 0;
    for (auto& [combo, fns] : g_corpus) {
        for (auto& ff : fns) {
            LinearCode code = build_code(ff.f);
            for (int a = 0; a < combo.p; ++a)
                for (uint32_t b = 0; b < ff.f.field->size(); ++b) {
                    ++checked;
                    if (weight_via_walsh(ff.s, a, b) != hamming_weight(code, a, b)) ++mismatches;
                }
        }
    }
    std::ostringstream d;
    d << checked << " (alpha,beta) pairs across all searched codes, " << mismatches << " mismatches";
    record("criterion 5: spectral weights equal direct Hamming counts", checked > 0 && mismatches == 0, d.str());
}

void criterion6() {
    bool ok = true;
    std::ostringstream d;
    std::mt19937_64 rng(60001);

    {  // Parseval on 100 random functions per (p, m) up to (3, 5)
        size_t bad = 0;
        const std::vector<std::pair<int, std::vector<int>>> fields = {
            {2, {1, 1}},          {2, {1, 1, 1}},          {2, {1, 1, 0, 1}},    {2, {1, 0, 0, 1, 1}},
            {2, {1, 0, 1, 0, 0, 1}},
            {3, {1, 1}},          {3, {2, 2, 1}},          {3, {1, 2, 0, 1}},    {3, {2, 0, 0, 2, 1}},
            {3, {1, 2, 0, 0, 0, 1}},
        };
        for (auto& [p, mod] : fields) {
            auto F = make_field(p, static_cast<int>(mod.size()) - 1, mod);
            for (int it = 0; it < 100; ++it) {
                PAryFunction f{F, std::vector<uint8_t>(F->size())};
                for (auto& v : f.table) v = static_cast<uint8_t>(rng() % p);
                if (moment(walsh_fast(f), 1) != big_pow(p, 2 * static_cast<unsigned>(F->m()))) ++bad;
            }
        }
        ok = ok && bad == 0;
        d << "parseval(1000 fns: " << bad << " bad) ";
    }

    {  // support sizes and pair-set cardinalities on every classified function
        size_t bad = 0, n = 0;
        auto check_one = [&](const PAryFunction& f, const WalshSpectrum& s, const PlateauedReport& rep) {
            ++n;
            const int p = f.field->p(), m = f.field->m();
            if (static_cast<BigInt>(s.support.size()) != big_pow(p, static_cast<unsigned>(m - rep.r))) ++bad;
            auto [w_card, ws_card] = set_cardinalities(p, m, rep.r);
            int64_t zeros = static_cast<int64_t>(f.field->size()) - static_cast<int64_t>(s.support.size());
            if (w_card != (p - 1) * zeros || ws_card != static_cast<int64_t>((p - 1) * s.support.size())) ++bad;
        };
        for (auto& [combo, fns] : g_corpus)
            for (auto& ff : fns) check_one(ff.f, ff.s, ff.rep);
        for (const char* file : {"p3m3_regular_r1.json", "p3m3_weakly_regular_r1.json", "p3m3_r2.json", "p2m5_r3.json",
                                 "p3m3_code_26_4.json"}) {
            PAryFunction f = load_f(file);
            WalshSpectrum s = walsh_fast(f);
            check_one(f, s, analyze(s));
        }
        ok = ok && bad == 0;
        d << "support+cardinalities(" << n << " fns: " << bad << " bad) ";
    }

    {  // binary Walsh value counts
        size_t bad = 0, n = 0;
        auto check_bin = [&](const PlateauedReport& rep, int m, int64_t q) {
            ++n;
            auto [plus, minus] = binary_counts_expected(m, rep.r);
            int64_t zeros = q - plus - minus;
            if (rep.count_plus != plus || rep.count_minus != minus || rep.count_zero != zeros) ++bad;
        };
        for (auto& [combo, fns] : g_corpus) {
            if (combo.p != 2) continue;
            for (auto& ff : fns) check_bin(ff.rep, combo.m, ff.f.field->size());
        }
        {
            PAryFunction f = load_f("p2m5_r3.json");
            check_bin(analyze(walsh_fast(f)), 5, 32);
        }
        ok = ok && bad == 0;
        d << "binary-counts(" << n << " fns: " << bad << " bad) ";
    }

    {  // dual inverse identity + dual value counts on every weakly regular example
        size_t bad_dual = 0, bad_ng = 0, n = 0;
        auto check_wr = [&](const PAryFunction& f, const PlateauedReport& rep) {
            if (rep.regularity != Regularity::Regular && rep.regularity != Regularity::WeaklyRegular) return;
            ++n;
            if (!verify_dual_inverse(rep, f).ok) ++bad_dual;
            const int p = f.field->p(), m = f.field->m();
            if (rep.ng_counts != ng_predicted(p, m, rep.r, rep.epsilon_dual, rep.g_balanced)) ++bad_ng;
            if (!rep.epsilon_relation_consistent) ++bad_ng;
        };
        for (auto& [combo, fns] : g_corpus)
            for (auto& ff : fns) check_wr(ff.f, ff.rep);
        for (const char* file : {"p3m3_regular_r1.json", "p3m3_weakly_regular_r1.json", "p3m3_r2.json", "p3m3_code_26_4.json"}) {
            PAryFunction f = load_f(file);
            check_wr(f, analyze(walsh_fast(f)));
        }
        ok = ok && bad_dual == 0 && bad_ng == 0;
        d << "dual-identity(" << n << " fns: " << bad_dual << " bad) dual-counts(" << bad_ng << " bad) ";
    }

    {  // fast transform against the direct oracle, 200 random functions
        size_t bad = 0;
        const std::vector<std::pair<int, std::vector<int>>> fields = {
            {2, {1, 1, 0, 0, 0, 0, 1}}, {3, {1, 2, 0, 1}}, {5, {2, 4, 1}}};
        int runs = 0;
        for (auto& [p, mod] : fields) {
            auto F = make_field(p, static_cast<int>(mod.size()) - 1, mod);
            for (int it = 0; it < 67; ++it, ++runs) {
                PAryFunction f{F, std::vector<uint8_t>(F->size())};
                for (auto& v : f.table) v = static_cast<uint8_t>(rng() % p);
                WalshSpectrum a = walsh_fast(f), b = walsh_direct(f);
                for (uint32_t i = 0; i < F->size(); ++i)
                    if (!(a.values[i] == b.values[i])) {
                        ++bad;
                        break;
                    }
            }
        }
        ok = ok && bad == 0;
        d << "fast-vs-direct(" << runs << " fns: " << bad << " bad) ";
    }

    {  // gauss sum squares
        size_t bad = 0;
        for (int p : {3, 5, 7, 11, 13, 17, 19}) {
            CycInt g = gauss_sum(p);
            if (!(g * g == CycInt::rational(p, legendre(-1, p) * p))) ++bad;
        }
        ok = ok && bad == 0;
        d << "gauss-squares(" << bad << " bad)";
    }

    record("criterion 6: exact property suite", ok, d.str());
}

void criterion7() {
    bool ok = true;
    std::ostringstream d;
    size_t sound_checked = 0, sound_bad = 0;
    for (auto& [combo, fns] : g_corpus) {
        for (auto& ff : fns) {
            LinearCode code = build_code(ff.f);
            WeightDistribution wd = weight_distribution(code);
            MinimalityResult mr = all_minimal_exhaustive(code);
            ++sound_checked;
            if (ashikhmin_barg(wd, combo.p) && !mr.all_minimal) ++sound_bad;
        }
    }
    ok = ok && sound_bad == 0;
    d << "soundness(" << sound_checked << " codes: " << sound_bad << " bad) ";

    // parameter ranges that are satisfiable at desk scale
    struct RangeCase {
        Combo combo;
        ParityCase pc;
    };
    const std::vector<RangeCase> cases = {
        {{3, 4, 0, {2, 0, 0, 2, 1}, false}, ParityCase::OddEven},
        {{2, 4, 0, {1, 1, 0, 0, 1}, false}, ParityCase::BinaryEven},
    };
    for (const auto& rc : cases) {
        auto fns = collect(rc.combo, 1, 70000 + rc.combo.p);
        if (fns.empty()) {
            ok = false;
            d << "range(" << rc.combo.p << "," << rc.combo.m << "," << rc.combo.r << "):no function ";
            continue;
        }
        LinearCode code = build_code(fns[0].f);
        WeightDistribution wd = weight_distribution(code);
        const bool rg = range_guarantee(rc.combo.p, rc.combo.m, rc.combo.r, rc.pc);
        const bool ab = ashikhmin_barg(wd, rc.combo.p);
        const bool oracle = all_minimal_exhaustive(code).all_minimal;
        ok = ok && rg && ab && oracle;
        d << "range(" << rc.combo.p << "," << rc.combo.m << "," << rc.combo.r << "): guarantee=" << rg << " bound=" << ab
          << " oracle=" << oracle << " ";
    }
    record("criterion 7: minimality bound, oracle, and parameter ranges", ok, d.str());
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        build_corpus();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
    } catch (const std::exception& e) {
        std::cout << "[FAIL] acceptance suite aborted: " << e.what() << std::endl;
        return 1;
    }
    size_t failed = 0;
    for (const auto& r : g_results) failed += r.pass ? 0 : 1;
    std::cout << "acceptance: " << (g_results.size() - failed) << "/" << g_results.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}

#include <catch2/catch_amalgamated.hpp>

#include "plateau/json_io.hpp"
#include "plateau/search.hpp"
#include "plateau/theory.hpp"

using namespace plateau;

namespace {

int64_t mult_sum(const PredictedDistribution& d) {
    int64_t s = 0;
    for (auto [w, a] : d.rows) s += a;
    return s;
}

// first searched function matching (r, weakly regular) over the field
FunctionSpec find_sample(const FieldPtr& F, int r, uint64_t seed = 97) {
    SweepOptions opt;
    opt.field = F;
    opt.exponents = quadratic_exponents(F->p(), F->m());
    opt.exhaustive = false;
    opt.random_count = 40000;
    opt.seed = seed;
    opt.threads = 2;
    FunctionSpec out;
    bool found = false;
    sweep(opt,
          [&](const PlateauedReport& rep) {
              if (rep.r != r) return false;
              return F->p() == 2 || rep.regularity == Regularity::Regular || rep.regularity == Regularity::WeaklyRegular;
          },
          [&](const FunctionSpec& spec, const PlateauedReport&) {
              out = spec;
              found = true;
              return false;
          });
    REQUIRE(found);
    return out;
}

}  // namespace

TEST_CASE("binary predicted distributions") {
    SECTION("m=5, r=3 reproduces the reference enumerator") {
        auto pd = predict_binary(5, 3);
        REQUIRE(normalized_rows(pd) ==
                std::vector<std::pair<int64_t, int64_t>>{{0, 1}, {8, 3}, {16, 59}, {24, 1}});
        auto spec = load_function_spec(std::string(PLATEAU_DATA_DIR) + "/p2m5_r3.json");
        REQUIRE(matches(pd, weight_distribution(build_code(spec))));
    }
    SECTION("m=4, r=0 validated against an enumerated bent-function code") {
        auto F = make_field(2, 4, {1, 1, 0, 0, 1});
        auto spec = find_sample(F, 0);
        auto wd = weight_distribution(build_code(spec));
        auto pd = predict_binary(4, 0);
        REQUIRE(matches(pd, wd));
        REQUIRE(normalized_rows(pd) ==
                std::vector<std::pair<int64_t, int64_t>>{{0, 1}, {6, 10}, {8, 15}, {10, 6}});
        REQUIRE(mult_sum(pd) == 32);
    }
    SECTION("guards") {
        REQUIRE_THROWS_AS(predict_binary(4, 1), Error);  // parity
        REQUIRE_THROWS_AS(predict_binary(4, 4), Error);  // range
        REQUIRE_THROWS_AS(predict_binary(1, 1), Error);
    }
}

TEST_CASE("odd characteristic, m+r even") {
    SECTION("reference parameters") {
        auto pd = predict_odd_even(3, 3, 1, -1, -1, false);
        REQUIRE(normalized_rows(pd) ==
                std::vector<std::pair<int64_t, int64_t>>{{0, 1}, {15, 16}, {18, 62}, {24, 2}});
    }
    SECTION("balanced variant") {
        auto pd = predict_odd_even(3, 3, 1, -1, -1, true);
        REQUIRE(normalized_rows(pd) ==
                std::vector<std::pair<int64_t, int64_t>>{{0, 1}, {15, 12}, {18, 62}, {24, 6}});
    }
    SECTION("multiplicities always sum to p^(m+1)") {
        for (int p : {3, 5})
            for (int m = 2; m <= 4; ++m)
                for (int r = 0; r <= m - 2; ++r) {
                    if ((m + r) % 2 != 0) continue;
                    for (int e : {-1, 1})
                        for (int ed : {-1, 1})
                            for (bool bal : {false, true}) {
                                auto pd = predict_odd_even(p, m, r, e, ed, bal);
                                REQUIRE(mult_sum(pd) == static_cast<int64_t>(big_pow(p, static_cast<unsigned>(m + 1))));
                            }
                }
    }
    SECTION("weight offsets carry the sign of (p*)^((m+r)/2)") {
        // p = 3, m+r = 6: (p*)^3 = -27, so the eps = -1 table has its low
        // weight at base - 18, not base + 18
        auto pd = predict_odd_even(3, 4, 2, -1, 1, false);
        auto nr = normalized_rows(pd);
        REQUIRE(nr.front().first == 0);
        REQUIRE(nr[1].first == 36);
        REQUIRE(nr[1].second == 10);
        REQUIRE(nr[3].first == 63);
        REQUIRE(nr[3].second == 8);
    }
}

TEST_CASE("odd characteristic, m+r odd") {
    SECTION("table and proof-side multiplicity forms agree") {
        for (int p : {3, 5, 7})
            for (int m = 2; m <= 5; ++m)
                for (int r = 0; r < m; ++r) {
                    if ((m + r) % 2 != 1) continue;
                    BigInt table_form = big_pow(p, static_cast<unsigned>(m + 1)) -
                                        big_pow(p, static_cast<unsigned>(m - r - 1)) * (p - 1) * (p - 1) - 1;
                    BigInt proof_form = big_pow(p, static_cast<unsigned>(m + 1)) + 2 * big_pow(p, static_cast<unsigned>(m - r)) -
                                        big_pow(p, static_cast<unsigned>(m - r + 1)) - big_pow(p, static_cast<unsigned>(m - r - 1)) - 1;
                    REQUIRE(table_form == proof_form);
                }
    }
    SECTION("balanced case splits the off-center multiplicities evenly") {
        auto pd = predict_odd_odd(3, 4, 1, 1, 1, true);
        REQUIRE(pd.rows[2].second == pd.rows[3].second);
        REQUIRE(pd.rows[2].second == 18);  // p^(m-r-1)(p-1)^2 / 2
        REQUIRE(mult_sum(pd) == 243);
    }
    SECTION("validated against an enumerated bent code over GF(27)") {
        auto F = make_field(3, 3, {1, 2, 0, 1});
        auto spec = find_sample(F, 0);
        PAryFunction f = evaluate(spec);
        auto rep = analyze(walsh_fast(f));
        REQUIRE(rep.r == 0);
        auto pd = predict(rep, 3, 3);
        REQUIRE(matches(pd, weight_distribution(build_code(f))));
    }
    SECTION("guards") {
        REQUIRE_THROWS_AS(predict_odd_odd(3, 3, 1, 1, 1, false), Error);  // parity
        REQUIRE_THROWS_AS(predict_odd_odd(3, 3, 3, 1, 1, false), Error);  // range
        REQUIRE_THROWS_AS(predict_odd_odd(2, 3, 0, 1, 1, false), Error);
    }
}

TEST_CASE("per-codeword predicted weights") {
    SECTION("m+r even reference values") {
        REQUIRE(predicted_weight(3, 3, 1, -1, true, 1) == 15);
        REQUIRE(predicted_weight(3, 3, 1, -1, true, 2) == 15);
        REQUIRE(predicted_weight(3, 3, 1, -1, true, 0) == 24);
        REQUIRE(predicted_weight(3, 3, 1, -1, false, std::nullopt) == 18);  // alpha = 0
        REQUIRE(predicted_weight(3, 3, 1, -1, true, std::nullopt) == 18);   // vanishing walsh value
    }
    SECTION("agrees with the spectral formula on a classified sample") {
        auto spec = load_function_spec(std::string(PLATEAU_DATA_DIR) + "/p3m3_code_26_4.json");
        PAryFunction f = evaluate(spec);
        WalshSpectrum s = walsh_fast(f);
        auto rep = analyze(s);
        const Field& F = *f.field;
        for (int a = 1; a < 3; ++a) {
            int ainv = a == 1 ? 1 : 2;
            for (uint32_t b = 0; b < 27; ++b) {
                uint32_t gamma = F.mul_idx(F.from_residue(ainv).idx, b);
                std::optional<int> g;
                if (!s.values[gamma].is_zero()) g = rep.dual.table[gamma];
                REQUIRE(predicted_weight(3, 3, rep.r, rep.epsilon, true, g) == weight_via_walsh(s, a, b));
            }
        }
    }
    SECTION("rejected for p = 2") { REQUIRE_THROWS_AS(predicted_weight(2, 4, 0, 1, true, 0), Error); }
}

TEST_CASE("pair-set cardinalities") {
    REQUIRE(set_cardinalities(3, 3, 1) == std::pair<int64_t, int64_t>{36, 18});
    REQUIRE(set_cardinalities(3, 3, 0).first == 0);  // bent: full support
    for (int p : {3, 5})
        for (int m = 1; m <= 4; ++m)
            for (int r = 0; r <= m; ++r) {
                auto [w, ws] = set_cardinalities(p, m, r);
                REQUIRE(w + ws == (p - 1) * static_cast<int64_t>(big_pow(p, static_cast<unsigned>(m))));
            }
}

#include <doctest.h>

#include <algorithm>

#include "fmoments/congruence.hpp"
#include "fmoments/golden.hpp"
#include "fmoments/report.hpp"
#include "fmoments/weight_spec.hpp"

using namespace fmoments;

namespace {

ScanParameters params(std::vector<unsigned> ms, std::vector<std::uint64_t> ells, std::size_t n_scan = 2000) {
    ScanParameters p;
    p.m_values = std::move(ms);
    p.ells = std::move(ells);
    p.n_scan = n_scan;
    return p;
}

}  // namespace

TEST_CASE("progressions") {
    CHECK_THROWS(Progression::make(6, 1));
    CHECK_THROWS(Progression::make(5, 5));
    const auto ZZ = CoefficientRing::exact_integer();
    const MomentSeries ms{Series::from_ints(ZZ, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}), "x", "y"};
    CHECK(project(ms, Progression::make(5, 0)) == Series::from_ints(ZZ, {0, 5, 10}));
    CHECK(project(ms, Progression::make(5, 1)) == Series::from_ints(ZZ, {1, 6, 11}));
}

TEST_CASE("scan examples") {
    const auto ord = ordinary_ensemble();
    const DivisorWeight plain{1, Unweighted{}};

    auto r = scan(ord, plain, params({3}, {7}));
    CHECK(r.hits.count({7, 0}) == 1);
    CHECK(r.hits.count({7, 5}) == 1);

    r = scan(ord, plain, params({3}, {7}, 100));
    CHECK(r.triples() == std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>>{{3, 7, 0}, {3, 7, 5}});

    r = scan(ord, plain, params({3}, {5}));
    CHECK(r.nonzero_class().empty());

    const auto over = overpartition_ensemble();
    r = scan(over, canonical_weight(over, 1), params({5}, {5}));
    CHECK(r.triples() == std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>>{{5, 5, 0}});

    CHECK_THROWS(scan(ord, plain, params({3}, {9})));
    CHECK_THROWS(scan(ord, plain, params({3}, {7}, 5)));
}

TEST_CASE("predicted hits") {
    const auto p = predicted_hits({11}, {11});
    CHECK(p.count({11, 11, 0}));
    CHECK(p.count({11, 11, 6}));
    const auto q = predicted_hits({15}, {7});
    CHECK(q.count({15, 7, 0}));
    CHECK(q.count({15, 7, 5}));
    CHECK(predicted_hits({3}, {5}).empty());
}

TEST_CASE("predicted hits are found by the scan") {
    const auto ms = odd_range(13);
    const auto ells = prime_range(5, 13);
    const auto found = scan(ordinary_ensemble(), {1, Unweighted{}}, params(ms, ells, 1000)).triples();
    for (const auto& t : predicted_hits(ms, ells)) {
        CAPTURE(std::get<0>(t));
        CAPTURE(std::get<1>(t));
        CAPTURE(std::get<2>(t));
        CHECK(found.count(t) == 1);
    }
}

TEST_CASE("scan is independent of the thread count") {
    auto p = params(odd_range(15), prime_range(5, 23), 800);
    const auto one = scan(ordinary_ensemble(), {1, Unweighted{}}, p);
    p.jobs = 8;
    const auto eight = scan(ordinary_ensemble(), {1, Unweighted{}}, p);
    CHECK(one.hits == eight.hits);
    CHECK(to_json(one).dump() == to_json(eight).dump());
}

TEST_CASE("certify examples") {
    const auto ord = ordinary_ensemble();
    auto rec = certify(ord, {3, Unweighted{}}, Progression::make(7, 5), 7, SturmConfig::sharp(LevelModel::Natural));
    CHECK(rec.passed());
    CHECK(rec.bound_B == 14);
    CHECK(rec.max_index_checked == 103);
    CHECK(rec.level() == 28);

    rec = certify(ord, {7, Unweighted{}}, Progression::make(11, 6), 11, SturmConfig::sharp(LevelModel::Safe));
    CHECK(rec.passed());
    CHECK(rec.bound_B == 495);
    CHECK(rec.max_index_checked == 5451);

    rec = certify(ord, {3, Unweighted{}}, Progression::make(5, 1), 5, SturmConfig{});
    REQUIRE_FALSE(rec.passed());
    CHECK(rec.failure->n == 0);
    CHECK(rec.failure->t == 1);
    CHECK(rec.failure->residue == 1);

    const auto chi5 = parse_weight_spec("m=3,twist=kronecker(5)");
    rec = certify_filtered(chi5, Progression::make(5, 4), 5, SturmConfig::sharp(LevelModel::Safe));
    CHECK(rec.passed());
    CHECK(rec.bound_B == 52);
    CHECK(rec.level() == 100);
    CHECK_THROWS(certify_filtered({3, Unweighted{}}, Progression::make(5, 4), 5, SturmConfig{}));
    CHECK(filtered_level(SturmConfig::sharp(LevelModel::Natural), 7, 5) == 35);
    CHECK(filtered_level(SturmConfig::sharp(LevelModel::Safe), 7, 5) == 35 * 35);
}

TEST_CASE("certification respects the coefficient budget") {
    CertifyOptions tight;
    tight.max_coefficients = 500;
    CHECK_THROWS_AS(certify(ordinary_ensemble(), {3, Unweighted{}}, Progression::make(7, 0), 7,
                            SturmConfig::sharp(LevelModel::Safe), tight),
                    ResourceLimitError);
}

TEST_CASE("larger bounds only extend the checked range") {
    // A progression that passes at the safe level also passes at the natural
    // level, and the checked range grows with the bound.
    const auto ord = ordinary_ensemble();
    for (const auto& [m, ell, r] : std::vector<std::tuple<unsigned, std::uint64_t, std::uint64_t>>{{3, 7, 0}, {1, 5, 4}, {3, 11, 6}}) {
        const auto nat = certify(ord, {m, Unweighted{}}, Progression::make(ell, r), ell, SturmConfig::sharp(LevelModel::Natural));
        const auto safe = certify(ord, {m, Unweighted{}}, Progression::make(ell, r), ell, SturmConfig::conservative(LevelModel::Safe));
        CHECK(nat.passed());
        CHECK(safe.passed());
        CHECK(safe.max_index_checked >= nat.max_index_checked);
    }
}

TEST_CASE("golden tables") {
    CHECK(golden_rows(GoldenTable::Ordinary).size() == 10);
    CHECK(golden_rows(GoldenTable::Overpartition).size() == 6);
    CHECK(golden_rows(GoldenTable::Filtered).size() == 2);
    for (const auto& row : golden_rows(GoldenTable::Ordinary)) CHECK(reproduce(row).matches());
    for (const auto& row : golden_rows(GoldenTable::Filtered)) CHECK(reproduce(row).matches());
    CHECK(parse_golden_table("filtered") == GoldenTable::Filtered);
    CHECK_THROWS(parse_golden_table("other"));
}

TEST_CASE("report serialisation") {
    const auto rec = certify(ordinary_ensemble(), {3, Unweighted{}}, Progression::make(7, 5), 7,
                             SturmConfig::sharp(LevelModel::Safe));
    const auto j = to_json(rec);
    for (const char* key : {"ensemble", "weight", "m", "ell", "r", "modulus", "mode", "level", "bound_B",
                            "max_index_checked", "status", "fail_witness"})
        CHECK(j.contains(key));
    CHECK(j["status"] == "PASS");
    CHECK(j["level"] == 196);
    CHECK(j["fail_witness"].is_null());
    CHECK(to_csv_row(rec) == "3,7,5,7,49,Gamma0(4*ell^2),98,691,CERTIFIED");
    CHECK(csv_header_certification() == "m,ell,r,prime,L,model,sturm_B,max_index,status");

    const auto fail = certify(ordinary_ensemble(), {3, Unweighted{}}, Progression::make(5, 1), 5, SturmConfig{});
    CHECK(to_json(fail)["fail_witness"]["t"] == 1);

    const auto report = scan(ordinary_ensemble(), {1, Unweighted{}}, params({3}, {7}, 100));
    const auto text = to_text(report);
    CHECK(text.find("=== r = 0 classes ===") != std::string::npos);
    CHECK(text.find("(ell,r)=(7,5): m = [3]") != std::string::npos);
    CHECK(to_json(report)["nonzero_class"][0]["r"] == 5);
}

TEST_CASE("filtered and twisted sums outside ell = 5 show no progressions") {
    const auto ord = ordinary_ensemble();
    const std::vector<std::pair<std::int64_t, std::uint64_t>> matched = {{-7, 7}, {-11, 11}, {13, 13}};
    for (const auto& [d, ell] : matched) {
        CAPTURE(ell);
        const DivisorWeight w{3, DirichletCharacterSpec{KroneckerCharacter{d}}};
        // the twist is the Legendre symbol (. / ell)
        for (std::uint64_t k = 1; k < 3 * ell; ++k)
            if (k % ell) CHECK(w.weight(k) == (pow_mod(k % ell, (ell - 1) / 2, ell) == 1 ? 1 : -1));
        CHECK(scan(ord, w, params({3, 11}, {ell})).hits.empty());
    }
    for (const char* sel : {"filter=odd()", "twist=kronecker(-4)", "twist=kronecker(-3)"}) {
        CAPTURE(sel);
        const DivisorWeight w{3, parse_weight_selector(sel).selector};
        CHECK(scan(ord, w, params({3, 11}, {5, 7, 11, 13})).hits.empty());
    }
}

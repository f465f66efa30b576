#include <doctest.h>

#include <cmath>

#include "bipcausal/cointegration.hpp"
#include "bipcausal/errors.hpp"
#include "oracles.hpp"

using namespace bipcausal;

namespace {

TimeSeries monthly_from(const std::string& label, const std::vector<double>& values,
                        int start_year = 2000) {
    std::vector<DatedValue> pts;
    int y = start_year, m = 1;
    for (double v : values) {
        pts.push_back({Date(y, m, 1), v});
        if (++m > 12) {
            m = 1;
            ++y;
        }
    }
    return TimeSeries(label, Frequency::Monthly, std::move(pts));
}

} // namespace

TEST_CASE("cointegrated pairs are detected, independent walks are not") {
    int coint_hits = 0, indep_hits = 0;
    const int reps = 40;
    for (int s = 0; s < reps; ++s) {
        const auto xw = oracles::random_walk(100 + s, 300);
        fixture::Rng rng(900 + s);
        std::vector<double> yv(300);
        for (std::size_t i = 0; i < yv.size(); ++i) yv[i] = 2.0 * xw[i] + rng.gaussian();
        const auto r = coint::engle_granger(monthly_from("x", xw), monthly_from("y", yv));
        CHECK(r.cointegrated_at_5pct == r.adf.reject_unit_root);
        if (r.cointegrated_at_5pct) ++coint_hits;

        const auto x2 = oracles::random_walk(10100 + s, 300);
        const auto y2 = oracles::random_walk(20100 + s, 300);
        if (coint::engle_granger(monthly_from("x", x2), monthly_from("y", y2))
                .cointegrated_at_5pct)
            ++indep_hits;
    }
    CHECK(coint_hits >= reps * 9 / 10);
    CHECK(indep_hits <= reps / 10);
}

TEST_CASE("identical series short-circuit as degenerate") {
    const auto xw = oracles::random_walk(7, 120);
    const auto r = coint::engle_granger(monthly_from("x", xw), monthly_from("y", xw));
    CHECK(r.cointegrated_at_5pct);
    CHECK(r.degenerate);
}

TEST_CASE("decision is invariant under positive affine rescaling of x") {
    const auto xw = oracles::random_walk(42, 200);
    fixture::Rng rng(43);
    std::vector<double> yv(200);
    for (std::size_t i = 0; i < yv.size(); ++i) yv[i] = 1.5 * xw[i] + rng.gaussian();

    std::vector<double> xs(200);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 3.25 * xw[i] - 11.0;

    const auto r1 = coint::engle_granger(monthly_from("x", xw), monthly_from("y", yv));
    const auto r2 = coint::engle_granger(monthly_from("x", xs), monthly_from("y", yv));
    CHECK(std::fabs(r1.adf.test_statistic - r2.adf.test_statistic) < 1e-9);
    CHECK(r1.cointegrated_at_5pct == r2.cointegrated_at_5pct);
}

TEST_CASE("insufficient overlap is an alignment error") {
    const auto a = monthly_from("a", std::vector<double>(20, 1.0), 2000);
    const auto b = monthly_from("b", oracles::random_walk(1, 20), 2000);
    CHECK_THROWS_AS((void)coint::engle_granger(a, b), AlignmentError);
}

TEST_CASE("pair screening keeps the full matrix shape") {
    std::vector<TimeSeries> features, buckets;
    for (int i = 0; i < 2; ++i)
        features.push_back(monthly_from("f" + std::to_string(i), oracles::random_walk(60 + i, 90)));
    for (int i = 0; i < 2; ++i) {
        fixture::Rng rng(80 + i);
        std::vector<double> v(90);
        for (std::size_t t = 0; t < v.size(); ++t)
            v[t] = 2.0 * features[0].points()[t].value + rng.gaussian();
        buckets.push_back(monthly_from("b" + std::to_string(i), v));
    }
    const auto m = coint::screen_all_pairs(features, buckets);
    CHECK(m.cells.size() == 4);
    CHECK(m.feature_labels.size() == 2);
    CHECK(m.bucket_labels.size() == 2);
    CHECK(m.at(0, 1).feature_label == "f0");
    CHECK(m.at(1, 0).bucket_label == "b0");

    SUBCASE("empty feature list yields an empty matrix") {
        const auto e = coint::screen_all_pairs({}, buckets);
        CHECK(e.cells.empty());
    }

    SUBCASE("a failing pair does not abort the rest") {
        std::vector<TimeSeries> shortf = {
            monthly_from("tiny", std::vector<double>(10, 1.0), 1990)};
        const auto bad = coint::screen_all_pairs(shortf, buckets);
        CHECK(bad.cells.size() == 2);
        CHECK(bad.errors.size() == 2); // alignment failures recorded, not thrown
    }
}

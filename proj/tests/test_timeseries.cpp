#include <doctest.h>

#include <cmath>
#include <fstream>

#include "bipcausal/csv.hpp"
#include "bipcausal/errors.hpp"
#include "bipcausal/fixture.hpp"
#include "bipcausal/timeseries.hpp"

using namespace bipcausal;

namespace {

TimeSeries daily(const std::string& label, const Date& start, const std::vector<double>& values) {
    std::vector<DatedValue> pts;
    for (std::size_t i = 0; i < values.size(); ++i)
        pts.push_back({Date::from_serial(start.serial() + (std::int64_t)i), values[i]});
    return TimeSeries(label, Frequency::Daily, std::move(pts));
}

} // namespace

TEST_CASE("date parsing and month keys") {
    const Date d = Date::parse("2021-02-28");
    CHECK(d.year() == 2021);
    CHECK(d.month() == 2);
    CHECK(d.day() == 28);
    CHECK(d.to_string() == "2021-02-28");
    CHECK(d.month_key() == Date(2021, 2, 1));
    CHECK(Date::parse("2020-02-29").to_string() == "2020-02-29"); // leap day
    CHECK_THROWS_AS(Date::parse("2021-02-29"), ParseError);
    CHECK_THROWS_AS(Date::parse("2021-13-01"), ParseError);
    CHECK_THROWS_AS(Date::parse("21-01-01"), ParseError);
    CHECK(Date(2021, 3, 1) > Date(2021, 2, 28));
}

TEST_CASE("series construction enforces order and finiteness") {
    CHECK_THROWS_AS(TimeSeries("x", Frequency::Daily,
                               {{Date(2021, 1, 2), 1.0}, {Date(2021, 1, 1), 2.0}}),
                    DomainError);
    CHECK_THROWS_AS(TimeSeries("x", Frequency::Daily,
                               {{Date(2021, 1, 1), 1.0}, {Date(2021, 1, 1), 2.0}}),
                    DomainError);
    CHECK_THROWS_AS(TimeSeries("x", Frequency::Daily, {{Date(2021, 1, 1), NAN}}), DomainError);
}

TEST_CASE("first differences") {
    const TimeSeries ts = daily("x", Date(2021, 1, 1), {1.0, 3.0, 2.0});
    const TimeSeries d = diff_transform(ts);
    REQUIRE(d.size() == 2);
    CHECK(d[0].value == doctest::Approx(2.0));
    CHECK(d[1].value == doctest::Approx(-1.0));
    CHECK(d[0].date == Date(2021, 1, 2)); // later point of each pair

    const TimeSeries c = diff_transform(daily("c", Date(2021, 1, 1), {5, 5, 5, 5}));
    for (const auto& p : c.points()) CHECK(p.value == 0.0);

    CHECK_THROWS_AS(diff_transform(daily("short", Date(2021, 1, 1), {1.0})), LengthError);
}

TEST_CASE("first differences of a daily rate export match row-by-row subtraction") {
    const std::string path = std::string(TEST_DATA_DIR) + "/daily_rate_sample.csv";
    const TimeSeries ts = csv::load_series(path, "rate", Frequency::Daily).series;
    REQUIRE(ts.size() == 10);
    const TimeSeries d = diff_transform(ts);
    REQUIRE(d.size() == 9);
    // independent recomputation straight off the parsed rows
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i].value == doctest::Approx(ts[i + 1].value - ts[i].value).epsilon(1e-15));
        CHECK(d[i].date == ts[i + 1].date);
    }
}

TEST_CASE("log changes") {
    const TimeSeries e = daily("x", Date(2021, 1, 1), {1.0, std::exp(1.0)});
    CHECK(log_change_transform(e)[0].value == doctest::Approx(1.0).epsilon(1e-12));

    const TimeSeries c = log_change_transform(daily("c", Date(2021, 1, 1), {7, 7, 7}));
    REQUIRE(c.size() == 2);
    for (const auto& p : c.points()) CHECK(p.value == doctest::Approx(0.0));

    // ln(1.1) evaluated independently at high precision
    const TimeSeries g = daily("g", Date(2021, 1, 1), {100.0, 110.0});
    CHECK(log_change_transform(g)[0].value ==
          doctest::Approx(0.09531017980432486).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(
        (void)log_change_transform(daily("neg", Date(2021, 1, 1), {1.0, -2.0, 3.0})),
        doctest::Contains("2021-01-02"), DomainError);
}

TEST_CASE("transform round trips") {
    fixture::Rng rng(991);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> vals(40);
        double acc = 5.0;
        for (auto& v : vals) {
            acc += 0.3 * rng.gaussian();
            v = acc;
        }
        const TimeSeries ts = daily("w", Date(2020, 1, 1), vals);
        const TimeSeries d = diff_transform(ts);
        CHECK(d.size() == ts.size() - 1);

        // cumulative sum from the first point reconstructs the series
        double run = ts[0].value;
        double scale = std::fabs(run);
        for (std::size_t i = 0; i < d.size(); ++i) {
            run += d[i].value;
            scale = std::max(scale, std::fabs(ts[i + 1].value));
            CHECK(std::fabs(run - ts[i + 1].value) <= 1e-12 * std::max(1.0, scale));
        }

        // strictly positive variant for the log round trip
        std::vector<double> pos(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) pos[i] = std::exp(vals[i] / 10.0);
        const TimeSeries pts = daily("p", Date(2020, 1, 1), pos);
        const TimeSeries lc = log_change_transform(pts);
        CHECK(lc.size() == pts.size() - 1);
        double lrun = pts[0].value;
        for (std::size_t i = 0; i < lc.size(); ++i) {
            lrun *= std::exp(lc[i].value);
            CHECK(std::fabs(lrun - pts[i + 1].value) <= 1e-10 * std::fabs(pts[i + 1].value));
        }
    }
}

TEST_CASE("monthly downsampling keeps the last observation per month") {
    std::vector<DatedValue> pts;
    for (int day : {5, 12, 19, 26}) pts.push_back({Date(2021, 3, day), (double)day});
    pts.push_back({Date(2021, 3, 31), 99.0});
    for (int day : {7, 21}) pts.push_back({Date(2021, 4, day), (double)day});
    const TimeSeries ts("w", Frequency::Weekly, pts);
    const TimeSeries m = downsample_monthly(ts);
    REQUIRE(m.size() == 2);
    CHECK(m[0].date == Date(2021, 3, 1));
    CHECK(m[0].value == 99.0); // fifth reading of March wins
    CHECK(m[1].date == Date(2021, 4, 1));
    CHECK(m[1].value == 21.0);
    CHECK(m.frequency() == Frequency::Monthly);

    SUBCASE("idempotent") {
        const TimeSeries again = downsample_monthly(m);
        REQUIRE(again.size() == m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            CHECK(again[i].date == m[i].date);
            CHECK(again[i].value == m[i].value);
        }
    }

    SUBCASE("daily january-february input yields one point per month") {
        std::vector<DatedValue> dd;
        for (int s = 0; s < 45; ++s)
            dd.push_back({Date::from_serial(Date(2021, 1, 1).serial() + s), (double)s});
        CHECK(downsample_monthly(TimeSeries("d", Frequency::Daily, dd)).size() == 2);
    }

    CHECK_THROWS_AS(downsample_monthly(TimeSeries("e", Frequency::Daily, {})), LengthError);
}

TEST_CASE("panel join intersects months") {
    auto monthly = [](const std::string& label, const std::vector<int>& months,
                      double base) {
        std::vector<DatedValue> pts;
        for (int m : months) pts.push_back({Date(2021, m, 1), base + m});
        return TimeSeries(label, Frequency::Monthly, pts);
    };
    const TimeSeries y = monthly("y", {1, 2, 3}, 0.0);
    const TimeSeries a = monthly("a", {2, 3, 4}, 10.0);

    const Panel p = build_panel(y, {a});
    REQUIRE(p.rows() == 2);
    CHECK(p.months[0] == Date(2021, 2, 1));
    CHECK(p.months[1] == Date(2021, 3, 1));
    CHECK(p.dependent.values == std::vector<double>{2.0, 3.0});
    CHECK(p.features[0].values == std::vector<double>{12.0, 13.0});

    SUBCASE("gap month in the dependent is absent from the panel") {
        const Panel q = build_panel(monthly("y", {1, 3, 4}, 0.0), {a});
        REQUIRE(q.rows() == 2);
        CHECK(q.months[0] == Date(2021, 3, 1));
        CHECK(q.months[1] == Date(2021, 4, 1));
    }

    SUBCASE("column order follows input order") {
        const TimeSeries b = monthly("b", {2, 3}, 20.0);
        const Panel q = build_panel(y, {b, a});
        CHECK(q.features[0].name == "b");
        CHECK(q.features[1].name == "a");
    }

    SUBCASE("missing-month position does not matter") {
        // drop a month at the start of one feature vs the end of another
        const Panel q1 = build_panel(y, {monthly("a", {2, 3}, 10.0)});
        const Panel q2 = build_panel(y, {monthly("a", {2, 3, 7}, 10.0)});
        CHECK(q1.months == q2.months);
    }

    CHECK_THROWS_AS(build_panel(monthly("y", {1}, 0.0), {monthly("a", {2}, 0.0)}),
                    EmptyPanelError);
}

TEST_CASE("csv ingestion sorts, de-duplicates and validates") {
    const std::string dir = std::string(TEST_TMP_DIR);
    const std::string path = dir + "/series_in.csv";
    {
        std::ofstream f(path);
        f << "date,value\n";
        f << "2021-01-03,3.0\n";
        f << "2021-01-01,1.0\n";
        f << "2021-01-02,2.0\n";
        f << "2021-01-01,1.5\n"; // duplicate: later row wins
    }
    const auto loaded = csv::load_series(path, "s", Frequency::Daily);
    REQUIRE(loaded.series.size() == 3);
    CHECK(loaded.series[0].value == 1.5);
    CHECK(loaded.series[1].value == 2.0);
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings[0].find("duplicate") != std::string::npos);

    {
        std::ofstream f(path);
        f << "date,value\n2021-01-01,abc\n";
    }
    CHECK_THROWS_WITH_AS((void)csv::load_series(path, "s", Frequency::Daily),
                         doctest::Contains("line 2"), ParseError);

    {
        std::ofstream f(path);
        f << "date,value\n";
    }
    CHECK_THROWS_AS((void)csv::load_series(path, "s", Frequency::Daily), ParseError);

    {
        std::ofstream f(path);
        f << "day,val\n2021-01-01,1\n";
    }
    CHECK_THROWS_AS((void)csv::load_series(path, "s", Frequency::Daily), ParseError);
}

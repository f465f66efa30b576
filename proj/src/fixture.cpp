#include "bipcausal/fixture.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <vector>

#include "bipcausal/csv.hpp"
#include "bipcausal/date.hpp"
#include "bipcausal/errors.hpp"
#include "bipcausal/events.hpp"
#include "bipcausal/pipeline.hpp"
#include "bipcausal/timeseries.hpp"

namespace bipcausal::fixture {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Deterministic RNG: mt19937_64 core written out explicitly so the stream
// does not depend on the standard library's distribution implementations.
// ---------------------------------------------------------------------------

std::uint64_t Rng::next_word() {
    constexpr int kN = 312, kM = 156;
    constexpr std::uint64_t kMatrixA = 0xB5026F5AA96619E9ull;
    constexpr std::uint64_t kUpperMask = 0xFFFFFFFF80000000ull;
    constexpr std::uint64_t kLowerMask = 0x7FFFFFFFull;
    if (mti_ > kN) {
        mt_[0] = state_;
        for (int i = 1; i < kN; ++i)
            mt_[i] = 6364136223846793005ull * (mt_[i - 1] ^ (mt_[i - 1] >> 62)) +
                     static_cast<std::uint64_t>(i);
        mti_ = kN;
    }
    if (mti_ >= kN) {
        for (int i = 0; i < kN; ++i) {
            const std::uint64_t x = (mt_[i] & kUpperMask) | (mt_[(i + 1) % kN] & kLowerMask);
            mt_[i] = mt_[(i + kM) % kN] ^ (x >> 1) ^ ((x & 1ull) ? kMatrixA : 0ull);
        }
        mti_ = 0;
    }
    std::uint64_t x = mt_[mti_++];
    x ^= (x >> 29) & 0x5555555555555555ull;
    x ^= (x << 17) & 0x71D67FFFEDA60000ull;
    x ^= (x << 37) & 0xFFF7EEE000000000ull;
    x ^= x >> 43;
    return x;
}

double Rng::uniform() {
    // 53-bit mantissa, strictly inside (0, 1)
    const double v = static_cast<double>(next_word() >> 11) * (1.0 / 9007199254740992.0);
    return v <= 0.0 ? 5e-324 : v;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

namespace {

std::vector<Date> month_grid(const Date& first, const Date& last) {
    std::vector<Date> grid;
    int y = first.year(), m = first.month();
    while (true) {
        const Date d(y, m, 1);
        if (d > last) break;
        grid.push_back(d);
        if (++m > 12) {
            m = 1;
            ++y;
        }
    }
    return grid;
}

std::vector<Date> daily_grid(const Date& first, const Date& last) {
    std::vector<Date> grid;
    for (auto s = first.serial(); s <= last.serial(); ++s) grid.push_back(Date::from_serial(s));
    return grid;
}

std::vector<Date> weekly_grid(const Date& first, const Date& last) {
    std::vector<Date> grid;
    for (auto s = first.serial(); s <= last.serial(); s += 7) grid.push_back(Date::from_serial(s));
    return grid;
}

TimeSeries random_walk(const std::string& label, Frequency freq, const std::vector<Date>& dates,
                       Rng& rng, double start, double step) {
    std::vector<DatedValue> pts;
    double v = start;
    for (const Date& d : dates) {
        v += step * rng.gaussian();
        pts.push_back({d, v});
    }
    return TimeSeries(label, freq, std::move(pts));
}

TimeSeries exp_random_walk(const std::string& label, Frequency freq,
                           const std::vector<Date>& dates, Rng& rng, double start, double vol,
                           double drift) {
    std::vector<DatedValue> pts;
    double v = start;
    for (const Date& d : dates) {
        v *= std::exp(drift + vol * rng.gaussian());
        pts.push_back({d, v});
    }
    return TimeSeries(label, freq, std::move(pts));
}

} // namespace

FixtureResult generate(const std::string& dir, const std::string& registry_path,
                       std::uint64_t seed) {
    const fs::path root(dir);
    const fs::path data = root / "data";
    fs::create_directories(data);

    const Date first_day(2010, 6, 1);
    const Date last_day(2024, 12, 28);
    const auto months = month_grid(Date(2010, 7, 1), Date(2024, 12, 1));
    const auto days = daily_grid(first_day, last_day);
    const auto weeks = weekly_grid(first_day, last_day);

    Rng rng(seed);

    struct Spec {
        std::string label;
        std::string freq;
        std::string transform;
        TimeSeries ts;
    };
    std::vector<Spec> features;

    auto add = [&](const std::string& label, const std::string& freq, const std::string& transform,
                   TimeSeries ts) {
        features.push_back({label, freq, transform, std::move(ts)});
    };

    // rate-style series, first-order differenced downstream
    add("Federal Funds Rate", "daily", "diff",
        random_walk("Federal Funds Rate", Frequency::Daily, days, rng, 2.0, 0.01));
    add("5 Year Gilts (Nominal Par Yield)", "daily", "diff",
        random_walk("5 Year Gilts (Nominal Par Yield)", Frequency::Daily, days, rng, 1.5, 0.012));
    add("10 Year Gilts (Nominal Par Yield)", "daily", "diff",
        random_walk("10 Year Gilts (Nominal Par Yield)", Frequency::Daily, days, rng, 2.2, 0.012));
    add("5 Year Corporate Bond Par Yield", "monthly", "diff",
        random_walk("5 Year Corporate Bond Par Yield", Frequency::Monthly, months, rng, 3.0, 0.08));
    add("10 Year Corporate Bond Par Yield", "monthly", "diff",
        random_walk("10 Year Corporate Bond Par Yield", Frequency::Monthly, months, rng, 3.5, 0.08));
    add("Unemployment Rate", "monthly", "diff",
        random_walk("Unemployment Rate", Frequency::Monthly, months, rng, 6.0, 0.1));

    // level-style series, log-changed downstream
    add("Gold Price Against USD", "daily", "log_change",
        exp_random_walk("Gold Price Against USD", Frequency::Daily, days, rng, 1200.0, 0.008, 0.0001));
    add("Consumer Price Index", "monthly", "log_change",
        exp_random_walk("Consumer Price Index", Frequency::Monthly, months, rng, 220.0, 0.002, 0.0015));
    add("M1", "weekly", "log_change",
        exp_random_walk("M1", Frequency::Weekly, weeks, rng, 1800.0, 0.004, 0.001));
    add("M2", "weekly", "log_change",
        exp_random_walk("M2", Frequency::Weekly, weeks, rng, 8800.0, 0.003, 0.001));
    add("Nonfarm Payroll", "monthly", "log_change",
        exp_random_walk("Nonfarm Payroll", Frequency::Monthly, months, rng, 130000.0, 0.002, 0.001));
    add("Semiconductor PPI", "monthly", "log_change",
        exp_random_walk("Semiconductor PPI", Frequency::Monthly, months, rng, 60.0, 0.004, 0.0));

    // monthly increments of the drivers, as the transforms will see them
    auto monthly_diff = [](const TimeSeries& ts) {
        return diff_transform(downsample_monthly(ts));
    };
    auto monthly_logchange = [](const TimeSeries& ts) {
        return log_change_transform(downsample_monthly(ts));
    };
    const TimeSeries fed_inc = monthly_diff(features[0].ts);
    const TimeSeries m2_inc = monthly_logchange(features[9].ts);

    std::map<Date, double> fed_by_month, m2_by_month;
    for (const auto& p : fed_inc.points()) fed_by_month[p.date] = p.value;
    for (const auto& p : m2_inc.points()) m2_by_month[p.date] = p.value;

    // event signals over the bucket months from the bundled registry
    const events::BipRegistry registry = events::load_registry(registry_path);
    const auto sets = events::builtin_sets(registry);
    auto signal_values = [&](const std::string& name) {
        for (const auto& s : sets)
            if (s.name == name) return events::build_signal(registry, s, months).values;
        throw ConfigError("fixture: unknown set '" + name + "'");
    };
    const std::vector<double> major_sig = signal_values("Major Economy-Related BIPs");
    const std::vector<double> economy_sig = signal_values("All Economy-Related BIPs");

    const std::vector<std::string> bucket_names = {
        "From 0 to 0.001",    "From 0.001 to 0.01",    "From 0.01 to 0.1",
        "From 0.1 to 1",      "From 1 to 10",          "From 10 to 100",
        "From 100 to 1000",   "From 1000 to 10000",    "From 10000 to 100000",
        "From 100000 to infinity"};

    std::vector<TimeSeries> buckets;
    for (std::size_t b = 0; b < bucket_names.size(); ++b) {
        std::vector<DatedValue> pts;
        double level = 1000.0 * static_cast<double>(b + 1);
        double ar = 0.0;
        pts.push_back({months[0], level});
        for (std::size_t i = 1; i < months.size(); ++i) {
            ar = 0.3 * ar + 0.02 * rng.gaussian();
            double r = ar;
            const Date& m = months[i];
            if (b == 0 && fed_by_month.count(m)) r += 0.9 * fed_by_month.at(m);
            if (b == 5 && m2_by_month.count(m)) r += 0.8 * m2_by_month.at(m);
            if (b == 1 && i >= 3) r += 0.45 * major_sig[i - 3];
            if (b == 8 && i >= 1) r += 0.25 * economy_sig[i - 1];
            level *= std::exp(r);
            pts.push_back({m, level});
        }
        buckets.push_back(TimeSeries(bucket_names[b], Frequency::Monthly, std::move(pts)));
    }

    // write everything out
    for (const auto& f : features)
        csv::write_series((data / (pipeline::slug(f.label) + ".csv")).string(), f.ts);
    for (const auto& b : buckets)
        csv::write_series((data / (pipeline::slug(b.label()) + ".csv")).string(), b);
    fs::copy_file(registry_path, root / "bips.csv", fs::copy_options::overwrite_existing);

    std::ofstream cfg(root / "config.json");
    cfg << "{\n";
    cfg << "  // synthetic dataset configuration (seeded generators)\n";
    cfg << "  \"output_dir\": \"out\",\n";
    cfg << "  \"registry\": \"bips.csv\",\n";
    cfg << "  \"features\": [\n";
    for (std::size_t i = 0; i < features.size(); ++i) {
        const auto& f = features[i];
        cfg << "    {\"label\": \"" << f.label << "\", \"path\": \"data/"
            << pipeline::slug(f.label) << ".csv\", \"frequency\": \"" << f.freq
            << "\", \"transform\": \"" << f.transform << "\"}"
            << (i + 1 < features.size() ? "," : "") << "\n";
    }
    cfg << "  ],\n";
    cfg << "  \"buckets\": [\n";
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        cfg << "    {\"label\": \"" << bucket_names[i] << "\", \"path\": \"data/"
            << pipeline::slug(bucket_names[i])
            << ".csv\", \"frequency\": \"monthly\", \"transform\": \"log_change\"}"
            << (i + 1 < buckets.size() ? "," : "") << "\n";
    }
    cfg << "  ]\n";
    cfg << "}\n";
    cfg.close();

    FixtureResult r;
    r.config_path = (root / "config.json").string();
    r.data_dir = data.string();
    return r;
}

} // namespace bipcausal::fixture

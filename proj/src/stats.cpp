#include "bipcausal/stats.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "bipcausal/errors.hpp"

namespace bipcausal::stats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Continued fraction for the incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kFpMin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

Eigen::MatrixXd assemble_design(const Matrix& columns, std::size_t n, bool intercept) {
    const std::size_t k = columns.size() + (intercept ? 1 : 0);
    Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
    std::size_t j = 0;
    if (intercept) {
        X.col(0).setOnes();
        j = 1;
    }
    for (const auto& col : columns) {
        if (col.size() != n)
            throw AlignmentError("ols_fit: column length " + std::to_string(col.size()) +
                                 " does not match y length " + std::to_string(n));
        for (std::size_t i = 0; i < n; ++i)
            X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
        ++j;
    }
    return X;
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0)
        throw DomainError("regularized_incomplete_beta: a and b must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    // symmetry keeps the continued fraction in its fast-converging regime
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, std::size_t df) {
    if (df == 0) throw DomainError("student_t_two_sided_p: df must be >= 1");
    if (!std::isfinite(t)) return std::isnan(t) ? std::nan("") : 0.0;
    const double d = static_cast<double>(df);
    // 2*P(T >= |t|) = I_{d/(d+t^2)}(d/2, 1/2)
    return regularized_incomplete_beta(d / 2.0, 0.5, d / (d + t * t));
}

double f_upper_tail_p(double f, std::size_t df1, std::size_t df2) {
    if (df1 == 0 || df2 == 0) throw DomainError("f_upper_tail_p: degrees of freedom must be >= 1");
    if (f <= 0.0) return 1.0;
    if (!std::isfinite(f)) return 0.0;
    const double d1 = static_cast<double>(df1);
    const double d2 = static_cast<double>(df2);
    return regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

double normal_quantile(double p) {
    if (p <= 0.0 || p >= 1.0) throw DomainError("normal_quantile: p must be in (0,1)");
    // Acklam's rational approximation polished with one Halley step.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // Halley refinement against erfc
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

RegressionFit ols_fit(const Matrix& columns, const std::vector<double>& y, bool intercept,
                      const std::vector<std::string>* names) {
    const std::size_t n = y.size();
    const std::size_t k = columns.size() + (intercept ? 1 : 0);
    if (k == 0) throw InsufficientDataError("ols_fit: no regressors");
    if (n <= k)
        throw InsufficientDataError("ols_fit: " + std::to_string(n) + " observations for " +
                                    std::to_string(k) + " regressors");

    const Eigen::MatrixXd X = assemble_design(columns, n, intercept);
    const Eigen::VectorXd yv = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n));

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    qr.setThreshold(1e-10);
    if (static_cast<std::size_t>(qr.rank()) < k) {
        std::string msg = "ols_fit: rank-deficient design (rank " + std::to_string(qr.rank()) +
                          " of " + std::to_string(k) + ")";
        const auto perm = qr.colsPermutation().indices();
        std::string dep;
        for (Eigen::Index i = qr.rank(); i < perm.size(); ++i) {
            const Eigen::Index col = perm(i);
            if (!dep.empty()) dep += ", ";
            if (intercept && col == 0) {
                dep += "(intercept)";
            } else {
                const std::size_t ci = static_cast<std::size_t>(col) - (intercept ? 1 : 0);
                dep += names && ci < names->size() ? (*names)[ci] : "column " + std::to_string(ci);
            }
        }
        if (!dep.empty()) msg += "; dependent columns: " + dep;
        throw SingularityError(msg);
    }

    RegressionFit fit;
    fit.has_intercept = intercept;
    fit.n_observations = n;

    const Eigen::VectorXd beta = qr.solve(yv);
    const Eigen::VectorXd resid = yv - X * beta;
    fit.rss = resid.squaredNorm();
    const double sigma2 = fit.rss / static_cast<double>(n - k);

    const Eigen::MatrixXd xtx_inv =
        (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k),
                                                                   static_cast<Eigen::Index>(k)));

    fit.coefficients.resize(k);
    fit.standard_errors.resize(k);
    fit.t_statistics.resize(k);
    fit.p_values.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        fit.coefficients[j] = beta(jj);
        const double var = std::max(0.0, sigma2 * xtx_inv(jj, jj));
        const double se = std::sqrt(var);
        fit.standard_errors[j] = se;
        const double t = se > 0.0 ? beta(jj) / se : (beta(jj) == 0.0 ? 0.0 : kInf);
        fit.t_statistics[j] = t;
        fit.p_values[j] = student_t_two_sided_p(t, n - k);
    }
    fit.residuals.assign(resid.data(), resid.data() + resid.size());
    return fit;
}

double projection_rss(const Matrix& columns, const std::vector<double>& y, bool intercept) {
    const std::size_t n = y.size();
    const Eigen::MatrixXd X = assemble_design(columns, n, intercept);
    const Eigen::VectorXd yv = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n));
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    qr.setThreshold(1e-10);
    const Eigen::VectorXd beta = qr.solve(yv);
    return (yv - X * beta).squaredNorm();
}

std::vector<double> vif(const Matrix& columns) {
    if (columns.size() < 2) throw DomainError("vif: need at least 2 columns");
    const std::size_t n = columns.front().size();
    std::vector<double> out(columns.size(), 1.0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        Matrix others;
        others.reserve(columns.size() - 1);
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (i != j) others.push_back(columns[i]);
        double mean = 0.0;
        for (double v : columns[j]) mean += v;
        mean /= static_cast<double>(n);
        double tss = 0.0;
        for (double v : columns[j]) tss += (v - mean) * (v - mean);
        if (tss <= 0.0) {
            out[j] = kInf; // constant column: perfectly explained by the intercept
            continue;
        }
        double rss = 0.0;
        try {
            rss = ols_fit(others, columns[j], true).rss;
        } catch (const SingularityError&) {
            out[j] = kInf;
            continue;
        }
        const double r2 = 1.0 - rss / tss;
        out[j] = r2 >= 1.0 - 1e-12 ? kInf : 1.0 / (1.0 - r2);
    }
    return out;
}

double aic(double rss, std::size_t n, std::size_t k) {
    if (!std::isfinite(rss) || rss < 0.0) return kInf;
    if (rss == 0.0) return -kInf;
    const double nn = static_cast<double>(n);
    return nn * std::log(rss / nn) + 2.0 * static_cast<double>(k);
}

double bic(double rss, std::size_t n, std::size_t k) {
    if (!std::isfinite(rss) || rss < 0.0) return kInf;
    if (rss == 0.0) return -kInf;
    const double nn = static_cast<double>(n);
    return nn * std::log(rss / nn) + static_cast<double>(k) * std::log(nn);
}

std::vector<double> pacf(const std::vector<double>& ts, std::size_t max_lag) {
    const std::size_t n = ts.size();
    if (max_lag == 0) throw DomainError("pacf: max_lag must be >= 1");
    if (n <= max_lag + 1)
        throw LengthError("pacf: series of length " + std::to_string(n) +
                          " too short for max_lag " + std::to_string(max_lag));
    double mean = 0.0;
    for (double v : ts) mean += v;
    mean /= static_cast<double>(n);

    // biased sample autocovariances (divide by n)
    std::vector<double> gamma(max_lag + 1, 0.0);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double s = 0.0;
        for (std::size_t t = k; t < n; ++t) s += (ts[t] - mean) * (ts[t - k] - mean);
        gamma[k] = s / static_cast<double>(n);
    }
    if (gamma[0] <= 0.0)
        throw DomainError("pacf: zero-variance series");

    // Durbin-Levinson
    std::vector<double> out(max_lag);
    std::vector<double> phi_prev(max_lag + 1, 0.0), phi_cur(max_lag + 1, 0.0);
    double err = gamma[0];
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double num = gamma[k];
        for (std::size_t j = 1; j < k; ++j) num -= phi_prev[j] * gamma[k - j];
        const double a = err != 0.0 ? num / err : 0.0;
        phi_cur[k] = a;
        for (std::size_t j = 1; j < k; ++j) phi_cur[j] = phi_prev[j] - a * phi_prev[k - j];
        err *= (1.0 - a * a);
        out[k - 1] = a;
        phi_prev = phi_cur;
    }
    return out;
}

FTestResult f_test_nested(const RegressionFit& nested, const RegressionFit& parent) {
    if (parent.n_regressors() <= nested.n_regressors())
        throw DomainError("f_test_nested: parent must have strictly more regressors");
    if (nested.n_observations != parent.n_observations)
        throw AlignmentError("f_test_nested: fits cover different samples (" +
                             std::to_string(nested.n_observations) + " vs " +
                             std::to_string(parent.n_observations) + " observations)");
    if (parent.rss <= 0.0)
        throw DegenerateFitError("f_test_nested: parent fit has zero residual sum of squares");

    FTestResult r;
    r.df_numerator = parent.n_regressors() - nested.n_regressors();
    r.df_denominator = parent.n_observations - parent.n_regressors();
    const double num = (nested.rss - parent.rss) / static_cast<double>(r.df_numerator);
    const double den = parent.rss / static_cast<double>(r.df_denominator);
    r.f_statistic = std::max(0.0, num / den);
    r.p_value = f_upper_tail_p(r.f_statistic, r.df_numerator, r.df_denominator);
    return r;
}

double mackinnon_crit_5pct(AdfVariant variant, std::size_t nobs) {
    // MacKinnon (2010) response surfaces, constant-only case, 5% level:
    // crit = b0 + b1/n + b2/n^2 + b3/n^3. UnitRoot row is the one-variable
    // surface; CointResidual the two-variable (one regressor) surface.
    static constexpr double kUnitRoot[4] = {-2.86154, -2.8903, -4.234, -40.040};
    static constexpr double kCointResidual[4] = {-3.33613, -6.1101, -6.823, 0.0};
    const double* b = variant == AdfVariant::UnitRoot ? kUnitRoot : kCointResidual;
    const double n = static_cast<double>(nobs);
    return b[0] + b[1] / n + b[2] / (n * n) + b[3] / (n * n * n);
}

AdfResult adf_test(const std::vector<double>& ts, std::size_t max_lag, AdfVariant variant) {
    const std::size_t n = ts.size();
    if (n <= max_lag + 2)
        throw LengthError("adf_test: series of length " + std::to_string(n) +
                          " too short for max_lag " + std::to_string(max_lag));

    std::vector<double> dy(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) dy[i] = ts[i + 1] - ts[i];

    // all candidates share the sample implied by max_lag so AICs compare
    const std::size_t start = max_lag;
    const std::size_t rows = dy.size() - start;
    if (rows < 4) throw LengthError("adf_test: not enough observations after lag truncation");

    std::vector<double> yy(rows);
    std::vector<double> level_lag(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        yy[i] = dy[start + i];
        level_lag[i] = ts[start + i]; // y_{t-1} for dy_t = y_{t+1}-y_t at t = start+i
    }

    std::optional<double> best_aic;
    std::size_t best_lag = 0;
    RegressionFit best_fit;
    for (std::size_t p = 0; p <= max_lag; ++p) {
        Matrix cols;
        cols.push_back(level_lag);
        for (std::size_t j = 1; j <= p; ++j) {
            std::vector<double> lagged(rows);
            for (std::size_t i = 0; i < rows; ++i) lagged[i] = dy[start + i - j];
            cols.push_back(std::move(lagged));
        }
        RegressionFit fit;
        try {
            fit = ols_fit(cols, yy, true);
        } catch (const Error&) {
            continue;
        }
        const double a = aic(fit.rss, rows, cols.size() + 1);
        if (!std::isfinite(a)) continue;
        if (!best_aic || a < *best_aic - 1e-12) {
            best_aic = a;
            best_lag = p;
            best_fit = std::move(fit);
        }
    }
    if (!best_aic)
        throw DegenerateFitError("adf_test: no fittable augmentation candidate");

    AdfResult r;
    r.lag_used = best_lag;
    r.test_statistic = best_fit.t_statistics[1]; // gamma sits after the intercept
    r.critical_value_5pct = mackinnon_crit_5pct(variant, best_fit.n_observations);
    r.reject_unit_root = r.test_statistic < r.critical_value_5pct;
    return r;
}

} // namespace bipcausal::stats

#pragma once

// Test-only reference implementations, deliberately independent of the
// library's numerical paths: brute-force solvers used to cross-check the
// production kernels.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bipcausal/fixture.hpp"

namespace oracles {

// Solves A x = b by Gaussian elimination with partial pivoting in long
// double. A is row-major n x n.
inline std::vector<long double> solve_dense(std::vector<std::vector<long double>> A,
                                            std::vector<long double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs((double)A[r][col]) > std::fabs((double)A[piv][col])) piv = r;
        if (A[piv][col] == 0.0L) throw std::runtime_error("solve_dense: singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const long double f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<long double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        long double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= A[i][c] * x[c];
        x[i] = s / A[i][i];
    }
    return x;
}

// Normal-equation OLS (X^T X) beta = X^T y in long double; columns exclude
// the intercept, which is prepended when requested.
inline std::vector<double> ols_normal_equations(const std::vector<std::vector<double>>& columns,
                                                const std::vector<double>& y, bool intercept) {
    const std::size_t n = y.size();
    std::vector<std::vector<double>> cols;
    if (intercept) cols.push_back(std::vector<double>(n, 1.0));
    for (const auto& c : columns) cols.push_back(c);
    const std::size_t k = cols.size();

    std::vector<std::vector<long double>> xtx(k, std::vector<long double>(k, 0.0L));
    std::vector<long double> xty(k, 0.0L);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t i = 0; i < n; ++i)
                xtx[a][b] += (long double)cols[a][i] * (long double)cols[b][i];
        for (std::size_t i = 0; i < n; ++i) xty[a] += (long double)cols[a][i] * (long double)y[i];
    }
    const auto beta = solve_dense(xtx, xty);
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = (double)beta[i];
    return out;
}

// Partial autocorrelation at lag k via a direct solve of the order-k
// autocovariance (Yule-Walker) system; same moment equations the recursion
// consumes, solved without the recursion.
inline std::vector<double> pacf_direct_solve(const std::vector<double>& x, std::size_t max_lag) {
    const std::size_t n = x.size();
    long double mean = 0.0L;
    for (double v : x) mean += v;
    mean /= (long double)n;
    std::vector<long double> gamma(max_lag + 1, 0.0L);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        long double s = 0.0L;
        for (std::size_t t = k; t < n; ++t)
            s += ((long double)x[t] - mean) * ((long double)x[t - k] - mean);
        gamma[k] = s / (long double)n;
    }
    std::vector<double> out(max_lag);
    for (std::size_t k = 1; k <= max_lag; ++k) {
        std::vector<std::vector<long double>> R(k, std::vector<long double>(k));
        std::vector<long double> r(k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j)
                R[i][j] = gamma[(std::size_t)std::llabs((long long)i - (long long)j)];
            r[i] = gamma[i + 1];
        }
        out[k - 1] = (double)solve_dense(R, r).back();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Seeded data generators built on the deterministic sampler.
// ---------------------------------------------------------------------------

inline std::vector<double> white_noise(std::uint64_t seed, std::size_t n, double sd = 1.0) {
    bipcausal::fixture::Rng rng(seed);
    std::vector<double> out(n);
    for (auto& v : out) v = sd * rng.gaussian();
    return out;
}

inline std::vector<double> random_walk(std::uint64_t seed, std::size_t n) {
    bipcausal::fixture::Rng rng(seed);
    std::vector<double> out(n);
    double acc = 0.0;
    for (auto& v : out) {
        acc += rng.gaussian();
        v = acc;
    }
    return out;
}

// AR(p) driven by unit normal innovations; coefficients apply to lags 1..p.
inline std::vector<double> ar_process(std::uint64_t seed, std::size_t n,
                                      const std::vector<double>& phi, std::size_t burn = 200) {
    bipcausal::fixture::Rng rng(seed);
    std::vector<double> out(n + burn, 0.0);
    for (std::size_t t = 0; t < out.size(); ++t) {
        double v = rng.gaussian();
        for (std::size_t j = 0; j < phi.size(); ++j)
            if (t > j) v += phi[j] * out[t - j - 1];
        out[t] = v;
    }
    return {out.begin() + (std::ptrdiff_t)burn, out.end()};
}

} // namespace oracles

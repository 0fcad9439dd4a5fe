#include "skillgeo/nnls.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace skillgeo {

namespace {

// Householder QR least squares, A is m x k, returns z of size k.
std::vector<double> lsq_qr(std::vector<std::vector<double>> a, std::vector<double> y) {
    const std::size_t m = a.size();
    const std::size_t k = m == 0 ? 0 : a[0].size();
    for (std::size_t col = 0; col < k && col < m; ++col) {
        double norm = 0.0;
        for (std::size_t i = col; i < m; ++i) norm += a[i][col] * a[i][col];
        norm = std::sqrt(norm);
        if (norm < 1e-300) continue;
        double alpha = (a[col][col] > 0.0) ? -norm : norm;
        std::vector<double> v(m, 0.0);
        v[col] = a[col][col] - alpha;
        for (std::size_t i = col + 1; i < m; ++i) v[i] = a[i][col];
        double vtv = 0.0;
        for (std::size_t i = col; i < m; ++i) vtv += v[i] * v[i];
        if (vtv < 1e-300) continue;
        for (std::size_t j = col; j < k; ++j) {
            double dot = 0.0;
            for (std::size_t i = col; i < m; ++i) dot += v[i] * a[i][j];
            double f = 2.0 * dot / vtv;
            for (std::size_t i = col; i < m; ++i) a[i][j] -= f * v[i];
        }
        double dot = 0.0;
        for (std::size_t i = col; i < m; ++i) dot += v[i] * y[i];
        double f = 2.0 * dot / vtv;
        for (std::size_t i = col; i < m; ++i) y[i] -= f * v[i];
    }
    std::vector<double> z(k, 0.0);
    for (std::size_t col = k; col-- > 0;) {
        double s = y[col];
        for (std::size_t j = col + 1; j < k; ++j) s -= a[col][j] * z[j];
        double d = a[col][col];
        z[col] = (std::abs(d) > 1e-300) ? s / d : 0.0;
    }
    return z;
}

}  // namespace

std::vector<double> nnls(const std::vector<std::vector<double>>& columns,
                         const std::vector<double>& y) {
    const std::size_t n = columns.size();
    const std::size_t m = y.size();

    std::vector<double> x(n, 0.0);
    std::vector<bool> passive(n, false);
    std::vector<double> resid(y);

    const int max_outer = static_cast<int>(3 * n + 50);
    for (int outer = 0; outer < max_outer; ++outer) {
        int enter = -1;
        double best = 1e-10;
        for (std::size_t j = 0; j < n; ++j) {
            if (passive[j]) continue;
            double w = 0.0;
            for (std::size_t i = 0; i < m; ++i) w += columns[j][i] * resid[i];
            if (w > best) {
                best = w;
                enter = static_cast<int>(j);
            }
        }
        if (enter < 0) break;
        passive[static_cast<std::size_t>(enter)] = true;

        for (int inner = 0; inner < max_outer; ++inner) {
            std::vector<std::size_t> p;
            for (std::size_t j = 0; j < n; ++j)
                if (passive[j]) p.push_back(j);
            std::vector<std::vector<double>> ap(m, std::vector<double>(p.size()));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t jj = 0; jj < p.size(); ++jj) ap[i][jj] = columns[p[jj]][i];
            std::vector<double> z = lsq_qr(ap, y);

            bool all_pos = true;
            for (double zj : z)
                if (zj <= 1e-12) all_pos = false;
            if (all_pos) {
                std::fill(x.begin(), x.end(), 0.0);
                for (std::size_t jj = 0; jj < p.size(); ++jj) x[p[jj]] = z[jj];
                break;
            }
            // Step toward z until the first passive coordinate hits zero.
            double alpha = 1.0;
            for (std::size_t jj = 0; jj < p.size(); ++jj) {
                if (z[jj] <= 1e-12) {
                    double xj = x[p[jj]];
                    double denom = xj - z[jj];
                    if (denom > 1e-300) alpha = std::min(alpha, xj / denom);
                }
            }
            for (std::size_t jj = 0; jj < p.size(); ++jj) {
                x[p[jj]] += alpha * (z[jj] - x[p[jj]]);
                if (x[p[jj]] <= 1e-12) {
                    x[p[jj]] = 0.0;
                    passive[p[jj]] = false;
                }
            }
        }

        for (std::size_t i = 0; i < m; ++i) {
            double ax = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (x[j] != 0.0) ax += columns[j][i] * x[j];
            resid[i] = y[i] - ax;
        }
    }
    return x;
}

SimplexLsqResult simplex_constrained_lsq(const std::vector<std::vector<double>>& points,
                                         const std::vector<double>& target) {
    const std::size_t n = points.size();
    const std::size_t d = target.size();
    const double rho = 1e4;  // weight of the sum-to-one row

    std::vector<std::vector<double>> cols(n, std::vector<double>(d + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) cols[j][i] = points[j][i];
        cols[j][d] = rho;
    }
    std::vector<double> y(d + 1);
    for (std::size_t i = 0; i < d; ++i) y[i] = target[i];
    y[d] = rho;

    std::vector<double> lambda = nnls(cols, y);

    SimplexLsqResult out;
    double total = 0.0;
    for (double lj : lambda) total += lj;
    if (total <= 0.0) {
        lambda.assign(n, 0.0);
        lambda[0] = 1.0;
        total = 1.0;
    }
    for (auto& lj : lambda) lj /= total;
    out.coefficients = lambda;
    double r2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double ax = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (lambda[j] != 0.0) ax += points[j][i] * lambda[j];
        double diff = ax - target[i];
        r2 += diff * diff;
    }
    out.residual = std::sqrt(r2);
    return out;
}

}  // namespace skillgeo

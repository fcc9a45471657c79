#pragma once

// Independent reference implementations used only by the tests. Each one takes the
// slow, obvious route so it shares no code path with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

// Repeatedly peel off the points nobody remaining dominates.
inline std::vector<std::vector<std::size_t>> peel_fronts(const std::vector<std::vector<double>>& pts) {
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<bool> done(pts.size(), false);
    std::size_t left = pts.size();
    while (left > 0) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (done[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
                if (!done[j] && j != i && dominates(pts[j], pts[i])) dominated = true;
            }
            if (!dominated) front.push_back(i);
        }
        for (auto i : front) done[i] = true;
        left -= front.size();
        fronts.push_back(front);
    }
    return fronts;
}

inline std::vector<std::size_t> nondominated(const std::vector<std::vector<double>>& pts) {
    return peel_fronts(pts).front();
}

// Day-by-day accumulation from the planting day.
inline int naive_harvest_day(int plant_day, double required, const std::vector<double>& daily) {
    double sum = 0.0;
    for (int d = plant_day; d <= static_cast<int>(daily.size()); ++d) {
        sum += daily[static_cast<std::size_t>(d - 1)];
        if (sum > required) return d;
    }
    return -1;
}

inline double naive_median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

struct NaiveCriteria {
    std::vector<double> m1, m2, m3;
};

// Single pass over the weekly totals collecting every quantity, then the three models.
inline NaiveCriteria naive_criteria(const std::vector<std::int64_t>& h, double c, int r) {
    std::vector<double> abs_dev, abs_dev_r, signed_dev;
    double waste = 0, over = 0, under = 0;
    int n_over = 0, n_under = 0, weeks = 0;
    for (auto x : h) {
        const double hv = static_cast<double>(x);
        waste += std::max(hv - c, 0.0);
        if (x <= 0) continue;
        ++weeks;
        abs_dev.push_back(std::fabs(c - hv));
        abs_dev_r.push_back(std::pow(std::fabs(c - hv), r));
        signed_dev.push_back(c - hv);
        if (hv > c) { over += std::pow(hv - c, r); ++n_over; }
        if (hv < c) { under += c - hv; ++n_under; }
    }
    double mean = 0;
    for (double d : signed_dev) mean += d;
    mean /= static_cast<double>(signed_dev.size());
    double var = 0;
    for (double d : signed_dev) var += (d - mean) * (d - mean);
    var /= static_cast<double>(signed_dev.size());

    NaiveCriteria out;
    out.m1 = {naive_median(abs_dev), *std::max_element(abs_dev.begin(), abs_dev.end()), double(weeks), waste};
    out.m2 = {naive_median(abs_dev), n_over ? over / n_over : 0.0, n_under ? under / n_under : 0.0, double(weeks)};
    out.m3 = {naive_median(abs_dev_r), *std::max_element(abs_dev_r.begin(), abs_dev_r.end()), std::sqrt(var), double(weeks)};
    return out;
}

// Exact union volume by inclusion-exclusion over all subsets (small sets only).
inline double inclusion_exclusion_hv(const std::vector<std::vector<double>>& pts, const std::vector<double>& ref) {
    const std::size_t n = pts.size();
    double total = 0.0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<double> corner(ref.size(), -1e300);
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            ++bits;
            for (std::size_t o = 0; o < ref.size(); ++o) corner[o] = std::max(corner[o], pts[i][o]);
        }
        double v = 1.0;
        for (std::size_t o = 0; o < ref.size(); ++o) v *= std::max(ref[o] - corner[o], 0.0);
        total += (bits % 2 ? 1.0 : -1.0) * v;
    }
    return total;
}

// Uniform sampling of the box [lower, ref].
inline double monte_carlo_hv(const std::vector<std::vector<double>>& pts, const std::vector<double>& ref,
                             const std::vector<double>& lower, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t d = ref.size();
    double box = 1.0;
    for (std::size_t o = 0; o < d; ++o) box *= ref[o] - lower[o];
    std::vector<double> x(d);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t o = 0; o < d; ++o) x[o] = lower[o] + (ref[o] - lower[o]) * u(gen);
        for (const auto& p : pts) {
            bool inside = true;
            for (std::size_t o = 0; o < d && inside; ++o) inside = p[o] <= x[o];
            if (inside) { ++hits; break; }
        }
    }
    return box * static_cast<double>(hits) / static_cast<double>(samples);
}

// Random mutually non-dominated points in [0,1]^d: sample on the simplex-like
// surface sum(x) = 1 + noise and keep the non-dominated subset.
inline std::vector<std::vector<double>> random_front(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> pts;
    while (pts.size() < n) {
        std::vector<double> p(d);
        double s = 0;
        for (auto& x : p) { x = u(gen); s += x; }
        for (auto& x : p) x = std::min(1.0, x / s * (0.9 + 0.2 * u(gen)));
        pts.push_back(p);
        auto keep = nondominated(pts);
        std::vector<std::vector<double>> next;
        for (auto i : keep) next.push_back(pts[i]);
        pts = next;
    }
    return pts;
}

} // namespace oracle

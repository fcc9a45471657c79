#include "cornsched/front.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cornsched/errors.hpp"

namespace cornsched {

const char* to_string(Dominance d) {
    switch (d) {
    case Dominance::dominates: return "dominates";
    case Dominance::weakly_dominates: return "weakly_dominates";
    case Dominance::incomparable: return "incomparable";
    case Dominance::dominated: return "dominated";
    }
    return "unknown";
}

Dominance dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ContractError("dominance check on vectors of different arity");
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) a_better = true;
        else if (b[i] < a[i]) b_better = true;
    }
    if (a_better && b_better) return Dominance::incomparable;
    if (a_better) return Dominance::dominates;
    if (b_better) return Dominance::dominated;
    return Dominance::weakly_dominates;
}

Dominance dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return dominates(std::span<const double>(a.values), std::span<const double>(b.values));
}

bool strictly_dominates(std::span<const double> a, std::span<const double> b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

namespace {

std::vector<std::size_t> lexicographic_order(std::span<const Point> points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    return order;
}

} // namespace

std::vector<std::size_t> pareto_front(std::span<const Point> points) {
    if (points.empty()) return {};
    const std::size_t m = points.front().size();
    for (const auto& p : points) {
        if (p.size() != m) throw ContractError("points of mixed arity");
    }
    // A dominating point always precedes the point it dominates in lexicographic order,
    // and every dominated point is dominated by some front member.
    std::vector<std::size_t> front;
    for (auto i : lexicographic_order(points)) {
        const bool dominated = std::any_of(front.begin(), front.end(),
                                           [&](std::size_t j) { return strictly_dominates(points[j], points[i]); });
        if (!dominated) front.push_back(i);
    }
    std::sort(front.begin(), front.end());
    return front;
}

ScaleBounds scale_bounds(std::span<const Point> points) {
    ScaleBounds b;
    if (points.empty()) return b;
    b.min = points.front();
    b.max = points.front();
    for (const auto& p : points) {
        if (p.size() != b.min.size()) throw ContractError("points of mixed arity");
        for (std::size_t o = 0; o < p.size(); ++o) {
            b.min[o] = std::min(b.min[o], p[o]);
            b.max[o] = std::max(b.max[o], p[o]);
        }
    }
    return b;
}

std::vector<Point> scale_with(std::span<const Point> points, const ScaleBounds& bounds) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != bounds.min.size()) throw ContractError("point arity does not match the scaling bounds");
        Point s(p.size());
        for (std::size_t o = 0; o < p.size(); ++o) {
            const double range = bounds.max[o] - bounds.min[o];
            s[o] = range > 0.0 ? (p[o] - bounds.min[o]) / range : 0.0;
        }
        out.push_back(std::move(s));
    }
    return out;
}

ScaledPoints scale_to_unit(std::span<const Point> points) {
    ScaledPoints out;
    out.bounds = scale_bounds(points);
    out.points = scale_with(points, out.bounds);
    return out;
}

namespace {

// Drops points weakly dominated by another point in the first `d` coordinates,
// keeping one copy of duplicates.
std::vector<Point> nondominated_prefix(std::vector<Point> pts, std::size_t d) {
    std::sort(pts.begin(), pts.end(), [d](const Point& a, const Point& b) {
        return std::lexicographical_compare(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(d), b.begin(),
                                            b.begin() + static_cast<std::ptrdiff_t>(d));
    });
    std::vector<Point> kept;
    for (auto& p : pts) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](const Point& q) {
            for (std::size_t o = 0; o < d; ++o) {
                if (q[o] > p[o]) return false;
            }
            return true;
        });
        if (!covered) kept.push_back(std::move(p));
    }
    return kept;
}

double box_volume(const Point& p, std::span<const double> ref, std::size_t d) {
    double v = 1.0;
    for (std::size_t o = 0; o < d; ++o) v *= ref[o] - p[o];
    return v;
}

// Hypervolume of `pts` over their first `d` coordinates. `pts` must already be
// mutually non-dominated in those coordinates.
double hv_recursive(std::vector<Point> pts, std::span<const double> ref, std::size_t d) {
    if (pts.empty()) return 0.0;
    if (pts.size() == 1) return box_volume(pts.front(), ref, d);
    if (d == 1) {
        double lo = pts.front()[0];
        for (const auto& p : pts) lo = std::min(lo, p[0]);
        return ref[0] - lo;
    }
    if (d == 2) {
        std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
            return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
        });
        double area = 0.0;
        double ceiling = ref[1];
        for (const auto& p : pts) {
            if (p[1] < ceiling) {
                area += (ref[0] - p[0]) * (ceiling - p[1]);
                ceiling = p[1];
            }
        }
        return area;
    }

    // Worst-first order in the last coordinate: every later point's limit against p
    // shares p's last coordinate, so each exclusive contribution is a slab of
    // thickness (ref - p_last) times a (d-1)-dimensional difference.
    const std::size_t last = d - 1;
    std::stable_sort(pts.begin(), pts.end(), [last](const Point& a, const Point& b) { return a[last] > b[last]; });
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& p = pts[i];
        std::vector<Point> limit;
        limit.reserve(pts.size() - i - 1);
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Point q(d - 1);
            for (std::size_t o = 0; o + 1 < d; ++o) q[o] = std::max(p[o], pts[j][o]);
            limit.push_back(std::move(q));
        }
        const double inner = box_volume(p, ref, d - 1) - hv_recursive(nondominated_prefix(std::move(limit), d - 1), ref, d - 1);
        total += (ref[last] - p[last]) * inner;
    }
    return total;
}

} // namespace

double hypervolume(std::span<const Point> points, std::span<const double> reference) {
    const std::size_t d = reference.size();
    if (d == 0) throw ContractError("hypervolume reference point is empty");
    for (const auto& p : points) {
        if (p.size() != d) throw ContractError("point arity does not match the reference point");
        for (std::size_t o = 0; o < d; ++o) {
            if (!(p[o] <= reference[o])) {
                std::ostringstream msg;
                msg << "point coordinate " << o << " = " << p[o] << " lies beyond the reference " << reference[o];
                throw ContractError(msg.str());
            }
        }
    }
    std::vector<Point> pts(points.begin(), points.end());
    return hv_recursive(nondominated_prefix(std::move(pts), d), reference, d);
}

TopsisResult topsis_select(std::span<const Point> front, std::span<const double> weights) {
    if (front.empty()) throw ContractError("TOPSIS on an empty front");
    const std::size_t n = front.size();
    const std::size_t m = front.front().size();
    if (weights.size() != m) throw ContractError("TOPSIS weight count does not match the objective count");
    if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w >= 0.0); }) ||
        std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) {
        throw ContractError("TOPSIS weights must be nonnegative and not all zero");
    }
    for (const auto& p : front) {
        if (p.size() != m) throw ContractError("points of mixed arity");
    }

    TopsisResult r;
    std::vector<double> norms(m, 0.0);
    for (const auto& p : front) {
        for (std::size_t o = 0; o < m; ++o) norms[o] += p[o] * p[o];
    }
    for (auto& v : norms) v = std::sqrt(v);

    r.normalized.assign(n, Point(m, 0.0));
    r.weighted.assign(n, Point(m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t o = 0; o < m; ++o) {
            r.normalized[i][o] = norms[o] > 0.0 ? front[i][o] / norms[o] : 0.0;
            r.weighted[i][o] = r.normalized[i][o] * weights[o];
        }
    }

    r.ideal = r.weighted.front();
    r.anti_ideal = r.weighted.front();
    for (const auto& v : r.weighted) {
        for (std::size_t o = 0; o < m; ++o) {
            r.ideal[o] = std::min(r.ideal[o], v[o]);
            r.anti_ideal[o] = std::max(r.anti_ideal[o], v[o]);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        double sp = 0.0;
        double sm = 0.0;
        for (std::size_t o = 0; o < m; ++o) {
            sp += (r.weighted[i][o] - r.ideal[o]) * (r.weighted[i][o] - r.ideal[o]);
            sm += (r.weighted[i][o] - r.anti_ideal[o]) * (r.weighted[i][o] - r.anti_ideal[o]);
        }
        sp = std::sqrt(sp);
        sm = std::sqrt(sm);
        r.distance_ideal.push_back(sp);
        r.distance_anti_ideal.push_back(sm);
        r.scores.push_back(sp + sm > 0.0 ? sm / (sm + sp) : 0.5);
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (r.scores[i] > r.scores[r.selected]) r.selected = i;
    }
    return r;
}

std::vector<Point> to_points(std::span<const ObjectiveVector> objectives) {
    std::vector<Point> out;
    out.reserve(objectives.size());
    for (const auto& o : objectives) out.push_back(o.values);
    return out;
}

} // namespace cornsched

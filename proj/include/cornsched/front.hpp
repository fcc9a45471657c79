#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cornsched/objectives.hpp"

namespace cornsched {

using Point = std::vector<double>;

enum class Dominance { dominates, weakly_dominates, incomparable, dominated };

const char* to_string(Dominance d);

// Relation of a to b under minimization. Equal vectors weakly dominate each other.
Dominance dominates(std::span<const double> a, std::span<const double> b);
Dominance dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// True iff a <= b componentwise with at least one strict inequality.
bool strictly_dominates(std::span<const double> a, std::span<const double> b);

// Indices (ascending) of points not dominated by any other point. Duplicates are all kept.
std::vector<std::size_t> pareto_front(std::span<const Point> points);

struct ScaleBounds {
    std::vector<double> min;
    std::vector<double> max;
};

ScaleBounds scale_bounds(std::span<const Point> points);

// (f - min) / (max - min) per objective; an objective with max == min maps to 0.
std::vector<Point> scale_with(std::span<const Point> points, const ScaleBounds& bounds);

struct ScaledPoints {
    std::vector<Point> points;
    ScaleBounds bounds;
};

ScaledPoints scale_to_unit(std::span<const Point> points);

// Exact measure of the region weakly dominated by `points` and bounded by `reference`.
// Throws ContractError if a point lies beyond the reference in any objective.
double hypervolume(std::span<const Point> points, std::span<const double> reference);

struct TopsisResult {
    std::size_t selected = 0;
    std::vector<Point> normalized;   // F
    std::vector<Point> weighted;     // V
    Point ideal;                     // A+
    Point anti_ideal;                // A-
    std::vector<double> distance_ideal;       // S+
    std::vector<double> distance_anti_ideal;  // S-
    std::vector<double> scores;               // C
};

// TOPSIS for minimization: vector normalization, weighting, ideal = column minimum,
// anti-ideal = column maximum, closeness C = S- / (S- + S+). Picks the largest C with
// ties going to the lowest index. An all-zero column normalizes to zeros and a point
// with S- + S+ == 0 scores 0.5.
TopsisResult topsis_select(std::span<const Point> front, std::span<const double> weights);

std::vector<Point> to_points(std::span<const ObjectiveVector> objectives);

} // namespace cornsched

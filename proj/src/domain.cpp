#include "cornsched/domain.hpp"

#include <set>
#include <sstream>

#include "cornsched/forecast.hpp"

namespace cornsched {

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::window_inverted: return "window inverted";
    case ViolationKind::day_out_of_range: return "day out of range";
    case ViolationKind::nonpositive_required_gdu: return "nonpositive required gdu";
    case ViolationKind::negative_harvest_qty: return "negative harvest quantity";
    case ViolationKind::site_mismatch: return "site mismatch";
    case ViolationKind::duplicate_id: return "duplicate id";
    case ViolationKind::horizon_mismatch: return "horizon mismatch";
    case ViolationKind::unharvestable: return "unharvestable";
    }
    return "unknown";
}

std::vector<Violation> validate_instance(const Instance& instance, const GduForecast& forecast) {
    std::vector<Violation> out;
    const int horizon = instance.horizon_days;
    auto add = [&](ViolationKind kind, std::optional<std::size_t> index, const std::string& detail) {
        std::ostringstream msg;
        msg << to_string(kind);
        if (index) msg << " [" << instance.populations[*index].id << "]";
        if (!detail.empty()) msg << ": " << detail;
        out.push_back({kind, index, msg.str()});
    };

    if (horizon < 1) add(ViolationKind::horizon_mismatch, std::nullopt, "horizon must be at least one day");
    if (forecast.days() != horizon) {
        std::ostringstream d;
        d << "forecast covers " << forecast.days() << " days, horizon is " << horizon;
        add(ViolationKind::horizon_mismatch, std::nullopt, d.str());
    }
    const bool forecast_usable = horizon >= 1 && forecast.days() >= horizon;

    std::set<std::string> seen;
    for (std::size_t i = 0; i < instance.populations.size(); ++i) {
        const auto& p = instance.populations[i];
        if (!seen.insert(p.id).second) add(ViolationKind::duplicate_id, i, "");
        if (p.site != instance.site) {
            std::ostringstream d;
            d << "site " << p.site << " in an instance for site " << instance.site;
            add(ViolationKind::site_mismatch, i, d.str());
        }
        if (p.early_day > p.late_day) {
            std::ostringstream d;
            d << "early day " << p.early_day << " after late day " << p.late_day;
            add(ViolationKind::window_inverted, i, d.str());
        }
        bool days_ok = true;
        for (Day day : {p.early_day, p.late_day}) {
            if (day < 1 || day > horizon) {
                std::ostringstream d;
                d << "day " << day << " outside [1, " << horizon << "]";
                add(ViolationKind::day_out_of_range, i, d.str());
                days_ok = false;
            }
        }
        if (p.original_day && (*p.original_day < 1 || *p.original_day > horizon)) {
            std::ostringstream d;
            d << "original day " << *p.original_day << " outside [1, " << horizon << "]";
            add(ViolationKind::day_out_of_range, i, d.str());
        }
        if (!(p.required_gdu > 0.0)) add(ViolationKind::nonpositive_required_gdu, i, "");
        if (p.harvest_qty < 0) add(ViolationKind::negative_harvest_qty, i, "");

        // Harvest day is monotone in the planting day, so the late day is the binding case.
        if (forecast_usable && days_ok && p.early_day <= p.late_day) {
            const double available = cumulative_gdu(forecast, p.late_day, horizon);
            if (!(available > p.required_gdu)) {
                std::ostringstream d;
                d << "needs more than " << p.required_gdu << " GDUs but only " << available
                  << " accumulate from day " << p.late_day << " to " << horizon;
                add(ViolationKind::unharvestable, i, d.str());
            }
        }
    }
    return out;
}

bool within_windows(const Schedule& schedule, const Instance& instance) {
    if (schedule.days.size() != instance.populations.size()) return false;
    for (std::size_t i = 0; i < schedule.days.size(); ++i) {
        const auto& p = instance.populations[i];
        if (schedule.days[i] < p.early_day || schedule.days[i] > p.late_day) return false;
    }
    return true;
}

} // namespace cornsched

#ifndef SOCREC_CONTEXT_HPP
#define SOCREC_CONTEXT_HPP

#include <array>
#include <optional>
#include <string>

namespace socrec {

// The four situational dimensions a rating or a query can carry.
// An absent field means "unspecified".
struct ContextTags {
    std::optional<std::string> location;
    std::optional<std::string> time;
    std::optional<std::string> weather;
    std::optional<std::string> emotion;

    bool operator==(const ContextTags&) const = default;
    bool empty() const { return !location && !time && !weather && !emotion; }
};

enum class ContextDimension { location, time, weather, emotion };

inline const char* to_string(ContextDimension d) {
    switch (d) {
    case ContextDimension::location: return "location";
    case ContextDimension::time: return "time";
    case ContextDimension::weather: return "weather";
    case ContextDimension::emotion: return "emotion";
    }
    return "";
}

// Order in which a too-strict query is relaxed: location is dropped last.
inline constexpr std::array<ContextDimension, 4> kRelaxationOrder = {
    ContextDimension::emotion,
    ContextDimension::weather,
    ContextDimension::time,
    ContextDimension::location,
};

// Partial assignment over the four dimensions; filters ratings before the
// pipeline runs. A fully empty query filters nothing.
struct ContextQuery {
    std::optional<std::string> location;
    std::optional<std::string> time;
    std::optional<std::string> weather;
    std::optional<std::string> emotion;

    bool operator==(const ContextQuery&) const = default;
    bool empty() const { return !location && !time && !weather && !emotion; }

    const std::optional<std::string>& get(ContextDimension d) const {
        switch (d) {
        case ContextDimension::location: return location;
        case ContextDimension::time: return time;
        case ContextDimension::weather: return weather;
        case ContextDimension::emotion: return emotion;
        }
        return location;
    }

    void drop(ContextDimension d) {
        switch (d) {
        case ContextDimension::location: location.reset(); break;
        case ContextDimension::time: time.reset(); break;
        case ContextDimension::weather: weather.reset(); break;
        case ContextDimension::emotion: emotion.reset(); break;
        }
    }

    // A rating matches when every set dimension is present in the tags with
    // an equal value. A tag absent on a queried dimension does not match.
    bool matches(const ContextTags& tags) const {
        if (location && tags.location != location) return false;
        if (time && tags.time != time) return false;
        if (weather && tags.weather != weather) return false;
        if (emotion && tags.emotion != emotion) return false;
        return true;
    }
};

} // namespace socrec

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace attsync {

/// Invalid user input (bad config, non-unit quaternion, malformed graph).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure while integrating (non-finite state).
class integration_error : public std::runtime_error {
public:
    integration_error(const std::string& what, int agent)
        : std::runtime_error(what), agent_id(agent) {}
    int agent_id;
};

/// A constructed object violated its own postcondition.
class internal_consistency_error : public std::logic_error {
public:
    explicit internal_consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace attsync

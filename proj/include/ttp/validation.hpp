#pragma once

#include <string>
#include <vector>

#include "ttp/schedule.hpp"

namespace ttp {

struct Violation {
    enum Kind { FixedGameTime, NoRepeat, BoundedByK, DoubleRoundRobin, DayRange };
    Kind kind;
    std::vector<int> teams;
    std::vector<int> days;
    std::string detail;
};

const char* kind_name(Violation::Kind k);

// Every violation is listed, not just the first one found.
std::vector<Violation> validate_schedule(const Schedule& s, int k, int expected_days);

}  // namespace ttp

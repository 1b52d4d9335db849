#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <cstdint>

namespace tsy::verify {

struct Check {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
    int64_t instances = 1;  // elementary identities exercised by this check
};

using Suite = std::vector<Check>;

// Suite registry, keyed by the names the command line accepts.
const std::map<std::string, std::function<Suite(uint64_t)>>& registry();

std::vector<std::string> suite_names();

bool suite_passed(const Suite& s);

}  // namespace tsy::verify

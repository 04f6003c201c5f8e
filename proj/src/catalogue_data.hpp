#pragma once

#include <utility>
#include <vector>

namespace hfree::data {

struct RawEntry {
    const char* id;
    const char* graph6;
    const char* source;
};

struct RawGadget {
    const char* h;
    const char* role;
    const char* mode;
    const char* graph6;
    std::vector<std::pair<int, int>> allowed;
};

const std::vector<RawEntry>& raw_catalogue();
const std::vector<RawGadget>& raw_gadgets();

}  // namespace hfree::data

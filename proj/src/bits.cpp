#include "stonewb/bits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "stonewb/error.hpp"

namespace stonewb {

std::size_t exhaustive_size_limit() {
    if (const char* env = std::getenv("WORKBENCH_SIZE_LIMIT")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return std::min<std::size_t>(v, kHardSizeLimit);
    }
    return kDefaultSizeLimit;
}

void require_exhaustive(std::size_t n, std::string_view what) {
    const std::size_t limit = exhaustive_size_limit();
    if (n > limit) {
        throw SizeError(std::string(what) + " has size " + std::to_string(n) +
                        ", above the exhaustive limit " + std::to_string(limit) +
                        " (WORKBENCH_SIZE_LIMIT)");
    }
}

}  // namespace stonewb

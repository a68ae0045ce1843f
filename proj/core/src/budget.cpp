#include "typecount/budget.hpp"

#include <cstdlib>

namespace typecount {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("TYPECOUNT_BUDGET")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return static_cast<std::uint64_t>(v);
    }
    return 100000000ull; // 1e8 point-operations
}

} // namespace typecount

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace typecount {

// Thrown when an enumeration would exceed its point-operation budget.
// Callers get a refusal, never a silently truncated count.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
        : std::runtime_error("enumeration budget exceeded: needs ~" + std::to_string(needed) +
                             " point-operations, budget is " + std::to_string(budget)),
          needed_(needed), budget_(budget) {}

    std::uint64_t needed() const noexcept { return needed_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t needed_;
    std::uint64_t budget_;
};

// Default budget is 1e8 point-operations; TYPECOUNT_BUDGET overrides.
std::uint64_t default_budget();

inline void check_budget(std::uint64_t needed, std::uint64_t budget) {
    if (needed > budget) throw BudgetExceeded(needed, budget);
}

} // namespace typecount

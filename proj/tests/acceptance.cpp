// Acceptance driver: runs every verification suite once and prints a single
// pass/fail line per criterion.  Exit status is the number of failures.

#include <cstdio>

#include "typecount/verify.hpp"

int main() {
    const auto results = typecount::run_all_suites();
    int failures = 0;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        std::printf("%s criterion %2d %-20s (%6.2fs)  %s\n", r.passed ? "PASS" : "FAIL", index,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d/%d acceptance criteria passed\n", index - failures, index);
    return failures;
}

// Release gate: runs the thirteen-criterion suite at default budgets and
// prints one line per criterion.  Exit 0 only when everything passes.
#include <iostream>

#include "higgledy/selftest.hpp"

int main() {
    using higgledy::selftest::Status;
    const auto results = higgledy::selftest::run_all({}, &std::cout);
    int failed = 0, refused = 0;
    for (const auto& r : results) {
        failed += r.status == Status::Fail;
        refused += r.status == Status::Refused;
    }
    std::cout << results.size() - failed - refused << "/" << results.size() << " criteria passed\n";
    if (refused > 0) std::cout << refused << " criteria refused by budget\n";
    return failed == 0 && refused == 0 ? 0 : 1;
}

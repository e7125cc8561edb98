// Acceptance suite: runs every reproduction criterion over the rationals and
// prints one pass/fail line per check. Exits nonzero if any check failed.

#include <iostream>

#include "reldom/reproduce.hpp"

int main() {
    using namespace reldom;
    FixtureSource src;
    try {
        src = FixtureSource::from_dir(RELDOM_FIXTURE_DIR);
    } catch (const std::exception& e) {
        std::cerr << "cannot load fixtures: " << e.what() << "\n";
        return 2;
    }
    std::vector<CheckResult> checks;
    try {
        checks = run_reproduction(FieldQQ{}, src);
    } catch (const std::exception& e) {
        std::cerr << "reproduction suite aborted: " << e.what() << "\n";
        return 2;
    }
    int failed = 0;
    for (const auto& c : checks) {
        std::cout << format_check_line(c) << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

// Runs the ten acceptance criteria and prints one pass/fail line per
// criterion; exits nonzero if any fails.
#include <iostream>

#include "orbi/acceptance.hpp"

int main() {
    orbi::AcceptanceResult res = orbi::run_acceptance(&std::cout);
    std::cout << (res.pass() ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << res.criteria.size() << " criteria)" << std::endl;
    return res.pass() ? 0 : 1;
}

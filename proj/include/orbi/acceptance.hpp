#pragma once

#include <iosfwd>

#include "orbi/json_io.hpp"

namespace orbi {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    double wall_ms = 0;
    std::string detail;
};

struct AcceptanceResult {
    std::vector<CriterionResult> criteria;
    bool pass() const {
        for (const CriterionResult& c : criteria)
            if (!c.pass) return false;
        return !criteria.empty();
    }
};

// The full desk-scale verification suite: ten criteria, every comparison
// exact. Prints one [PASS]/[FAIL] line per criterion to `progress` (pass
// nullptr to stay quiet).
AcceptanceResult run_acceptance(std::ostream* progress, const Budget& budget = {});

VerifyReport acceptance_report(const AcceptanceResult& res);

// Shared arithmetic oracles.
std::vector<long long> partition_numbers(int n);   // pentagonal recurrence
long long sigma1(long long n);                     // divisor sum
std::vector<long long> hall_subgroup_counts(int rank, int n);  // index 1..n

}  // namespace orbi

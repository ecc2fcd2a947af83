#pragma once

#include <chrono>
#include <cstdlib>

#include "orbi/error.hpp"

namespace orbi {

// Soft wall-clock budget for the long enumerations. A default-constructed
// budget never expires; verify commands build one from ORBICOUNT_BUDGET_SECS
// (default 300 s).
class Budget {
  public:
    Budget() = default;

    static Budget seconds(double secs) {
        Budget b;
        b.unlimited_ = false;
        b.deadline_ = clock::now() + std::chrono::duration_cast<clock::duration>(
                                         std::chrono::duration<double>(secs));
        return b;
    }

    static Budget from_env(double default_secs = 300.0) {
        if (const char* s = std::getenv("ORBICOUNT_BUDGET_SECS")) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end != s && v > 0) return seconds(v);
        }
        return seconds(default_secs);
    }

    void check(const char* stage) const {
        if (!unlimited_ && clock::now() > deadline_) throw budget_error(stage);
    }

    // Sparse check for tight loops: tests the clock every `stride` calls.
    void check_every(long long counter, long long stride, const char* stage) const {
        if (!unlimited_ && counter % stride == 0) check(stage);
    }

  private:
    using clock = std::chrono::steady_clock;
    bool unlimited_ = true;
    clock::time_point deadline_{};
};

}  // namespace orbi

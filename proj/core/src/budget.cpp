#include "zf/budget.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "zf/errors.hpp"

namespace zf {

std::int64_t Budget::default_states() {
    if (const char* env = std::getenv("ZF_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return v;
        } catch (...) {
        }
        throw ConfigError("ZF_BUDGET must be a positive integer");
    }
    return std::int64_t{1} << 24;
}

void Budget::check_colorings(int K, int n, const char* what) const {
    Int states = int_pow(static_cast<unsigned long>(K), static_cast<unsigned long>(n));
    if (states > Int(static_cast<long>(max_states)))
        throw BudgetError(std::string(what) + ": budget exceeded (" + std::to_string(K) + "^" +
                          std::to_string(n) + " states > " + std::to_string(max_states) + ")");
}

int thread_count() {
    if (const char* env = std::getenv("ZF_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
        }
        throw ConfigError("ZF_THREADS must be a positive integer");
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

}  // namespace zf

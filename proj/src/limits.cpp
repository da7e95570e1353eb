#include "tanglekit/limits.hpp"

#include <string>
#include <thread>

#include "tanglekit/errors.hpp"

namespace tanglekit {

Limits& limits() {
    static Limits instance;
    return instance;
}

void require_table_cap(int n) {
    if (n > limits().table_bits) {
        throw ResourceError("rank table for " + std::to_string(n) +
                            " elements exceeds cap of " + std::to_string(limits().table_bits));
    }
}

void require_scan_cap(int n) {
    if (n > limits().scan_bits) {
        throw ResourceError("exhaustive scan over " + std::to_string(n) +
                            " elements exceeds cap of " + std::to_string(limits().scan_bits));
    }
}

int worker_count() {
    int t = limits().threads;
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace tanglekit

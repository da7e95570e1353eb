#pragma once

#include <cstdint>

namespace tanglekit {

// Global work caps. Rank tables are one byte per subset, so table_bits = 22
// means at most a 4 MiB table; whole-powerset scans are capped separately.
struct Limits {
    int table_bits = 22;   // max ground-set size for materializing a rank table
    int scan_bits = 16;    // max ground-set size for exhaustive subset scans
    int threads = 0;       // 0 = hardware concurrency
};

Limits& limits();

// Throws ResourceError if n exceeds the given cap.
void require_table_cap(int n);
void require_scan_cap(int n);

int worker_count();

}  // namespace tanglekit

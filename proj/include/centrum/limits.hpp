#pragma once

namespace centrum {

// Resource caps shared across the library. All of them are plain data so a
// caller (CLI flags, tests) can override any field before passing them down.
struct Limits {
    int max_order = 4096;                 // largest carrier any builder will produce
    int ideal_enum_cap = 64;              // order cap for full ideal-lattice enumeration
    int oracle_order_cap = 16;            // order cap for the prime-ideal oracle
    int default_degree = 2;               // default polynomial degree bound
    long long poly_budget = 100000000;    // constraint-propagation step budget
    int nil_armendariz_order_cap = 16;    // order cap for the nil-Armendariz sweep at degree >= 2

    // Defaults with the CENTRUM_MAX_ORDER environment override applied.
    static Limits from_env();
};

} // namespace centrum

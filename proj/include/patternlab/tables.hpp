#pragma once

#include <string>
#include <vector>

#include "patternlab/numeric.hpp"
#include "patternlab/permutation.hpp"
#include "patternlab/ratfunc.hpp"

namespace patternlab {

// Verification of the published enumeration tables: each row pairs one
// forbidden pattern sigma with either a closed counting formula or a
// generating function, to be checked against both the oracle and the series
// engine.

// F_0 = 0, F_1 = 1.
Int fibonacci(long long n);
// P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}.
Int pell(long long n);
// k-generalized Fibonacci: 0 for n <= 0, 1 at n = 1, then sum of previous k.
Int k_fibonacci(int k, long long n);

struct TableRow {
    int table = 0;
    Permutation sigma;
    bool has_formula = false;   // otherwise a generating function
    std::string formula_id;
    int n_min = 0;              // formula compared for n >= n_min only
    RatFunc gf;
};

// Exact value of a named table formula; throws std::invalid_argument for an
// unknown id or an n below the formula's domain.
Rat table_formula_value(const std::string& id, long long n);

// Location baked in at build time; overridable by callers.
std::string default_table_path();
std::vector<TableRow> load_table_rows(const std::string& path);

struct RowReport {
    const TableRow* row = nullptr;
    bool engine_matches_oracle = true;
    bool printed_matches = true;     // the published formula/gf vs oracle
    std::vector<int> mismatch_ns;    // n where the published value differs
};

struct VerifyResult {
    std::vector<RowReport> rows;
    bool ok = true;  // engine == oracle on every row and order
};

VerifyResult verify_tables(const std::vector<TableRow>& rows, int n_max);

}  // namespace patternlab

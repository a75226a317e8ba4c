#pragma once

#include <string>
#include <vector>

namespace cliquefam::accept {

struct Row {
    std::string name;
    bool pass = false;
    std::string detail;
    long long ms = 0;
};

/// Run every acceptance criterion whose name contains `filter` (all when
/// empty). Each row is independent; a throwing criterion fails its row.
/// `seed` feeds the randomized criteria (random-graph oracle, mod-q pairs).
std::vector<Row> run_acceptance(const std::string& filter = "", int threads = 1,
                                unsigned seed = 20240917);

/// Pretty pass/fail table; returns true iff all rows pass.
bool print_rows(const std::vector<Row>& rows);

} // namespace cliquefam::accept

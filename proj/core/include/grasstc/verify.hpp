#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grasstc {

// One checked claim: what was expected, what the engine computed, and how the
// comparison came out. A fail records both values verbatim; inapplicable
// marks range guards, infeasible marks honest resource limits. Disagreements
// are reported, never patched over.
struct VerificationRecord {
    enum class Status { pass, fail, inapplicable, infeasible };
    std::string id;
    std::string expected;
    std::string computed;
    Status status = Status::inapplicable;
    std::string note;
};

std::string to_string(VerificationRecord::Status s);

struct VerifyOptions {
    unsigned max_k = 8;                        // upper bound on the rank grid
    unsigned max_n = 16;                       // upper bound on n
    bool certificates = true;                  // independent flag-manifold pass
    std::uint64_t degree_block_bit_cap = 2'000'000;
    std::uint64_t big_bit_cap = 64'000'000;    // for the (5,13) direct items
    std::uint64_t flag_node_budget = 5'000'000;
};

// The full claim suite over the desk-scale range, in deterministic order.
std::vector<VerificationRecord> verify_suite(const VerifyOptions& opt = {});

// True iff no record has status fail.
bool all_passed(const std::vector<VerificationRecord>& recs);

} // namespace grasstc

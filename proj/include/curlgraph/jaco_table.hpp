#pragma once

#include <cstdint>
#include <vector>

#include "curlgraph/seqcore.hpp"

namespace curling {

/// One reference row for the finite Jaco graph J*_n(1).
struct JacoRow {
    std::int64_t n = 0;
    IntString degrees;          // vertex-id order
    std::int64_t ic = 0;
    std::int64_t curling_index = 0;
    std::int64_t cn = 0;
};

// Reference values for n = 1..25.
const std::vector<JacoRow>& jaco_golden_table();

} // namespace curling

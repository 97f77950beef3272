#pragma once

#include <vector>

#include "mclab/linalg.hpp"

namespace mclab {

// Per-column min-max scaling to [0, 1], fitted on the training split only.
// A constant column maps to 0.
struct FeatureScaler {
    std::vector<double> mins;
    std::vector<double> ranges; // 0 marks a constant column

    static FeatureScaler fit(const FeatureMatrix& x);

    std::vector<double> transform(const std::vector<double>& x) const;
    FeatureMatrix transform_all(const FeatureMatrix& x) const;
};

} // namespace mclab

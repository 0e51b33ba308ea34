// Copyright 2026 The mielab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIELAB_ANALYSIS_FIT_H
#define MIELAB_ANALYSIS_FIT_H

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mielab {

struct FitPoint {
    double x;
    double y;
    double weight = 1.0;
};

/// y = amplitude * x^exponent.
struct PowerLawFit {
    std::string label;
    double exponent = 0;
    double amplitude = 0;
    double r_squared = 0;
    double exponent_stderr = 0;
    double window_min = 0;
    double window_max = 0;
    size_t n_points = 0;
    /// In-window points dropped for a nonpositive value.
    size_t n_excluded = 0;

    nlohmann::ordered_json to_json() const;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Weighted least squares of ln y against ln x over points with x in
/// [window_min, window_max]. The exponent error is the covariance estimate
/// scaled by the weighted residual variance. Throws FitError with fewer than
/// four usable points.
PowerLawFit fit_power_law(const std::vector<FitPoint> &points, double window_min = 0,
                          double window_max = std::numeric_limits<double>::infinity());

/// Log-space weight for a mean with standard error: (mean / stderr)^2, or
/// `fallback` when the error is zero.
double log_weight(double mean, double standard_error, double fallback = 1.0);

}  // namespace mielab

#endif

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

#include "mielab/analysis/fit.h"

#include <algorithm>
#include <cmath>

namespace mielab {

nlohmann::ordered_json PowerLawFit::to_json() const {
    nlohmann::ordered_json j;
    j["label"] = label;
    j["exponent"] = exponent;
    j["amplitude"] = amplitude;
    j["r_squared"] = r_squared;
    j["exponent_stderr"] = exponent_stderr;
    j["window"] = {window_min, window_max};
    j["n_points"] = n_points;
    j["n_excluded"] = n_excluded;
    return j;
}

double log_weight(double mean, double standard_error, double fallback) {
    if (standard_error <= 0 || mean <= 0) {
        return fallback;
    }
    double rel = standard_error / mean;
    return 1.0 / (rel * rel);
}

PowerLawFit fit_power_law(const std::vector<FitPoint> &points, double window_min, double window_max) {
    PowerLawFit fit;
    fit.window_min = window_min;
    fit.window_max = window_max;
    std::vector<double> u, v, w;
    for (const FitPoint &p : points) {
        if (!(p.x >= window_min && p.x <= window_max)) {
            continue;
        }
        if (p.x <= 0 || p.y <= 0 || !(p.weight > 0)) {
            fit.n_excluded++;
            continue;
        }
        u.push_back(std::log(p.x));
        v.push_back(std::log(p.y));
        w.push_back(p.weight);
    }
    size_t n = u.size();
    fit.n_points = n;
    if (n < 4) {
        throw FitError("power-law fit needs at least 4 usable points, have " + std::to_string(n));
    }

    double sw = 0, su = 0, sv = 0;
    for (size_t i = 0; i < n; i++) {
        sw += w[i];
        su += w[i] * u[i];
        sv += w[i] * v[i];
    }
    double ubar = su / sw, vbar = sv / sw;
    double suu = 0, suv = 0, svv = 0;
    for (size_t i = 0; i < n; i++) {
        suu += w[i] * (u[i] - ubar) * (u[i] - ubar);
        suv += w[i] * (u[i] - ubar) * (v[i] - vbar);
        svv += w[i] * (v[i] - vbar) * (v[i] - vbar);
    }
    if (suu <= 0) {
        throw FitError("power-law fit needs at least two distinct abscissae");
    }
    double slope = suv / suu;
    double intercept = vbar - slope * ubar;
    double ssr = 0;
    for (size_t i = 0; i < n; i++) {
        double r = v[i] - intercept - slope * u[i];
        ssr += w[i] * r * r;
    }
    fit.exponent = slope;
    fit.amplitude = std::exp(intercept);
    fit.exponent_stderr = std::sqrt(ssr / double(n - 2) / suu);
    fit.r_squared = svv > 0 ? std::clamp(1.0 - ssr / svv, 0.0, 1.0) : 1.0;
    return fit;
}

}  // namespace mielab

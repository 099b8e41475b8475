// Copyright 2026 The entglkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ENTGLKIT_PROTOCOL_HPP
#define ENTGLKIT_PROTOCOL_HPP

#include <array>
#include <utility>
#include <vector>

#include "entglkit/robustness.hpp"

namespace entglkit {

// Pure-state conversion laws work with squared Schmidt coefficients
// lambda_i = a_i^2, which form a probability vector.
std::vector<double> squared(const SchmidtSpectrum &sp);

bool nielsen_feasible(std::vector<double> source, std::vector<double> target);
double max_conversion_prob(std::vector<double> source, std::vector<double> target);

struct Concentration {
    std::vector<double> probs;  // probs[j-1] = p_j, a j-level maximally entangled outcome
    double avg_entanglement;
};
Concentration optimal_concentration(std::vector<double> lambda);
double e_det(std::vector<double> lambda);
double shannon_entropy(const std::vector<double> &p);

double recurrence_step(double y);
std::vector<double> recurrence_iterate(double y0, double tol, int max_iter);

// Bell-diagonal weights ordered (p00, p01, p10, p11).
using BellWeights = std::array<double, 4>;
BellWeights qpa_step(const BellWeights &p);
// One protocol round: local rotations order the weights descending, then
// the bilateral XOR and measurement apply qpa_step.
BellWeights qpa_round(const BellWeights &p);
std::vector<BellWeights> qpa_iterate(const BellWeights &p, int rounds);

struct BellIndex {
    int phase = 0;
    int shift = 0;
    bool operator==(const BellIndex &o) const { return phase == o.phase && shift == o.shift; }
};
std::pair<BellIndex, BellIndex> bxor_bell(BellIndex source, BellIndex target);

struct Yield {
    double raw;
    double clamped;
};
Yield breeding_yield(const BellWeights &p);

}  // namespace entglkit

#endif

// Copyright 2026 The schmidtkit Authors
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

#include "schmidtkit/locc.hpp"

#include <algorithm>
#include <cmath>

namespace schmidtkit {

SchmidtProbVector to_prob_vector(const SchmidtData& data) {
    validate(data);
    SchmidtProbVector v;
    v.p = data.tau.cwiseProduct(data.tau);
    // SVD output is already descending; sorting keeps the invariant
    // independent of where the data came from.
    std::sort(v.p.begin(), v.p.end(), std::greater<double>());
    return v;
}

RealVector prefix_sums(const SchmidtProbVector& v) {
    RealVector sums(v.p.size());
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.p.size(); ++i) {
        acc += v.p(i);
        sums(i) = acc;
    }
    return sums;
}

bool majorizes(const SchmidtProbVector& a, const SchmidtProbVector& b, double tol) {
    if (!std::isfinite(tol) || tol < 0.0) {
        throw Error(ErrorCode::InvalidTolerance, "majorization tolerance must be nonnegative");
    }
    const Eigen::Index len = std::max(a.p.size(), b.p.size());
    double sum_a = 0.0;
    double sum_b = 0.0;
    for (Eigen::Index i = 0; i < len; ++i) {
        if (i < a.p.size()) sum_a += a.p(i);
        if (i < b.p.size()) sum_b += b.p(i);
        if (sum_b > sum_a + tol) return false;
    }
    return true;
}

MajorizationVerdict locc_verdict(const SchmidtData& psi1, const SchmidtData& psi2, double tol) {
    if (psi1.left.rows() != psi2.left.rows()) {
        throw Error(ErrorCode::DimensionError,
                    "LOCC comparison requires equal finite dimensions");
    }
    const SchmidtProbVector p1 = to_prob_vector(psi1);
    const SchmidtProbVector p2 = to_prob_vector(psi2);
    const bool convert12 = majorizes(p2, p1, tol);
    const bool convert21 = majorizes(p1, p2, tol);
    if (convert12 && convert21) return MajorizationVerdict::Equivalent;
    if (convert12) return MajorizationVerdict::Convertible12;
    if (convert21) return MajorizationVerdict::Convertible21;
    return MajorizationVerdict::Incomparable;
}

const char* to_string(MajorizationVerdict v) {
    switch (v) {
        case MajorizationVerdict::Convertible12: return "Convertible12";
        case MajorizationVerdict::Convertible21: return "Convertible21";
        case MajorizationVerdict::Equivalent: return "Equivalent";
        case MajorizationVerdict::Incomparable: return "Incomparable";
    }
    return "Incomparable";
}

}  // namespace schmidtkit

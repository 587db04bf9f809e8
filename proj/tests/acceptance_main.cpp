// SPDX-License-Identifier: Apache-2.0
//
// Acceptance harness: runs the nine library certificates, one per acceptance
// criterion, and prints one line each. Exit status is the number of failed
// criteria (0 when everything holds). All numeric tolerances live inside the
// certificate implementations; nothing here is tunable.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "akl/certificates.hpp"

int main() {
    using akl::CertificateResult;

    const std::vector<std::function<CertificateResult()>> criteria = {
        [] { return akl::cert_case6(); },
        [] { return akl::cert_family_dimension(); },
        [] { return akl::cert_sigma_slice(); },
        [] { return akl::cert_curvature_formula(); },
        [] { return akl::cert_group_axioms(); },
        [] { return akl::cert_holonomy_branches(); },
        [] { return akl::cert_cross_models(); },
        [] { return akl::cert_submersions(); },
        [] { return akl::cert_geodesic_convergence(); },
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        CertificateResult r;
        try {
            r = criteria[i]();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        if (!r.passed) ++failed;
        std::printf("[%s] criterion-%zu %s: %s\n", r.passed ? "PASS" : "FAIL", i + 1,
                    r.name.c_str(), r.detail.c_str());
    }
    if (failed == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d of %zu acceptance criteria FAILED\n", failed, criteria.size());
    return failed;
}

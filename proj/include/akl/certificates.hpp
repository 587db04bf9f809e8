// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace akl {

// Deliberate fault injections for exercising the certificate suite itself
// (a certificate that cannot fail certifies nothing).
enum class Injection { None, PsiSignFlip, Case6Target };

struct CertificateResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

CertificateResult cert_case6(Injection inject = Injection::None);
CertificateResult cert_family_dimension();
CertificateResult cert_sigma_slice();
CertificateResult cert_curvature_formula();
CertificateResult cert_group_axioms(Injection inject = Injection::None);
CertificateResult cert_holonomy_branches();
CertificateResult cert_cross_models();
CertificateResult cert_submersions();
CertificateResult cert_geodesic_convergence();

// Runs the certificates whose name contains `filter` (all when empty), in a
// fixed order, with optional fault injection.
std::vector<CertificateResult> run_certificates(const std::string& filter = "",
                                                Injection inject = Injection::None);

// Fine-grained rows behind `models verify`: one per invariant submersion,
// one for the one-parameter flow law, one for the cross-model classification.
std::vector<CertificateResult> model_invariance_table();

} // namespace akl

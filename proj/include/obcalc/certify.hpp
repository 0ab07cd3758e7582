#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obcalc/contact.hpp"

namespace obcalc::certify {

using linalg::Rat;

enum class StepKind { computed_witness, recorded_fact };
enum class StepStatus { verified, assumed };

// One justified step. Computed witnesses carry re-runnable evidence and
// must end up verified; recorded facts carry a citation and stay assumed.
struct CertStep {
    std::string claim;
    StepKind kind = StepKind::computed_witness;
    StepStatus status = StepStatus::assumed;
    std::string evidence;  // description of the computation performed
    std::string citation;  // anchor for recorded facts
    std::vector<CertStep> substeps;
};

struct Certificate {
    long long m = 0;
    long long sn_value = 0;
    long long sg_value = 0;
    long long bn_lower_exclusive = 0;
    long long bn_upper = 0;
    bool stein_fillable = false;
    bool strict = false;
    std::optional<Rat> d3_value;  // present for m >= 1
    std::vector<CertStep> steps;
};

CertStep support_genus_cert(long long m);
CertStep support_norm_cert(long long m);
CertStep binding_cert(long long m);

Certificate theorem_report(long long m);
Certificate theorem_report(long long m, const contact::Figure3Fixture* fixture);

// Structural audit: every computed step verified, every recorded fact
// cited, and the strictness inequality rederivable from the bounds.
bool validate(const Certificate& cert, std::string* why = nullptr);

}  // namespace obcalc::certify

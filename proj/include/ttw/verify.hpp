#pragma once

#include <string>

#include "ttw/report.hpp"

namespace ttw::verify {

// Verification suites over the catalog operators for one index k.
// Heavy tier: the k=4 closure and syzygy reductions. Without `heavy`
// those checks are reported as SKIPPED.
VerificationReport commutators(unsigned k);
VerificationReport closures(unsigned k, bool heavy);
VerificationReport syzygies(unsigned k, bool heavy);
VerificationReport spectrum(unsigned k);
VerificationReport hidden(unsigned k);
VerificationReport conjecture(unsigned k);
VerificationReport all(unsigned k, bool heavy);

VerificationReport suite_by_name(const std::string& name, unsigned k, bool heavy);

}  // namespace ttw::verify

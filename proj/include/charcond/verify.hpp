#pragma once

#include "charcond/chartab.hpp"
#include "charcond/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charcond::verify {

/**
 * VerificationReport: the result of checking one character against the
 * single-value conductor property and its strengthenings.
 *
 * `conductor` is C = lcm of the conductors over the reduced value set.  The
 * certified property holds when some single value attains C; `witness` is the
 * least such witness (absent only when the value set is empty, in which case
 * C = 1 and the property is vacuous).  `field_conductor_equal` cross-checks C
 * against the independently computed conductor of the field generated by the
 * whole set, and `field_generated_by_witness` records whether one value
 * already generates that field.  Families with a printed case analysis also
 * carry `case_label` plus the analysis' predicted witness, which must attain
 * C (`predicted_witness_ok`); a contradiction there is a report failure, not
 * an exception.  `generating_subset_size` is the least number of values whose
 * conductor-lcm reaches C (0 for rational characters, -1 when the cap was
 * exceeded).
 */
struct VerificationReport {
    chartab::CharacterId character;
    long long conductor = 1;
    std::optional<chartab::Witness> witness;
    std::optional<cyclo::CyclotomicInteger> witness_value;
    bool field_conductor_equal = true;
    bool field_generated_by_witness = true;
    std::optional<std::string> case_label;
    std::optional<chartab::Witness> predicted_witness;
    std::optional<cyclo::CyclotomicInteger> predicted_value;
    bool predicted_witness_ok = true;
    int generating_subset_size = 0;
    bool pass = false;
};

/// Full check of one character: single-value conductor, field generation,
/// case classification (X, Y, SuY, SuZ), and the minimal generating subset
/// up to `subset_cap` values.
VerificationReport verify_character(const chartab::CharacterId& c, int subset_cap = 2);

/// Verifies every character of the group, aggregated in enumeration order.
/// `jobs` > 1 verifies characters concurrently; the output order and content
/// are identical regardless.
std::vector<VerificationReport> verify_group(chartab::Group group, long long q,
                                             int subset_cap = 2, int jobs = 1);

}  // namespace charcond::verify

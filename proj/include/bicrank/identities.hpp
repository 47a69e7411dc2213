#pragma once
// Fixed catalog of the series identities and sign claims around the
// 3-dissection of the mod-3 difference and the 2-dissections of the
// mod-4 difference. Each entry expands both sides exactly to a caller
// chosen order.

#include "bicrank/power_series.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bicrank {

enum class IdentityKind {
    Equality,       // lhs == rhs coefficientwise
    NonNegative,    // all coefficients >= 0
    AllPositive,    // all coefficients > 0
    AllNegative,    // all coefficients < 0
    SignSurvey,     // exploratory: report sign counts, never assert
};

struct IdentityCase {
    std::string id;
    IdentityKind kind;
    // Builders receive the comparison order and must return series of at
    // least that order.
    std::function<PowerSeries(long)> lhs;
    std::function<PowerSeries(long)> rhs;  // empty for sign entries
};

const std::vector<IdentityCase>& identity_catalog();
const IdentityCase& find_identity(const std::string& id);

struct IdentityVerdict {
    std::string id;
    long order = 0;
    bool applicable = true;  // false for SignSurvey rows (nothing asserted)
    bool pass = true;
    long first_fail = -1;
    Int lhs_at_fail;
    Int rhs_at_fail;
};

// Exact coefficient comparison for an Equality entry.
IdentityVerdict verify_identity(const std::string& id, long order);

struct SignSurveyReport {
    std::string id;
    long order = 0;
    long positive = 0, negative = 0, zero = 0;
    bool asserted = false;   // SignSurvey entries report only
    bool pass = true;
    long first_fail = -1;
};

// Sign predicate check (or survey) for a sign-kind entry.
SignSurveyReport positivity_report(const std::string& id, long order);

} // namespace bicrank

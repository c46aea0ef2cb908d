#pragma once

#include "qbid/families/families.hpp"
#include "qbid/numeric/q_number.hpp"

namespace qbid {

/// Builds the family's exact polynomial and evaluates it exactly at the
/// binary value of X = [x]_q (x itself for hermite-classical), rounding
/// only the final result.
double eval_family_float(const FamilyTag& tag, const QPoint& p);

/// Evaluates the family from its defining formula in double precision,
/// taking [1-x]_{1/q} from its own definition rather than from 1 - [x]_q.
/// Used as the independent side of symbolic/numeric coherence checks.
double eval_family_direct(const FamilyTag& tag, const QPoint& p);

}  // namespace qbid

#pragma once

namespace berk {

// Process-wide configuration. All values are plain reads after startup; the
// CLI sets them once before dispatching, tests restore what they change.

/// The integer base beta >= 2 of the value group beta^Q. Default 2.
int value_base();

/// Rejects bases < 2 and perfect powers (x^N - beta must stay irreducible
/// for every N for the exact zero test on formal sums).
void set_value_base(int beta);

/// Default iteration budget for queries on singular (chain) points.
int default_depth_cap();
void set_default_depth_cap(int cap);

/// Refinement budget for certified sign evaluation.
int precision_cap();
void set_precision_cap(int cap);

}  // namespace berk

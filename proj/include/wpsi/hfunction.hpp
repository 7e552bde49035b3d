#pragma once

#include <vector>

#include "wpsi/combinatorics.hpp"
#include "wpsi/rational.hpp"

namespace wpsi {

/// (2m-1)!! for any integer m: the usual odd product for m >= 1, the empty
/// product 1 at m = 0, and for m < 0 the downward recursion
/// (2m-1)!! = (2m+1)!!/(2m+1). All values are finite nonzero rationals.
Rat odd_double_factorial(long m);

/// Shorthand for (2k+1)!!, k >= -1 in all callers here.
inline Rat odf_arg(long two_m_minus_1) { return odd_double_factorial((two_m_minus_1 + 1) / 2); }

/// h_{k;e} = (2k+2e+1)!!/(2e-1)!!, with the extended double factorial so that
/// negative effective indices are defined. Requires k >= -1.
Rat h_scalar(long k, long e);

/// Multi-index h by inclusion-exclusion over nonempty subsets J:
/// h_{k;e} = sum_J (-1)^{#J-1} h_{k;|e_J|-#J+1}. Memoized by (k, sorted e).
Rat h_multi(long k, const std::vector<long>& e);

/// Aut-class form of the same quantity: the class-weighted sum over
/// Power(e, a) with multiplicities #Aut(full)/(#Aut(sub) #Aut(comp)).
/// Equal to h_multi(k, e) for every input; kept as an independent oracle.
Rat h_multi_via_classes(long k, const std::vector<long>& e, const std::vector<Weight>& a);

}  // namespace wpsi

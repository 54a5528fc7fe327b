#pragma once

// Umbrella header. Exact enumeration of order polytopes of comb-like posets:
// Ehrhart polynomials, h*-vectors, descent statistics of Stirling
// permutations, and the Bernoulli / harmonic identities that relate them.

#include "ehrcomb/errors.hpp"
#include "ehrcomb/rational.hpp"
#include "ehrcomb/polynomial.hpp"
#include "ehrcomb/symmetric.hpp"
#include "ehrcomb/numbers.hpp"
#include "ehrcomb/stirling_permutations.hpp"
#include "ehrcomb/poset.hpp"
#include "ehrcomb/ehrhart.hpp"
#include "ehrcomb/identities.hpp"
#include "ehrcomb/poset_spec.hpp"
#include "ehrcomb/serialize.hpp"

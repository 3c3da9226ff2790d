#pragma once

#include <vector>

#include "eulerian/int_poly.hpp"

// Independent interlacing oracle: isolates real roots into disjoint rational
// intervals, recovers multiplicities through derivative-gcd chains, and checks
// the weak root-alternation chains directly. Deliberately separate from the
// Wronskian decision procedure it cross-validates.
namespace testsupport {

/// Open interval (lo, hi) with non-root endpoints containing exactly one root
/// of the isolated polynomial.
struct RootInterval {
  mpq_class lo, hi;
};

/// Isolating intervals for all real roots of a square-free polynomial,
/// ascending.
std::vector<RootInterval> isolate_real_roots(const eulerian::IntPoly& square_free);

/// Multiplicity in f of the unique root inside iv. Requires that every real
/// root of f lying in iv equals that root (e.g. iv isolates a common
/// square-free multiple).
long multiplicity_in(const eulerian::IntPoly& f, const RootInterval& iv);

/// Decides g << f from the definition: real-rootedness via a multiplicity
/// census, positive leading coefficients, degree gap in {0, 1}, and the weak
/// alternation chains on the isolated root multisets.
bool alternation_interlaces(const eulerian::IntPoly& g, const eulerian::IntPoly& f);

}  // namespace testsupport

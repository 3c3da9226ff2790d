#pragma once

#include <utility>
#include <vector>

#include "eulerian/int_poly.hpp"

namespace eulerian {

/// The r polynomials f_j with f(z) = sum_j z^j f_j(z^r), low section first.
std::vector<IntPoly> r_sections(const IntPoly& f, int r);

/// Linear operator keeping exponents divisible by r, with the exponent
/// divided by r; equals r_sections(f, r)[0].
IntPoly er_apply(const IntPoly& f, int r);

/// True iff f is symmetric about n/2, i.e. z^n f(1/z) = f(z). The center is
/// always passed explicitly because the intended n can exceed deg f.
bool is_palindromic(const IntPoly& f, int n);

/// Coordinates of f in the basis z^i (1+z)^(n-2i), i = 0..floor(n/2).
/// Entries may be negative; positivity is the caller's predicate.
/// Requires f palindromic about n/2.
std::vector<mpz_class> gamma_expand(const IntPoly& f, int n);

/// Inverse of gamma_expand: sum_i gamma_i z^i (1+z)^(n-2i).
IntPoly gamma_recombine(const std::vector<mpz_class>& gamma, int n);

/// The unique pair (a, b) with h = a + z*b, a palindromic about n/2 and b
/// palindromic about (n-1)/2. Requires deg h <= n.
std::pair<IntPoly, IntPoly> symmetric_decompose(const IntPoly& h, int n);

}  // namespace eulerian

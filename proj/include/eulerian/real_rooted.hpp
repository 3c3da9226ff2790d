#pragma once

#include <span>
#include <string_view>

#include "eulerian/int_poly.hpp"

namespace eulerian {

enum class InterlaceReason {
  ok,
  not_real_rooted_left,
  not_real_rooted_right,
  degree_gap,
  leading_sign,
  wronskian_sign,
};

std::string_view to_string(InterlaceReason r);

/// Certified outcome of an interlacing test: holds is true iff reason is ok.
struct InterlacingVerdict {
  bool holds = false;
  InterlaceReason reason = InterlaceReason::ok;

  static InterlacingVerdict pass() { return {true, InterlaceReason::ok}; }
  static InterlacingVerdict fail(InterlaceReason r) { return {false, r}; }
};

/// Number of distinct real roots of f, whole real line. Requires f != 0.
long sturm_count(const IntPoly& f);
/// Number of distinct real roots of f in the half-open interval (lo, hi].
long sturm_count(const IntPoly& f, const mpq_class& lo, const mpq_class& hi);

/// f / gcd(f, f'), content removed, positive leading coefficient: same
/// distinct roots as f, each simple. Requires f != 0.
IntPoly square_free_part(const IntPoly& f);

bool is_real_rooted(const IntPoly& f);

/// Exact test for f(x) >= 0 on the whole real line: positive leading
/// coefficient, even degree, and no real root of odd multiplicity.
bool is_nonnegative_on_reals(const IntPoly& f);

/// The factors of f carrying its odd-multiplicity roots (sign changes).
IntPoly odd_multiplicity_part(const IntPoly& f);

/// f'g - fg', the combinant whose global nonnegativity characterizes g << f
/// for real-rooted f, g with positive leading coefficients.
IntPoly wronskian(const IntPoly& g, const IntPoly& f);

/// Decides the weak relation g << f (shared roots allowed). Conventions:
/// 0 << f and f << 0 hold for any real-rooted f; nonzero polynomials must be
/// real-rooted with positive leading coefficients and deg f - deg g in {0, 1}.
InterlacingVerdict interlaces(const IntPoly& g, const IntPoly& f);

/// All-pairs check: fs[i] << fs[j] for every i < j.
InterlacingVerdict is_interlacing_sequence(std::span<const IntPoly> fs);

}  // namespace eulerian

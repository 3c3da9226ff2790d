#include "eulerian/real_rooted.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace eulerian {

std::string_view to_string(InterlaceReason r) {
  switch (r) {
    case InterlaceReason::ok: return "ok";
    case InterlaceReason::not_real_rooted_left: return "not-real-rooted-left";
    case InterlaceReason::not_real_rooted_right: return "not-real-rooted-right";
    case InterlaceReason::degree_gap: return "degree-gap";
    case InterlaceReason::leading_sign: return "leading-sign";
    case InterlaceReason::wronskian_sign: return "wronskian-sign";
  }
  return "unknown";
}

namespace {

// Divide by the content but keep the sign: Sturm chains care about signs.
IntPoly reduce_content(const IntPoly& f) {
  if (f.is_zero()) return {};
  mpz_class g = content(f);
  if (g == 1) return f;
  std::vector<mpz_class> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c / g);
  return IntPoly{std::move(out)};
}

// Signed pseudo-remainder: same sign structure as the rational remainder.
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  int performed = 0;
  while (true) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (static_cast<int>(rem.size()) < static_cast<int>(bc.size())) break;
    mpz_class top = rem.back();
    std::size_t off = rem.size() - bc.size();
    for (auto& c : rem) c *= lb;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[off + i] -= top * bc[i];
    ++performed;
  }
  // The loop leaves lc(b)^performed times the rational remainder.
  IntPoly out{std::move(rem)};
  if (lb < 0 && performed % 2 != 0) out *= mpz_class{-1};
  return out;
}

// Sturm chain of a square-free polynomial; ends in a nonzero constant.
std::vector<IntPoly> sturm_chain(const IntPoly& f) {
  std::vector<IntPoly> chain;
  chain.push_back(f);
  chain.push_back(f.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    IntPoly r = signed_prem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(reduce_content(-r));
  }
  return chain;
}

enum class Place { at_value, neg_inf, pos_inf };

long sign_variations(const std::vector<IntPoly>& chain, Place place,
                     const mpq_class& x) {
  long var = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s;
    switch (place) {
      case Place::at_value: s = p.sign_at(x); break;
      case Place::neg_inf: s = p.sign_at_neg_inf(); break;
      case Place::pos_inf: s = p.sign_at_pos_inf(); break;
      default: s = 0;
    }
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

IntPoly square_free_part(const IntPoly& f) {
  if (f.is_zero())
    throw std::domain_error("square_free_part: zero polynomial");
  IntPoly p = primitive_part(f);
  if (p.degree() == 0) return p;
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return exact_div(p, g);
}

long sturm_count(const IntPoly& f) {
  if (f.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  IntPoly sf = square_free_part(f);
  if (sf.degree() < 1) return 0;
  auto chain = sturm_chain(sf);
  mpq_class dummy{0};
  return sign_variations(chain, Place::neg_inf, dummy) -
         sign_variations(chain, Place::pos_inf, dummy);
}

long sturm_count(const IntPoly& f, const mpq_class& lo, const mpq_class& hi) {
  if (f.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  if (lo > hi) throw std::invalid_argument("sturm_count: empty interval");
  IntPoly sf = square_free_part(f);
  if (sf.degree() < 1) return 0;
  auto chain = sturm_chain(sf);
  return sign_variations(chain, Place::at_value, lo) -
         sign_variations(chain, Place::at_value, hi);
}

bool is_real_rooted(const IntPoly& f) {
  if (f.degree() <= 0) return true;
  IntPoly sf = square_free_part(f);
  return sturm_count(sf) == sf.degree();
}

IntPoly odd_multiplicity_part(const IntPoly& f) {
  if (f.is_zero())
    throw std::domain_error("odd_multiplicity_part: zero polynomial");
  // Peeling the square-free part strips one from every multiplicity, so the
  // alternating quotient of the peeled parts keeps exactly the odd ones.
  IntPoly num{1};
  IntPoly den{1};
  IntPoly p = primitive_part(f);
  for (int k = 0; p.degree() > 0; ++k) {
    IntPoly s = square_free_part(p);
    if (k % 2 == 0) num *= s; else den *= s;
    p = exact_div(p, s);
  }
  return exact_div(num, den);
}

bool is_nonnegative_on_reals(const IntPoly& f) {
  if (f.is_zero()) return true;
  if (f.leading() < 0) return false;
  if (f.degree() % 2 != 0) return false;
  IntPoly odd = odd_multiplicity_part(f);
  return odd.degree() < 1 || sturm_count(odd) == 0;
}

IntPoly wronskian(const IntPoly& g, const IntPoly& f) {
  return f.derivative() * g - f * g.derivative();
}

InterlacingVerdict interlaces(const IntPoly& g, const IntPoly& f) {
  if (g.is_zero())
    return is_real_rooted(f)
               ? InterlacingVerdict::pass()
               : InterlacingVerdict::fail(InterlaceReason::not_real_rooted_right);
  if (f.is_zero())
    return is_real_rooted(g)
               ? InterlacingVerdict::pass()
               : InterlacingVerdict::fail(InterlaceReason::not_real_rooted_left);
  if (g.leading() < 0 || f.leading() < 0)
    return InterlacingVerdict::fail(InterlaceReason::leading_sign);
  if (!is_real_rooted(g))
    return InterlacingVerdict::fail(InterlaceReason::not_real_rooted_left);
  if (!is_real_rooted(f))
    return InterlacingVerdict::fail(InterlaceReason::not_real_rooted_right);
  int gap = f.degree() - g.degree();
  if (gap != 0 && gap != 1)
    return InterlacingVerdict::fail(InterlaceReason::degree_gap);
  return is_nonnegative_on_reals(wronskian(g, f))
             ? InterlacingVerdict::pass()
             : InterlacingVerdict::fail(InterlaceReason::wronskian_sign);
}

InterlacingVerdict is_interlacing_sequence(std::span<const IntPoly> fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      InterlacingVerdict v = interlaces(fs[i], fs[j]);
      if (!v.holds) return v;
    }
  return InterlacingVerdict::pass();
}

}  // namespace eulerian

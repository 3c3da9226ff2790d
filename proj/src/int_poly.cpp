#include "eulerian/int_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace eulerian {

namespace {
const mpz_class kZero{0};
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(mpz_class constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::monomial(mpz_class c, std::size_t k) {
  if (c == 0) return {};
  IntPoly out;
  out.coeffs_.assign(k, kZero);
  out.coeffs_.push_back(std::move(c));
  return out;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading(): zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (coeffs_.empty() || k == 0) return k == 0 ? *this : IntPoly{};
  IntPoly out;
  out.coeffs_.assign(k, kZero);
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

IntPoly IntPoly::derivative() const {
  IntPoly out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_.push_back(coeffs_[i] * static_cast<long>(i));
  out.normalize();
  return out;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
  if (coeffs_.empty()) return 0;
  // sign(f(p/q)) = sign(sum a_i p^i q^(d-i)), with q > 0 in canonical form.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = coeffs_.back();
  mpz_class dpow{1};
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    dpow *= den;
    acc = acc * num + coeffs_[i] * dpow;
  }
  return sgn(acc);
}

int IntPoly::sign_at_pos_inf() const {
  return coeffs_.empty() ? 0 : sgn(coeffs_.back());
}

int IntPoly::sign_at_neg_inf() const {
  if (coeffs_.empty()) return 0;
  int s = sgn(coeffs_.back());
  return degree() % 2 == 0 ? s : -s;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class{0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly{std::move(out)};
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly pow(const IntPoly& base, unsigned exp) {
  IntPoly out{1};
  IntPoly sq = base;
  while (exp > 0) {
    if (exp & 1u) out *= sq;
    exp >>= 1u;
    if (exp > 0) sq *= sq;
  }
  return out;
}

mpz_class content(const IntPoly& f) {
  mpz_class g{0};
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  mpz_class g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<mpz_class> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c / g);
  return IntPoly{std::move(out)};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw std::domain_error("exact_div: not divisible (degree)");
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(a.degree() - b.degree() + 1, mpz_class{0});
  const auto& bc = b.coeffs();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + bc.size() - 1];
    if (top == 0) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                b.leading().get_mpz_t());
    if (r != 0) throw std::domain_error("exact_div: not divisible");
    quot[k] = q;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= q * bc[i];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("exact_div: not divisible (remainder)");
  return IntPoly{std::move(quot)};
}

namespace {

// Pseudo-remainder of a by b, scaled by |lc(b)|^(deg a - deg b + 1) so the
// reduction stays in Z[z] and the sign of the result matches the sign of the
// true rational remainder.
IntPoly pseudo_rem_abs(const IntPoly& a, const IntPoly& b) {
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  int steps = a.degree() - b.degree() + 1;
  int performed = 0;
  while (static_cast<int>(rem.size()) >= static_cast<int>(bc.size())) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (static_cast<int>(rem.size()) < static_cast<int>(bc.size())) break;
    mpz_class top = rem.back();
    std::size_t off = rem.size() - bc.size();
    for (auto& c : rem) c *= lb;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[off + i] -= top * bc[i];
    ++performed;
  }
  IntPoly out{std::move(rem)};
  // Top up to the full lc^steps scaling, then flip to the |lc| convention.
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(),
             static_cast<unsigned long>(steps - performed));
  out *= scale;
  if (lb < 0 && steps % 2 != 0) out *= mpz_class{-1};
  return out;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly f = primitive_part(a);
  IntPoly g = primitive_part(b);
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero() && g.degree() > 0) {
    IntPoly r = primitive_part(pseudo_rem_abs(f, g));
    f = std::move(g);
    g = std::move(r);
  }
  // A nonzero constant remainder means the pair is coprime.
  return g.is_zero() ? f : IntPoly{1};
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace eulerian

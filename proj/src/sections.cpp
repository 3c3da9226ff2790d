#include "eulerian/sections.hpp"

#include <stdexcept>

namespace eulerian {

std::vector<IntPoly> r_sections(const IntPoly& f, int r) {
  if (r < 1) throw std::invalid_argument("r_sections: r must be >= 1");
  std::vector<std::vector<mpz_class>> buckets(static_cast<std::size_t>(r));
  const auto& cs = f.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::size_t j = i % static_cast<std::size_t>(r);
    std::size_t q = i / static_cast<std::size_t>(r);
    if (buckets[j].size() <= q) buckets[j].resize(q + 1, mpz_class{0});
    buckets[j][q] = cs[i];
  }
  std::vector<IntPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

IntPoly er_apply(const IntPoly& f, int r) {
  if (r < 1) throw std::invalid_argument("er_apply: r must be >= 1");
  std::vector<mpz_class> out;
  const auto& cs = f.coeffs();
  for (std::size_t i = 0; i < cs.size(); i += static_cast<std::size_t>(r))
    out.push_back(cs[i]);
  return IntPoly{std::move(out)};
}

bool is_palindromic(const IntPoly& f, int n) {
  if (n < 0) throw std::invalid_argument("is_palindromic: n must be >= 0");
  if (f.degree() > n) return false;
  for (int i = 0; 2 * i <= n; ++i)
    if (f.coeff(static_cast<std::size_t>(i)) !=
        f.coeff(static_cast<std::size_t>(n - i)))
      return false;
  return true;
}

std::vector<mpz_class> gamma_expand(const IntPoly& f, int n) {
  if (n < 0) throw std::invalid_argument("gamma_expand: n must be >= 0");
  if (!is_palindromic(f, n))
    throw std::domain_error("gamma_expand: polynomial is not palindromic about n/2");
  std::vector<mpz_class> gamma;
  IntPoly rest = f;
  for (int i = 0; 2 * i <= n; ++i) {
    mpz_class gi = rest.coeff(static_cast<std::size_t>(i));
    gamma.push_back(gi);
    if (gi != 0)
      rest -= IntPoly{gi} * pow(one_plus_z(), static_cast<unsigned>(n - 2 * i))
                  .shifted(static_cast<std::size_t>(i));
  }
  if (!rest.is_zero())
    throw std::domain_error("gamma_expand: expansion did not terminate");
  return gamma;
}

IntPoly gamma_recombine(const std::vector<mpz_class>& gamma, int n) {
  IntPoly out;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] == 0) continue;
    out += IntPoly{gamma[i]} *
           pow(one_plus_z(), static_cast<unsigned>(n - 2 * static_cast<int>(i)))
               .shifted(i);
  }
  return out;
}

std::pair<IntPoly, IntPoly> symmetric_decompose(const IntPoly& h, int n) {
  if (n < 0) throw std::invalid_argument("symmetric_decompose: n must be >= 0");
  if (h.degree() > n)
    throw std::domain_error("symmetric_decompose: deg h exceeds n");
  // a_i = sum_{j<=i} (h_j - h_{n+1-j}),  b_i = sum_{j<=i} (h_{n-j} - h_j);
  // both prefix sums telescope into the required symmetries.
  auto at = [&](int j) -> const mpz_class& {
    static const mpz_class zero{0};
    return j < 0 ? zero : h.coeff(static_cast<std::size_t>(j));
  };
  std::vector<mpz_class> ac(static_cast<std::size_t>(n) + 1, mpz_class{0});
  std::vector<mpz_class> bc(static_cast<std::size_t>(n > 0 ? n : 0), mpz_class{0});
  mpz_class acc{0};
  for (int i = 0; i <= n; ++i) {
    acc += at(i) - at(n + 1 - i);
    ac[static_cast<std::size_t>(i)] = acc;
  }
  acc = 0;
  for (int i = 0; i <= n - 1; ++i) {
    acc += at(n - i) - at(i);
    bc[static_cast<std::size_t>(i)] = acc;
  }
  return {IntPoly{std::move(ac)}, IntPoly{std::move(bc)}};
}

}  // namespace eulerian

#include "eulerian/inversion.hpp"

namespace eulerian {

StatTuple stats(const std::vector<long>& e, const SVec& s) {
  if (static_cast<int>(e.size()) != s.size())
    throw std::domain_error("stats: length does not match s");
  int n = s.size();
  auto entry = [&](int i) -> long {
    return (i < 1 || i > n) ? 0 : e[static_cast<std::size_t>(i - 1)];
  };
  StatTuple t;
  for (int i = 0; i <= n; ++i) {
    long lhs = entry(i) * s.bound(i + 1);
    long rhs = entry(i + 1) * s.bound(i);
    if (lhs < rhs) {
      ++t.asc;
    } else if (lhs == rhs) {
      ++t.col;
      if (i < n) ++t.col_prime;
    } else {
      ++t.des;
    }
  }
  return t;
}

StatTuple stats(const InvSeq& e, const SVec& s) { return stats(e.values, s); }

std::vector<InvSeq> all_inversion_sequences(const SVec& s) {
  std::vector<InvSeq> out;
  for_each_inversion_sequence(s, [&](const std::vector<long>& e) {
    out.push_back(InvSeq{e, s});
  });
  return out;
}

namespace {

// (1+z)^k for k = 0..max, computed once per enumeration.
std::vector<IntPoly> one_plus_z_powers(int max) {
  std::vector<IntPoly> p;
  p.reserve(static_cast<std::size_t>(max) + 1);
  p.emplace_back(IntPoly{1});
  for (int k = 1; k <= max; ++k) p.push_back(p.back() * one_plus_z());
  return p;
}

}  // namespace

IntPoly brute_binomial_eulerian(const SVec& s) {
  auto opz = one_plus_z_powers(s.size() + 1);
  IntPoly total;
  for_each_inversion_sequence(s, [&](const std::vector<long>& e) {
    StatTuple t = stats(e, s);
    total += opz[static_cast<std::size_t>(t.col)].shifted(
        static_cast<std::size_t>(t.asc));
  });
  return total;
}

IntPoly brute_s_eulerian(const SVec& s) {
  IntPoly total;
  for_each_inversion_sequence(s, [&](const std::vector<long>& e) {
    StatTuple t = stats(e, s);
    total += IntPoly::monomial(1, static_cast<std::size_t>(t.asc));
  });
  return total;
}

IntPoly brute_s_derangement(const SVec& s) {
  IntPoly total;
  for_each_inversion_sequence(s, [&](const std::vector<long>& e) {
    StatTuple t = stats(e, s);
    if (t.col == 0)
      total += IntPoly::monomial(1, static_cast<std::size_t>(t.asc));
  });
  return total;
}

std::vector<IntPoly> brute_refined(const SVec& s) {
  if (s.size() == 0) throw std::domain_error("brute_refined: empty s");
  auto opz = one_plus_z_powers(s.size() + 1);
  std::vector<IntPoly> out(static_cast<std::size_t>(s.bound(s.size())));
  for_each_inversion_sequence(s, [&](const std::vector<long>& e) {
    StatTuple t = stats(e, s);
    out[static_cast<std::size_t>(e.back())] +=
        opz[static_cast<std::size_t>(t.col_prime)].shifted(
            static_cast<std::size_t>(t.asc));
  });
  return out;
}

InvSeq involution_f(const InvSeq& e, const SVec& s) {
  if (static_cast<int>(e.values.size()) != s.size())
    throw std::domain_error("involution_f: length does not match s");
  std::vector<long> out(e.values.size());
  for (int i = 1; i <= s.size(); ++i) {
    long v = e.values[static_cast<std::size_t>(i - 1)];
    out[static_cast<std::size_t>(i - 1)] = v == 0 ? 0 : s.bound(i) - v;
  }
  return InvSeq{std::move(out), s};
}

}  // namespace eulerian

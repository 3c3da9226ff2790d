#include "eulerian/recurrence.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "eulerian/real_rooted.hpp"

namespace eulerian {

void ThresholdSpec::validate(int q) const {
  if (t.size() != a.size())
    throw std::domain_error("ThresholdSpec: t and a lengths differ");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1 || t[i] > q)
      throw std::domain_error("ThresholdSpec: threshold out of [1, q]");
    if (i > 0 && t[i] < t[i - 1])
      throw std::domain_error("ThresholdSpec: thresholds must be nondecreasing");
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size() && t[j] == t[i]; ++j)
      if (a[i] == RowMarker::one_plus_z && a[j] == RowMarker::one)
        throw std::domain_error(
            "ThresholdSpec: (1+z, 1) marker pair on a shared threshold");
}

std::vector<ThresholdEntry> thresholds(const SVec& s, int m) {
  if (m < 2 || m > s.size())
    throw std::domain_error("thresholds: level m out of range");
  long sm = s.bound(m);
  long sp = s.bound(m - 1);
  std::vector<ThresholdEntry> out(static_cast<std::size_t>(sm));
  for (long k = 0; k < sm; ++k) {
    long num = k * sp;
    out[static_cast<std::size_t>(k)] = {(num + sm - 1) / sm, num % sm == 0};
  }
  return out;
}

namespace {

// prefix[k] = fs[0] + ... + fs[k-1]
std::vector<IntPoly> prefix_sums(std::span<const IntPoly> fs) {
  std::vector<IntPoly> p(fs.size() + 1);
  for (std::size_t k = 0; k < fs.size(); ++k) p[k + 1] = p[k] + fs[k];
  return p;
}

}  // namespace

std::vector<IntPoly> threshold_transform(std::span<const IntPoly> fs,
                                         const ThresholdSpec& spec) {
  spec.validate(static_cast<int>(fs.size()));
  auto prefix = prefix_sums(fs);
  const IntPoly& total = prefix.back();
  std::vector<IntPoly> out;
  out.reserve(spec.t.size());
  for (std::size_t i = 0; i < spec.t.size(); ++i) {
    std::size_t ti = static_cast<std::size_t>(spec.t[i]);
    IntPoly g = prefix[ti - 1].shifted(1);
    const IntPoly& mid = fs[ti - 1];
    g += spec.a[i] == RowMarker::one_plus_z ? mid * one_plus_z() : mid;
    g += total - prefix[ti];
    out.push_back(std::move(g));
  }
  return out;
}

RefinedFamily refined_polys(const SVec& s) {
  if (s.size() == 0) throw std::domain_error("refined_polys: empty s");
  std::vector<IntPoly> polys(static_cast<std::size_t>(s.bound(1)), IntPoly{0, 1});
  polys[0] = one_plus_z();
  for (int m = 2; m <= s.size(); ++m) {
    auto prefix = prefix_sums(polys);
    const IntPoly& total = prefix.back();
    long sp = s.bound(m - 1);
    auto table = thresholds(s, m);
    std::vector<IntPoly> next;
    next.reserve(table.size());
    for (const auto& [t, divisible] : table) {
      // Empty ranges contribute zero: for t = s_{m-1} (possible for large k)
      // the middle and trailing terms vanish and the row is z times the
      // full prefix sum.
      IntPoly g = prefix[static_cast<std::size_t>(t)].shifted(1);
      if (t < sp) {
        const IntPoly& mid = polys[static_cast<std::size_t>(t)];
        if (divisible) {
          g += mid * one_plus_z();
          g += total - prefix[static_cast<std::size_t>(t) + 1];
        } else {
          g += total - prefix[static_cast<std::size_t>(t)];
        }
      }
      next.push_back(std::move(g));
    }
    polys = std::move(next);
  }
  return {s.size(), std::move(polys)};
}

IntPoly binomial_eulerian(const SVec& s) {
  if (s.size() == 0) return one_plus_z();
  auto fam = refined_polys(s);
  IntPoly out = fam.polys[0] * one_plus_z();
  for (std::size_t k = 1; k < fam.polys.size(); ++k) out += fam.polys[k];
  return out;
}

namespace {

using Mat2 = std::array<std::array<IntPoly, 2>, 2>;

Mat2 mat(std::initializer_list<long> a, std::initializer_list<long> b,
         std::initializer_list<long> c, std::initializer_list<long> d) {
  return {{{IntPoly(a), IntPoly(b)}, {IntPoly(c), IntPoly(d)}}};
}

Mat2 mul(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return out;
}

bool eq(const Mat2& x, const Mat2& y) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (x[i][j] != y[i][j]) return false;
  return true;
}

std::array<IntPoly, 2> apply_mat(const Mat2& m, const std::array<IntPoly, 2>& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

std::string describe(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m[0][0].to_string() << ", " << m[0][1].to_string() << "], ["
     << m[1][0].to_string() << ", " << m[1][1].to_string() << "]]";
  return os.str();
}

// Deterministic interlacing pairs (f << g) built from interleaved negative
// integer root ladders.
std::vector<std::array<IntPoly, 2>> interlacing_pair_battery() {
  auto from_roots = [](std::initializer_list<long> roots) {
    IntPoly p{1};
    for (long r : roots) p *= IntPoly{r, 1};  // z + r with r >= 0
    return p;
  };
  std::vector<std::array<IntPoly, 2>> pairs;
  pairs.push_back({one_plus_z(), IntPoly{0, 1}});
  pairs.push_back({IntPoly{1}, IntPoly{1, 1}});
  pairs.push_back({from_roots({3, 1}), from_roots({2, 0})});
  pairs.push_back({from_roots({4, 2, 1}), from_roots({3, 2, 0})});
  pairs.push_back({from_roots({5, 2}), from_roots({6, 3, 1})});
  pairs.push_back({from_roots({2, 2}), from_roots({2, 1})});
  pairs.push_back({from_roots({7, 3, 0}), from_roots({5, 1, 0})});
  return pairs;
}

}  // namespace

MatrixCheckReport factorization_checks() {
  MatrixCheckReport report;
  struct Identity {
    Mat2 left, r1, r2;
  };
  const std::vector<Identity> ids = {
      {mat({1, 1}, {1}, {0, 1}, {1}), mat({1}, {1}, {}, {1}),
       mat({1}, {}, {0, 1}, {1})},
      {mat({1}, {1}, {1, 1}, {1}), mat({1}, {}, {1}, {1}),
       mat({1}, {1}, {0, 1}, {})},
      {mat({1, 1}, {1}, {0, 1}, {0, 1}), mat({1}, {1}, {0, 1}, {}),
       mat({1}, {1}, {0, 1}, {})},
      {mat({1}, {1}, {0, 1}, {1, 1}), mat({1}, {}, {0, 1}, {1}),
       mat({1}, {1}, {}, {1})},
      {mat({0, 1}, {1, 1}, {0, 1}, {0, 1}), mat({1}, {1}, {}, {1}),
       mat({}, {1}, {0, 1}, {0, 1})},
      {mat({0, 1}, {1}, {0, 1}, {1, 1}), mat({1}, {}, {1}, {1}),
       mat({0, 1}, {1}, {}, {0, 1})},
      {mat({0, 1}, {1, 1}, {0, 1}, {1, 1}), mat({1}, {1}, {1}, {1}),
       mat({0, 1}, {1}, {}, {0, 1})},
      {mat({1, 1}, {1}, {1, 1}, {1}), mat({1}, {1}, {1}, {1}),
       mat({1}, {}, {0, 1}, {1})},
  };
  int idx = 0;
  for (const auto& id : ids) {
    ++idx;
    bool ok = eq(mul(id.r1, id.r2), id.left);
    if (!ok) report.all_passed = false;
    std::ostringstream os;
    os << "factorization " << idx << ": " << describe(id.left)
       << (ok ? " = " : " != ") << describe(id.r1) << " * " << describe(id.r2);
    report.lines.push_back(os.str());
  }

  // The remaining 2x2 case has no such factorization and is verified to
  // preserve interlacing directly.
  Mat2 direct = mat({1, 1}, {1}, {0, 1}, {1, 1});
  for (const auto& pair : interlacing_pair_battery()) {
    if (!interlaces(pair[0], pair[1]).holds) {
      report.all_passed = false;
      report.lines.push_back("battery pair is not interlacing: " +
                             pair[0].to_string() + " << " + pair[1].to_string());
      continue;
    }
    auto out = apply_mat(direct, pair);
    bool ok = interlaces(out[0], out[1]).holds;
    if (!ok) report.all_passed = false;
    std::ostringstream os;
    os << "direct case " << describe(direct) << " on (" << pair[0].to_string()
       << ", " << pair[1].to_string() << "): output "
       << (ok ? "interlaces" : "DOES NOT interlace");
    report.lines.push_back(os.str());
  }
  return report;
}

MatrixCheckReport counterexample_check() {
  MatrixCheckReport report;
  struct Case {
    Mat2 m;
    std::array<IntPoly, 2> in;
    std::array<IntPoly, 2> expected;
  };
  const std::vector<Case> cases = {
      {mat({1, 1}, {1}, {1, 1}, {1, 1}),
       {one_plus_z(), IntPoly{0, 1}},
       {IntPoly{1, 3, 1}, IntPoly{1, 3, 2}}},
      {mat({1, 1}, {1, 1}, {0, 1}, {1, 1}),
       {IntPoly{1}, IntPoly{0, 1}},
       {IntPoly{1, 2, 1}, IntPoly{0, 2, 1}}},
  };
  int idx = 0;
  for (const auto& c : cases) {
    ++idx;
    std::ostringstream os;
    os << "counterexample " << idx << ": ";
    if (!is_interlacing_sequence(c.in).holds) {
      report.all_passed = false;
      os << "input is unexpectedly not interlacing";
      report.lines.push_back(os.str());
      continue;
    }
    auto out = apply_mat(c.m, c.in);
    if (out[0] != c.expected[0] || out[1] != c.expected[1]) {
      report.all_passed = false;
      os << "product differs from the expected vector (" << out[0].to_string()
         << ", " << out[1].to_string() << ")";
      report.lines.push_back(os.str());
      continue;
    }
    bool broke = !is_interlacing_sequence(out).holds;
    if (!broke) report.all_passed = false;
    os << describe(c.m) << " applied to (" << c.in[0].to_string() << ", "
       << c.in[1].to_string() << ") gives (" << out[0].to_string() << ", "
       << out[1].to_string() << "), which "
       << (broke ? "fails" : "UNEXPECTEDLY passes") << " the interlacing test";
    report.lines.push_back(os.str());
  }
  return report;
}

}  // namespace eulerian

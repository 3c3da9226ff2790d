// Command-line surface: compute polynomial families, verify the certified
// properties (interlacing, real-rootedness, oracle agreement, bijections,
// matrix identities, symmetric decompositions), and emit tables.
//
// Exit codes: 0 success, 1 a verified property failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulerian/colored.hpp"
#include "eulerian/inversion.hpp"
#include "eulerian/json_io.hpp"
#include "eulerian/permutations.hpp"
#include "eulerian/real_rooted.hpp"
#include "eulerian/recurrence.hpp"
#include "eulerian/sections.hpp"
#include "eulerian/subdivision.hpp"

namespace {

using namespace eulerian;

constexpr long long kDefaultOracleCap = 10'000'000;
constexpr unsigned long long kDefaultSeed = 20240811ull;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SVec parse_svec(const std::string& text) {
  std::vector<long> entries;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      entries.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("malformed s entry '" + token + "'");
    }
  }
  if (entries.empty()) throw UsageError("empty s-vector");
  try {
    return SVec{std::move(entries)};
  } catch (const std::invalid_argument&) {
    throw UsageError("s entries must be positive integers");
  }
}

long long env_or(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

void require_under_cap(long long size, long long cap, const std::string& what) {
  if (size > cap) {
    std::ostringstream os;
    os << what << " needs at least " << size
       << " enumerated objects, above the oracle cap " << cap
       << "; raise --oracle-cap (or EULERIAN_ORACLE_CAP) to allow it";
    throw UsageError(os.str());
  }
}

long long factorial_clamped(int n, long long cap) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

long long colored_count_clamped(int n, int r, long long cap) {
  long long f = factorial_clamped(n, cap);
  for (int i = 0; i < n; ++i) {
    if (f > cap) return cap + 1;
    f *= r;
  }
  return f;
}

// The h-polynomial routes include a word enumeration of size r^(n-1).
long long word_route_clamped(int n, int r, long long cap) {
  long long f = 1;
  for (int i = 1; i < n; ++i) {
    f *= r;
    if (f > cap) return cap + 1;
  }
  return f;
}

std::string params_string(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ",";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void emit_poly_csv(std::ostream& os, const std::string& family,
                   const std::string& params, const IntPoly& f) {
  os << family << "," << csv_quote(params) << "," << coeffs_joined(f, ';') << "\n";
}

struct PolyOutput {
  std::string label;  // e.g. "k=0" or "plus"; empty for a single polynomial
  IntPoly poly;
};

int emit_compute(const std::string& family, const std::string& params,
                 const std::vector<PolyOutput>& polys, const std::string& format) {
  if (format == "json") {
    if (polys.size() == 1 && polys[0].label.empty()) {
      std::cout << poly_to_json(polys[0].poly).dump() << "\n";
    } else {
      nlohmann::ordered_json j{{"family", family}, {"params", params}};
      for (const auto& p : polys) j[p.label] = poly_to_json(p.poly);
      std::cout << j.dump() << "\n";
    }
  } else if (format == "csv") {
    std::cout << "family,params,coeffs\n";
    for (const auto& p : polys) {
      std::string full = p.label.empty() ? params : params + "," + p.label;
      emit_poly_csv(std::cout, family, full, p.poly);
    }
  } else {
    for (const auto& p : polys) {
      if (!p.label.empty()) std::cout << p.label << ": ";
      std::cout << p.poly.to_string() << "\n";
    }
  }
  return 0;
}

int emit_verdict(bool holds, const std::string& reason, const std::string& format,
                 const std::vector<std::string>& lines) {
  if (format == "json") {
    std::cout << nlohmann::ordered_json{{"holds", holds}, {"reason", reason}}.dump() << "\n";
  } else {
    for (const auto& line : lines) std::cout << line << "\n";
    std::cout << (holds ? "PASS" : "FAIL") << ": " << reason << "\n";
  }
  return holds ? 0 : 1;
}

// ------------------------------------------------------------------ compute

int run_compute(const std::string& family, std::optional<std::string> s_text,
                std::optional<int> n, std::optional<int> r,
                const std::string& format, long long cap) {
  auto need_n = [&]() -> int {
    if (!n) throw UsageError("family '" + family + "' needs --n");
    return *n;
  };
  auto need_r = [&]() -> int {
    if (!r) throw UsageError("family '" + family + "' needs --r");
    return *r;
  };

  if (family == "binomial-eulerian-s") {
    SVec s = parse_svec(s_text ? *s_text : throw UsageError("needs --s"));
    return emit_compute(family, "s=" + *s_text, {{"", binomial_eulerian(s)}}, format);
  }
  if (family == "refined") {
    SVec s = parse_svec(s_text ? *s_text : throw UsageError("needs --s"));
    auto fam = refined_polys(s);
    std::vector<PolyOutput> out;
    for (std::size_t k = 0; k < fam.polys.size(); ++k)
      out.push_back({"k=" + std::to_string(k), fam.polys[k]});
    return emit_compute(family, "s=" + *s_text, out, format);
  }
  if (family == "eulerian" || family == "derangement") {
    int nn = need_n();
    if (nn < 1) throw UsageError("--n must be >= 1");
    AlphaKind alpha = family == "eulerian" ? AlphaKind::one : AlphaKind::zero;
    IntPoly value = alpha_recurrence(nn + 1, alpha)[0];
    return emit_compute(family, "n=" + std::to_string(nn), {{"", value}}, format);
  }
  if (family == "binomial-eulerian") {
    int nn = need_n();
    if (nn < 1) throw UsageError("--n must be >= 1");
    IntPoly value = binomial_eulerian(theta_svec(nn));
    return emit_compute(family, "n=" + std::to_string(nn), {{"", value}}, format);
  }
  if (family == "colored") {
    int nn = need_n(), rr = need_r();
    if (nn < 0 || rr < 1) throw UsageError("needs --n >= 0 and --r >= 1");
    require_under_cap(colored_count_clamped(nn, rr, cap), cap, "colored enumeration");
    std::string params = params_string({{"n", std::to_string(nn)}, {"r", std::to_string(rr)}});
    return emit_compute(family, params, {{"", colored_eulerian(nn, rr)}}, format);
  }
  if (family == "colored-parts") {
    int nn = need_n(), rr = need_r();
    if (nn < 1 || rr < 1) throw UsageError("needs --n >= 1 and --r >= 1");
    require_under_cap(colored_count_clamped(nn, rr, cap), cap, "colored enumeration");
    ATildeParts parts = a_tilde_parts(nn, rr);
    std::string params = params_string({{"n", std::to_string(nn)}, {"r", std::to_string(rr)}});
    return emit_compute(family, params,
                        {{"plus", parts.plus}, {"minus", parts.minus}, {"total", parts.total}},
                        format);
  }
  if (family == "h-esd") {
    int nn = need_n(), rr = need_r();
    if (nn < 0 || rr < 1) throw UsageError("needs --n >= 0 and --r >= 1");
    require_under_cap(word_route_clamped(nn, rr, cap), cap, "word enumeration");
    std::string params = params_string({{"n", std::to_string(nn)}, {"r", std::to_string(rr)}});
    return emit_compute(family, params, {{"", h_delta_esd(nn, rr).by_er}}, format);
  }
  if (family == "h-sections") {
    int nn = need_n(), rr = need_r();
    if (nn < 0 || rr < 1) throw UsageError("needs --n >= 0 and --r >= 1");
    auto secs = h_sections(nn, rr);
    std::vector<PolyOutput> out;
    for (std::size_t i = 0; i < secs.size(); ++i)
      out.push_back({"h" + std::to_string(secs.size() - 1 - i), secs[i]});
    std::string params = params_string({{"n", std::to_string(nn)}, {"r", std::to_string(rr)}});
    return emit_compute(family, params, out, format);
  }
  throw UsageError("unknown family '" + family + "'");
}

// ------------------------------------------------------------------- verify

int verify_interlacing(const std::string& s_text, const std::string& format) {
  SVec s = parse_svec(s_text);
  auto fam = refined_polys(s);
  InterlacingVerdict v = is_interlacing_sequence(fam.polys);
  return emit_verdict(v.holds, std::string(to_string(v.reason)), format,
                      {"refined family for s=" + s_text + " has " +
                       std::to_string(fam.polys.size()) + " polynomials"});
}

int verify_real_rooted(std::optional<std::string> s_text,
                       std::optional<std::string> family, std::optional<int> n,
                       std::optional<int> r, std::optional<std::string> coeffs,
                       const std::string& format, long long cap) {
  IntPoly f;
  std::string what;
  if (coeffs) {
    f = poly_from_coeff_list(*coeffs, ',');
    what = "coeffs " + *coeffs;
  } else if (s_text) {
    f = binomial_eulerian(parse_svec(*s_text));
    what = "binomial-eulerian-s s=" + *s_text;
  } else if (family) {
    if (!n) throw UsageError("verify real-rooted --family needs --n");
    if (*family == "eulerian") f = alpha_recurrence(*n + 1, AlphaKind::one)[0];
    else if (*family == "derangement") f = alpha_recurrence(*n + 1, AlphaKind::zero)[0];
    else if (*family == "binomial-eulerian") f = binomial_eulerian(theta_svec(*n));
    else if (*family == "colored") {
      if (!r) throw UsageError("family colored needs --r");
      auto fam = refined_polys(psi_svec(*n, *r));
      for (const auto& p : fam.polys) f += p;
    } else if (*family == "h-esd") {
      if (!r) throw UsageError("family h-esd needs --r");
      require_under_cap(word_route_clamped(*n, *r, cap), cap, "word enumeration");
      f = h_delta_esd(*n, *r).by_er;
    } else {
      throw UsageError("unsupported family for real-rooted: " + *family);
    }
    what = *family;
  } else {
    throw UsageError("verify real-rooted needs --s, --family, or --coeffs");
  }
  bool ok = is_real_rooted(f);
  return emit_verdict(ok, ok ? "ok" : "not-real-rooted", format,
                      {what + ": " + f.to_string()});
}

int verify_oracle(const std::string& s_text, long long cap, const std::string& format) {
  SVec s = parse_svec(s_text);
  require_under_cap(s.product_clamped(cap), cap, "inversion-sequence oracle");
  auto fast = refined_polys(s);
  auto brute = brute_refined(s);
  bool ok = fast.polys.size() == brute.size();
  for (std::size_t k = 0; ok && k < brute.size(); ++k)
    ok = fast.polys[k] == brute[k];
  bool tilde_ok = binomial_eulerian(s) == brute_binomial_eulerian(s);
  std::vector<std::string> lines{
      "refined family: " + std::string(ok ? "recurrence = brute force" : "MISMATCH"),
      "binomial Eulerian: " + std::string(tilde_ok ? "recurrence = brute force" : "MISMATCH")};
  bool all = ok && tilde_ok;
  return emit_verdict(all, all ? "ok" : "oracle-mismatch", format, lines);
}

int verify_bijections(int n_max, int r_max, long long cap, const std::string& format) {
  std::vector<std::string> lines;
  bool all = true;

  for (int n = 1; n <= n_max; ++n) {
    require_under_cap(factorial_clamped(n, cap), cap, "theta bijection check");
    SVec s = theta_svec(n);
    std::set<std::vector<long>> images;
    bool ok = true;
    for_each_permutation(n, [&](const std::vector<int>& w) {
      Perm p{w};
      InvSeq e = theta(p);
      PermStats ps = perm_stats(p);
      StatTuple st = stats(e, s);
      if (ps.des != st.asc || ps.bad != st.col) ok = false;
      if (!images.insert(e.values).second) ok = false;
    });
    long long expected = factorial_clamped(n, cap);
    if (static_cast<long long>(images.size()) != expected) ok = false;
    if (!ok) all = false;
    lines.push_back("theta n=" + std::to_string(n) + ": " + (ok ? "ok" : "FAIL"));
  }

  for (int n = 1; n <= n_max; ++n)
    for (int r = 2; r <= r_max; ++r) {
      require_under_cap(colored_count_clamped(n, r, cap), cap, "psi bijection check");
      SVec s = psi_svec(n, r);
      bool ok = true;
      long long seen = 0;
      for_each_colored_permutation(n, r, [&](const std::vector<int>& w, const std::vector<int>& c) {
        ColoredPerm sigma{Perm{w}, c, r};
        InvSeq e = psi(sigma);
        ColoredStats cs = colored_stats(sigma);
        StatTuple st = stats(e, s);
        if (cs.des != st.des) ok = false;
        if (static_cast<long>(cs.bad_set.size()) != st.col_prime) ok = false;
        bool plus = cs.sign_class == SignClass::plus;
        if (plus != (e.values.back() == 0)) ok = false;
        ColoredPerm back = psi_inv(e, n, r);
        if (back.perm.word != sigma.perm.word || back.colors != sigma.colors) ok = false;
        ++seen;
      });
      if (seen != colored_count_clamped(n, r, cap)) ok = false;
      if (!ok) all = false;
      lines.push_back("psi n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                      (ok ? "ok" : "FAIL"));
    }

  return emit_verdict(all, all ? "ok" : "bijection-failure", format, lines);
}

// Random interlacing families from interleaved nonpositive root ladders.
std::vector<IntPoly> random_interlacing_family(std::mt19937_64& rng, int q, int d) {
  std::uniform_int_distribution<long> gap(0, 3);
  std::vector<long> ladder(static_cast<std::size_t>(d) + 1);
  long cur = -gap(rng);
  for (int k = d; k >= 0; --k) {
    ladder[static_cast<std::size_t>(k)] = cur;
    cur -= gap(rng);
  }
  std::uniform_int_distribution<int> switch_at(1, q + 1);
  std::vector<int> cut(static_cast<std::size_t>(d) + 1);
  for (auto& c : cut) c = switch_at(rng);
  std::uniform_int_distribution<long> lead(1, 3);
  std::vector<IntPoly> fs;
  for (int i = 1; i <= q; ++i) {
    IntPoly f{lead(rng)};
    for (int k = 1; k <= d; ++k) {
      long root = i < cut[static_cast<std::size_t>(k)] ? ladder[static_cast<std::size_t>(k - 1)]
                                                       : ladder[static_cast<std::size_t>(k)];
      f *= IntPoly{-root, 1};
    }
    fs.push_back(std::move(f));
  }
  return fs;
}

ThresholdSpec random_spec(std::mt19937_64& rng, int q) {
  std::uniform_int_distribution<int> rows(1, q + 2);
  int p = rows(rng);
  std::uniform_int_distribution<int> tv(1, q);
  std::vector<int> t(static_cast<std::size_t>(p));
  for (auto& x : t) x = tv(rng);
  std::sort(t.begin(), t.end());
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<RowMarker> a(static_cast<std::size_t>(p));
  for (auto& m : a) m = coin(rng) == 0 ? RowMarker::one : RowMarker::one_plus_z;
  // Within a run of equal thresholds, plain-1 rows must precede 1+z rows.
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    std::stable_partition(a.begin() + static_cast<std::ptrdiff_t>(i),
                          a.begin() + static_cast<std::ptrdiff_t>(j),
                          [](RowMarker m) { return m == RowMarker::one; });
    i = j;
  }
  return {std::move(t), std::move(a)};
}

int verify_matrices(int trials, unsigned long long seed, const std::string& format) {
  std::vector<std::string> lines;
  bool all = true;

  MatrixCheckReport fact = factorization_checks();
  all = all && fact.all_passed;
  lines.insert(lines.end(), fact.lines.begin(), fact.lines.end());

  MatrixCheckReport counter = counterexample_check();
  all = all && counter.all_passed;
  lines.insert(lines.end(), counter.lines.begin(), counter.lines.end());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> qd(2, 6), dd(1, 4);
  int failures = 0;
  for (int trial = 0; trial < trials; ++trial) {
    int q = qd(rng), d = dd(rng);
    auto fs = random_interlacing_family(rng, q, d);
    if (!is_interlacing_sequence(fs).holds) {
      ++failures;
      continue;
    }
    auto spec = random_spec(rng, q);
    auto gs = threshold_transform(fs, spec);
    if (!is_interlacing_sequence(gs).holds) ++failures;
  }
  lines.push_back("random threshold transforms: " + std::to_string(trials) +
                  " trials, seed " + std::to_string(seed) + ", " +
                  std::to_string(failures) + " failures");
  if (failures > 0) all = false;

  return emit_verdict(all, all ? "ok" : "matrix-suite-failure", format, lines);
}

int verify_decomposition(int n_max, int r_max, long long cap, const std::string& format) {
  std::vector<std::string> lines;
  bool all = true;
  for (int n = 1; n <= n_max; ++n)
    for (int r = 2; r <= r_max; ++r) {
      require_under_cap(colored_count_clamped(n, r, cap), cap, "colored decomposition check");
      bool ok = true;
      std::string note;
      try {
        ATildeParts parts = a_tilde_parts(n, r);
        if (!interlaces(parts.plus, parts.minus).holds) {
          ok = false;
          note = " (interlacing fails)";
        }
        if (!is_real_rooted(parts.total)) {
          ok = false;
          note += " (total not real-rooted)";
        }
        auto [dp, dm] = d_plus_minus(n, r);
        if (dp + dm != colored_derangement(n, r)) {
          ok = false;
          note += " (derangement parts do not sum)";
        }
      } catch (const std::logic_error& e) {
        ok = false;
        note = std::string(" (") + e.what() + ")";
      }
      if (!ok) all = false;
      lines.push_back("decomposition n=" + std::to_string(n) + " r=" + std::to_string(r) +
                      ": " + (ok ? "ok" : "FAIL") + note);
    }
  return emit_verdict(all, all ? "ok" : "decomposition-failure", format, lines);
}

// -------------------------------------------------------------------- table

int run_table(const std::string& family, int n_max, std::optional<int> r,
              const std::string& format, long long cap) {
  struct Row {
    int n;
    std::optional<int> r;
    IntPoly poly;
  };
  std::vector<Row> rows;
  if (family == "eulerian" || family == "derangement") {
    AlphaKind alpha = family == "eulerian" ? AlphaKind::one : AlphaKind::zero;
    for (int n = 1; n <= n_max; ++n)
      rows.push_back({n, std::nullopt, alpha_recurrence(n + 1, alpha)[0]});
  } else if (family == "binomial-eulerian") {
    for (int n = 1; n <= n_max; ++n)
      rows.push_back({n, std::nullopt, binomial_eulerian(theta_svec(n))});
  } else if (family == "colored") {
    if (!r) throw UsageError("table family colored needs --r");
    for (int n = 1; n <= n_max; ++n) {
      require_under_cap(colored_count_clamped(n, *r, cap), cap, "colored enumeration");
      rows.push_back({n, r, colored_eulerian(n, *r)});
    }
  } else if (family == "h-esd") {
    if (!r) throw UsageError("table family h-esd needs --r");
    for (int n = 0; n <= n_max; ++n) {
      require_under_cap(word_route_clamped(n, *r, cap), cap, "word enumeration");
      rows.push_back({n, r, h_delta_esd(n, *r).by_er});
    }
  } else {
    throw UsageError("unknown table family '" + family + "'");
  }

  if (format == "json") {
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json jr{{"n", row.n}};
      if (row.r) jr["r"] = *row.r;
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (const auto& c : row.poly.coeffs()) coeffs.push_back(c.get_str());
      jr["coeffs"] = std::move(coeffs);
      jrows.push_back(std::move(jr));
    }
    nlohmann::ordered_json params{{"n_max", n_max}};
    if (r) params["r"] = *r;
    std::cout << nlohmann::ordered_json{{"family", family}, {"params", params}, {"rows", jrows}}.dump()
              << "\n";
  } else {
    std::cout << "family,params,coeffs\n";
    for (const auto& row : rows) {
      std::string params = "n=" + std::to_string(row.n);
      if (row.r) params += ",r=" + std::to_string(*row.r);
      emit_poly_csv(std::cout, family, params, row.poly);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations and certificates for generalized binomial "
               "Eulerian polynomials"};
  app.require_subcommand(1);

  long long cap = env_or("EULERIAN_ORACLE_CAP", kDefaultOracleCap);
  unsigned long long seed =
      static_cast<unsigned long long>(env_or("EULERIAN_SEED",
                                             static_cast<long long>(kDefaultSeed)));

  std::string format = "text";
  std::optional<std::string> s_text;
  std::optional<int> n_opt, r_opt;

  auto add_common = [&](CLI::App* cmd, bool with_params) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--oracle-cap", cap, "enumeration size cap");
    if (with_params) {
      cmd->add_option("--s", s_text, "s-vector, comma separated (e.g. 2,3)");
      cmd->add_option("--n", n_opt, "n parameter");
      cmd->add_option("--r", r_opt, "r parameter (colors / subdivision)");
    }
  };

  auto* compute = app.add_subcommand("compute", "compute a polynomial family");
  std::string family;
  compute->add_option("family", family, "family name")->required();
  add_common(compute, true);

  auto* verify = app.add_subcommand("verify", "verify a certified property");
  std::string check;
  verify->add_option("check", check,
                     "interlacing | real-rooted | oracle | bijections | matrices | decomposition")
      ->required();
  add_common(verify, true);
  std::optional<std::string> vr_family, vr_coeffs;
  verify->add_option("--family", vr_family, "family for verify real-rooted");
  verify->add_option("--coeffs", vr_coeffs, "explicit coefficients, low-to-high");
  int n_max = 5, r_max = 3, trials = 200;
  verify->add_option("--n-max", n_max, "largest n");
  verify->add_option("--r-max", r_max, "largest r");
  verify->add_option("--trials", trials, "random transform trials");
  verify->add_option("--seed", seed, "RNG seed for the random trials");

  auto* table = app.add_subcommand("table", "emit a family table");
  std::string table_family;
  int table_n_max = 5;
  table->add_option("--family", table_family, "family name")->required();
  table->add_option("--n-max", table_n_max, "largest n")->required();
  add_common(table, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return run_compute(family, s_text, n_opt, r_opt, format, cap);
    if (verify->parsed()) {
      if (check == "interlacing") {
        if (!s_text) throw UsageError("verify interlacing needs --s");
        return verify_interlacing(*s_text, format);
      }
      if (check == "real-rooted")
        return verify_real_rooted(s_text, vr_family, n_opt, r_opt, vr_coeffs, format, cap);
      if (check == "oracle") {
        if (!s_text) throw UsageError("verify oracle needs --s");
        return verify_oracle(*s_text, cap, format);
      }
      if (check == "bijections") return verify_bijections(n_max, r_max, cap, format);
      if (check == "matrices") return verify_matrices(trials, seed, format);
      if (check == "decomposition") return verify_decomposition(n_max, r_max, cap, format);
      throw UsageError("unknown check '" + check + "'");
    }
    if (table->parsed()) return run_table(table_family, table_n_max, r_opt, format, cap);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

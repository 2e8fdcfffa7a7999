// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "algent/catalog.hpp"
#include "algent/monomial.hpp"
#include "algent/ratmap.hpp"
#include "algent/recurrence.hpp"
#include "algent/spectral.hpp"
#include "algent/tropical.hpp"

using namespace algent;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

const IntMatrix kCounter{{-1, 1, 0}, {-1, 0, 1}, {1, 0, 0}};
const IntMatrix kFib{{0, 1}, {1, 1}};
const IntMatrix kSquare{{2, 0}, {0, 3}};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

RationalMap rational(const std::string& name) { return std::get<RationalMap>(find_catalog_entry(name)->load()); }
TropMap tropical(const std::string& name) { return std::get<TropMap>(find_catalog_entry(name)->load()); }

std::vector<long> degrees(const RationalMap& f, long nmax, bool& exact) {
  std::vector<long> out;
  exact = true;
  for (const auto& e : degree_sequence_rational(f, nmax)) {
    out.push_back(e.degree);
    exact = exact && e.exact;
  }
  return out;
}

Outcome c1() {
  std::vector<Int> got{Int(1)};
  for (const auto& d : degree_sequence(kCounter, 20)) got.push_back(d);
  std::vector<Int> want;
  for (long v : {1, 2, 3, 4, 6, 9, 12, 17, 25, 33, 45, 65, 85, 112, 159, 215, 262, 365, 524, 627, 833}) want.emplace_back(v);
  return {got == want, "N=0..20: " + join(got)};
}

Outcome c2() {
  auto c = cN_sequence(kCounter, 20);
  std::vector<Int> want;
  for (long v : {-2, 2, 1, -5, 6, 0, -11, 17, -6, -22, 45, -29, -38, 112, -103, -47, 262, -318, 9, 571, -898}) want.emplace_back(v);
  bool rec = true;
  for (std::size_t n = 3; n < c.size(); ++n) rec = rec && c[n] == c[n - 3] - c[n - 2] - c[n - 1];
  return {c == want && rec, "21 values (c_0..c_20) " + std::string(c == want ? "match" : "differ") +
                                ", c_N = c_{N-3} - c_{N-2} - c_{N-1} " + (rec ? "holds" : "fails")};
}

Outcome c3() {
  std::vector<Int> d{Int(1)};
  for (const auto& v : degree_sequence(kCounter, 20)) d.push_back(v);
  auto prof = recurrence_order_profile(to_rationals(d));
  std::size_t final_order = prof.back().second;
  // Any run of one order over four or more consecutive prefix lengths.
  std::size_t longest = longest_plateau_after(prof, 2);
  std::size_t tail = final_plateau_length(prof);
  std::ostringstream runs;
  for (std::size_t i = 0; i < prof.size();) {
    std::size_t j = i;
    while (j + 1 < prof.size() && prof[j + 1].second == prof[i].second) ++j;
    if (j - i + 1 >= 4)
      runs << (runs.tellp() > 0 ? ", " : "") << "order " << prof[i].second << " on lengths " << prof[i].first << "-" << prof[j].first;
    i = j + 1;
  }

  bool exact = false;
  std::vector<Rat> scott;
  for (long v : degrees(rational("scott"), 8, exact)) scott.emplace_back(v);
  auto sprof = recurrence_order_profile(scott);
  std::size_t stail = final_plateau_length(sprof);
  bool ok = longest < 4 && final_order >= 9 && sprof.back().second == 3 && stail >= 4 && exact;
  std::ostringstream os;
  os << "counterexample: final order " << final_order << ", longest plateau " << longest;
  if (runs.tellp() > 0) os << " (" << runs.str() << ")";
  os << ", terminal plateau " << tail << "; scott: order " << sprof.back().second << " held for " << stail << " prefix lengths";
  return {ok, os.str()};
}

Outcome c4() {
  double a = algebraic_entropy(kSquare).value, t = toral_entropy(kSquare).value.value, f = algebraic_entropy(kFib).value;
  double phi = std::log((1 + std::sqrt(5.0)) / 2);
  bool ok = std::fabs(a - std::log(3.0)) < 1e-9 && std::fabs(t - std::log(6.0)) < 1e-9 && std::fabs(f - phi) < 1e-9;
  char buf[200];
  std::snprintf(buf, sizeof buf, "diag(2,3): algebraic %.12g toral %.12g; fib: %.12g", a, t, f);
  return {ok, buf};
}

Outcome c5() {
  double r = spectral_radius(kCounter).value, ri = spectral_radius_inverse(kCounter).value;
  char buf[160];
  std::snprintf(buf, sizeof buf, "rho(A) = %.12g, rho(A^-1) = %.12g, rho(A)^2 = %.12g", r, ri, r * r);
  return {std::fabs(ri - r * r) < 1e-9, buf};
}

Outcome c6() {
  bool ok = true;
  double worst = 0;
  auto mats = catalog_matrices();
  std::size_t checked = 0;
  auto check = [&](const IntMatrix& a) {
    ToralEntropy t = toral_entropy(a);
    double gap = std::fabs(t.root_route.value - t.compound_route.value);
    worst = std::max(worst, gap);
    ok = ok && gap < 1e-8;
    ++checked;
  };
  for (const auto& [name, a] : mats) {
    check(a);
    check(homogenize(a).b);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu catalog matrices and their homogenizations, largest route gap %.3g",
                mats.size(), worst);
  return {ok, buf};
}

Outcome c7() {
  auto t0 = std::chrono::steady_clock::now();
  bool all_exact = true, ok = true, e = false;
  auto mus = degrees(rational("musiker"), 10, e);
  all_exact = all_exact && e;
  for (long n = 1; n <= 10; ++n) ok = ok && mus[n - 1] == 2 * n;
  ok = ok && degrees(rational("scott"), 8, e) == std::vector<long>{2, 4, 8, 14, 24, 40, 66, 108};
  all_exact = all_exact && e;
  auto hone = degrees(rational("hone"), 8, e);
  all_exact = all_exact && e;
  for (long n = 1; n <= 8; ++n) ok = ok && hone[n - 1] == (2 * n * n + 6 * n + 9) / 5;
  ok = ok && degrees(rational("henon"), 6, e) == std::vector<long>{2, 4, 8, 16, 32, 64};
  all_exact = all_exact && e;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[160];
  std::snprintf(buf, sizeof buf, "musiker, scott, hone, henon sequences %s, exact flags %s (%.2fs)", ok ? "match" : "differ",
                all_exact ? "set" : "missing", secs);
  return {ok && all_exact, buf};
}

Outcome c8() {
  RationalMap f3 = iterate(rational("musiker"), 3);
  RationalFn want = parse_rational("(y^6+3*y^4+3*y^2+2*x^2*y^2+x^4+2*x^2+1)/(x^3*y^2)", f3.vars());
  return {f3[1] == want && f3[1].is_laurent(), "second component: " + f3[1].to_string(f3.vars())};
}

Outcome c9() {
  std::vector<IntMatrix> mats{kFib, kSquare, kCounter};
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 3);
  while (mats.size() < 53) {
    std::size_t n = static_cast<std::size_t>(size(rng));
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    if (determinant(a) != 0) mats.push_back(a);
  }
  std::size_t bad = 0;
  for (const auto& a : mats) {
    auto eq = degree_sequence(a, 6);
    auto rat = degree_sequence_rational(monomial_to_rational(a), 6);
    for (std::size_t i = 0; i < 6; ++i)
      if (Int(rat[i].degree) != eq[i] || !rat[i].exact) {
        ++bad;
        break;
      }
  }
  return {bad == 0, std::to_string(mats.size()) + " matrices, " + std::to_string(bad) + " disagreements for N <= 6"};
}

Outcome c10() {
  SignatureReport r = signature_analysis(homogenize(kFib));
  auto find = [&](std::vector<std::uint8_t> bits) -> const SignatureOrbit& {
    for (const auto& o : r.orbits)
      if (o.start.bits == bits) return o;
    throw DomainError("signature not enumerated");
  };
  auto dies_at = [&](std::vector<std::uint8_t> bits, std::size_t step) {
    const auto& o = find(std::move(bits));
    return o.fate == Fate::kDies && o.steps == step;
  };
  bool ok = dies_at({1, 0, 0}, 1) && dies_at({0, 1, 0}, 1) && dies_at({1, 1, 0}, 2) && find({1, 1, 1}).fate == Fate::kPeriodic;
  std::size_t maps = 0;
  for (const auto& [name, a] : catalog_matrices()) {
    SignatureReport s = signature_analysis(homogenize(a));
    ok = ok && s.max_resolution <= s.bound;
    ++maps;
  }
  return {ok, "fibmono signature fates as stated; " + std::to_string(maps) + " catalog maps resolve within 2^(n+1) steps"};
}

Outcome c11() {
  TropMap g = tropical("musiker-trop");
  TropMap order5 = TropMap::parse({"a", "b"}, {"b", "max(b,0)-a"});
  bool ok = iterate(order5, 5).is_identity();
  auto form = [](std::vector<long> c) {
    std::vector<Rat> r;
    for (long v : c) r.emplace_back(v);
    return AffineForm(r, 0);
  };
  const std::vector<std::vector<std::vector<long>>> musiker{
      {{-1, 0}, {-1, 2}, {-1, 0}}, {{0, -1}, {-2, 3}, {-2, -1}}, {{1, -2}, {-3, 4}, {-3, -2}}, {{2, -3}, {-4, 5}, {-4, -3}}};
  const std::vector<std::vector<std::vector<long>>> scott{
      {{-1, 2, 0}, {-1, 0, 2}, {-1, 0, 2}, {-1, 2, 0}},         {{-2, 3, 0}, {-2, -1, 4}, {0, -1, 2}, {-2, 3, 0}},
      {{-4, 6, -1}, {-4, -2, 7}, {0, -2, 3}, {-2, 4, -1}},      {{-7, 10, -2}, {-7, -4, 12}, {1, -4, 4}, {-3, 6, -2}},
      {{-12, 17, -4}, {-12, -7, 20}, {2, -7, 6}, {-4, 9, -4}}, {{-20, 28, -7}, {-20, -12, 33}, {4, -12, 9}, {-6, 14, -7}}};
  auto matches = [&](const TropMap& f, std::size_t comp, const auto& rows) {
    TropMap it = f;
    bool good = true;
    for (std::size_t n = 1; n <= rows.size(); ++n) {
      if (n > 1) it = compose(f, it);
      std::vector<AffineForm> fs;
      for (const auto& c : rows[n - 1]) fs.push_back(form(c));
      good = good && it[comp].den().is_zero() && it[comp].num().forms() == TropExpr(fs).forms();
    }
    return good;
  };
  bool mt = matches(g, 1, musiker), st = matches(tropical("scott-trop"), 2, scott);
  return {ok && mt && st, std::string("order-5 identity ") + (ok ? "yes" : "no") + "; musiker table " + (mt ? "matches" : "differs") +
                              "; scott table N=1..6 " + (st ? "matches" : "differs")};
}

Outcome c12() {
  TropMap f = tropical("scott-trop");
  std::vector<Rat> p{Rat(-1), Rat(0), Rat(0)};
  std::vector<long> orbit, expo;
  for (int n = 0; n < 6; ++n) {
    p = f.evaluate(p);
    orbit.push_back(p[2].get_num().get_si());
  }
  for (const auto& e : check_laurent(rational("scott"), 6)) expo.push_back(e.monomial_dens[2].e[0]);
  bool ok = orbit == std::vector<long>{1, 2, 4, 7, 12, 20} && orbit == expo;
  return {ok, "orbit " + join(orbit) + "; denominator x-exponents " + join(expo)};
}

Outcome c13() {
  PLSpec spec = std::get<PLSpec>(find_catalog_entry("pl-max2")->load());
  auto terms = pl_iterate(spec.recurrence(), spec.init, 18);
  std::vector<Int> want;
  for (long v : {1, 1, -1, -1, -3, 1, 3, 9, 7, 3, -11, -11, -17, 11, 33, 67, 45, 1}) want.emplace_back(v);
  return {terms == want, join(terms)};
}

Outcome c14() {
  std::vector<std::string> xy{"x", "y"};
  RationalMap swap = RationalMap::parse(xy, {"y", "x"});
  RationalMap phi = RationalMap::parse(xy, {"x", "x^2-y"});
  RationalMap c = conjugate(swap, phi, phi);
  ProjectiveForm p = projectivize(c);
  bool inv = compose(c, c).is_identity();
  return {p.degree == 4 && p.exact && inv,
          "conjugate " + join(c.to_strings()) + ", degree " + std::to_string(p.degree) + ", involution " + (inv ? "yes" : "no")};
}

Outcome c15() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& [name, a] : catalog_matrices()) {
    ConvergenceProfile p = convergence_profile(a, 60);
    ok = ok && std::fabs(p.deviation) <= 0.05;
    char buf[80];
    std::snprintf(buf, sizeof buf, "%s%s %+.4f", os.tellp() > 0 ? ", " : "", name.c_str(), p.deviation);
    os << buf;
  }
  return {ok, "deviation at N=60: " + os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"counterexample degree sequence", c1},
      {"c_N sequence and recurrence", c2},
      {"recurrence falsification", c3},
      {"entropy values", c4},
      {"inverse gap", c5},
      {"two-route toral entropy", c6},
      {"rational degree sequences", c7},
      {"Laurent cancellation", c8},
      {"monomial cross-check", c9},
      {"signatures", c10},
      {"tropical order 5 and tables", c11},
      {"exponent bridge", c12},
      {"PL recurrence", c13},
      {"conjugation", c14},
      {"convergence property", c15},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1 < 10 ? " " : "") << i + 1 << " " << criteria[i].first << ": " << o.detail
              << "\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}

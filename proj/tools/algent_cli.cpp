#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algent/catalog.hpp"
#include "algent/monomial.hpp"
#include "algent/ratmap.hpp"
#include "algent/recurrence.hpp"
#include "algent/spectral.hpp"
#include "algent/tropical.hpp"

using namespace algent;

namespace {

// Bad invocation or unreadable input: exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  long nmax = 20;
  double tol = 1e-12;
  std::uint64_t seed = 1;
  long n = 1;
  std::string format = "csv";
  bool include_zero = false;
  std::size_t budget = 0;  // 0: keep the default
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

AnyMap resolve_map(const std::string& arg) {
  if (const auto* e = find_catalog_entry(arg)) return e->load();
  if (!std::filesystem::is_regular_file(arg)) throw UsageError("unknown map '" + arg + "' (not a catalog name or JSON file)");
  std::ifstream in(arg);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("malformed JSON in '" + arg + "': " + e.what());
  }
  try {
    return map_from_json(j);
  } catch (const Json::exception& e) {
    throw UsageError("malformed map JSON in '" + arg + "': " + e.what());
  } catch (const SchemaError& e) {
    throw UsageError("malformed map JSON in '" + arg + "': " + e.what());
  } catch (const ParseError& e) {
    throw UsageError("malformed expression in '" + arg + "': " + e.what());
  }
}

const IntMatrix& need_monomial(const AnyMap& m, const char* cmd) {
  if (auto* a = std::get_if<IntMatrix>(&m)) return *a;
  throw DomainError(std::string(cmd) + " needs a monomial map");
}

TropMap as_tropical(const AnyMap& m, const char* cmd) {
  if (auto* t = std::get_if<TropMap>(&m)) return *t;
  if (auto* f = std::get_if<RationalMap>(&m)) {
    std::vector<TropComponent> comps;
    for (const auto& c : f->components()) comps.push_back(tropicalize(c));
    return TropMap(default_trop_vars(f->dimension()), std::move(comps));
  }
  throw DomainError(std::string(cmd) + " needs a tropical or subtraction-free rational map");
}

// Degree sequence for N = 1..nmax with exactness flags.
struct Degrees {
  std::vector<Int> values;
  std::vector<bool> exact;
};

Degrees degrees_of(const AnyMap& m, const RunConfig& cfg) {
  Degrees d;
  if (auto* a = std::get_if<IntMatrix>(&m)) {
    d.values = degree_sequence(*a, static_cast<std::size_t>(cfg.nmax));
    d.exact.assign(d.values.size(), true);
  } else if (auto* f = std::get_if<RationalMap>(&m)) {
    for (const auto& e : degree_sequence_rational(*f, cfg.nmax, {5, cfg.seed})) {
      d.values.emplace_back(e.degree);
      d.exact.push_back(e.exact);
    }
  } else {
    throw DomainError("degree sequences are defined for monomial and rational maps");
  }
  return d;
}

int cmd_catalog(const RunConfig& cfg) {
  if (cfg.format == "json") {
    Json out = Json::array();
    for (const auto& e : catalog())
      out.push_back(Json{{"name", e.name}, {"kind", e.kind}, {"anchor", e.anchor}, {"definition", e.definition}});
    print_json(out);
    return 0;
  }
  std::cout << "name,kind,anchor\n";
  for (const auto& e : catalog()) std::cout << e.name << "," << e.kind << "," << csv_field(e.anchor) << "\n";
  return 0;
}

int cmd_degseq(const AnyMap& m, const RunConfig& cfg) {
  Degrees d = degrees_of(m, cfg);
  if (cfg.include_zero) {
    d.values.insert(d.values.begin(), Int(1));
    d.exact.insert(d.exact.begin(), true);
  }
  long first = cfg.include_zero ? 0 : 1;
  bool rational = std::holds_alternative<RationalMap>(m);
  if (cfg.format == "json") {
    if (!rational) {
      print_json(sequence_to_json(d.values));
    } else {
      Json ex = Json::array();
      for (bool b : d.exact) ex.push_back(b);
      print_json(Json{{"degrees", sequence_to_json(d.values)}, {"exact", ex}});
    }
    return 0;
  }
  std::cout << (rational ? "N,degree,exact\n" : "N,degree\n");
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    std::cout << first + static_cast<long>(i) << "," << to_string(d.values[i]);
    if (rational) std::cout << "," << (d.exact[i] ? "true" : "false");
    std::cout << "\n";
  }
  return 0;
}

int cmd_entropy(const AnyMap& m, const RunConfig& cfg) {
  if (auto* a = std::get_if<IntMatrix>(&m)) {
    SpectralOptions opt;
    opt.tol = cfg.tol;
    EntropyReport r = entropy_report(*a, opt);
    if (cfg.format == "json") {
      print_json(to_json(r));
      return 0;
    }
    std::cout << "quantity,value,error,note\n";
    std::cout << "algebraic_entropy," << fmt(r.algebraic_entropy.value) << "," << fmt(r.algebraic_entropy.error) << ",\n";
    std::cout << "toral_entropy," << fmt(r.toral.value.value) << "," << fmt(r.toral.value.error) << ","
              << r.toral.method << (r.toral.ambiguous ? ";ambiguous" : "") << "\n";
    for (const auto& d : r.dynamical_degrees)
      std::cout << "log_dynamical_degree_" << d.k << "," << fmt(d.log_value.value) << "," << fmt(d.log_value.error) << ","
                << (d.conjectural ? "conjectural" : "") << "\n";
    return 0;
  }
  if (auto* f = std::get_if<RationalMap>(&m)) {
    Degrees d = degrees_of(m, cfg);
    double last = log_abs(d.values.back());
    double per_n = last / static_cast<double>(d.values.size());
    double ratio = d.values.size() > 1 ? last - log_abs(d.values[d.values.size() - 2]) : last;
    bool exact = std::all_of(d.exact.begin(), d.exact.end(), [](bool b) { return b; });
    if (cfg.format == "json") {
      print_json(Json{{"nmax", cfg.nmax}, {"log_degree_over_n", per_n}, {"log_degree_ratio", ratio}, {"exact", exact}});
      return 0;
    }
    (void)f;
    std::cout << "quantity,value\n";
    std::cout << "log_degree_over_n," << fmt(per_n) << "\n";
    std::cout << "log_degree_ratio," << fmt(ratio) << "\n";
    std::cout << "exact," << (exact ? "true" : "false") << "\n";
    return 0;
  }
  throw DomainError("entropy is defined for monomial and rational maps");
}

std::vector<Rat> parse_sequence_literal(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rat(item));
    } catch (const std::exception&) {
      throw UsageError("bad sequence entry '" + item + "'");
    }
  }
  return out;
}

int cmd_recur(const std::string& arg, const RunConfig& cfg) {
  std::vector<Rat> seq;
  bool literal = !find_catalog_entry(arg) && !std::filesystem::is_regular_file(arg) && arg.find(',') != std::string::npos;
  if (literal) {
    seq = parse_sequence_literal(arg);
  } else if (!find_catalog_entry(arg) && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError("malformed JSON in '" + arg + "': " + e.what());
    }
    if (j.is_array()) {
      try {
        seq = sequence_from_json(j);
      } catch (const SchemaError& e) {
        throw UsageError(e.what());
      }
    }
  }
  if (seq.empty() && !literal) {
    AnyMap m = resolve_map(arg);
    if (auto* p = std::get_if<PLSpec>(&m)) {
      for (const auto& v : pl_iterate(p->recurrence(), p->init, static_cast<std::size_t>(cfg.nmax))) seq.emplace_back(v);
    } else {
      Degrees d = degrees_of(m, cfg);
      if (cfg.include_zero) seq.emplace_back(1);
      for (const auto& v : d.values) seq.emplace_back(v);
    }
  }
  if (seq.empty()) throw UsageError("empty sequence");
  Recurrence r = minimal_recurrence(seq);
  auto profile = recurrence_order_profile(seq);
  std::size_t plateau = profile.empty() ? 0 : final_plateau_length(profile);
  if (cfg.format == "json") {
    Json j = to_json(r);
    Json prof = Json::array();
    for (const auto& [len, order] : profile) prof.push_back(Json::array({len, order}));
    j["length"] = seq.size();
    j["profile"] = prof;
    j["final_plateau"] = plateau;
    print_json(j);
    return 0;
  }
  std::cout << "order," << r.order << "\n";
  std::cout << "coeffs";
  for (const auto& c : r.coeffs) std::cout << "," << to_string(c);
  std::cout << "\n";
  std::cout << "final_plateau," << plateau << "\n";
  std::cout << "length,order\n";
  for (const auto& [len, order] : profile) std::cout << len << "," << order << "\n";
  return 0;
}

int cmd_signatures(const AnyMap& m, const RunConfig& cfg) {
  const IntMatrix& a = need_monomial(m, "signatures");
  HomExpMatrix h = homogenize(a);
  SignatureReport r = signature_analysis(h);
  auto fate = [](const SignatureOrbit& o) { return o.fate == Fate::kDies ? "dies" : "periodic"; };
  if (cfg.format == "json") {
    Json orbits = Json::array(), surv = Json::array();
    for (const auto& o : r.orbits)
      orbits.push_back(Json{{"start", o.start.to_string()}, {"fate", fate(o)}, {"steps", o.steps}, {"period", o.period}});
    for (const auto& s : r.survivors) surv.push_back(s.to_string());
    print_json(Json{{"bound", r.bound}, {"max_resolution", r.max_resolution}, {"survivors", surv}, {"orbits", orbits}});
    return 0;
  }
  std::cout << "signature,fate,steps,period\n";
  for (const auto& o : r.orbits)
    std::cout << csv_field(o.start.to_string()) << "," << fate(o) << "," << o.steps << "," << o.period << "\n";
  return 0;
}

std::string attainment_string(const Attainment& at) {
  std::string s = "{";
  for (std::size_t i = 0; i < at.rows.size(); ++i) s += (i ? " " : "") + std::to_string(at.rows[i] + 1);
  if (at.zero) s += at.rows.empty() ? "0" : " 0";
  return s + "}";
}

std::string chamber_string(const ChamberKey& k) {
  std::string s;
  for (const auto& c : k.columns) s += attainment_string(c);
  return s + "|" + attainment_string(k.row_sum);
}

int cmd_chambers(const AnyMap& m, const RunConfig& cfg) {
  const IntMatrix& a = need_monomial(m, "chambers");
  PowerSequence<Int> pw(a);
  Json out = Json::array();
  if (cfg.format != "json") std::cout << "N,degree,chamber,diagonal_last_row\n";
  for (long n = 1; n <= cfg.nmax; ++n) {
    const IntMatrix& p = pw.next();
    ChamberKey key = chamber_key(p);
    std::string ks = chamber_string(key);
    bool diag = is_diagonal_last_row_chamber(key);
    if (cfg.format == "json")
      out.push_back(Json{{"N", n}, {"degree", to_string(degree(p))}, {"chamber", ks}, {"diagonal_last_row", diag}});
    else
      std::cout << n << "," << to_string(degree(p)) << "," << ks << "," << (diag ? "true" : "false") << "\n";
  }
  if (cfg.format == "json") print_json(out);
  return 0;
}

void print_components(const std::vector<std::string>& vars, const std::vector<std::string>& comps) {
  std::cout << "var,component\n";
  for (std::size_t i = 0; i < vars.size(); ++i) std::cout << vars[i] << "," << csv_field(comps[i]) << "\n";
}

int cmd_iterate(const AnyMap& m, const RunConfig& cfg) {
  if (auto* a = std::get_if<IntMatrix>(&m)) {
    IntMatrix p = mat_pow(*a, static_cast<unsigned long>(cfg.n));
    if (cfg.format == "json") {
      print_json(Json{{"type", "monomial"}, {"matrix", to_json(p)}});
      return 0;
    }
    RationalMap f = monomial_to_rational(p);
    print_components(f.vars(), f.to_strings());
    return 0;
  }
  if (auto* f = std::get_if<RationalMap>(&m)) {
    RationalMap g = iterate(*f, cfg.n);
    if (cfg.format == "json") {
      Json j = to_json(g);
      j["identity"] = g.is_identity();
      print_json(j);
      return 0;
    }
    print_components(g.vars(), g.to_strings());
    std::cout << "identity," << (g.is_identity() ? "true" : "false") << "\n";
    return 0;
  }
  if (auto* t = std::get_if<TropMap>(&m)) {
    TropMap g = iterate(*t, cfg.n);
    if (cfg.format == "json") {
      Json j = to_json(g);
      j["identity"] = g.is_identity();
      print_json(j);
      return 0;
    }
    print_components(g.vars(), g.to_strings());
    std::cout << "identity," << (g.is_identity() ? "true" : "false") << "\n";
    return 0;
  }
  const auto& p = std::get<PLSpec>(m);
  auto terms = pl_iterate(p.recurrence(), p.init, static_cast<std::size_t>(cfg.n));
  if (cfg.format == "json") {
    print_json(sequence_to_json(terms));
    return 0;
  }
  std::cout << "n,a_n\n";
  for (std::size_t i = 0; i < terms.size(); ++i) std::cout << i + 1 << "," << to_string(terms[i]) << "\n";
  return 0;
}

int cmd_trop(const AnyMap& m, const RunConfig& cfg) {
  TropMap t = as_tropical(m, "trop");
  TropMap g = iterate(t, cfg.n);
  Rat lip = lipschitz_bound(g);
  auto hom = homogeneity(g);
  if (cfg.format == "json") {
    Json j = to_json(g);
    j["text"] = g.to_strings();
    j["lipschitz_bound"] = to_string(lip);
    j["homogeneity"] = hom ? Json(to_string(*hom)) : Json(nullptr);
    print_json(j);
    return 0;
  }
  print_components(g.vars(), g.to_strings());
  std::cout << "lipschitz_bound," << to_string(lip) << "\n";
  std::cout << "homogeneity," << (hom ? to_string(*hom) : "none") << "\n";
  return 0;
}

std::string mono_text(const Mono& m, const std::vector<std::string>& vars) {
  std::string s = detail::mono_string(m, vars);
  return s.empty() ? "1" : s;
}

int cmd_laurent(const AnyMap& m, const RunConfig& cfg) {
  auto* f = std::get_if<RationalMap>(&m);
  if (!f) throw DomainError("laurent needs a rational map");
  auto entries = check_laurent(*f, cfg.nmax);
  if (cfg.format == "json") {
    Json out = Json::array();
    for (const auto& e : entries) {
      Json dens = Json::array();
      for (const auto& d : e.monomial_dens) dens.push_back(mono_text(d, f->vars()));
      out.push_back(Json{{"N", e.n}, {"laurent", e.laurent}, {"monomial_dens", dens}});
    }
    print_json(out);
    return 0;
  }
  std::cout << "N,laurent,monomial_denominators\n";
  for (const auto& e : entries) {
    std::string dens;
    for (const auto& d : e.monomial_dens) dens += (dens.empty() ? "" : ";") + mono_text(d, f->vars());
    std::cout << e.n << "," << (e.laurent ? "true" : "false") << "," << dens << "\n";
  }
  return 0;
}

int cmd_plotdata(const AnyMap& m, const std::string& quantity, const RunConfig& cfg) {
  std::vector<std::pair<long, std::string>> rows;
  if (quantity == "degree" || quantity == "logdegree-over-N") {
    Degrees d = degrees_of(m, cfg);
    if (quantity == "degree") rows.emplace_back(0, "1");
    for (std::size_t i = 0; i < d.values.size(); ++i) {
      long n = static_cast<long>(i) + 1;
      if (quantity == "degree") rows.emplace_back(n, to_string(d.values[i]));
      else rows.emplace_back(n, fmt(log_abs(d.values[i]) / static_cast<double>(n)));
    }
  } else if (quantity == "cn") {
    auto c = cN_sequence(need_monomial(m, "plotdata cn"), static_cast<std::size_t>(cfg.nmax));
    for (std::size_t i = 0; i < c.size(); ++i) rows.emplace_back(static_cast<long>(i), to_string(c[i]));
  } else if (quantity == "lipschitz") {
    TropMap t = as_tropical(m, "plotdata lipschitz");
    TropMap g = t;
    for (long n = 1; n <= cfg.nmax; ++n) {
      if (n > 1) g = compose(t, g);
      rows.emplace_back(n, to_string(lipschitz_bound(g)));
    }
  } else {
    throw UsageError("unknown quantity '" + quantity + "' (degree, logdegree-over-N, cn, lipschitz)");
  }
  for (const auto& [n, v] : rows) std::cout << n << " " << v << "\n";
  return 0;
}

// Every catalog definition must load and survive a JSON round trip.
void self_check() {
  for (const auto& e : catalog()) {
    AnyMap m = e.load();
    if (kind_name(m) != e.kind) throw DomainError("catalog entry '" + e.name + "' has the wrong kind");
    AnyMap again = map_from_json(to_json(m));
    if (to_json(again) != to_json(m)) throw DomainError("catalog entry '" + e.name + "' does not round-trip");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact degree growth, entropy and tropical dynamics of rational maps"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string map_arg, quantity;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--nmax", cfg.nmax, "largest iterate N")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol, "root-finding residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for the random gcd probe");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--include-zero", cfg.include_zero, "prepend N=0 (degree 1)");
    sub->add_option("--n", cfg.n, "iterate count")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "term budget per polynomial")->check(CLI::PositiveNumber);
  };

  auto* c_catalog = app.add_subcommand("catalog", "list built-in maps");
  add_common(c_catalog);
  std::vector<std::pair<std::string, CLI::App*>> map_cmds;
  for (const char* name : {"degseq", "entropy", "recur", "signatures", "chambers", "iterate", "trop", "laurent"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("map", map_arg, "catalog name or JSON file")->required();
    add_common(sub);
    map_cmds.emplace_back(name, sub);
  }
  auto* c_plot = app.add_subcommand("plotdata", "N/value pairs for plotting");
  c_plot->add_option("map", map_arg, "catalog name or JSON file")->required();
  c_plot->add_option("quantity", quantity, "degree | logdegree-over-N | cn | lipschitz")->required();
  add_common(c_plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), 1);
  }

  try {
    if (const char* env = std::getenv("ALGENT_TERM_BUDGET")) {
      try {
        long long v = std::stoll(env);
        if (v <= 0) throw std::invalid_argument("nonpositive");
        term_budget() = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw UsageError("ALGENT_TERM_BUDGET must be a positive integer");
      }
    }
    if (cfg.budget) term_budget() = cfg.budget;
    self_check();

    if (c_catalog->parsed()) return cmd_catalog(cfg);
    if (c_plot->parsed()) return cmd_plotdata(resolve_map(map_arg), quantity, cfg);
    for (const auto& [name, sub] : map_cmds) {
      if (!sub->parsed()) continue;
      if (name == "recur") return cmd_recur(map_arg, cfg);
      AnyMap m = resolve_map(map_arg);
      if (name == "degseq") return cmd_degseq(m, cfg);
      if (name == "entropy") return cmd_entropy(m, cfg);
      if (name == "signatures") return cmd_signatures(m, cfg);
      if (name == "chambers") return cmd_chambers(m, cfg);
      if (name == "iterate") return cmd_iterate(m, cfg);
      if (name == "trop") return cmd_trop(m, cfg);
      if (name == "laurent") return cmd_laurent(m, cfg);
    }
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (completed through N=" << e.reached() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

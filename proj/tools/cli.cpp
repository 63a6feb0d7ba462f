#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ncdedekind/cocycle.hpp"
#include "ncdedekind/contfrac.hpp"
#include "ncdedekind/iterint.hpp"
#include "ncdedekind/modforms.hpp"
#include "ncdedekind/symbols.hpp"

namespace ncdedekind::cli {

namespace {

using nlohmann::ordered_json;
using cplx = std::complex<double>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  IterintConfig iterint;
  double tolerance = 1e-8;
  bool tolerance_set = false;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  int sample_bound = 8;  // |p|, |q| bound of the iterint suite
  std::string json_path;
};

// Every key a config file may carry, applied to cfg.
void apply_key(RunConfig& cfg, const std::string& key, const ordered_json& v) {
  auto& it = cfg.iterint;
  if (key == "weight") it.weight = v.get<int>();
  else if (key == "depth") it.depth = v.get<int>();
  else if (key == "terms") it.terms = v.get<std::size_t>();
  else if (key == "y_max") it.y_max = v.get<double>();
  else if (key == "min_height") it.min_height = v.get<double>();
  else if (key == "step_tol") it.step_tol = v.get<double>();
  else if (key == "nodes") it.nodes = v.get<int>();
  else if (key == "ordering") it.ordering = parse_ordering(v.get<std::string>());
  else if (key == "p_bound") it.p_bound = v.get<int>();
  else if (key == "tolerance") {
    cfg.tolerance = v.get<double>();
    cfg.tolerance_set = true;
  } else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
  else if (key == "samples") cfg.samples = v.get<std::size_t>();
  else if (key == "sample_bound") cfg.sample_bound = v.get<int>();
  else throw UsageError("unknown config key '" + key + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a flat JSON object");
  for (const auto& [key, value] : doc.items()) {
    try {
      apply_key(cfg, key, value);
    } catch (const ordered_json::exception& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
}

void validate(RunConfig& cfg) {
  const int w = cfg.iterint.weight;
  if (w != 12 && w != 16 && w != 28) throw UsageError("weight must be 12, 16 or 28");
  const int d = cfg.iterint.depth;
  if (d < 1 || d > 3) throw UsageError("depth must be 1, 2 or 3");
  if (d == 3 && !cfg.tolerance_set) cfg.tolerance = 1e-7;
  if (!(cfg.tolerance > 0.0)) throw UsageError("tolerance must be positive");
  if (!(cfg.iterint.step_tol > 0.0)) throw UsageError("step_tol must be positive");
  if (cfg.sample_bound < 1) throw UsageError("sample_bound must be >= 1");
}

ordered_json config_json(const RunConfig& cfg) {
  const auto& it = cfg.iterint;
  return {{"weight", it.weight},         {"depth", it.depth},
          {"terms", it.terms},           {"y_max", it.y_max},
          {"min_height", it.min_height}, {"step_tol", it.step_tol},
          {"nodes", it.nodes},           {"ordering", to_string(it.ordering)},
          {"p_bound", it.p_bound},       {"tolerance", cfg.tolerance},
          {"seed", cfg.seed},            {"samples", cfg.samples},
          {"sample_bound", cfg.sample_bound}};
}

std::string str(const BigInt& x) { return x.str(); }

ordered_json series_json(const ComplexSeries& s) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : serialize(s))
    terms.push_back({{"word", t.word}, {"re", t.re}, {"im", t.im}});
  return terms;
}

ordered_json records_json(const CheckReport& report) {
  ordered_json out = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rec = {{"identity", r.identity}};
    if (r.pair) rec["pair"] = {str(r.pair->p()), str(r.pair->q())};
    if (r.cusp) rec["cusp"] = r.cusp->to_string();
    rec["pass"] = r.pass;
    rec["deviation"] = r.deviation;
    out.push_back(std::move(rec));
  }
  return out;
}

ordered_json summary_json(const CheckReport& report) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& r : report.records) {
    auto& c = counts[r.identity];
    ++c.first;
    if (!r.pass) ++c.second;
  }
  ordered_json per = ordered_json::object();
  for (const auto& [name, c] : counts)
    per[name] = {{"checked", c.first},
                 {"failures", c.second},
                 {"worst_deviation", report.worst_deviation(name)}};
  return {{"pass", report.all_pass()},
          {"checked", report.records.size()},
          {"failures", report.failures()},
          {"worst_deviation", report.worst_deviation()},
          {"identities", per}};
}

// Seeded coprime pairs with |p|, |q| <= bound accepted by keep.
template <class Keep>
std::vector<CoprimePair> random_pairs(std::mt19937_64& rng, std::size_t count, int bound,
                                      Keep keep) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<CoprimePair> out;
  while (out.size() < count) {
    const int p = dist(rng), q = dist(rng);
    if (std::gcd(p, q) != 1) continue;
    auto pr = CoprimePair::make(p, q);
    if (keep(pr)) out.push_back(pr);
  }
  return out;
}

bool classical_safe(const CoprimePair& pr) {
  // every pair touched by the checkers has both entries nonzero
  const BigInt &p = pr.p(), &q = pr.q();
  return p != 0 && q != 0 && p + q != 0 && p - q != 0;
}

struct Section {
  std::string carrier;
  CheckReport report;
};

ordered_json sections_json(const std::vector<Section>& sections, CheckReport& total) {
  ordered_json out = ordered_json::array();
  for (const auto& s : sections) {
    out.push_back({{"carrier", s.carrier},
                   {"summary", summary_json(s.report)},
                   {"records", records_json(s.report)}});
    total.append(s.report);
  }
  return out;
}

CheckRecord make_pair_record(const std::string& name, const CoprimePair& pr, bool pass,
                             double deviation) {
  CheckRecord r;
  r.identity = name;
  r.pair = pr;
  r.pass = pass;
  r.deviation = deviation;
  return r;
}

// --------------------------------------------------------------------------
// verify suites

std::vector<Section> suite_reciprocity(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const FreeGroup free(3);
  const RandomFreeSymbol D = random_symbol(cfg.seed, 30, free);
  const PairFunction<FreeGroup> f = derive_reciprocity<FreeGroup>(free, D);
  const auto free_samples = random_pairs(rng, cfg.samples, 200, [](auto&) { return true; });
  const AdditiveRatGroup rat;
  const PairFunction<AdditiveRatGroup> F = classical_reciprocity;
  const auto rat_samples = random_pairs(rng, cfg.samples, 200, classical_safe);
  return {{"free-group", check_reciprocity(free, f, free_samples)},
          {"classical", check_reciprocity(rat, F, rat_samples)}};
}

std::vector<Section> suite_symbol(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const FreeGroup free(3);
  const RandomFreeSymbol D = random_symbol(cfg.seed, 30, free);
  const PairFunction<FreeGroup> f = derive_reciprocity<FreeGroup>(free, D);
  const auto samples = random_pairs(rng, cfg.samples, 200, [](auto&) { return true; });

  Section free_section{"free-group", check_symbol(free, reconstructed_symbol(free, f), f, samples)};
  // presentation independence: Floor expansion and random basic moves
  for (const auto& pr : samples) {
    const FreeWord base = reconstruct(free, f, pr);
    const FreeWord floor = reconstruct(free, f, pr, ExpansionStrategy::Floor);
    free_section.report.records.push_back(make_pair_record(
        "ceiling=floor", pr, base == floor, free.deviation(base, floor, 0.0)));
    CFSequence seq = expand(pr);
    for (int k = 0; k < 10; ++k) seq = apply_move(seq, random_move(seq, rng));
    const FreeWord moved = reconstruct_from_sequence(free, f, seq);
    free_section.report.records.push_back(make_pair_record(
        "moves", pr, base == moved, free.deviation(base, moved, 0.0)));
  }

  const AdditiveRatGroup rat;
  const PairFunction<AdditiveRatGroup> F = classical_reciprocity;
  Section classical{"classical", {}};
  std::uniform_int_distribution<int> pdist(2, 200);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const int p = pdist(rng);
    std::uniform_int_distribution<int> qdist(1, p - 1);
    int q = qdist(rng);
    while (std::gcd(p, q) != 1) q = qdist(rng);
    const auto pr = CoprimePair::make(p, q);
    const BigRat lhs = reconstruct(rat, F, pr);
    const BigRat rhs = dedekind_sum_oracle(p, q);
    classical.report.records.push_back(
        make_pair_record("D(p,q)=s(q,p)", pr, lhs == rhs, rat.deviation(lhs, rhs, 0.0)));
  }
  return {std::move(free_section), std::move(classical)};
}

template <ValueGroup G>
void append_roundtrip(Section& s, const G& g, const PairFunction<G>& f,
                      const CocyclePair<G>& pair, const std::vector<CoprimePair>& pairs,
                      const std::vector<Cusp>& cusps, double tol) {
  const PairFunction<G> back = to_reciprocity<G>(pair.X);
  for (const auto& pr : pairs) {
    auto a = f(pr), b = back(pr);
    const double sc = detail::factor_scale(g, a, b);
    s.report.records.push_back(make_pair_record("to(from(f))=f", pr, g.within(a, b, sc, tol),
                                                g.deviation(a, b, sc)));
  }
  const CocyclePair<G> again = from_reciprocity<G>(back);
  for (const auto& x : cusps) {
    auto a = pair.X(x), b = again.X(x);
    const double sc = detail::factor_scale(g, a, b);
    CheckRecord r;
    r.identity = "from(to(X))=X";
    r.cusp = x;
    r.pass = g.within(a, b, sc, tol);
    r.deviation = g.deviation(a, b, sc);
    s.report.records.push_back(std::move(r));
  }
}

std::vector<Section> suite_cocycle(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const std::vector<Cusp> cusps = default_cusp_samples(12);

  const FreeGroup free(3);
  const RandomFreeSymbol D = random_symbol(cfg.seed, 30, free);
  const PairFunction<FreeGroup> f = derive_reciprocity<FreeGroup>(free, D);
  const CocyclePair<FreeGroup> fp = from_reciprocity<FreeGroup>(f);
  Section free_section{"free-group", check_relations(free, fp, cusps)};
  free_section.report.append(check_dedekind(free, fp, cusps));
  append_roundtrip(free_section, free, f, fp,
                   random_pairs(rng, cfg.samples, 60, [](auto&) { return true; }), cusps, 0.0);

  // the classical function is undefined where pq = 0, i.e. near 0, 1 and inf
  std::vector<Cusp> safe;
  for (const auto& x : cusps)
    if (!x.is_infinity() && x.numerator() != 0 && x.numerator() != x.denominator())
      safe.push_back(x);
  const AdditiveRatGroup rat;
  const PairFunction<AdditiveRatGroup> F = classical_reciprocity;
  const CocyclePair<AdditiveRatGroup> cp = from_reciprocity<AdditiveRatGroup>(F);
  Section classical{"classical", check_relations(rat, cp, safe)};
  classical.report.append(check_dedekind(rat, cp, safe));
  append_roundtrip(classical, rat, F, cp, random_pairs(rng, cfg.samples, 60, classical_safe),
                   safe, 0.0);
  return {std::move(free_section), std::move(classical)};
}

std::vector<Section> suite_iterint(const RunConfig& cfg) {
  const IteratedIntegrals ii(cfg.iterint);
  const auto g = ii.group();
  using G = SeriesGroup<cplx>;
  const PairFunction<G> f = [&ii](const CoprimePair& pr) { return ii.reciprocity_integral(pr); };
  const PairFunction<G> D = [&ii](const CoprimePair& pr) { return ii.symbol_reconstructed(pr); };
  std::vector<CoprimePair> pairs;
  for (int p = -cfg.sample_bound; p <= cfg.sample_bound; ++p)
    for (int q = -cfg.sample_bound; q <= cfg.sample_bound; ++q)
      if (std::gcd(p, q) == 1) pairs.push_back(CoprimePair::make(p, q));
  Section s{"series", check_reciprocity(g, f, pairs, cfg.tolerance)};
  s.report.append(check_symbol(g, D, f, pairs, cfg.tolerance));
  return {std::move(s)};
}

// --------------------------------------------------------------------------

void emit(const ordered_json& doc, const RunConfig& cfg, std::ostream& out) {
  if (cfg.json_path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(cfg.json_path);
  if (!file) throw UsageError("cannot write " + cfg.json_path);
  file << doc.dump(2) << '\n';
  out << doc["command"].get<std::string>() << ": "
      << (doc["summary"].value("pass", true) ? "pass" : "FAIL") << ", written to "
      << cfg.json_path << '\n';
}

struct Invocation {
  std::string command;
  RunConfig cfg;
  // flag values given on the command line (these override the file)
  std::optional<int> weight, depth, pmax;
  std::optional<std::size_t> terms, samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<std::string> ordering, config_path, json_path;
  std::string suite, mode = "f";
  std::optional<long long> p, q;
};

void resolve(Invocation& inv) {
  RunConfig& cfg = inv.cfg;
  if (inv.config_path) load_config_file(cfg, *inv.config_path);
  if (inv.weight) cfg.iterint.weight = *inv.weight;
  if (inv.depth) cfg.iterint.depth = *inv.depth;
  if (inv.terms) cfg.iterint.terms = *inv.terms;
  if (inv.samples) cfg.samples = *inv.samples;
  if (inv.seed) cfg.seed = *inv.seed;
  if (inv.tolerance) {
    cfg.tolerance = *inv.tolerance;
    cfg.tolerance_set = true;
  }
  if (inv.ordering) {
    try {
      cfg.iterint.ordering = parse_ordering(*inv.ordering);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (inv.json_path) cfg.json_path = *inv.json_path;
  validate(cfg);
}

int cmd_dsum(const Invocation& inv, std::ostream& out) {
  const int pmax = inv.pmax.value_or(10);
  if (pmax < 1) throw UsageError("--pmax must be >= 1");
  const AdditiveRatGroup rat;
  const PairFunction<AdditiveRatGroup> F = classical_reciprocity;
  ordered_json rows = ordered_json::array();
  std::size_t disagreements = 0;
  for (int p = 1; p <= pmax; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const BigRat rec = reconstruct(rat, F, CoprimePair::make(p, q));
      const BigRat oracle = dedekind_sum_oracle(p, q);
      const bool agree = rec == oracle;
      if (!agree) ++disagreements;
      rows.push_back({{"p", p}, {"q", q}, {"reconstructed", to_string(rec)},
                      {"oracle", to_string(oracle)}, {"agree", agree}});
    }
  ordered_json doc = {{"command", "dsum"},
                      {"config", {{"pmax", pmax}}},
                      {"rows", rows},
                      {"summary", {{"pass", disagreements == 0},
                                   {"rows", rows.size()},
                                   {"disagreements", disagreements}}}};
  emit(doc, inv.cfg, out);
  return disagreements == 0 ? exit_code::kOk : exit_code::kFailure;
}

int cmd_verify(const Invocation& inv, std::ostream& out) {
  std::vector<Section> sections;
  if (inv.suite == "reciprocity") sections = suite_reciprocity(inv.cfg);
  else if (inv.suite == "symbol") sections = suite_symbol(inv.cfg);
  else if (inv.suite == "cocycle") sections = suite_cocycle(inv.cfg);
  else if (inv.suite == "iterint") sections = suite_iterint(inv.cfg);
  else throw UsageError("unknown suite '" + inv.suite + "'");
  CheckReport total;
  ordered_json report = sections_json(sections, total);
  ordered_json config = config_json(inv.cfg);
  config["suite"] = inv.suite;
  ordered_json doc = {{"command", "verify"},
                      {"config", config},
                      {"report", report},
                      {"summary", summary_json(total)}};
  emit(doc, inv.cfg, out);
  return total.all_pass() ? exit_code::kOk : exit_code::kFailure;
}

int cmd_modforms(const Invocation& inv, std::ostream& out) {
  const int weight = inv.weight.value_or(inv.cfg.iterint.weight);
  const std::size_t terms = inv.terms.value_or(80);
  const CuspBasis basis = cusp_basis(weight, terms);
  ordered_json rows = ordered_json::array();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : basis.forms[j].coefficients()) coeffs.push_back(to_string(c));
    rows.push_back({{"weight", weight}, {"index", j + 1}, {"coefficients", coeffs}});
  }
  ordered_json doc = {{"command", "modforms"},
                      {"config", {{"weight", weight}, {"terms", terms}}},
                      {"rows", rows},
                      {"summary", {{"pass", true}, {"forms", basis.size()},
                                   {"dimension", cusp_dimension(weight)}}}};
  emit(doc, inv.cfg, out);
  return exit_code::kOk;
}

int cmd_iterint(const Invocation& inv, std::ostream& out) {
  if (!inv.p || !inv.q) throw UsageError("iterint needs -p and -q");
  const CoprimePair pr = CoprimePair::make(*inv.p, *inv.q);
  const IteratedIntegrals ii(inv.cfg.iterint);
  Transport t{ii.group().identity(), 0.0};
  if (inv.mode == "f") t = ii.reciprocity_transport(pr);
  else if (inv.mode == "D-direct") t = ii.symbol_direct_transport(pr);
  else if (inv.mode == "D-reconstructed") t = ii.symbol_reconstructed_transport(pr);
  else throw UsageError("--mode must be f, D-direct or D-reconstructed");
  ordered_json config = config_json(inv.cfg);
  config["mode"] = inv.mode;
  ordered_json row = {{"p", *inv.p},
                      {"q", *inv.q},
                      {"weight", inv.cfg.iterint.weight},
                      {"depth", inv.cfg.iterint.depth},
                      {"convention", to_string(inv.cfg.iterint.ordering)},
                      {"coefficients", series_json(t.value)},
                      {"error_estimate", t.error_estimate}};
  ordered_json doc = {{"command", "iterint"},
                      {"config", config},
                      {"rows", ordered_json::array({row})},
                      {"summary", {{"pass", true}, {"scale", ii.group().magnitude(t.value)}}}};
  emit(doc, inv.cfg, out);
  return exit_code::kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-commutative generalized Dedekind symbols", "nc-dedekind"};
  app.require_subcommand(1);
  Invocation inv;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", inv.config_path, "flat JSON config file");
    sub->add_option("--json", inv.json_path, "write the JSON document to this path");
  };
  auto* dsum = app.add_subcommand("dsum", "classical Dedekind sums, reconstructed vs oracle");
  dsum->add_option("--pmax", inv.pmax, "largest p")->required();
  common(dsum);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", inv.suite, "reciprocity|symbol|cocycle|iterint")->required();
  verify->add_option("--seed", inv.seed);
  verify->add_option("--samples", inv.samples);
  verify->add_option("--weight", inv.weight);
  verify->add_option("--depth", inv.depth);
  verify->add_option("--tolerance", inv.tolerance);
  verify->add_option("--ordering", inv.ordering, "later-left|later-right");
  common(verify);

  auto* modforms = app.add_subcommand("modforms", "echelon cusp-form basis");
  modforms->add_option("--weight", inv.weight)->required();
  modforms->add_option("--terms", inv.terms);
  common(modforms);

  auto* iterint = app.add_subcommand("iterint", "iterated integrals f and D");
  iterint->add_option("--weight", inv.weight);
  iterint->add_option("--depth", inv.depth);
  iterint->add_option("-p", inv.p)->required();
  iterint->add_option("-q", inv.q)->required();
  iterint->add_option("--mode", inv.mode, "f|D-direct|D-reconstructed");
  iterint->add_option("--ordering", inv.ordering, "later-left|later-right");
  common(iterint);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    resolve(inv);
    if (*dsum) return cmd_dsum(inv, out);
    if (*verify) return cmd_verify(inv, out);
    if (*modforms) return cmd_modforms(inv, out);
    return cmd_iterint(inv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const NumericError& e) {
    err << "not converged: " << e.what() << '\n';
    return exit_code::kNotConverged;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::kDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kFailure;
  }
}

}  // namespace ncdedekind::cli

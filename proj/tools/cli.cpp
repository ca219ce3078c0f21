#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "maedalab/density_model.hpp"
#include "maedalab/error.hpp"
#include "maedalab/galois.hpp"
#include "maedalab/hecke.hpp"
#include "maedalab/permcycles.hpp"
#include "maedalab/polyparse.hpp"
#include "maedalab/sequences.hpp"
#include "maedalab/serialize.hpp"

namespace maedalab::cli {
namespace {

constexpr const char* kCsvNotice =
    "# float columns are non-guaranteed double mirrors; exact values are in --format json";

struct Settings {
  std::string format = "json";
  std::string output;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  bool strict = false;
};

// Carries a result to the writer together with the exit status it implies.
struct Outcome {
  std::string text;
  int status = kExitOk;
};

bool csv(const Settings& s) { return s.format == "csv"; }

Json envelope(std::string_view command) {
  return Json{{"schema", kSchemaVersion},
              {"command", std::string(command)},
              {"float_mirrors", "non-guaranteed"}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<unsigned>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string fl(const Rational& q) { return format_float(to_double(q)); }

unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  require(res.ec == std::errc{} && res.ptr == text.data() + text.size(), ErrorCode::kValidation,
          "bad " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

std::vector<unsigned> parse_list(const std::string& text, std::string_view what) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_unsigned(item, what));
  require(!out.empty(), ErrorCode::kValidation, "empty " + std::string(what) + " list");
  return out;
}

// "12..200" expands to the even weights in range whose cusp space is
// nonzero; explicit weights are passed through for the library to validate.
std::vector<unsigned> parse_weights(const std::string& text, std::vector<unsigned>& skipped) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (auto dots = item.find(".."); dots != std::string::npos) {
      unsigned lo = parse_unsigned(std::string_view(item).substr(0, dots), "weight");
      unsigned hi = parse_unsigned(std::string_view(item).substr(dots + 2), "weight");
      require(lo <= hi, ErrorCode::kValidation, "empty weight range '" + item + "'");
      for (unsigned k = lo + (lo % 2); k <= hi; k += 2) {
        if (k < 12) continue;
        if (dim_cusp_level1(k) == 0) {
          skipped.push_back(k);
          continue;
        }
        out.push_back(k);
      }
    } else {
      out.push_back(parse_unsigned(item, "weight"));
    }
  }
  require(!out.empty(), ErrorCode::kValidation, "no weights with nonzero cusp space in '" + text + "'");
  return out;
}

// census ------------------------------------------------------------------

struct CensusArgs {
  unsigned n = 0;
  unsigned d = 0;
  bool brute = false;
  std::uint64_t samples = 0;
};

Outcome run_census(const CensusArgs& a, const Settings& s) {
  require(a.d >= 1 && a.n >= 1, ErrorCode::kValidation, "n and d must be positive");
  const bool formula = a.n >= 2 * a.d;
  require(formula || a.brute || a.samples > 0, ErrorCode::kInvalidCycleLength,
          "closed forms need n >= 2d; pass --brute to enumerate");

  std::optional<DCycleCensus> brute;
  if (a.brute) brute = census_bruteforce(a.n, a.d);
  std::optional<MonteCarloCensus> mc;
  if (a.samples > 0) mc = monte_carlo_census(a.n, a.d, a.samples, s.seed);

  struct FormulaCounts {
    BigInt total, at_least_one, special_b1, special_b2;
    std::vector<BigInt> exactly_j;
    Rational signed_bound;
  };
  std::optional<FormulaCounts> f;
  if (formula) {
    FormulaCounts c;
    c.total = factorial(a.n);
    c.at_least_one = count_at_least_one(a.n, a.d);
    for (unsigned j = 1; j <= a.n / a.d; ++j) c.exactly_j.push_back(count_exactly_j(a.n, a.d, j));
    c.special_b1 = count_special_b1(a.n, a.d);
    c.special_b2 = count_special_b2(a.n, a.d);
    c.signed_bound = signed_discrepancy_bound(a.n, a.d);
    f = std::move(c);
  }

  if (csv(s)) {
    std::ostringstream o;
    o << kCsvNotice << "\nsource,quantity,value\n";
    auto row = [&](std::string_view src, const std::string& q, const std::string& v) {
      o << src << ',' << q << ',' << v << '\n';
    };
    if (f) {
      row("formula", "total", f->total.get_str());
      row("formula", "at_least_one", f->at_least_one.get_str());
      for (std::size_t j = 0; j < f->exactly_j.size(); ++j)
        row("formula", "exactly_" + std::to_string(j + 1), f->exactly_j[j].get_str());
      row("formula", "special_b1", f->special_b1.get_str());
      row("formula", "special_b2", f->special_b2.get_str());
      row("formula", "signed_discrepancy_bound_float", fl(f->signed_bound));
    }
    if (brute) {
      row("brute", "total", brute->total.get_str());
      row("brute", "at_least_one", brute->at_least_one.get_str());
      for (std::size_t j = 0; j < brute->exactly_j.size(); ++j)
        row("brute", "exactly_" + std::to_string(j + 1), brute->exactly_j[j].get_str());
      row("brute", "plus", brute->plus.get_str());
      row("brute", "minus", brute->minus.get_str());
      row("brute", "special_b1", brute->special_b1.get_str());
      row("brute", "special_b2", brute->special_b2.get_str());
    }
    if (mc) {
      row("monte_carlo", "at_least_one_float", format_float(mc->at_least_one.value));
      row("monte_carlo", "at_least_one_se_float", format_float(mc->at_least_one.standard_error));
      for (std::size_t j = 0; j < mc->exactly_j.size(); ++j) {
        row("monte_carlo", "exactly_" + std::to_string(j + 1) + "_float",
            format_float(mc->exactly_j[j].value));
        row("monte_carlo", "exactly_" + std::to_string(j + 1) + "_se_float",
            format_float(mc->exactly_j[j].standard_error));
      }
    }
    return {o.str()};
  }

  Json j = envelope("census");
  j["n"] = a.n;
  j["d"] = a.d;
  if (f) {
    Json exactly = Json::array();
    for (const auto& v : f->exactly_j) exactly.push_back(v.get_str());
    j["formula"] = Json{{"total", f->total.get_str()},
                        {"at_least_one", f->at_least_one.get_str()},
                        {"exactly_j", exactly},
                        {"special_b1", f->special_b1.get_str()},
                        {"special_b2", f->special_b2.get_str()},
                        {"signed_discrepancy_bound", rational_json(f->signed_bound)},
                        {"signed_discrepancy_bound_float", fl(f->signed_bound)}};
  } else {
    j["formula"] = nullptr;
  }
  j["brute"] = brute ? to_json(*brute) : Json(nullptr);
  if (mc) {
    Json exactly = Json::array();
    for (const auto& e : mc->exactly_j)
      exactly.push_back(Json{{"value_float", format_float(e.value)},
                             {"se_float", format_float(e.standard_error)}});
    j["monte_carlo"] = Json{{"samples", mc->samples},
                            {"seed", mc->seed},
                            {"at_least_one_float", format_float(mc->at_least_one.value)},
                            {"at_least_one_se_float", format_float(mc->at_least_one.standard_error)},
                            {"exactly_j", exactly}};
  } else {
    j["monte_carlo"] = nullptr;
  }
  return {dump(j)};
}

// seq ---------------------------------------------------------------------

struct SeqArgs {
  unsigned d = 0;
  unsigned imax = 0;
  bool closed = false;
  std::optional<unsigned> enclosure_terms;
};

Outcome run_seq(const SeqArgs& a, const Settings& s) {
  require(a.d >= 1, ErrorCode::kValidation, "d must be >= 1");
  std::vector<Rational> values;
  if (a.closed) {
    for (unsigned i = 0; i <= a.imax; ++i) values.push_back(a_closed(a.d, i));
  } else {
    values = a_recursive(a.d, a.imax).a_values();
  }
  std::optional<RationalInterval> enc;
  if (a.enclosure_terms) enc = limit_enclosure(a.d, *a.enclosure_terms);
  const char* method = a.closed ? "closed" : "recursive";

  if (csv(s)) {
    std::ostringstream o;
    o << kCsvNotice << "\n# d=" << a.d << " method=" << method << '\n';
    if (enc)
      o << "# limit_enclosure lo_num=" << enc->lo.get_num() << " lo_den=" << enc->lo.get_den()
        << " hi_num=" << enc->hi.get_num() << " hi_den=" << enc->hi.get_den()
        << " lo_float=" << fl(enc->lo) << " hi_float=" << fl(enc->hi) << '\n';
    o << "i,a_num,a_den,a_float\n";
    for (std::size_t i = 0; i < values.size(); ++i)
      o << i << ',' << values[i].get_num() << ',' << values[i].get_den() << ',' << fl(values[i])
        << '\n';
    return {o.str()};
  }

  Json j = envelope("seq");
  j["d"] = a.d;
  j["method"] = method;
  Json rows = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i)
    rows.push_back(Json{{"i", i}, {"a", rational_json(values[i])}, {"a_float", fl(values[i])}});
  j["rows"] = rows;
  j["limit_enclosure"] = enc ? interval_json(*enc) : Json(nullptr);
  return {dump(j)};
}

// density / effective -----------------------------------------------------

struct DensityArgs {
  unsigned d = 0;
  std::string degrees;
  bool guaranteed = false;
  unsigned enclosure_terms = 20;
};

Outcome run_density(const DensityArgs& a, const Settings& s) {
  TowerSpec tower{a.d, parse_list(a.degrees, "degree")};
  const TowerDensity t = tower_density(tower, a.enclosure_terms);

  if (csv(s)) {
    std::ostringstream o;
    o << kCsvNotice << "\n# d=" << a.d << " mode=" << (a.guaranteed ? "guaranteed" : "point")
      << '\n';
    o << "step,N,a_float,delta_bound_float,point_float";
    if (a.guaranteed) o << ",lo_float,hi_float";
    o << '\n';
    for (std::size_t i = 0; i < t.point.size(); ++i) {
      o << i + 1 << ',' << tower.degrees[i] << ',' << fl(t.a_terms[i]) << ','
        << fl(t.delta_bounds[i]) << ',' << fl(t.point[i]);
      if (a.guaranteed) o << ',' << fl(t.guaranteed[i].lo) << ',' << fl(t.guaranteed[i].hi);
      o << '\n';
    }
    return {o.str()};
  }

  Json j = envelope("density");
  j["d"] = a.d;
  j["mode"] = a.guaranteed ? "guaranteed" : "point";
  j["enclosure_terms"] = a.enclosure_terms;
  Json steps = Json::array();
  for (std::size_t i = 0; i < t.point.size(); ++i) {
    Json step{{"step", i + 1},
              {"N", tower.degrees[i]},
              {"a", rational_json(t.a_terms[i])},
              {"a_float", fl(t.a_terms[i])},
              {"delta_bound", rational_json(t.delta_bounds[i])},
              {"delta_bound_float", fl(t.delta_bounds[i])},
              {"point", rational_json(t.point[i])},
              {"point_float", fl(t.point[i])}};
    if (a.guaranteed) step["interval"] = interval_json(t.guaranteed[i]);
    steps.push_back(step);
  }
  j["steps"] = steps;
  return {dump(j)};
}

struct EffectiveArgs {
  unsigned d = 0;
  unsigned B = 0;
  bool guaranteed = false;
  unsigned enclosure_terms = 20;
};

Outcome run_effective(const EffectiveArgs& a, const Settings& s) {
  const EffectiveBoundReport r = effective_lower_bound(a.d, a.B, a.enclosure_terms);
  const std::string label(to_string(target_group_label(a.d)));

  if (csv(s)) {
    std::ostringstream o;
    o << kCsvNotice << "\n";
    o << "d,B,tower_degrees,lower_bound_float,point_estimate_float,target_group_label";
    if (a.guaranteed) o << ",lo_float,hi_float";
    o << '\n';
    o << r.d << ',' << r.weight_bound << ',' << join(r.tower.degrees, '-') << ','
      << fl(r.lower_bound) << ',' << fl(r.point_estimate) << ',' << label;
    if (a.guaranteed) o << ',' << fl(r.final_interval.lo) << ',' << fl(r.final_interval.hi);
    o << '\n';
    return {o.str()};
  }

  Json j = envelope("effective");
  j["enclosure_terms"] = a.enclosure_terms;
  j["report"] = to_json(r);
  j["target_group_label"] = label;
  if (a.guaranteed) j["final_interval"] = interval_json(r.final_interval);
  return {dump(j)};
}

// scan / classes ----------------------------------------------------------

struct ScanArgs {
  std::string poly;
  unsigned d = 0;
  u64 plimit = 0;
  u64 budget = 2000;
};

Outcome run_scan(const ScanArgs& a, const Settings& s, std::ostream& err) {
  const IntPolynomial f = parse_polynomial(a.poly);
  ScanOptions opts;
  opts.workers = s.workers;
  opts.keep_rows = csv(s);
  DensityExperiment e = chebotarev_scan(f, a.d, a.plimit, opts);
  const GaloisCertificate cert = certify_symmetric_group(f, a.budget);
  attach_prediction(e, cert);

  if (!e.irreducible_witness && f.degree() > 1) {
    Json w{{"warning", "no_irreducible_witness"},
           {"message", "no scanned prime has an irreducible reduction; f may be reducible"}};
    err << w.dump() << '\n';
  }
  const int status =
      s.strict && cert.verdict != Verdict::kCertifiedSn ? kExitInconclusive : kExitOk;

  if (csv(s)) {
    std::ostringstream o;
    o << kCsvNotice << "\n# poly=" << f.to_string() << " d=" << e.d
      << " prime_limit=" << e.prime_limit << " unramified_count=" << e.unramified_count
      << " hit_count=" << e.hit_count << " estimate_float=" << fl(e.estimate)
      << " predicted_float=" << (e.predicted ? fl(*e.predicted) : "none")
      << " certificate_verdict=" << to_string(cert.verdict) << '\n';
    o << "p,ramified,profile,hit\n";
    for (const auto& r : e.rows)
      o << r.p << ',' << (r.ramified ? 1 : 0) << ',' << r.profile << ',' << (r.hit ? 1 : 0)
        << '\n';
    return {o.str(), status};
  }

  Json j = envelope("scan");
  const Json summary = to_json(e);
  for (const auto& [key, value] : summary.items()) j[key] = value;
  j["certificate"] = to_json(cert);
  return {dump(j), status};
}

struct ClassesArgs {
  std::string poly;
  u64 plimit = 0;
};

Outcome run_classes(const ClassesArgs& a, const Settings& s) {
  const IntPolynomial f = parse_polynomial(a.poly);
  const ProfileTable t = profile_density_table(f, a.plimit, s.workers);

  if (csv(s)) {
    std::ostringstream o;
    o << kCsvNotice << "\n# poly=" << f.to_string() << " prime_limit=" << a.plimit
      << " unramified_count=" << t.unramified_count << '\n';
    o << "profile,count,frequency_float\n";
    for (const auto& [type, count] : t.counts)
      o << join(type, '-') << ',' << count << ',' << fl(t.frequency(type)) << '\n';
    return {o.str()};
  }

  Json j = envelope("classes");
  j["poly"] = f.to_string();
  j["prime_limit"] = a.plimit;
  j["unramified_count"] = t.unramified_count;
  Json classes = Json::array();
  for (const auto& [type, count] : t.counts)
    classes.push_back(Json{{"profile", join(type, '-')},
                           {"count", count},
                           {"frequency", rational_json(t.frequency(type))},
                           {"frequency_float", fl(t.frequency(type))}});
  j["classes"] = classes;
  return {dump(j)};
}

// maeda -------------------------------------------------------------------

struct MaedaArgs {
  std::string weights;
  u64 budget = 5000;
  u64 max_budget = 0;
};

Outcome run_maeda(const MaedaArgs& a, const Settings& s) {
  std::vector<unsigned> skipped;
  const std::vector<unsigned> weights = parse_weights(a.weights, skipped);
  require(a.max_budget == 0 || a.max_budget >= a.budget, ErrorCode::kValidation,
          "--max-budget must be >= --budget");
  std::vector<MaedaEvidence> ev = maeda_sweep(weights, a.budget, s.workers);

  // Optional widening policy: retry inconclusive weights with a doubled
  // budget until certified or the ceiling is reached.
  for (auto& e : ev) {
    for (u64 b = a.budget * 2; e.verdict == MaedaVerdict::kInconclusive && b <= a.max_budget;
         b *= 2)
      e = maeda_evidence(e.k, b);
  }

  bool all_conclusive = true;
  for (const auto& e : ev) all_conclusive = all_conclusive && e.verdict != MaedaVerdict::kInconclusive;
  const int status = s.strict && !all_conclusive ? kExitInconclusive : kExitOk;

  if (csv(s)) {
    std::ostringstream o;
    o << "# d_k = 0, skipped:" << (skipped.empty() ? " none" : "");
    for (unsigned k : skipped) o << ' ' << k;
    o << "\nk,dk,irreducible,irreducible_witness,transitive,n-1_cycle,transposition,"
         "primes_examined,verdict\n";
    for (const auto& e : ev) {
      auto w = [&](const char* key) {
        auto it = e.symmetric_group.witnesses.find(key);
        return it == e.symmetric_group.witnesses.end() ? std::string() : std::to_string(it->second);
      };
      o << e.k << ',' << e.charpoly.dk << ',' << (e.irreducible ? 1 : 0) << ','
        << (e.irreducible_witness ? std::to_string(*e.irreducible_witness) : std::string()) << ','
        << w("transitive") << ',' << w("n-1_cycle") << ',' << w("transposition") << ','
        << e.symmetric_group.primes_examined << ',' << to_string(e.verdict) << '\n';
    }
    return {o.str(), status};
  }

  Json j = envelope("maeda");
  j["budget"] = a.budget;
  j["max_budget"] = a.max_budget == 0 ? a.budget : a.max_budget;
  j["skipped_weights"] = skipped;
  Json list = Json::array();
  for (const auto& e : ev) list.push_back(to_json(e));
  j["evidence"] = list;
  return {dump(j), status};
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << Json{{"error", std::string(code)}, {"message", message}}.dump() << '\n';
}

unsigned default_workers() {
  const char* env = std::getenv(kWorkersEnv);
  if (env == nullptr || *env == '\0') return 1;
  unsigned v = parse_unsigned(env, kWorkersEnv);
  require(v >= 1, ErrorCode::kValidation, std::string(kWorkersEnv) + " must be >= 1");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CensusArgs census;
  SeqArgs seq;
  DensityArgs density;
  EffectiveArgs effective;
  ScanArgs scan;
  ClassesArgs classes;
  MaedaArgs maeda;
  unsigned enclosure_terms = 0;

  CLI::App app{"Exact d-cycle densities, Chebotarev scans and Hecke T_2 experiments", "maedalab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", s.output, "Write results to this file instead of stdout");
  auto* workers_opt = app.add_option("--workers", s.workers, "Worker threads (default from " +
                                                                 std::string(kWorkersEnv) + ")")
                          ->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Seed for Monte Carlo sampling")->capture_default_str();
  app.add_flag("--strict", s.strict, "Exit 3 when a verdict is inconclusive");

  auto* c = app.add_subcommand("census", "Counts of permutations with d-cycles");
  c->add_option("--n", census.n, "Degree of the symmetric group")->required();
  c->add_option("--d", census.d, "Cycle length")->required();
  c->add_flag("--brute", census.brute, "Also enumerate S_n (n <= 10)");
  c->add_option("--samples", census.samples, "Monte Carlo samples (uses --seed)");

  auto* q = app.add_subcommand("seq", "Table of a(i)");
  q->add_option("--d", seq.d)->required();
  q->add_option("--imax", seq.imax)->required();
  q->add_flag("--closed", seq.closed, "Use the closed form instead of the recursion");
  auto* q_enc = q->add_option("--enclosure-terms", enclosure_terms,
                              "Also bracket the limit with this many series terms");

  auto* dn = app.add_subcommand("density", "Density trace along a tower of degrees");
  dn->add_option("--d", density.d)->required();
  dn->add_option("--degrees", density.degrees, "Comma-separated degrees, e.g. 5,6,8")->required();
  dn->add_flag("--guaranteed", density.guaranteed, "Emit guaranteed intervals");
  dn->add_option("--enclosure-terms", density.enclosure_terms)->capture_default_str();

  auto* ef = app.add_subcommand("effective", "Effective lower bound from Hecke dimensions");
  ef->add_option("--d", effective.d)->required();
  ef->add_option("--B", effective.B, "Weight bound")->required();
  ef->add_flag("--guaranteed", effective.guaranteed, "Emit the final guaranteed interval");
  ef->add_option("--enclosure-terms", effective.enclosure_terms)->capture_default_str();

  auto* sc = app.add_subcommand("scan", "Chebotarev scan for residue degree d");
  sc->add_option("--poly", scan.poly, "e.g. \"x^5-x-1\" or \"-1,-1,0,0,0,1\"")->required();
  sc->add_option("--d", scan.d)->required();
  sc->add_option("--plimit", scan.plimit)->required();
  sc->add_option("--budget", scan.budget, "Prime bound for the S_n certificate")
      ->capture_default_str();

  auto* cl = app.add_subcommand("classes", "Frequencies of factorization patterns");
  cl->add_option("--poly", classes.poly)->required();
  cl->add_option("--plimit", classes.plimit)->required();

  auto* md = app.add_subcommand("maeda", "T_2 characteristic polynomials and Galois evidence");
  md->add_option("--weights", maeda.weights, "e.g. 12..200 or 24,36")->required();
  md->add_option("--budget", maeda.budget, "Prime bound for certificates")->capture_default_str();
  md->add_option("--max-budget", maeda.max_budget,
                 "Double the budget for inconclusive weights up to this bound");

  for (auto* sub : {c, q, dn, ef, sc, cl, md}) sub->fallthrough();

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kExitValidation;
  }

  try {
    if (workers_opt->count() == 0) s.workers = default_workers();
    if (q_enc->count() > 0) seq.enclosure_terms = enclosure_terms;

    Outcome result;
    if (c->parsed()) result = run_census(census, s);
    else if (q->parsed()) result = run_seq(seq, s);
    else if (dn->parsed()) result = run_density(density, s);
    else if (ef->parsed()) result = run_effective(effective, s);
    else if (sc->parsed()) result = run_scan(scan, s, err);
    else if (cl->parsed()) result = run_classes(classes, s);
    else result = run_maeda(maeda, s);

    if (s.output.empty()) {
      out << result.text;
    } else {
      std::ofstream file(s.output, std::ios::binary);
      file << result.text;
      if (!file) {
        report_error(err, "io", "cannot write " + s.output);
        return kExitFailure;
      }
    }
    if (result.status == kExitInconclusive)
      report_error(err, "inconclusive", "verdict is inconclusive and --strict was given");
    return result.status;
  } catch (const Error& e) {
    report_error(err, error_code_name(e.code()), e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kExitFailure;
  }
}

}  // namespace maedalab::cli

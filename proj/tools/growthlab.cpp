// growthlab: command-line front end. Reports go to stdout (or --out) as JSON
// or CSV; timing goes to stderr so reports stay byte-identical.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "growthlab/digits.hpp"
#include "growthlab/families.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/report.hpp"

namespace {

using namespace growthlab;
using report::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCert = 3;

struct Options {
  unsigned precision = 40;
  std::string format = "json";
  std::string out;
  bool hasse = false;
  std::uint64_t seed = 1;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

Json envelope(const std::string& command, Json inputs, Json results, bool pass) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"pass", pass}};
}

int cmd_constants(const Options& o) {
  auto cs = named_constants(o.precision);
  const bool ordered = report::constants_ordered(cs);
  if (o.format == "csv") {
    std::string text = "name,poly,lo,hi,decimal\n";
    for (const auto& c : cs)
      text += c.name + "," + c.poly.to_pretty() + "," + to_exact_string(c.root.lo) + "," +
              to_exact_string(c.root.hi) + "," + c.root.decimal(6) + "\n";
    emit(o, text);
  } else {
    emit(o, report::render(envelope("constants", {{"precision", o.precision}}, report::constants(cs), ordered)));
  }
  return ordered ? kExitOk : kExitCert;
}

int cmd_growth(const Options& o, const std::string& spec) {
  const EnumSequence s = EnumSequence::parse(spec);
  if (!s.positive()) throw InputError("sequence must be positive: " + s.to_string());
  const RootEnclosure e = growth_rate(s, o.precision);
  if (o.format == "csv") {
    emit(o, "sequence,poly,lo,hi,decimal\n" + s.to_string() + "," + e.poly.to_pretty() + "," + to_exact_string(e.lo) +
                "," + to_exact_string(e.hi) + "," + e.decimal(6) + "\n");
  } else {
    Json results{{"sequence", report::sequence(s)}, {"growth_rate", report::enclosure(e)}};
    emit(o, report::render(envelope("growth", {{"sequence", spec}, {"precision", o.precision}}, results, true)));
  }
  return kExitOk;
}

FamilySpec resolve_family(const std::string& name) {
  for (const auto& n : builtin_family_names())
    if (n == name) return builtin_family(name);
  if (name.rfind("Theorem1:", 0) == 0) return builtin_family(name);
  if (std::filesystem::exists(name)) return load_family_config(name);
  throw InputError("unknown family (not built in, no such config file): " + name);
}

int cmd_family(const Options& o, const std::string& name) {
  const FamilySpec spec = resolve_family(name);
  IntervalOptions opts;
  opts.bits = o.precision;
  const IntervalReport r = family_interval(spec, opts);
  if (o.format == "csv") {
    emit(o, report::interval_csv({r}));
  } else {
    Json results = report::interval(r);
    if (o.hasse) {
      Json dots = Json::array();
      for (std::size_t i = 0; i < spec.collections.size(); ++i) {
        const auto& c = spec.collections[i];
        dots.push_back(downset_collection(c.U, c.L, spec.r, spec.s).poset.to_dot(spec.name + "_H" + std::to_string(i)));
      }
      results["hasse"] = dots;
    }
    emit(o, report::render(envelope("family", {{"family", name}, {"precision", o.precision}}, results, r.feasible)));
  }
  return r.feasible ? kExitOk : kExitCert;
}

int cmd_verify(const Options& o, const std::string& which) {
  if (which != "theorem1" && which != "theorem2" && which != "all") throw InputError("verify: unknown target " + which);
  Json results = Json::object();
  bool pass = true;
  std::vector<IntervalReport> rows;
  if (which != "theorem2") {
    const auto t1 = verify_theorem1({5, 7, 9, 11, 13, 15, 17, 19, 21}, o.precision);
    results["theorem1"] = report::theorem1(t1);
    pass = pass && t1.ok;
    for (const auto& row : t1.rows) rows.push_back(row.interval);
  }
  if (which != "theorem1") {
    const auto t2 = verify_theorem2(o.precision);
    results["theorem2"] = report::theorem2(t2);
    pass = pass && t2.ok;
    rows.insert(rows.end(), t2.families.begin(), t2.families.end());
  }
  if (o.format == "csv")
    emit(o, report::interval_csv(rows));
  else
    emit(o, report::render(envelope("verify", {{"target", which}, {"precision", o.precision}}, results, pass)));
  return pass ? kExitOk : kExitCert;
}

// Random greedy round trips on the Theorem 1 (k = 5) digit sets at 12/5.
int cmd_property(const Options& o, int trials) {
  if (trials < 1) throw InputError("trials must be positive");
  const DigitSetSequence D = family_digit_sets(builtin_family("Theorem1:5"));
  const Rational beta = make_rational(12, 5);
  const Rational lo = series_value(lower_digits(D, beta), beta);
  const Rational hi = series_value(upper_digits(D, beta), beta);
  const Rational tol = 1 / pow(beta, 38);
  std::mt19937_64 rng(o.seed);
  Json cases = Json::array();
  bool pass = true;
  for (int t = 0; t < trials; ++t) {
    Rational frac(Integer(std::to_string(rng() >> 2)), Integer(1) << 62);
    frac.canonicalize();
    const Rational x = lo + frac * (hi - lo);
    const auto g = greedy_expansion(x, D, beta, 40);
    const bool ok = g.error <= tol && g.error <= g.error_bound;
    pass = pass && ok;
    cases.push_back({{"x", to_exact_string(x)}, {"error_decimal", to_decimal(g.error, 30)}, {"ok", ok}});
  }
  Json results{{"beta", to_exact_string(beta)}, {"tolerance", "beta^-38"}, {"cases", cases}};
  emit(o, report::render(envelope("property", {{"seed", o.seed}, {"trials", trials}}, results, pass)));
  return pass ? kExitOk : kExitCert;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified growth-rate computations for sum-closed permutation classes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision", o.precision, "Enclosure width 2^-bits")->check(CLI::Range(20u, 4096u));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "Write the report here instead of stdout");
  app.add_option("--seed", o.seed, "Seed for the property subcommand");

  auto* constants = app.add_subcommand("constants", "The six named constants and their ordering");
  std::string seq;
  auto* growth = app.add_subcommand("growth", "Growth rate of the sum closure of a sequence \"pre;period\"");
  growth->add_option("sequence", seq)->required();
  std::string family;
  auto* fam = app.add_subcommand("family", "Interval report for a built-in family or a config file");
  fam->add_option("name", family)->required();
  fam->add_flag("--hasse", o.hasse, "Include DOT Hasse diagrams of the extra-set ground posets");
  std::string which = "all";
  auto* verify = app.add_subcommand("verify", "theorem1, theorem2 or all");
  verify->add_option("which", which);
  int trials = 100;
  auto* prop = app.add_subcommand("property", "Random greedy-expansion round trips");
  prop->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (*constants) code = cmd_constants(o);
    else if (*growth) code = cmd_growth(o, seq);
    else if (*fam) code = cmd_family(o, family);
    else if (*verify) code = cmd_verify(o, which);
    else if (*prop) code = cmd_property(o, trials);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kExitCert;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "elapsed " << secs << " s\n";
  return code;
}

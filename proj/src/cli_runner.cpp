#include "intdec/cli_runner.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "intdec/algebra_json.hpp"
#include "intdec/decide.hpp"
#include "intdec/fixtures.hpp"
#include "intdec/ivp.hpp"
#include "intdec/null_ideal.hpp"

namespace intdec {

namespace {

using nlohmann::json;

struct Common {
  bool json_out = false;
  int64_t budget = 1000000;
  uint64_t seed = 0x5eed5eedULL;
  bool serial = false;
};

struct Target {
  std::string path;
  std::string fixture;
};

// Resolves --fixture/path to an algebra plus certificate.
std::pair<StructureAlgebra, AlgebraCertificate> resolve(const Target& t) {
  if (!t.fixture.empty() && !t.path.empty())
    throw std::invalid_argument("give either an algebra file or --fixture, not both");
  if (!t.fixture.empty()) {
    const Fixture* f = find_fixture(t.fixture);
    if (!f) throw std::invalid_argument("unknown fixture '" + t.fixture + "' (see `intdec fixtures`)");
    return {f->algebra, f->certificate};
  }
  if (t.path.empty()) throw std::invalid_argument("an algebra file or --fixture is required");
  return {load_algebra_file(t.path), AlgebraCertificate{}};
}

void require_prime(int64_t p) {
  if (p < 2) throw std::invalid_argument("invalid prime " + std::to_string(p));
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("invalid prime " + std::to_string(p));
}

json poly_json(const AlgebraPoly& f, const std::vector<std::string>& names) {
  json j;
  j["text"] = render_poly(f, names);
  std::vector<std::vector<int64_t>> cs;
  for (const auto& c : f.coeffs) cs.push_back(c);
  j["coeffs"] = cs;
  return j;
}

json scalar_json(const ScalarPoly& f) {
  json j;
  j["text"] = render_scalar(f);
  j["coeffs"] = f.coeffs;
  return j;
}

std::string profile_text(const WedderburnProfile& p) { return p.to_string(); }

json profile_json(const WedderburnProfile& p) {
  json j;
  j["radical_dim"] = p.radical_dim;
  json comps = json::array();
  for (const auto& c : p.components) comps.push_back({{"q", c.q}, {"n", c.n}});
  j["components"] = comps;
  return j;
}

// ---------------------------------------------------------------------------

int cmd_fixtures(const Common& c, std::ostream& out) {
  if (c.json_out) {
    json j;
    j["schema"] = 1;
    j["command"] = "fixtures";
    json arr = json::array();
    for (const auto& f : fixture_catalog())
      arr.push_back({{"key", f.key}, {"description", f.description}, {"rank", f.algebra.rank()}});
    j["fixtures"] = arr;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "bundled fixtures:\n";
  for (const auto& f : fixture_catalog()) {
    out << "  " << f.key;
    for (size_t i = f.key.size(); i < 12; ++i) out << ' ';
    out << " rank " << f.algebra.rank() << "  " << f.description << "\n";
  }
  return 0;
}

int cmd_validate(const Common& c, const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  JsonValidation v = validate_algebra_json(buf.str());
  if (c.json_out) {
    json j;
    j["schema"] = 1;
    j["command"] = "validate";
    j["name"] = v.name;
    j["rank"] = v.rank;
    j["standard_assumptions"] = v.standard_assumptions;
    j["valid"] = v.report.ok;
    j["message"] = v.report.message();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "algebra: " << v.name << "\n";
  out << "rank: " << v.rank << "\n";
  out << "standard_assumptions (declared): " << (v.standard_assumptions ? "true" : "false") << "\n";
  out << "validation: " << v.report.message() << "\n";
  return 0;
}

int cmd_profile(const Common& c, const Target& t, int64_t p, std::ostream& out) {
  require_prime(p);
  auto [alg, cert] = resolve(t);
  FiniteAlgebra a1(alg, p, 1);
  WedderburnProfile prof = wedderburn_profile(a1, c.seed);
  if (c.json_out) {
    json j;
    j["schema"] = 1;
    j["command"] = "profile";
    j["algebra"] = alg.name();
    j["prime"] = p;
    j["profile"] = profile_json(prof);
    j["seed"] = prof.seed;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "algebra: " << alg.name() << "\n";
  out << "prime: " << p << "\n";
  out << "profile: " << profile_text(prof) << "\n";
  return 0;
}

int cmd_null(const Common& c, const Target& t, int64_t p, int64_t k, int64_t d, std::ostream& out) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("--level must be >= 1");
  if (d < 0) throw std::invalid_argument("--degree must be >= 0");
  auto [alg, cert] = resolve(t);
  FiniteAlgebra ak(alg, p, k);
  DegreewiseModule scal = scalar_null_ideal(ak, d, c.budget);
  DegreewiseModule full = full_null_ideal(ak, d, c.budget);
  auto monic = scal.minimal_monic_degree();

  if (c.json_out) {
    json j;
    j["schema"] = 1;
    j["command"] = "null";
    j["algebra"] = alg.name();
    j["prime"] = p;
    j["level"] = k;
    j["degree"] = d;
    json sb = json::array();
    for (int64_t i = 0; i < scal.basis.rows; ++i)
      sb.push_back(scalar_json(unflatten_scalar(ak.ring(), d, scal.basis.row(i))));
    j["scalar_null_basis"] = sb;
    json fb = json::array();
    for (int64_t i = 0; i < full.basis.rows; ++i)
      fb.push_back(poly_json(unflatten_poly(ak.ring(), alg.rank(), d, full.basis.row(i)), alg.basis_names()));
    j["full_null_basis"] = fb;
    j["minimal_monic_degree"] = monic ? json(*monic) : json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "algebra: " << alg.name() << "\n";
  out << "prime: " << p << "  level: " << k << "  degree bound: " << d << "\n";
  out << "scalar null ideal basis over Z/" << ak.ring().mod << ":\n";
  if (scal.basis.rows == 0) out << "  (zero module)\n";
  for (int64_t i = 0; i < scal.basis.rows; ++i)
    out << "  " << render_scalar(unflatten_scalar(ak.ring(), d, scal.basis.row(i))) << "\n";
  out << "full null ideal basis (algebra coefficients):\n";
  if (full.basis.rows == 0) out << "  (zero module)\n";
  for (int64_t i = 0; i < full.basis.rows; ++i)
    out << "  " << render_poly(unflatten_poly(ak.ring(), alg.rank(), d, full.basis.row(i)), alg.basis_names())
        << "\n";
  if (monic)
    out << "minimal monic degree in scalar null ideal: " << *monic << "\n";
  else
    out << "minimal monic degree in scalar null ideal: none up to degree " << d << "\n";
  return 0;
}

int cmd_nu(const Common& c, const Target& t, int64_t p, int64_t d, int64_t cap, std::ostream& out) {
  require_prime(p);
  if (d < 0) throw std::invalid_argument("--degree must be >= 0");
  if (cap < 1) throw std::invalid_argument("--cap must be >= 1");
  auto [alg, cert] = resolve(t);
  NuSequence nu = nu_sequence(alg, p, d, cap, c.budget);

  if (c.json_out) {
    json j;
    j["schema"] = 1;
    j["command"] = "nu";
    j["algebra"] = alg.name();
    j["prime"] = p;
    j["cap"] = cap;
    json arr = json::array();
    for (int64_t jj = 0; jj <= d; ++jj) {
      const NuEntry& e = nu.entries[size_t(jj)];
      arr.push_back({{"degree", jj},
                     {"nu", e.nu},
                     {"saturated", e.saturated},
                     {"witness", {{"text", render_scalar_int(e.witness_ascending)}, {"coeffs", e.witness_ascending}}}});
    }
    j["entries"] = arr;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "algebra: " << alg.name() << "\n";
  out << "nu sequence at p=" << p << " (denominator exponent cap " << cap << "):\n";
  for (int64_t jj = 0; jj <= d; ++jj) {
    const NuEntry& e = nu.entries[size_t(jj)];
    out << "  j=" << jj << ": nu=" << e.nu;
    if (e.saturated) out << " (saturated)";
    out << "  g_j = " << render_scalar_int(e.witness_ascending) << "\n";
  }
  return 0;
}

int cmd_decide(const Common& c, const Target& t, std::vector<int64_t> primes, std::ostream& out) {
  auto [alg, cert] = resolve(t);
  if (primes.empty()) {
    auto def = default_prime_list(alg);
    if (!def)
      throw std::invalid_argument(
          "trace form is degenerate: all primes potentially relevant; provide --primes explicitly");
    primes = *def;
  }
  for (int64_t p : primes) require_prime(p);
  GlobalReport rep = decide_over_primes(alg, primes, cert, c.seed);

  if (c.json_out) {
    json j;
    j["schema"] = 1;
    j["command"] = "decide";
    j["algebra"] = rep.algebra;
    json disc;
    disc["degenerate"] = rep.disc.degenerate;
    disc["determinant"] = rep.disc.determinant;
    disc["primes"] = rep.disc.primes;
    disc["residual"] = rep.disc.residual;
    j["trace_form"] = disc;
    json vs = json::array();
    for (const auto& v : rep.verdicts)
      vs.push_back({{"prime", v.p},
                    {"decomposable", v.decomposable},
                    {"reason", reason_name(v.reason)},
                    {"profile", profile_json(v.profile)}});
    j["verdicts"] = vs;
    j["all_tested_decomposable"] = rep.all_tested_decomposable;
    j["first_failing_prime"] = rep.first_failing_prime;
    j["notes"] = rep.notes;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "algebra: " << rep.algebra << "\n";
  if (rep.disc.degenerate)
    out << "trace form: degenerate (all primes potentially relevant)\n";
  else {
    out << "trace-form determinant: " << rep.disc.determinant << "  relevant primes:";
    if (rep.disc.primes.empty()) out << " (none)";
    for (auto p : rep.disc.primes) out << " " << p;
    out << "\n";
  }
  for (const auto& v : rep.verdicts) {
    out << "p=" << v.p << ": " << (v.decomposable ? "decomposable" : "NOT decomposable") << " ("
        << reason_name(v.reason) << ")  " << profile_text(v.profile) << "\n";
  }
  if (rep.all_tested_decomposable)
    out << "summary: decomposable at all tested primes\n";
  else
    out << "summary: fails first at p=" << rep.first_failing_prime << "\n";
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  return 0;
}

int cmd_verify_phi(const Common& c, const Target& t, int64_t p, int64_t d, int64_t k, std::ostream& out) {
  require_prime(p);
  if (k < 1) throw std::invalid_argument("--level must be >= 1");
  if (d < 0) throw std::invalid_argument("--degree must be >= 0");
  auto [alg, cert] = resolve(t);
  PhiResult res = verify_phi(alg, p, d, k, c.budget);
  int64_t denom = 1;
  for (int64_t i = 0; i < k; ++i) denom *= p;

  if (c.json_out) {
    json j;
    j["schema"] = 1;
    j["command"] = "verify-phi";
    j["algebra"] = alg.name();
    j["prime"] = p;
    j["level"] = k;
    j["degree"] = d;
    j["surjective"] = res.surjective;
    j["first_failing_degree"] = res.first_failing_degree;
    if (res.witness) {
      j["witness"] = poly_json(*res.witness, alg.basis_names());
      j["witness_denominator"] = denom;
    } else {
      j["witness"] = nullptr;
      j["witness_denominator"] = nullptr;
    }
    std::vector<int64_t> nus;
    for (const auto& e : res.nu.entries) nus.push_back(e.nu);
    j["nu"] = nus;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "algebra: " << alg.name() << "\n";
  out << "prime: " << p << "  level: " << k << "  degree bound: " << d << "\n";
  if (res.surjective) {
    out << "verdict: PASS (image spans all integer-valued numerators at denominator " << denom
        << " up to degree " << d << ")\n";
  } else {
    out << "verdict: FAIL at degree " << res.first_failing_degree << "\n";
    if (res.witness)
      out << "witness: (" << render_poly(*res.witness, alg.basis_names()) << ") / " << denom << "\n";
  }
  std::ostringstream nus;
  for (size_t i = 0; i < res.nu.entries.size(); ++i) {
    if (i) nus << ", ";
    nus << res.nu.entries[i].nu;
  }
  out << "nu sequence: [" << nus.str() << "]\n";
  return 0;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact-arithmetic analyzer for integer-valued polynomials on finite-rank Z-algebras"};
  app.name("intdec");
  app.set_config("--config", "", "key=value config file; command-line flags win");

  Common common;
  app.add_flag("--json", common.json_out, "emit machine-readable JSON (schema 1)");
  app.add_option("--budget", common.budget, "enumeration budget in elements")->capture_default_str();
  app.add_option("--seed", common.seed, "seed for randomized splitting steps")->capture_default_str();
  app.add_flag("--serial", common.serial, "force the serial reference kernels");
  app.require_subcommand(1);

  auto* fix = app.add_subcommand("fixtures", "list bundled algebras");

  std::string vpath;
  auto* val = app.add_subcommand("validate", "parse and validate an algebra JSON file");
  val->add_option("path", vpath, "algebra JSON file")->required();

  Target tprof;
  int64_t p_prof = 2;
  auto* prof = app.add_subcommand("profile", "residue structure of A/pA");
  prof->add_option("path", tprof.path, "algebra JSON file");
  prof->add_option("--fixture", tprof.fixture, "bundled fixture key");
  prof->add_option("--prime", p_prof, "prime p")->required();

  Target tnull;
  int64_t p_null = 2, k_null = 1, d_null = -1;
  auto* nul = app.add_subcommand("null", "null-ideal bases and minimal monic degree");
  nul->add_option("path", tnull.path, "algebra JSON file");
  nul->add_option("--fixture", tnull.fixture, "bundled fixture key");
  nul->add_option("--prime", p_null, "prime p")->required();
  nul->add_option("--level", k_null, "power k of p")->capture_default_str();
  nul->add_option("--degree", d_null, "degree bound (default 2 p^k t capped at 12)");

  Target tnu;
  int64_t p_nu = 2, d_nu = 4, cap_nu = 4;
  auto* nu = app.add_subcommand("nu", "denominator exponents and witness numerators");
  nu->add_option("path", tnu.path, "algebra JSON file");
  nu->add_option("--fixture", tnu.fixture, "bundled fixture key");
  nu->add_option("--prime", p_nu, "prime p")->required();
  nu->add_option("--degree", d_nu, "max degree")->capture_default_str();
  nu->add_option("--cap", cap_nu, "denominator exponent cap K_max")->capture_default_str();

  Target tdec;
  std::vector<int64_t> primes;
  auto* dec = app.add_subcommand("decide", "per-prime decomposability verdicts");
  dec->add_option("path", tdec.path, "algebra JSON file");
  dec->add_option("--fixture", tdec.fixture, "bundled fixture key");
  dec->add_option("--primes", primes, "primes to test (default: trace-form primes + primes < 20)")
      ->delimiter(',');

  Target tphi;
  int64_t p_phi = 2, d_phi = 4, k_phi = 1;
  auto* phi = app.add_subcommand("verify-phi", "brute-force image check at one denominator level");
  phi->add_option("path", tphi.path, "algebra JSON file");
  phi->add_option("--fixture", tphi.fixture, "bundled fixture key");
  phi->add_option("--prime", p_phi, "prime p")->required();
  phi->add_option("--degree", d_phi, "degree bound")->capture_default_str();
  phi->add_option("--level", k_phi, "denominator level k")->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("intdec");
  for (const auto& a : args) argv.push_back(a.c_str());

  CliResult res;
  std::ostringstream out, err;
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    res.exit_code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
    return res;
  }

  set_default_exec(common.serial ? Exec::serial : Exec::parallel);

  try {
    if (fix->parsed()) res.exit_code = cmd_fixtures(common, out);
    else if (val->parsed()) res.exit_code = cmd_validate(common, vpath, out);
    else if (prof->parsed()) res.exit_code = cmd_profile(common, tprof, p_prof, out);
    else if (nul->parsed()) {
      if (d_null < 0) {
        auto [alg, cert] = resolve(tnull);
        FiniteAlgebra ak(alg, p_null, k_null);
        d_null = default_null_degree(ak);
      }
      res.exit_code = cmd_null(common, tnull, p_null, k_null, d_null, out);
    } else if (nu->parsed()) res.exit_code = cmd_nu(common, tnu, p_nu, d_nu, cap_nu, out);
    else if (dec->parsed()) res.exit_code = cmd_decide(common, tdec, primes, out);
    else if (phi->parsed()) res.exit_code = cmd_verify_phi(common, tphi, p_phi, d_phi, k_phi, out);
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    res.exit_code = 3;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    res.exit_code = 2;
  } catch (const std::overflow_error& e) {
    err << "input error: " << e.what() << "\n";
    res.exit_code = 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    res.exit_code = 1;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace intdec

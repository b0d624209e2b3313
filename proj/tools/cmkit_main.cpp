// cmkit command line front end: curve ingestion, dispatch, JSON reports.
//
// Exit codes: 0 success, 1 domain error (JSON error object on stdout),
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cmkit/cache.hpp"
#include "cmkit/curves.hpp"
#include "cmkit/errors.hpp"
#include "cmkit/motive.hpp"
#include "cmkit/quadfield.hpp"
#include "cmkit/ranks.hpp"
#include "cmkit/rat_series.hpp"
#include "cmkit/serialize.hpp"

namespace {

using namespace cmkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadInput, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CurveDescriptor load_curve(const std::string& path) {
  return parse_curve_spec(read_file(path));
}

const EllipticCurveData& require_elliptic(const CurveDescriptor& c) {
  if (!c.elliptic) fail(Errc::BadInput, "this command needs a Weierstrass curve");
  return *c.elliptic;
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

struct Options {
  std::string cache_path;
  std::string curve_file, fiber_file, base_file, input_file;
  unsigned power = 1;
  unsigned codim = 1;
  unsigned g = 1;
  std::string level = "Q";
  unsigned order = 6;
  unsigned max_r = 4, max_s = 4;
  unsigned verify = 0;
};

int run_classify(const Options& opt) {
  CurveDescriptor c = load_curve(opt.curve_file);
  std::cout << classify_report(require_elliptic(c)) << "\n";
  return 0;
}

int run_zeta(const Options& opt) {
  CurveDescriptor c = load_curve(opt.curve_file);
  const EllipticCurveData& e = require_elliptic(c);
  CurveDescriptor base;
  const CurveDescriptor* basep = nullptr;
  if (!opt.base_file.empty()) {
    base = load_curve(opt.base_file);
    basep = &base;
  }
  ZetaFunction z = assemble_zeta(e, opt.power, basep);
  if (opt.verify > 0) {
    // cross-check the assembled zeta against point counts (cache-backed)
    PointCountCache cache = opt.cache_path.empty() ? PointCountCache()
                                                   : PointCountCache(opt.cache_path);
    std::vector<std::pair<IntPoly, ZetaPart>> factors;
    for (unsigned n = 0; n < z.parts.size(); ++n)
      factors.emplace_back(z.parts[n], n % 2 == 0 ? ZetaPart::Denominator
                                                  : ZetaPart::Numerator);
    RatSeries counts = series_log_zeta(factors, opt.verify);
    for (unsigned n = 1; n <= opt.verify; ++n) {
      mpz_class expect = pow_z(point_count(e, n, &cache), opt.power);
      if (basep) expect *= rational_point_count(*basep, n);
      if (counts.coeff(n) != mpq_class(expect))
        fail(Errc::BadInput, "zeta disagrees with point counts at n=" + std::to_string(n));
    }
  }
  std::cout << zeta_report(z, opt.power, basep) << "\n";
  return 0;
}

int run_decompose(const Options& opt) {
  if (opt.level != "F" && opt.level != "Q") fail(Errc::BadInput, "--level must be F or Q");
  std::cout << decompose_report(opt.g, opt.level == "F" ? Level::F : Level::Q) << "\n";
  return 0;
}

int run_tate(const Options& opt) {
  CurveDescriptor c = load_curve(opt.fiber_file);
  const EllipticCurveData& e = require_elliptic(c);
  CurveDescriptor base;
  const CurveDescriptor* basep = nullptr;
  if (!opt.base_file.empty()) {
    base = load_curve(opt.base_file);
    basep = &base;
  }
  std::vector<RankWitness> ws;
  std::uint64_t dim = tate_class_dim(e, opt.power, opt.codim, basep, &ws);
  std::cout << tate_report(opt.power, opt.codim, dim, ws, basep) << "\n";
  return 0;
}

int run_picard(const Options& opt) {
  CurveDescriptor c = load_curve(opt.fiber_file);
  const EllipticCurveData& e = require_elliptic(c);
  CurveDescriptor base;
  const CurveDescriptor* basep = nullptr;
  if (!opt.base_file.empty()) {
    base = load_curve(opt.base_file);
    basep = &base;
  }
  std::cout << picard_report(opt.power, picard_number(e, opt.power, basep), basep) << "\n";
  return 0;
}

int run_bb(const Options& opt) {
  CurveDescriptor c = load_curve(opt.fiber_file);
  const EllipticCurveData& e = require_elliptic(c);
  CurveDescriptor base = load_curve(opt.base_file);
  std::vector<RankWitness> ws;
  std::uint64_t rank = bb_rank(e, opt.power, opt.codim, base, &ws);
  std::cout << bb_report(opt.power, opt.codim, rank, ws) << "\n";
  return 0;
}

// verification commands exit 0 whenever the computation completes; the
// pass/fail status lives in the JSON, and exit 1 is reserved for the
// {"error": ...} object
int run_lcheck(const Options& opt) {
  CurveDescriptor c = load_curve(opt.fiber_file);
  const EllipticCurveData& e = require_elliptic(c);
  CurveDescriptor base = load_curve(opt.base_file);
  EulerCheckResult r = l_euler_check(e, opt.power, opt.codim, base, opt.order);
  std::cout << lcheck_report(opt.order, r) << "\n";
  return 0;
}

int run_weil_verify(const Options& opt) {
  CurveDescriptor c = load_curve(opt.curve_file);
  const EllipticCurveData& e = require_elliptic(c);
  if (!e.ordinary || !e.alpha) fail(Errc::NotOrdinary, "curve is supersingular");
  WeilRelationReport rep =
      verify_weil_relations(*e.alpha, mpz_class(e.field->p()), opt.max_r, opt.max_s);
  std::cout << weil_verify_report(e, opt.max_r, opt.max_s, rep) << "\n";
  return 0;
}

int run_match(const Options& opt) {
  MatchInput in = parse_match_input(read_file(opt.input_file));
  std::map<mpz_class, WeilNumber> alphas;
  for (const auto& list : {in.left, in.right})
    for (const auto& entry : list)
      if (entry.r >= 1 && !alphas.count(entry.m))
        alphas.emplace(entry.m, canonical_frobenius(entry.m, in.q, in.p));
  MatchResult r = match_decompositions(in.left, in.right, in.q, in.p, alphas);
  std::cout << match_report(r) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Frobenius/motive invariants of powers of ordinary CM elliptic curves"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("CMKIT_CACHE")) opt.cache_path = env;
  app.add_option("--cache", opt.cache_path, "point-count cache file (or env CMKIT_CACHE)");

  auto* classify = app.add_subcommand("classify", "curve validation and CM data");
  classify->add_option("--curve", opt.curve_file, "curve spec JSON")->required();

  auto* zeta = app.add_subcommand("zeta", "zeta function of E^g (x C)");
  zeta->add_option("--curve", opt.curve_file, "curve spec JSON")->required();
  zeta->add_option("--power", opt.power, "exponent g")->required();
  zeta->add_option("--base", opt.base_file, "optional base curve spec");
  zeta->add_option("--verify", opt.verify, "cross-check against point counts up to n");

  auto* decompose = app.add_subcommand("decompose", "CM tensor decomposition of h1(E)^(x g)");
  decompose->add_option("--g", opt.g, "tensor power")->required();
  decompose->add_option("--level", opt.level, "F or Q")->required();

  auto* tate = app.add_subcommand("tate-rank", "Tate class dimension in codimension i");
  tate->add_option("--fiber", opt.fiber_file, "fiber curve spec")->required();
  tate->add_option("--power", opt.power, "exponent g")->required();
  tate->add_option("--codim", opt.codim, "codimension i")->required();
  tate->add_option("--base", opt.base_file, "optional base curve spec");

  auto* picard = app.add_subcommand("picard", "Picard number of E^g (x C)");
  picard->add_option("--fiber", opt.fiber_file, "fiber curve spec")->required();
  picard->add_option("--power", opt.power, "exponent g")->required();
  picard->add_option("--base", opt.base_file, "optional base curve spec");

  auto* bb = app.add_subcommand("bb-rank", "predicted Beilinson-Bloch rank");
  bb->add_option("--fiber", opt.fiber_file, "fiber curve spec")->required();
  bb->add_option("--power", opt.power, "exponent g")->required();
  bb->add_option("--base", opt.base_file, "base curve spec")->required();
  bb->add_option("--codim", opt.codim, "codimension i")->required();

  auto* lcheck = app.add_subcommand("lcheck", "Euler product cross-check of the L-function");
  lcheck->add_option("--fiber", opt.fiber_file, "fiber curve spec")->required();
  lcheck->add_option("--power", opt.power, "exponent g")->required();
  lcheck->add_option("--base", opt.base_file, "base curve spec")->required();
  lcheck->add_option("--codim", opt.codim, "codimension i")->required();
  lcheck->add_option("--order", opt.order, "series truncation order");

  auto* weil = app.add_subcommand("weil-verify", "exhaustive Weil-relation check for the Frobenius");
  weil->add_option("--curve", opt.curve_file, "curve spec JSON")->required();
  weil->add_option("--max-r", opt.max_r, "power bound R");
  weil->add_option("--max-s", opt.max_s, "twist bound S");

  auto* match = app.add_subcommand("match", "decomposition matching permutation");
  match->add_option("--input", opt.input_file, "JSON with q, left, right")->required();

  // global flags remain usable after the subcommand name
  for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(opt);
    if (app.got_subcommand(zeta)) return run_zeta(opt);
    if (app.got_subcommand(decompose)) return run_decompose(opt);
    if (app.got_subcommand(tate)) return run_tate(opt);
    if (app.got_subcommand(picard)) return run_picard(opt);
    if (app.got_subcommand(bb)) return run_bb(opt);
    if (app.got_subcommand(lcheck)) return run_lcheck(opt);
    if (app.got_subcommand(weil)) return run_weil_verify(opt);
    if (app.got_subcommand(match)) return run_match(opt);
  } catch (const DomainError& e) {
    std::cout << error_report(errc_name(e.code()), e.detail()) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << error_report("Internal", e.what()) << "\n";
    return 1;
  }
  return 2;
}

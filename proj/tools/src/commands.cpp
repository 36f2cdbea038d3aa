#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chebsalem/errors.hpp"
#include "chebsalem/families.hpp"
#include "chebsalem/palindrome.hpp"
#include "chebsalem/rootcert.hpp"
#include "chebsalem/salem.hpp"
#include "chebsalem/search.hpp"
#include "json_io.hpp"

namespace chebsalem::cli {

namespace {

using io::json;

struct Global {
  int digits = 12;
  std::string output;
  bool verbose = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void finish(json& j, const Global& g) {
  if (g.verbose) j["provenance"] = {{"tool", "chebsalem"}, {"version", "0.1.0"}};
}

json roots_json(const IntPoly& p, int digits) {
  json out{{"degree", p.degree()}};
  if (p.degree() < 1) return out;
  const RealRootSolver solver(p);
  const int n_real = solver.count_real();
  out["n_real"] = n_real;
  out["complex_pairs"] = (p.degree() - n_real) / 2;
  out["hyperbolic"] = n_real == p.degree();
  out["kronecker"] = is_kronecker(p);
  out["n_in_critical"] = solver.count_in_closed(-2, 2);
  out["n_above_two"] = solver.count_above(2);
  out["n_below_minus_two"] = solver.count_below(-2);
  if (n_real > 0) {
    const auto roots = solver.isolate(default_refine_width());
    out["smallest_root"] = io::interval_json(roots.front().enclosure, digits);
    out["largest_root"] = io::interval_json(roots.back().enclosure, digits);
  }
  return out;
}

json span_json(const IntPoly& p, int digits) {
  const RealRootSolver solver(p);
  if (p.degree() < 1 || solver.count_real() < 2) return {{"error", "span needs at least two real roots"}};
  const SpanComparison cmp = compare_span(p, 4);
  const char* order = cmp.order == Ordering::Less ? "less" : cmp.order == Ordering::Equal ? "equal" : "greater";
  return {{"enclosure", io::interval_json(span(p), digits)}, {"compared_to_four", order}};
}

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    const auto a = io::parse_int_list(text.substr(0, colon));
    const auto b = io::parse_int_list(text.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1 || !a[0].fits_sint_p() || !b[0].fits_sint_p() || a[0] > b[0])
      throw UsageError("bad range '" + text + "', expected lo:hi");
    for (long n = a[0].get_si(); n <= b[0].get_si(); ++n) out.push_back(static_cast<int>(n));
  } else {
    for (const auto& v : io::parse_int_list(text)) {
      if (!v.fits_sint_p()) throw UsageError("n out of range in '" + text + "'");
      out.push_back(static_cast<int>(v.get_si()));
    }
  }
  return out;
}

std::vector<mpz_class> require_list(const std::string& text, const char* what) {
  try {
    return io::parse_int_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

json cmd_convert(const std::string& coeffs, const std::string& cheb, bool with_span, bool classify, bool with_lift,
                 const Global& g) {
  IntPoly p = !coeffs.empty() ? IntPoly(require_list(coeffs, "--coeffs"))
                              : from_cheb(ChebCoords(require_list(cheb, "--cheb")));
  if (p.is_zero()) throw UsageError("the zero polynomial has no basis representation to report");
  json j = io::payload("convert");
  j["monomial"] = io::poly_json(p);
  j["chebyshev"] = io::cheb_json(to_cheb(p));
  j["text"] = to_string(p);
  j["degree"] = p.degree();
  if (with_span) j["span"] = span_json(p, g.digits);
  if (classify) j["classification"] = roots_json(p, g.digits);
  if (with_lift) j["lift"] = io::poly_json(lift(p).inner(), "z-monomial");
  return j;
}

json cmd_family(const std::string& spec_text, bool verify_identity, bool limits, const std::string& n_range,
                bool salem, const Global& g) {
  FamilySpec spec;
  try {
    spec = parse_family_spec(spec_text);
  } catch (const InvalidParams& e) {
    throw UsageError(e.what());
  }
  const bool parametric = std::holds_alternative<TwoParam>(spec) || std::holds_alternative<ThreeParam>(spec);
  const IntPoly x = x_poly(spec);
  json j = io::payload("family");
  j["spec"] = to_string(spec);
  j["coords"] = io::cheb_json(coords_of(spec));
  j["x_poly"] = io::poly_json(x);
  j["roots"] = roots_json(x, g.digits);
  if (verify_identity) {
    const ClosedForm cf = closed_form_z(spec);
    json id{{"multiplier", io::poly_json(cf.multiplier, "z-monomial")},
            {"lhs", io::poly_json(cf.lhs, "z-monomial")},
            {"holds", cf.holds()}};
    if (parametric) {
      id["q"] = io::poly_json(q_poly(spec), "z-monomial");
      id["u"] = io::poly_json(u_poly(spec), "z-monomial");
      try {
        id["salem_identity"] = salem_identity_check(spec);
      } catch (const IdentityFailed& e) {
        id["salem_identity"] = false;
        id["difference"] = io::poly_json(e.difference(), "z-monomial");
      }
    }
    if (const auto* t = std::get_if<TwoParam>(&spec)) {
      const CircleLemma c = circle_lemma_check(t->h1, t->h2);
      id["circle_lemma"] = {{"identity_holds", c.identity_holds},
                            {"nonnegative_on_circle", c.nonnegative_on_circle},
                            {"max_sample_deviation", c.max_sample_deviation}};
    }
    if (const auto* t = std::get_if<ThreeParam>(&spec)) {
      const LemmaF f = lemma_f(t->h1, t->h2, t->h3);
      id["lemma_f"] = {{"two_f", io::poly_json(f.two_f)},
                       {"matches_closed", f.matches_closed},
                       {"nonnegative_on_unit_interval", nonnegative_on(f.two_f, -1, 1)}};
    }
    j["identity"] = id;
  }
  if (limits) {
    try {
      const ExtremeLimits l = limit_extreme_root(spec);
      j["limits"] = {{"smallest", io::limit_json(l.smallest, g.digits)},
                     {"largest", io::limit_json(l.largest, g.digits)}};
      if (parametric) j["limits"]["span"] = io::limit_json(limit_span(spec), g.digits);
    } catch (const NotApplicable&) {
      j["limits"] = {{"smallest", "-2"}, {"largest", "2"}, {"note", "roots become dense in [-2, 2]"}};
    }
  }
  if (!n_range.empty()) {
    const ConvergenceStudy s = salem_convergence_study(spec, parse_range(n_range));
    json rows = json::array();
    for (const auto& r : s.rows)
      rows.push_back({{"n", r.n},
                      {"degree", r.degree},
                      {"n_real", r.n_real},
                      {"n_above_two", r.n_above_two},
                      {"n_below_minus_two", r.n_below_minus_two},
                      {"root", io::interval_json(r.root, g.digits)},
                      {"distance", io::interval_json(r.distance, g.digits)}});
    j["convergence"] = {{"extreme", s.extreme == Extreme::Largest ? "largest" : "smallest"},
                        {"limit", io::limit_json(s.limit, g.digits)},
                        {"rows", rows},
                        {"strictly_decreasing", s.strictly_decreasing}};
  }
  if (salem) {
    j["salem"] = io::salem_json(classify_salem(closed_form_z(spec).lhs), g.digits);
    if (parametric) {
      j["pisot"] = {{"u", to_string(pisot_check(to_rat(u_poly(spec))))}, {"q", to_string(pisot_check(q_poly(spec)))}};
    }
  }
  return j;
}

SearchConfig search_config(int degree, const std::string& coeffs, const std::string& span_lt, bool kron,
                           bool allow_nonhyperbolic, bool prune, int threads) {
  SearchConfig cfg;
  cfg.degree = degree;
  cfg.coeff_set.clear();
  for (const auto& v : require_list(coeffs, "--coeffs")) {
    if (!v.fits_slong_p()) throw UsageError("--coeffs: value out of range");
    cfg.coeff_set.push_back(v.get_si());
  }
  try {
    cfg.span_bound = io::parse_rational(span_lt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--span-lt: ") + e.what());
  }
  cfg.kronecker_only = kron;
  cfg.require_hyperbolic = !allow_nonhyperbolic;
  cfg.prune_alternating = prune;
  cfg.threads = threads;
  return cfg;
}

json table8_json(const Table8Report& rep, int digits) {
  json rows = json::array();
  int passed = 0;
  for (const auto& r : rep.rows) {
    passed += r.ok();
    rows.push_back({{"label", r.label},
                    {"poly", io::poly_json(r.poly)},
                    {"hyperbolic", r.hyperbolic},
                    {"span", io::interval_json(r.span_enclosure, digits)},
                    {"span_below_four", r.span_below_four},
                    {"kronecker", r.kronecker},
                    {"kronecker_expected", r.kronecker_expected},
                    {"ok", r.ok()}});
  }
  json j = io::payload("verify");
  j["target"] = "table8";
  j["rows"] = rows;
  j["passed"] = passed;
  j["total"] = rep.rows.size();
  j["ordered_by_span"] = rep.ordered;
  j["ok"] = rep.ok();
  if (rep.first_failure) j["failure"] = *rep.first_failure;
  return j;
}

json degree18_json(const Degree18Report& rep, int digits) {
  json j = io::payload("verify");
  j["target"] = "degree18";
  j["poly"] = io::poly_json(rep.poly);
  j["n_real"] = rep.n_real;
  j["hyperbolic"] = rep.hyperbolic;
  j["span"] = io::interval_json(rep.span_enclosure, digits);
  j["span_below_four"] = rep.span_below_four;
  j["kronecker"] = rep.kronecker;
  j["ok"] = rep.ok();
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chebyshev-coordinate tools for small-span and Salem polynomials", "chebsalem"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--digits", g.digits, "Significant digits in decimal renderings")->check(CLI::Range(1, 1000));
  app.add_option("-o,--output", g.output, "Write the report to this file instead of stdout");
  app.add_flag("--verbose", g.verbose, "Add provenance metadata to JSON payloads");

  std::string coeffs, cheb;
  bool with_span = false, classify = false, with_lift = false;
  auto* convert = app.add_subcommand("convert", "Convert between monomial and Chebyshev coordinates");
  auto* o_coeffs = convert->add_option("--coeffs", coeffs, "Monomial coefficients, ascending, comma separated");
  auto* o_cheb = convert->add_option("--cheb", cheb, "Chebyshev coordinates, ascending, comma separated");
  o_coeffs->excludes(o_cheb);
  convert->add_flag("--span", with_span, "Report the certified span");
  convert->add_flag("--classify", classify, "Report real-root counts and the cosine-type flag");
  convert->add_flag("--lift", with_lift, "Report z^d f(z + 1/z)");

  std::string spec_text, n_range;
  bool verify_identity = false, limits = false, salem = false;
  auto* family = app.add_subcommand("family", "Analyse a parametric family member");
  family->add_option("--spec", spec_text, "e.g. two:h1=1,h2=2,n=3")->required();
  family->add_flag("--verify-identity", verify_identity, "Check the closed-form z-side identities");
  family->add_flag("--limits", limits, "Algebraic limits of the extreme roots");
  family->add_option("--n-range", n_range, "Convergence study over n, as lo:hi or a list");
  family->add_flag("--salem", salem, "Salem classification of the z-side product");

  int degree = 0, threads = 0;
  std::string search_coeffs = "-1,0,1", span_lt = "4", format = "jsonl";
  bool kron = false, allow_nonhyperbolic = false, prune = false;
  auto* search = app.add_subcommand("search", "Enumerate Chebyshev coordinate vectors");
  search->add_option("--degree", degree, "Polynomial degree")->required()->check(CLI::PositiveNumber);
  search->add_option("--coeffs", search_coeffs, "Allowed values for c_0 .. c_{d-1}")->capture_default_str();
  search->add_option("--span-lt", span_lt, "Strict span bound, integer or p/q")->capture_default_str();
  search->add_flag("--kronecker-only", kron, "Keep only cosine-type hits");
  search->add_flag("--allow-nonhyperbolic", allow_nonhyperbolic, "Keep hits with non-real roots");
  search->add_flag("--prune-alternating", prune, "Heuristic pruning by alternating signs (may miss hits)");
  search->add_option("--threads", threads, "Worker threads (default: CHEBSALEM_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));

  auto* verify = app.add_subcommand("verify", "Check the embedded published examples");
  verify->require_subcommand(1);
  auto* table8 = verify->add_subcommand("table8", "The 26 degree-8 polynomials of span < 4");
  auto* degree18 = verify->add_subcommand("degree18", "The degree-18 coordinate vector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, m;
    const int code = app.exit(e, o, m);
    out << o.str();
    err << m.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) {
      err << "error: cannot open " << g.output << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = g.output.empty() ? out : file;
  auto emit = [&](json j) {
    finish(j, g);
    sink << j.dump(2) << "\n";
  };

  try {
    if (*convert) {
      if (coeffs.empty() == cheb.empty()) throw UsageError("convert needs exactly one of --coeffs or --cheb");
      emit(cmd_convert(coeffs, cheb, with_span, classify, with_lift, g));
    } else if (*family) {
      emit(cmd_family(spec_text, verify_identity, limits, n_range, salem, g));
    } else if (*search) {
      const SearchConfig cfg = search_config(degree, search_coeffs, span_lt, kron, allow_nonhyperbolic, prune, threads);
      if (format == "csv") sink << io::hit_csv_header() << "\n";
      std::size_t hits = 0;
      enumerate(cfg, [&](const SearchHit& h) {
        ++hits;
        if (format == "csv") {
          sink << io::hit_csv(h) << "\n";
        } else {
          json line = io::hit_json(h, g.digits, cfg.prune_alternating);
          finish(line, g);
          sink << line.dump() << "\n";
        }
      });
      if (g.verbose) err << hits << " hits from " << candidate_count(cfg) << " candidates\n";
    } else if (*table8) {
      const Table8Report rep = table8_report();
      emit(table8_json(rep, g.digits));
      if (!rep.ok()) throw FixtureMismatch("table8", *rep.first_failure);
    } else if (*degree18) {
      const Degree18Report rep = degree18_report();
      emit(degree18_json(rep, g.digits));
      if (!rep.ok()) throw FixtureMismatch("degree18", "verification failed");
    }
  } catch (const FixtureMismatch& e) {
    err << "fixture mismatch: " << e.what() << "\n";
    return kExitFixture;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchSpaceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace chebsalem::cli

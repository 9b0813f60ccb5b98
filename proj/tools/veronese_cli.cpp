// veronese: command-line front end to the library.
//
// Exit codes: 0 ok, 1 verification negative, 2 usage or invalid input,
// 3 a resource budget was exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "veronese/cohomology.hpp"
#include "veronese/geometry.hpp"
#include "veronese/gluing.hpp"
#include "veronese/reproduce.hpp"
#include "veronese/sci.hpp"
#include "veronese/serialize.hpp"
#include "veronese/toric.hpp"

using namespace veronese;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct Config {
  unsigned n = 3, p = 2, h = 1;
  std::string format = "text";
  std::string output;
  unsigned threads = 1;

  std::uint64_t r = 0;
  std::string set = "certificate";
  std::string mode = "full";
  std::uint64_t budget = 10'000'000;
  std::size_t pair_limit = 2'000'000;
  std::optional<unsigned> k_max;
  std::optional<unsigned> s_cap;
  std::optional<std::uint64_t> seed;
  std::string input;
  std::string generator_set = "star";
  std::vector<Scalar> u, w;
  std::uint64_t q = 0, a = 0;
  unsigned i_max = 6;
  std::vector<int> only;
};

VeroneseParams params(const Config& c) {
  static bool warned = false;
  const auto ps = VeroneseParams::make(c.n, c.p, c.h);
  if (!warned)
    for (const auto& w : ps.warnings()) std::cerr << "warning: " << w << "\n";
  warned = true;
  return ps;
}

GeneratorSet generator_set(const std::string& s) {
  return s == "full" ? GeneratorSet::Full : GeneratorSet::Star;
}

// Text or JSON to stdout or --output.
class Emitter {
 public:
  explicit Emitter(const Config& c) : cfg_(c) {}

  bool json() const { return cfg_.format == "json"; }

  void put(const Json& j, const std::string& text) {
    const std::string body = json() ? j.dump(2) + "\n" : text;
    if (cfg_.output.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(cfg_.output);
      if (!f) throw std::runtime_error("cannot write " + cfg_.output);
      f << body;
    }
  }

 private:
  const Config& cfg_;
};

std::string join(const std::vector<Scalar>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

int cmd_enumerate(const Config& c) {
  const VeroneseRing ring(params(c));
  std::ostringstream text;
  text << "|T| = " << ring.num_vars() << "\n";
  for (VarId v = 0; v < ring.num_vars(); ++v) {
    text << std::setw(4) << v << "  " << ring.var_name(v) << "  (";
    const auto& a = ring.exponent(v).a;
    for (std::size_t i = 0; i < a.size(); ++i) text << (i ? "," : "") << a[i];
    text << ")\n";
  }
  Emitter(c).put(listing_to_json(ring), text.str());
  return kOk;
}

int cmd_generators(const Config& c) {
  const VeroneseRing ring(params(c));
  const auto gens = quadratic_generators(ring, generator_set(c.generator_set));
  std::ostringstream text;
  for (const auto& g : gens) text << format(g, ring) << "\n";
  Json j{{"schema_version", kSchemaVersion}, {"params", to_json(params(c))}, {"generators", binomials_to_json(gens, ring)}};
  Emitter(c).put(j, text.str());
  return kOk;
}

int cmd_rewrite(const Config& c) {
  Json in;
  if (c.input == "-") {
    in = Json::parse(std::cin);
  } else {
    std::ifstream f(c.input);
    if (!f) throw std::invalid_argument("cannot read " + c.input);
    in = Json::parse(f);
  }
  unsigned n = 0, q = 0;
  const TypeStarBinomial f = type_star_from_json(in, n, q);
  const VeroneseRing ring(n, q);
  const auto cert = rewrite(ring, f);
  std::ostringstream text;
  text << format(Binomial{cert.left, cert.right}, ring) << "\n";
  for (const auto& s : cert.steps) {
    text << (s.sign > 0 ? "  + " : "  - ") << ring.format(s.cofactor) << " * (" << format(s.quadratic, ring)
         << ")\n";
  }
  Emitter(c).put(to_json(cert, ring), text.str());
  return verify(ring, cert) ? kOk : kNegative;
}

int cmd_certificate(const Config& c) {
  const auto cert = build_certificate(params(c));
  const VeroneseRing ring(cert.params);
  std::ostringstream text;
  for (const auto& b : cert.binomials) text << format(b, ring) << "\n";
  Emitter(c).put(to_json(cert), text.str());
  return kOk;
}

int cmd_verify_sci(const Config& c) {
  auto cert = build_certificate(params(c));
  const VeroneseRing ring(cert.params);
  CharPOptions opts;
  opts.k_max = c.k_max;
  opts.generators = generator_set(c.generator_set);
  opts.groebner.pair_limit = c.pair_limit;
  const auto v = verify_char_p(cert, opts);
  std::ostringstream text;
  text << (v.success ? "verified" : "NOT verified") << " over F_" << c.p << "; Groebner basis size "
       << v.groebner_size << "\n";
  for (const auto& w : v.witnesses) text << "  k=" << w.k << "  " << format(w.generator, ring) << "\n";
  for (const auto& f : v.failures) text << "  " << f << "\n";
  Json j = to_json(v, ring);
  j["params"] = to_json(cert.params);
  Emitter(c).put(j, text.str());
  return v.success ? kOk : kNegative;
}

int cmd_points(const Config& c) {
  const VeroneseParams ps = params(c);
  const VeroneseRing ring(ps);
  const SurveyOptions opts{c.budget, c.threads};
  const SurveyMode mode = c.mode == "image-only" ? SurveyMode::ImageOnly : SurveyMode::FullEnumeration;
  const bool full_set = c.set == "full";
  const auto eqs = full_set ? quadratic_generators(ring) : build_certificate(ps).binomials;
  const auto report = point_survey(ring, eqs, c.r, mode, opts);

  std::ostringstream text;
  text << "F_" << report.r << ": points on V " << report.points_on_V << " (image " << report.image_points
       << ")";
  if (report.points_on_zero_set) text << ", zero set of " << c.set << " " << *report.points_on_zero_set;
  text << "\n";
  if (report.witness) text << "witness " << join(*report.witness) << "\n";
  Emitter(c).put(to_json(report), text.str());

  if (!report.cone_in_zero_set) return kNegative;
  if (mode == SurveyMode::ImageOnly) return kOk;
  const bool expect_witness = !full_set && c.r % ps.p != 0;
  return report.witness.has_value() == expect_witness ? kOk : kNegative;
}

int cmd_gluing(const Config& c) {
  const VeroneseParams ps = params(c);
  GluingOptions opts;
  opts.s_cap = c.s_cap;
  opts.peel_seed = c.seed;
  const auto search = completely_p_glued(veronese_semigroup(ps.n, ps.q), ps.p, ps.h, opts);
  if (!search.tree) {
    Emitter(c).put(Json{{"schema_version", kSchemaVersion}, {"failure", search.failure}},
                   "not completely " + std::to_string(ps.p) + "-glued: " + search.failure + "\n");
    return kNegative;
  }
  const bool valid = validate_tree(*search.tree, ps.p);
  std::ostringstream text;
  text << "completely " << ps.p << "-glued, depth " << search.tree->depth()
       << (valid ? ", witnesses revalidated" : ", REVALIDATION FAILED") << "\n";
  std::function<void(const GluingTree&, int)> walk = [&](const GluingTree& t, int indent) {
    text << std::string(indent, ' ') << t.gens.gens.size() << " generators";
    if (t.witness) {
      std::vector<Scalar> alpha(t.witness->alpha.begin(), t.witness->alpha.end());
      text << "  alpha " << join(alpha) << "  s " << t.witness->s;
    }
    text << "\n";
    for (const auto& ch : t.children) walk(ch, indent + 2);
  };
  walk(*search.tree, 0);
  Emitter(c).put(to_json(*search.tree), text.str());
  return valid ? kOk : kNegative;
}

int cmd_jacobian(const Config& c) {
  const VeroneseRing ring(params(c));
  std::vector<Scalar> w = c.w;
  if (!c.u.empty()) {
    if (c.u.size() != ring.n()) throw std::invalid_argument("--u needs n coordinates");
    w = ring.parametrize(c.u, PrimeField(c.r));
  }
  if (w.empty()) w.assign(ring.num_vars(), 0);
  const auto report = jacobian_rank(ring, quadratic_generators(ring), w, c.r);
  std::ostringstream text;
  text << "F_" << c.r << " point " << join(report.point) << "\nrank " << report.rank << " (codimension "
       << report.codimension << "), triangular minor " << (report.triangular_submatrix_ok ? "ok" : "not ok")
       << ", diagonal " << report.diagonal_value << "\n";
  Emitter(c).put(to_json(report), text.str());
  const bool origin = std::all_of(w.begin(), w.end(), [](Scalar x) { return x == 0; });
  if (origin) return report.rank == 0 ? kOk : kNegative;
  return report.rank >= report.codimension ? kOk : kNegative;
}

int cmd_fibers(const Config& c) {
  const VeroneseRing ring(params(c));
  const auto report = fiber_check(ring, c.r, c.u);
  std::ostringstream text;
  text << "fiber of " << join(report.u) << " over F_" << report.r << ":";
  for (const auto& v : report.fiber) text << " " << join(v);
  text << "\nroots of unity " << join(report.roots) << "; fiber " << (report.equal ? "=" : "!=") << " orbit\n";
  Emitter(c).put(to_json(report), text.str());
  return report.equal ? kOk : kNegative;
}

int cmd_cohomology(const Config& c) {
  const auto action = CyclicAction::make(c.q, c.a);
  const auto table = cohomology_orders(action, c.i_max);
  std::ostringstream text;
  text << "q=" << table.q << " a=" << table.a << "  Nm=" << table.norm << "  D=" << table.difference << "\n";
  for (std::size_t i = 0; i < table.orders.size(); ++i) text << "|H^" << i << "| = " << table.orders[i] << "\n";
  text << "invariant class " << invariant_element(action) << "\n";
  Emitter(c).put(to_json(table), text.str());
  const bool nonzero = std::all_of(table.orders.begin(), table.orders.end(), [](auto o) { return o > 1; });
  return nonzero ? kOk : kNegative;
}

int cmd_reproduce(const Config& c) {
  AcceptanceOptions opts;
  opts.threads = c.threads;
  std::vector<CriterionResult> results;
  if (c.only.empty()) {
    results = run_acceptance(opts);
  } else {
    for (int id : c.only) results.push_back(run_criterion(id, opts));
  }
  std::ostringstream text;
  Json rows = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    text << (r.passed() ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(30)
         << r.name << std::right << std::fixed << std::setprecision(3) << std::setw(8) << r.seconds << "s  "
         << r.detail << "\n";
    rows.push_back(Json{{"id", r.id},
                        {"name", r.name},
                        {"pass", r.passed()},
                        {"seconds", r.seconds},
                        {"limit_seconds", r.limit_seconds},
                        {"detail", r.detail}});
  }
  Emitter(c).put(Json{{"schema_version", kSchemaVersion}, {"criteria", rows}}, text.str());
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* t = std::getenv("VERONESE_THREADS")) cfg.threads = std::max(1, std::atoi(t));

  CLI::App app{"Veronese cone toolkit: toric ideal, gluings, char-p certificates, point surveys"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h is the exponent h
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", cfg.output, "Write output to a file");
  app.add_option("--threads", cfg.threads, "Worker threads for point enumeration")->check(CLI::PositiveNumber);

  auto with_params = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Number of parameters")->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p, "Characteristic p (prime)")->check(CLI::PositiveNumber);
    sub->add_option("--h", cfg.h, "Exponent h, q = p^h")->check(CLI::PositiveNumber);
    return sub;
  };

  std::map<CLI::App*, std::function<int(const Config&)>> handlers;

  auto* enumerate = with_params(app.add_subcommand("enumerate", "List T and the index tuples P"));
  handlers[enumerate] = cmd_enumerate;

  auto* generators = with_params(app.add_subcommand("generators", "Quadratic generating set of I(V)"));
  generators->add_option("--set", cfg.generator_set, "star or full")->check(CLI::IsMember({"star", "full"}));
  handlers[generators] = cmd_generators;

  auto* rw = app.add_subcommand("rewrite", "Certify a type-(*) binomial as a combination of quadrics");
  rw->add_option("--input", cfg.input, "JSON file with n, q (or p, h), blocks, sigma; - for stdin")->required();
  handlers[rw] = cmd_rewrite;

  auto* certificate = with_params(app.add_subcommand("certificate", "The N binomials of the char-p certificate"));
  handlers[certificate] = cmd_certificate;

  auto* verify_sci = with_params(app.add_subcommand("verify-sci", "Frobenius verification over F_p"));
  verify_sci->add_option("--k-max", cfg.k_max, "Largest Frobenius exponent tried");
  verify_sci->add_option("--pair-limit", cfg.pair_limit, "Buchberger pair budget")->check(CLI::PositiveNumber);
  verify_sci->add_option("--set", cfg.generator_set, "star or full")->check(CLI::IsMember({"star", "full"}));
  handlers[verify_sci] = cmd_verify_sci;

  auto* points = with_params(app.add_subcommand("points", "Point survey over F_r"));
  points->add_option("--r", cfg.r, "Prime field size")->required();
  points->add_option("--set", cfg.set, "certificate or full")->check(CLI::IsMember({"certificate", "full"}));
  points->add_option("--mode", cfg.mode, "full or image-only")->check(CLI::IsMember({"full", "image-only"}));
  points->add_option("--budget", cfg.budget, "Enumeration budget in points")->check(CLI::PositiveNumber);
  handlers[points] = cmd_points;

  auto* gl = with_params(app.add_subcommand("gluing", "Witness tree for complete p-gluing of N T"));
  gl->add_option("--s-cap", cfg.s_cap, "Largest exponent s tried per split");
  gl->add_option("--seed", cfg.seed, "Randomize the peel order");
  handlers[gl] = cmd_gluing;

  auto* jac = with_params(app.add_subcommand("jacobian", "Jacobian rank of the quadrics at a point"));
  jac->add_option("--r", cfg.r, "Prime field size")->required();
  jac->add_option("--u", cfg.u, "Parameter point u (comma separated); evaluates at phi(u)")->delimiter(',');
  jac->add_option("--w", cfg.w, "Coordinates of the point (comma separated)")->delimiter(',');
  handlers[jac] = cmd_jacobian;

  auto* fib = with_params(app.add_subcommand("fibers", "Fiber of the parametrization versus the roots-of-unity orbit"));
  fib->add_option("--r", cfg.r, "Prime field size, r = 1 mod q")->required();
  fib->add_option("--u", cfg.u, "Nonzero point u (comma separated)")->delimiter(',')->required();
  handlers[fib] = cmd_fibers;

  auto* coh = app.add_subcommand("cohomology", "Orders of H^i(G, Z/q) for a cyclic action");
  coh->add_option("--q", cfg.q, "Modulus q = p^h")->required();
  coh->add_option("--a", cfg.a, "Action multiplier")->required();
  coh->add_option("--i-max", cfg.i_max, "Largest degree");
  handlers[coh] = cmd_cohomology;

  auto* rep = app.add_subcommand("reproduce-paper", "Run the full acceptance matrix");
  rep->add_option("--only", cfg.only, "Criterion ids to run")->check(CLI::Range(1, kCriterionCount));
  handlers[rep] = cmd_reproduce;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn(cfg);
  } catch (const ResourceLimitError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

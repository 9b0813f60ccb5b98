#include "veronese/serialize.hpp"

#include <stdexcept>

namespace veronese {

namespace {

Json versioned(Json body) {
  body["schema_version"] = kSchemaVersion;
  return body;
}

std::string mode_name(SurveyMode m) {
  return m == SurveyMode::FullEnumeration ? "full" : "image-only";
}

SurveyMode mode_from(const std::string& s) {
  if (s == "full") return SurveyMode::FullEnumeration;
  if (s == "image-only") return SurveyMode::ImageOnly;
  throw std::invalid_argument("unknown survey mode '" + s + "'");
}

Json gens_to_json(const SemigroupGens& g) { return Json{{"dim", g.dim}, {"gens", g.gens}}; }

SemigroupGens gens_from_json(const Json& j) {
  return SemigroupGens{j.at("dim").get<unsigned>(), j.at("gens").get<std::vector<NatVector>>()};
}

Json tree_body(const GluingTree& t) {
  Json j = gens_to_json(t.gens);
  if (t.witness) {
    j["witness"] = Json{{"alpha", t.witness->alpha},
                        {"s", t.witness->s},
                        {"rep1", t.witness->rep1},
                        {"rep2", t.witness->rep2}};
  }
  j["children"] = Json::array();
  for (const auto& c : t.children) j["children"].push_back(tree_body(c));
  return j;
}

GluingTree tree_from_body(const Json& j) {
  GluingTree t;
  t.gens = gens_from_json(j);
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    t.witness = GluingWitness{w.at("alpha").get<NatVector>(), w.at("s").get<unsigned>(),
                              w.at("rep1").get<std::vector<std::uint64_t>>(),
                              w.at("rep2").get<std::vector<std::uint64_t>>()};
  }
  for (const auto& c : j.at("children")) t.children.push_back(tree_from_body(c));
  return t;
}

}  // namespace

void check_schema(const Json& j) {
  if (!j.is_object() || !j.contains("schema_version"))
    throw std::invalid_argument("document has no schema_version");
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version " + j.at("schema_version").dump());
}

Json to_json(const VeroneseParams& params) {
  return Json{{"n", params.n}, {"p", params.p}, {"h", params.h}, {"q", params.q}};
}

VeroneseParams params_from_json(const Json& j) {
  return VeroneseParams::make(j.at("n").get<unsigned>(), j.at("p").get<unsigned>(),
                              j.at("h").get<unsigned>());
}

Json listing_to_json(const VeroneseRing& ring) {
  Json t = Json::array();
  Json p = Json::array();
  for (VarId v = 0; v < ring.num_vars(); ++v) {
    t.push_back(Json{{"tuple", ring.tuple(v).idx}, {"exponent", ring.exponent(v).a}});
    p.push_back(ring.var_name(v));
  }
  return versioned(Json{{"n", ring.n()}, {"q", ring.q()}, {"size", ring.num_vars()}, {"T", t}, {"P", p}});
}

Json binomials_to_json(const std::vector<Binomial>& bs, const VeroneseRing& ring) {
  Json out = Json::array();
  for (const auto& b : bs) out.push_back(format(b, ring));
  return out;
}

std::vector<Binomial> binomials_from_json(const Json& j, const VeroneseRing& ring) {
  std::vector<Binomial> out;
  for (const auto& s : j) out.push_back(parse_binomial(s.get<std::string>(), ring));
  return out;
}

Json to_json(const TypeStarBinomial& f, unsigned n) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks) blocks.push_back(b.idx);
  const unsigned q = f.blocks.empty() ? 0 : static_cast<unsigned>(f.blocks.front().idx.size());
  return versioned(Json{{"n", n}, {"q", q}, {"blocks", blocks}, {"sigma", f.sigma}});
}

TypeStarBinomial type_star_from_json(const Json& j, unsigned& n, unsigned& q) {
  n = j.at("n").get<unsigned>();
  if (j.contains("q")) {
    q = j.at("q").get<unsigned>();
  } else {
    q = VeroneseParams::make(n, j.at("p").get<unsigned>(), j.at("h").get<unsigned>()).q;
  }
  TypeStarBinomial f;
  for (const auto& b : j.at("blocks")) f.blocks.push_back(IndexTuple{b.get<std::vector<unsigned>>()});
  f.sigma = j.at("sigma").get<std::vector<unsigned>>();
  return f;
}

Json to_json(const RewriteCertificate& cert, const VeroneseRing& ring) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    steps.push_back(Json{{"quadratic", format(s.quadratic, ring)},
                         {"cofactor", ring.format(s.cofactor)},
                         {"sign", s.sign}});
  }
  return versioned(Json{{"n", ring.n()},
                        {"q", ring.q()},
                        {"binomial", format(Binomial{cert.left, cert.right}, ring)},
                        {"steps", steps}});
}

RewriteCertificate rewrite_from_json(const Json& j, const VeroneseRing& ring) {
  check_schema(j);
  const Binomial f = parse_binomial(j.at("binomial").get<std::string>(), ring);
  RewriteCertificate cert{f.plus, f.minus, {}};
  for (const auto& s : j.at("steps")) {
    cert.steps.push_back(RewriteStep{parse_binomial(s.at("quadratic").get<std::string>(), ring),
                                     ring.parse_monomial(s.at("cofactor").get<std::string>()),
                                     s.at("sign").get<int>()});
  }
  return cert;
}

Json to_json(const SciCertificate& cert) {
  const VeroneseRing ring(cert.params);
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses)
    witnesses.push_back(Json{{"generator", format(w.generator, ring)}, {"k", w.k}});
  return versioned(Json{{"params", to_json(cert.params)},
                        {"binomials", binomials_to_json(cert.binomials, ring)},
                        {"witnesses", witnesses}});
}

SciCertificate certificate_from_json(const Json& j) {
  check_schema(j);
  SciCertificate cert;
  cert.params = params_from_json(j.at("params"));
  const VeroneseRing ring(cert.params);
  cert.binomials = binomials_from_json(j.at("binomials"), ring);
  for (const auto& w : j.at("witnesses")) {
    cert.witnesses.push_back(
        FrobeniusWitness{parse_binomial(w.at("generator").get<std::string>(), ring), w.at("k").get<unsigned>()});
  }
  return cert;
}

Json to_json(const CharPVerification& v, const VeroneseRing& ring) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses)
    witnesses.push_back(Json{{"generator", format(w.generator, ring)}, {"k", w.k}});
  return versioned(Json{{"success", v.success},
                        {"groebner_size", v.groebner_size},
                        {"witnesses", witnesses},
                        {"failures", v.failures}});
}

Json to_json(const GluingTree& tree) { return versioned(Json{{"depth", tree.depth()}, {"tree", tree_body(tree)}}); }

GluingTree gluing_tree_from_json(const Json& j) {
  check_schema(j);
  return tree_from_body(j.at("tree"));
}

Json to_json(const PointSetReport& report) {
  Json j{{"r", report.r},
         {"mode", mode_name(report.mode)},
         {"count_V", report.points_on_V},
         {"image_points", report.image_points},
         {"cone_in_zero_set", report.cone_in_zero_set}};
  if (report.points_on_zero_set) j["count_cert"] = *report.points_on_zero_set;
  if (report.witness) j["witness"] = *report.witness;
  return versioned(std::move(j));
}

PointSetReport point_report_from_json(const Json& j) {
  check_schema(j);
  PointSetReport r;
  r.r = j.at("r").get<std::uint64_t>();
  r.mode = mode_from(j.at("mode").get<std::string>());
  r.points_on_V = j.at("count_V").get<std::uint64_t>();
  r.image_points = j.at("image_points").get<std::uint64_t>();
  r.cone_in_zero_set = j.at("cone_in_zero_set").get<bool>();
  if (j.contains("count_cert")) r.points_on_zero_set = j.at("count_cert").get<std::uint64_t>();
  if (j.contains("witness")) r.witness = j.at("witness").get<std::vector<Scalar>>();
  return r;
}

Json to_json(const JacobianReport& report) {
  return versioned(Json{{"point", report.point},
                        {"r", report.r},
                        {"rank", report.rank},
                        {"codimension", report.codimension},
                        {"permutation", report.permutation},
                        {"triangular_submatrix_ok", report.triangular_submatrix_ok},
                        {"diagonal_value", report.diagonal_value}});
}

JacobianReport jacobian_report_from_json(const Json& j) {
  check_schema(j);
  JacobianReport r;
  r.point = j.at("point").get<std::vector<Scalar>>();
  r.r = j.at("r").get<std::uint64_t>();
  r.rank = j.at("rank").get<std::size_t>();
  r.codimension = j.at("codimension").get<std::size_t>();
  r.permutation = j.at("permutation").get<IndexPermutation>();
  r.triangular_submatrix_ok = j.at("triangular_submatrix_ok").get<bool>();
  r.diagonal_value = j.at("diagonal_value").get<Scalar>();
  return r;
}

Json to_json(const FiberReport& report) {
  return versioned(Json{{"r", report.r},
                        {"u", report.u},
                        {"base", report.base},
                        {"roots", report.roots},
                        {"fiber", report.fiber},
                        {"orbit", report.orbit},
                        {"equal", report.equal}});
}

FiberReport fiber_report_from_json(const Json& j) {
  check_schema(j);
  using Points = std::vector<std::vector<Scalar>>;
  FiberReport r;
  r.r = j.at("r").get<std::uint64_t>();
  r.u = j.at("u").get<std::vector<Scalar>>();
  r.base = j.at("base").get<std::vector<Scalar>>();
  r.roots = j.at("roots").get<std::vector<Scalar>>();
  r.fiber = j.at("fiber").get<Points>();
  r.orbit = j.at("orbit").get<Points>();
  r.equal = j.at("equal").get<bool>();
  return r;
}

Json to_json(const CohomologyTable& table) {
  Json orders = Json::object();
  for (std::size_t i = 0; i < table.orders.size(); ++i) orders[std::to_string(i)] = table.orders[i];
  return versioned(Json{{"q", table.q},
                        {"a", table.a},
                        {"norm", table.norm},
                        {"difference", table.difference},
                        {"orders", orders}});
}

CohomologyTable cohomology_from_json(const Json& j) {
  check_schema(j);
  CohomologyTable t;
  t.q = j.at("q").get<std::uint64_t>();
  t.a = j.at("a").get<std::uint64_t>();
  t.norm = j.at("norm").get<std::uint64_t>();
  t.difference = j.at("difference").get<std::uint64_t>();
  const Json& orders = j.at("orders");
  for (std::size_t i = 0; orders.contains(std::to_string(i)); ++i)
    t.orders.push_back(orders.at(std::to_string(i)).get<std::uint64_t>());
  return t;
}

}  // namespace veronese

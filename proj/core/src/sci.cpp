#include "veronese/sci.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_set>

namespace veronese {

SciCertificate build_certificate(const VeroneseParams& params) {
  const VeroneseRing ring(params);
  SciCertificate cert{params, {}, {}};
  for (VarId v = 0; v < ring.num_vars(); ++v) {
    if (ring.is_pure(v)) continue;
    std::vector<Monomial::Entry> rhs;
    const auto& a = ring.exponent(v).a;
    for (unsigned j = 1; j <= params.n; ++j)
      if (a[j - 1] > 0) rhs.emplace_back(ring.pure_var(j), a[j - 1]);
    cert.binomials.push_back(Binomial{Monomial::var(v, params.q), Monomial(std::move(rhs))});
  }
  return cert;
}

CharPVerification verify_char_p(SciCertificate& cert, const CharPOptions& options) {
  const VeroneseParams& params = cert.params;
  const VeroneseRing ring(params);
  const PrimeField field(params.p);
  const unsigned k_max = options.k_max.value_or(2 * params.h + 2);
  constexpr auto order = MonomialOrder::DegRevLex;

  CharPVerification out;
  if (cert.binomials.empty()) {
    // n = 1: I(V) = 0 and there is nothing to certify
    out.success = quadratic_generators(ring, options.generators).empty();
    if (!out.success) out.failures.push_back("empty certificate for a nonzero ideal");
    return out;
  }

  std::vector<Poly> gens;
  for (const auto& b : cert.binomials) gens.push_back(b.to_poly(field, order));
  const GroebnerBasis gb = buchberger(gens, order, options.groebner);
  out.groebner_size = gb.generators.size();

  for (const auto& g : quadratic_generators(ring, options.generators)) {
    const Poly base = g.to_poly(field, order);
    std::optional<unsigned> found;
    for (unsigned k = 0; k <= k_max; ++k) {
      if (ideal_contains(gb, frobenius_power(base, params.p, k))) {
        found = k;
        break;
      }
    }
    if (found)
      out.witnesses.push_back(FrobeniusWitness{g, *found});
    else
      out.failures.push_back("k_max exceeded for generator " + format(g, ring));
  }
  out.success = out.failures.empty();
  if (out.success) cert.witnesses = out.witnesses;
  return out;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t budget) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (acc > budget / base) {
      throw BudgetExceededError("point enumeration of " + std::to_string(base) + "^" +
                                std::to_string(exp) + " points exceeds budget " +
                                std::to_string(budget));
    }
    acc *= base;
  }
  return acc;
}

std::uint64_t encode(const std::vector<Scalar>& x, std::uint64_t r) {
  std::uint64_t code = 0;
  for (Scalar c : x) code = code * r + c;
  return code;
}

std::vector<Scalar> decode(std::uint64_t code, std::uint64_t r, std::size_t len) {
  std::vector<Scalar> x(len);
  for (std::size_t i = len; i-- > 0;) {
    x[i] = code % r;
    code /= r;
  }
  return x;
}

// Binomials flattened for fast evaluation over F_r.
struct CompiledBinomial {
  std::vector<Monomial::Entry> plus;
  std::vector<Monomial::Entry> minus;
};

class ZeroSetTester {
 public:
  ZeroSetTester(const std::vector<Binomial>& eqs, const PrimeField& field) : field_(field) {
    for (const auto& b : eqs) compiled_.push_back({b.plus.entries(), b.minus.entries()});
  }

  bool vanishes_at(const std::vector<Scalar>& x) const {
    for (const auto& b : compiled_)
      if (eval(b.plus, x) != eval(b.minus, x)) return false;
    return true;
  }

 private:
  Scalar eval(const std::vector<Monomial::Entry>& m, const std::vector<Scalar>& x) const {
    Scalar acc = 1;
    for (const auto& [v, e] : m) {
      acc = field_.mul(acc, field_.pow(x[v], e));
      if (acc == 0) break;
    }
    return acc;
  }

  PrimeField field_;
  std::vector<CompiledBinomial> compiled_;
};

struct ChunkResult {
  std::uint64_t zeros = 0;
  std::optional<std::uint64_t> first_witness;
};

ChunkResult scan_range(const ZeroSetTester& tester, const std::unordered_set<std::uint64_t>& on_v,
                       std::uint64_t r, std::size_t len, std::uint64_t begin, std::uint64_t end) {
  ChunkResult out;
  if (begin >= end) return out;
  std::vector<Scalar> x = decode(begin, r, len);
  for (std::uint64_t code = begin; code < end; ++code) {
    if (tester.vanishes_at(x)) {
      ++out.zeros;
      if (!out.first_witness && !on_v.contains(code)) out.first_witness = code;
    }
    for (std::size_t i = len; i-- > 0;) {  // odometer, last coordinate fastest
      if (++x[i] < r) break;
      x[i] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> cone_points(const VeroneseRing& ring, const PrimeField& field) {
  const std::uint64_t r = field.modulus();
  std::unordered_set<std::uint64_t> seen;
  std::vector<Scalar> u(ring.n(), 0);
  const std::uint64_t total = checked_power(r, ring.n(), std::numeric_limits<std::uint64_t>::max());
  for (std::uint64_t code = 0; code < total; ++code) {
    u = decode(code, r, ring.n());
    const auto x = ring.parametrize(u, field);
    for (Scalar lambda = 0; lambda < r; ++lambda) {
      std::vector<Scalar> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = field.mul(lambda, x[i]);
      seen.insert(encode(y, r));
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

PointSetReport point_survey(const VeroneseRing& ring, const std::vector<Binomial>& equations,
                            std::uint64_t r, SurveyMode mode, const SurveyOptions& options) {
  const PrimeField field(r);
  const std::size_t len = ring.num_vars();
  PointSetReport report;
  report.r = r;
  report.mode = mode;

  // point codes must fit below r^|T|; only a full enumeration walks all of them
  const std::uint64_t space = checked_power(r, len, mode == SurveyMode::FullEnumeration
                                                        ? options.budget
                                                        : std::numeric_limits<std::uint64_t>::max());
  checked_power(r, ring.n() + 1, options.budget);  // the cone scan visits r^(n+1) points

  std::unordered_set<std::uint64_t> image;
  {
    const std::uint64_t total = checked_power(r, ring.n(), options.budget);
    for (std::uint64_t code = 0; code < total; ++code)
      image.insert(encode(ring.parametrize(decode(code, r, ring.n()), field), r));
  }
  report.image_points = image.size();

  const auto cone = cone_points(ring, field);
  report.points_on_V = cone.size();
  const ZeroSetTester tester(equations, field);
  report.cone_in_zero_set = std::all_of(cone.begin(), cone.end(), [&](std::uint64_t code) {
    return tester.vanishes_at(decode(code, r, len));
  });
  if (mode == SurveyMode::ImageOnly) return report;

  const std::unordered_set<std::uint64_t> on_v(cone.begin(), cone.end());
  const unsigned workers = std::max(1u, options.threads);
  std::vector<ChunkResult> results(workers);
  const std::uint64_t chunk = (space + workers - 1) / workers;
  if (workers == 1) {
    results[0] = scan_range(tester, on_v, r, len, 0, space);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(space, w * chunk);
      const std::uint64_t end = std::min(space, begin + chunk);
      pool.emplace_back([&, w, begin, end] { results[w] = scan_range(tester, on_v, r, len, begin, end); });
    }
    for (auto& t : pool) t.join();
  }

  std::uint64_t zeros = 0;
  std::optional<std::uint64_t> witness;
  for (const auto& res : results) {
    zeros += res.zeros;
    if (res.first_witness && (!witness || *res.first_witness < *witness)) witness = res.first_witness;
  }
  report.points_on_zero_set = zeros;
  if (witness) report.witness = decode(*witness, r, len);
  return report;
}

PointSetReport point_survey(const SciCertificate& cert, std::uint64_t r, SurveyMode mode,
                            const SurveyOptions& options) {
  return point_survey(VeroneseRing(cert.params), cert.binomials, r, mode, options);
}

PointSetReport full_ideal_point_survey(const VeroneseParams& params, std::uint64_t r,
                                       const SurveyOptions& options) {
  const VeroneseRing ring(params);
  return point_survey(ring, quadratic_generators(ring), r, SurveyMode::FullEnumeration, options);
}

}  // namespace veronese

#pragma once

// The N-binomial certificate x_t^q - prod_j x_{j..j}^{a_j(t)}, its symbolic
// verification in characteristic p, and finite-field point surveys that
// corroborate it (r = p) or refute it (r != p).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veronese/combinatorics.hpp"
#include "veronese/groebner.hpp"
#include "veronese/toric.hpp"

namespace veronese {

struct FrobeniusWitness {
  Binomial generator;
  unsigned k = 0;  // generator^(p^k) lies in the certificate ideal
  bool operator==(const FrobeniusWitness&) const = default;
};

struct SciCertificate {
  VeroneseParams params;
  std::vector<Binomial> binomials;
  std::vector<FrobeniusWitness> witnesses;  // filled by verify_char_p
  bool operator==(const SciCertificate&) const = default;
};

/// One binomial per non-pure index tuple, in ascending tuple order.
SciCertificate build_certificate(const VeroneseParams& params);

struct CharPOptions {
  std::optional<unsigned> k_max;  // default 2h + 2
  GeneratorSet generators = GeneratorSet::Star;
  GroebnerOptions groebner;
};

struct CharPVerification {
  bool success = false;
  std::size_t groebner_size = 0;
  std::vector<FrobeniusWitness> witnesses;
  std::vector<std::string> failures;  // "k_max exceeded for generator ..."
};

/// Groebner basis of the certificate over F_p, then for each quadratic
/// generator g the least k <= k_max with g^(p^k) reducing to zero. On
/// success the witnesses are also stored in cert.
CharPVerification verify_char_p(SciCertificate& cert, const CharPOptions& options = {});

enum class SurveyMode { FullEnumeration, ImageOnly };

struct SurveyOptions {
  std::uint64_t budget = 10'000'000;  // max points of F_r^|T| enumerated
  unsigned threads = 1;
};

class BudgetExceededError : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

/// Counts over F_r. points_on_V counts the F_r-rational points of the cone,
/// i.e. the scalings lambda * phi(u); image_points counts phi(F_r^n) alone.
struct PointSetReport {
  std::uint64_t r = 0;
  SurveyMode mode = SurveyMode::FullEnumeration;
  std::uint64_t points_on_V = 0;
  std::uint64_t image_points = 0;
  std::optional<std::uint64_t> points_on_zero_set;  // FullEnumeration only
  bool cone_in_zero_set = false;
  std::optional<std::vector<Scalar>> witness;  // lex-first zero not on V
  bool operator==(const PointSetReport&) const = default;
};

PointSetReport point_survey(const VeroneseRing& ring, const std::vector<Binomial>& equations,
                            std::uint64_t r, SurveyMode mode, const SurveyOptions& options = {});

PointSetReport point_survey(const SciCertificate& cert, std::uint64_t r, SurveyMode mode,
                            const SurveyOptions& options = {});

/// point_survey against the quadratic generating set of I(V).
PointSetReport full_ideal_point_survey(const VeroneseParams& params, std::uint64_t r,
                                       const SurveyOptions& options = {});

/// F_r-points of the cone {lambda * phi(u)} encoded as base-r integers
/// (coordinate 0 most significant), sorted.
std::vector<std::uint64_t> cone_points(const VeroneseRing& ring, const PrimeField& field);

}  // namespace veronese

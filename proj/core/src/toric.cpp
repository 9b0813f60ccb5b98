#include "veronese/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace veronese {

int Binomial::normalize() {
  if (compare(plus, minus, MonomialOrder::Lex) < 0) {
    std::swap(plus, minus);
    return -1;
  }
  return 1;
}

Binomial Binomial::normalized() const {
  Binomial b = *this;
  b.normalize();
  return b;
}

Poly Binomial::to_poly(const PrimeField& field, MonomialOrder order) const {
  return Poly::binomial(field, order, plus, minus);
}

std::string format(const Binomial& b, const VeroneseRing& ring) {
  return ring.format(b.plus) + " - " + ring.format(b.minus);
}

Binomial parse_binomial(const std::string& text, const VeroneseRing& ring) {
  const auto cut = text.find(" - ");
  if (cut == std::string::npos)
    throw std::invalid_argument("cannot parse binomial '" + text + "': expected 'M - N'");
  return Binomial{ring.parse_monomial(text.substr(0, cut)), ring.parse_monomial(text.substr(cut + 3))};
}

bool binomial_in_ideal(const VeroneseRing& ring, const Monomial& m1, const Monomial& m2) {
  return ring.content_of(m1) == ring.content_of(m2);
}

std::vector<Binomial> quadratic_generators(const VeroneseRing& ring, GeneratorSet set) {
  // content classes of degree-2 monomials, in order of first appearance
  std::map<Content, std::size_t> class_of;
  std::vector<std::vector<Monomial>> classes;
  const auto nv = static_cast<VarId>(ring.num_vars());
  for (VarId i = 0; i < nv; ++i)
    for (VarId j = i; j < nv; ++j) {
      Monomial m = Monomial::var(i) * Monomial::var(j);
      const Content c = ring.content_of(m);
      auto [it, inserted] = class_of.try_emplace(c, classes.size());
      if (inserted) classes.emplace_back();
      classes[it->second].push_back(std::move(m));
    }

  std::vector<Binomial> out;
  std::set<Binomial> seen;
  auto emit = [&](const Monomial& a, const Monomial& b) {
    Binomial g = Binomial{a, b}.normalized();
    if (!g.is_zero() && seen.insert(g).second) out.push_back(std::move(g));
  };
  for (const auto& cls : classes) {
    if (set == GeneratorSet::Star) {
      for (std::size_t j = 1; j < cls.size(); ++j) emit(cls[0], cls[j]);
    } else {
      for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j) emit(cls[i], cls[j]);
    }
  }
  return out;
}

std::vector<Binomial> symmetric_two_minors(const VeroneseRing& ring) {
  if (ring.q() != 2) throw std::invalid_argument("symmetric_two_minors: ring must have q = 2");
  const unsigned n = ring.n();
  auto entry = [&](unsigned i, unsigned j) {
    return Monomial::var(ring.var(IndexTuple{{std::min(i, j), std::max(i, j)}}));
  };
  std::vector<Binomial> out;
  std::set<Binomial> seen;
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b)
      for (unsigned c = 1; c <= n; ++c)
        for (unsigned d = c + 1; d <= n; ++d) {
          Binomial minor{entry(a, c) * entry(b, d), entry(a, d) * entry(b, c)};
          if (minor.is_zero()) continue;
          minor.normalize();
          if (seen.insert(minor).second) out.push_back(std::move(minor));
        }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<unsigned> TypeStarBinomial::flattened() const {
  std::vector<unsigned> flat;
  for (const auto& b : blocks) flat.insert(flat.end(), b.idx.begin(), b.idx.end());
  return flat;
}

std::vector<IndexTuple> TypeStarBinomial::permuted_blocks() const {
  const auto flat = flattened();
  if (sigma.size() != flat.size()) throw std::invalid_argument("sigma has wrong length");
  const std::size_t q = blocks.empty() ? 0 : blocks.front().idx.size();
  std::vector<IndexTuple> out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    IndexTuple t;
    for (std::size_t i = 0; i < q; ++i) t.idx.push_back(flat.at(sigma[k * q + i] - 1));
    std::sort(t.idx.begin(), t.idx.end());
    out.push_back(std::move(t));
  }
  return out;
}

void TypeStarBinomial::validate(const VeroneseRing& ring) const {
  if (blocks.empty()) throw std::invalid_argument("type-(*) binomial needs at least one block");
  for (const auto& b : blocks)
    if (!is_valid_tuple(b, ring.n(), ring.q()))
      throw std::invalid_argument("block is not a weakly increasing q-tuple over 1..n");
  const std::size_t len = blocks.size() * ring.q();
  if (sigma.size() != len) throw std::invalid_argument("sigma must permute 1..s*q");
  std::vector<bool> hit(len, false);
  for (unsigned x : sigma) {
    if (x < 1 || x > len || hit[x - 1]) throw std::invalid_argument("sigma is not a permutation of 1..s*q");
    hit[x - 1] = true;
  }
}

Monomial TypeStarBinomial::left(const VeroneseRing& ring) const {
  Monomial m;
  for (const auto& b : blocks) m = m * Monomial::var(ring.var(b));
  return m;
}

Monomial TypeStarBinomial::right(const VeroneseRing& ring) const {
  Monomial m;
  for (const auto& b : permuted_blocks()) m = m * Monomial::var(ring.var(b));
  return m;
}

std::size_t misplaced_indices(const TypeStarBinomial& f) {
  const auto right = f.permuted_blocks();
  std::size_t count = 0;
  for (std::size_t k = 0; k < f.blocks.size(); ++k) {
    std::vector<unsigned> diff;
    std::set_difference(f.blocks[k].idx.begin(), f.blocks[k].idx.end(), right[k].idx.begin(),
                        right[k].idx.end(), std::back_inserter(diff));
    count += diff.size();
  }
  return count;
}

namespace {

using Counts = std::vector<int>;  // multiplicity of each index 1..n (0-based slot)

Counts counts_of(const IndexTuple& t, unsigned n) {
  Counts c(n, 0);
  for (unsigned i : t.idx) ++c[i - 1];
  return c;
}

IndexTuple tuple_from(const Counts& c) {
  IndexTuple t;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (int k = 0; k < c[j]; ++k) t.idx.push_back(static_cast<unsigned>(j + 1));
  return t;
}

}  // namespace

RewriteCertificate rewrite(const VeroneseRing& ring, const TypeStarBinomial& f) {
  f.validate(ring);
  const unsigned n = ring.n();

  RewriteCertificate cert;
  cert.left = f.left(ring);
  cert.right = f.right(ring);
  if (cert.left == cert.right) throw ZeroBinomialError("zero binomial: both sides coincide");

  // Split off blocks shared by both sides; they only contribute to cofactors.
  std::vector<IndexTuple> lhs = f.blocks;
  std::vector<IndexTuple> rhs = f.permuted_blocks();
  Monomial common;
  {
    std::vector<IndexTuple> lhs_rest;
    std::vector<bool> used(rhs.size(), false);
    for (const auto& b : lhs) {
      bool matched = false;
      for (std::size_t k = 0; k < rhs.size(); ++k) {
        if (!used[k] && rhs[k] == b) {
          used[k] = true;
          matched = true;
          common = common * Monomial::var(ring.var(b));
          break;
        }
      }
      if (!matched) lhs_rest.push_back(b);
    }
    std::vector<IndexTuple> rhs_rest;
    for (std::size_t k = 0; k < rhs.size(); ++k)
      if (!used[k]) rhs_rest.push_back(rhs[k]);
    lhs = std::move(lhs_rest);
    rhs = std::move(rhs_rest);
  }

  std::vector<Counts> current, target;
  for (const auto& b : lhs) current.push_back(counts_of(b, n));
  for (const auto& b : rhs) target.push_back(counts_of(b, n));
  const std::size_t m = current.size();

  auto cofactor_without = [&](std::size_t a, std::size_t b) {
    Monomial c = common;
    for (std::size_t k = 0; k < m; ++k)
      if (k != a && k != b) c = c * Monomial::var(ring.var(tuple_from(current[k])));
    return c;
  };

  for (;;) {
    std::size_t k = 0;
    while (k < m && current[k] == target[k]) ++k;
    if (k == m) break;

    unsigned v = 0, w = 0;
    while (current[k][v] <= target[k][v]) ++v;  // first index in excess
    while (current[k][w] >= target[k][w]) ++w;  // first index in deficit
    std::size_t j = 0;
    while (j == k || current[j][w] <= target[j][w]) ++j;  // exists: totals agree

    const Monomial before = Monomial::var(ring.var(tuple_from(current[k]))) *
                            Monomial::var(ring.var(tuple_from(current[j])));
    --current[k][v];
    ++current[k][w];
    --current[j][w];
    ++current[j][v];
    const Monomial after = Monomial::var(ring.var(tuple_from(current[k]))) *
                           Monomial::var(ring.var(tuple_from(current[j])));
    if (before == after) continue;  // the two blocks traded places

    RewriteStep step;
    step.quadratic = Binomial{before, after};
    step.sign = step.quadratic.normalize();
    step.cofactor = cofactor_without(k, j);
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

IntPoly expand(const RewriteCertificate& cert) {
  IntPoly sum;
  for (const auto& step : cert.steps)
    sum = sum + step.quadratic.to_int_poly().times(step.cofactor, step.sign);
  return sum;
}

bool verify(const VeroneseRing& ring, const RewriteCertificate& cert) {
  for (const auto& step : cert.steps) {
    if (step.quadratic.plus.degree() != 2 || step.quadratic.minus.degree() != 2) return false;
    if (step.quadratic.is_zero()) return false;
    if (!binomial_in_ideal(ring, step.quadratic.plus, step.quadratic.minus)) return false;
    if (step.sign != 1 && step.sign != -1) return false;
  }
  return expand(cert) == IntPoly::binomial(cert.left, cert.right);
}

}  // namespace veronese

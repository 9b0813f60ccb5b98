#include "veronese/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace veronese {

namespace {

Scalar eval_mod(const IntPoly& f, const std::vector<Scalar>& w, const PrimeField& field) {
  Scalar acc = 0;
  const auto r = static_cast<unsigned long>(field.modulus());
  for (const auto& [m, c] : f.terms()) {
    Integer cm = c % r;
    if (cm < 0) cm += r;
    Scalar v = cm.get_ui();
    for (const auto& [var, e] : m.entries()) v = field.mul(v, field.pow(w.at(var), e));
    acc = field.add(acc, v);
  }
  return acc;
}

}  // namespace

FieldMatrix jacobian_matrix(const VeroneseRing& ring, const std::vector<Binomial>& generators,
                            const std::vector<Scalar>& w, const PrimeField& field) {
  if (w.size() != ring.num_vars()) throw std::invalid_argument("jacobian: point has wrong dimension");
  FieldMatrix m(generators.size(), std::vector<Scalar>(ring.num_vars(), 0));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const IntPoly f = generators[i].to_int_poly();
    for (VarId v = 0; v < ring.num_vars(); ++v) m[i][v] = eval_mod(f.derivative(v), w, field);
  }
  return m;
}

std::size_t rank_mod(FieldMatrix m, const PrimeField& field) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Scalar inv = field.inv(m[rank][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Scalar factor = field.mul(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = field.sub(m[i][j], field.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

IndexTuple permute(const IndexPermutation& perm, const IndexTuple& t) {
  IndexTuple out;
  out.idx.reserve(t.idx.size());
  for (unsigned i : t.idx) out.idx.push_back(perm.at(i - 1) + 1);
  std::sort(out.idx.begin(), out.idx.end());
  return out;
}

std::vector<IndexTuple> reduced_index_set(const VeroneseRing& ring) {
  std::vector<IndexTuple> out;
  for (const auto& t : ring.listing().tuples) {
    // drop (1, ..., 1, k)
    const bool drop = std::all_of(t.idx.begin(), t.idx.end() - 1, [](unsigned i) { return i == 1; });
    if (!drop) out.push_back(t);
  }
  return out;
}

namespace {

IndexTuple ones_then(unsigned q, unsigned last) {
  IndexTuple t{std::vector<unsigned>(q, 1)};
  t.idx.back() = last;
  return t;
}

IndexTuple one_then_prefix(const IndexTuple& t) {
  IndexTuple s;
  s.idx.push_back(1);
  s.idx.insert(s.idx.end(), t.idx.begin(), t.idx.end() - 1);
  return s;
}

}  // namespace

std::vector<TriangularRowShape> triangular_shape(const VeroneseRing& ring) {
  const auto rows = reduced_index_set(ring);
  const std::set<IndexTuple> members(rows.begin(), rows.end());
  std::vector<TriangularRowShape> out;
  for (const auto& i : rows) {
    TriangularRowShape shape;
    shape.row = i;
    shape.second = one_then_prefix(i);
    shape.second_in_index_set = members.contains(shape.second);
    shape.second_lex_smaller = shape.second < i;
    out.push_back(std::move(shape));
  }
  return out;
}

std::vector<Binomial> triangular_generators(const VeroneseRing& ring, const IndexPermutation& perm) {
  const unsigned q = ring.q();
  auto x = [&](const IndexTuple& t) { return Monomial::var(ring.var(permute(perm, t))); };
  std::vector<Binomial> out;
  for (const auto& i : reduced_index_set(ring)) {
    out.push_back(Binomial{x(ones_then(q, 1)) * x(i), x(ones_then(q, i.idx.back())) * x(one_then_prefix(i))});
  }
  return out;
}

JacobianReport jacobian_rank(const VeroneseRing& ring, const std::vector<Binomial>& generators,
                             const std::vector<Scalar>& w, std::uint64_t r) {
  const PrimeField field(r);
  JacobianReport report;
  report.point = w;
  report.r = r;
  report.codimension = ring.num_vars() - ring.n();
  report.rank = rank_mod(jacobian_matrix(ring, generators, w, field), field);

  // move the first index with a nonzero pure coordinate into slot 1
  report.permutation.resize(ring.n());
  std::iota(report.permutation.begin(), report.permutation.end(), 0u);
  unsigned lead = 1;
  while (lead <= ring.n() && w.at(ring.pure_var(lead)) == 0) ++lead;
  if (lead > ring.n()) return report;  // origin of the cone: no usable minor
  std::swap(report.permutation[0], report.permutation[lead - 1]);

  report.diagonal_value = w.at(ring.pure_var(lead));
  const auto rows = triangular_generators(ring, report.permutation);
  const auto index_set = reduced_index_set(ring);
  const FieldMatrix full = jacobian_matrix(ring, rows, w, field);
  bool ok = true;
  for (std::size_t a = 0; a < index_set.size() && ok; ++a)
    for (std::size_t b = 0; b < index_set.size(); ++b) {
      const Scalar entry = full[a][ring.var(permute(report.permutation, index_set[b]))];
      if ((b > a && entry != 0) || (b == a && entry != report.diagonal_value)) {
        ok = false;
        break;
      }
    }
  report.triangular_submatrix_ok = ok;
  return report;
}

std::vector<Scalar> roots_of_unity(unsigned q, const PrimeField& field) {
  std::vector<Scalar> out;
  for (Scalar g = 1; g < field.modulus(); ++g)
    if (field.pow(g, q) == 1) out.push_back(g);
  return out;
}

std::vector<std::vector<Scalar>> fiber_of(const VeroneseRing& ring, const PrimeField& field,
                                          const std::vector<Scalar>& u) {
  const auto base = ring.parametrize(u, field);
  const std::uint64_t r = field.modulus();
  std::vector<std::vector<Scalar>> out;
  std::vector<Scalar> v(ring.n(), 0);
  for (;;) {
    if (ring.parametrize(v, field) == base) out.push_back(v);
    std::size_t i = ring.n();
    while (i > 0) {
      if (++v[i - 1] < r) break;
      v[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

FiberReport fiber_check(const VeroneseRing& ring, std::uint64_t r, const std::vector<Scalar>& u) {
  const PrimeField field(r);
  if (r % ring.q() != 1)
    throw RootOfUnityDeficiency("root-of-unity deficiency: r = " + std::to_string(r) +
                                " is not 1 mod q = " + std::to_string(ring.q()));
  if (u.size() != ring.n()) throw std::invalid_argument("fiber_check: point has wrong dimension");
  if (std::all_of(u.begin(), u.end(), [](Scalar c) { return c == 0; }))
    throw std::invalid_argument("fiber_check: u must be nonzero");

  FiberReport report;
  report.r = r;
  for (Scalar c : u) report.u.push_back(c % r);
  report.base = ring.parametrize(report.u, field);
  report.roots = roots_of_unity(ring.q(), field);
  report.fiber = fiber_of(ring, field, report.u);
  std::set<std::vector<Scalar>> orbit;
  for (Scalar g : report.roots) {
    std::vector<Scalar> gu = report.u;
    for (auto& c : gu) c = field.mul(g, c);
    orbit.insert(std::move(gu));
  }
  report.orbit.assign(orbit.begin(), orbit.end());
  report.equal = report.fiber == report.orbit;
  return report;
}

}  // namespace veronese

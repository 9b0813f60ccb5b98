#include "veronese/combinatorics.hpp"

#include <cctype>
#include <stdexcept>

namespace veronese {

VeroneseParams VeroneseParams::make(unsigned n, unsigned p, unsigned h, unsigned q_cap) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (h < 1) throw std::invalid_argument("h must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < h; ++i) {
    q *= p;
    if (q > q_cap)
      throw std::invalid_argument("q = p^h exceeds the configured cap " + std::to_string(q_cap));
  }
  return VeroneseParams{n, p, h, static_cast<unsigned>(q)};
}

std::vector<std::string> VeroneseParams::warnings() const {
  std::vector<std::string> out;
  if (n < 3)
    out.push_back("n = " + std::to_string(n) +
                  " < 3: the complete-intersection dichotomy is only established for n >= 3");
  return out;
}

unsigned ExponentVector::sum() const {
  unsigned s = 0;
  for (unsigned x : a) s += x;
  return s;
}

Content& Content::operator+=(const Content& other) {
  if (mult.size() < other.mult.size()) mult.resize(other.mult.size(), 0);
  for (std::size_t i = 0; i < other.mult.size(); ++i) mult[i] += other.mult[i];
  return *this;
}

std::uint64_t Content::total() const {
  std::uint64_t s = 0;
  for (auto x : mult) s += x;
  return s;
}

Integer binomial_coefficient(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

namespace {

void extend(unsigned n, unsigned q, std::vector<unsigned>& prefix, TListing& out) {
  if (prefix.size() == q) {
    IndexTuple t{prefix};
    out.exponents.push_back(exponent_of(t, n));
    out.tuples.push_back(std::move(t));
    return;
  }
  const unsigned start = prefix.empty() ? 1 : prefix.back();
  for (unsigned j = start; j <= n; ++j) {
    prefix.push_back(j);
    extend(n, q, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TListing enumerate_T(unsigned n, unsigned q) {
  if (n < 1) throw std::invalid_argument("enumerate_T: n must be at least 1");
  TListing out;
  std::vector<unsigned> prefix;
  prefix.reserve(q);
  extend(n, q, prefix, out);
  return out;
}

IndexTuple tuple_of(const ExponentVector& a) {
  IndexTuple t;
  for (std::size_t j = 0; j < a.a.size(); ++j)
    for (unsigned k = 0; k < a.a[j]; ++k) t.idx.push_back(static_cast<unsigned>(j + 1));
  return t;
}

ExponentVector exponent_of(const IndexTuple& t, unsigned n) {
  ExponentVector a{std::vector<unsigned>(n, 0)};
  unsigned prev = 1;
  for (unsigned i : t.idx) {
    if (i < 1 || i > n) throw std::invalid_argument("index tuple entry out of range 1..n");
    if (i < prev) throw std::invalid_argument("index tuple is not weakly increasing");
    prev = i;
    ++a.a[i - 1];
  }
  return a;
}

bool is_valid_tuple(const IndexTuple& t, unsigned n, unsigned q) {
  if (t.idx.size() != q) return false;
  unsigned prev = 1;
  for (unsigned i : t.idx) {
    if (i < prev || i > n) return false;
    prev = i;
  }
  return true;
}

std::string tuple_name(const IndexTuple& t, unsigned n) {
  std::string out = "x";
  if (n <= 9) {
    for (unsigned i : t.idx) out += static_cast<char>('0' + i);
    return out;
  }
  out += '{';
  for (std::size_t k = 0; k < t.idx.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(t.idx[k]);
  }
  out += '}';
  return out;
}

// ---------------------------------------------------------------------------

VeroneseRing::VeroneseRing(const VeroneseParams& params) : VeroneseRing(params.n, params.q) {}

VeroneseRing::VeroneseRing(unsigned n, unsigned q) : n_(n), q_(q), listing_(enumerate_T(n, q)) {
  for (std::size_t v = 0; v < listing_.tuples.size(); ++v)
    lookup_.emplace(tuple_name(listing_.tuples[v], n_), static_cast<VarId>(v));
}

std::optional<VarId> VeroneseRing::find_var(const IndexTuple& t) const {
  if (!is_valid_tuple(t, n_, q_)) return std::nullopt;
  auto it = lookup_.find(tuple_name(t, n_));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VarId VeroneseRing::var(const IndexTuple& t) const {
  auto v = find_var(t);
  if (!v) throw std::invalid_argument("not an index tuple of this ring");
  return *v;
}

VarId VeroneseRing::pure_var(unsigned j) const {
  if (j < 1 || j > n_) throw std::invalid_argument("pure_var: index out of range");
  return var(IndexTuple{std::vector<unsigned>(q_, j)});
}

bool VeroneseRing::is_pure(VarId v) const {
  const auto& t = tuple(v).idx;
  return t.front() == t.back();
}

std::string VeroneseRing::var_name(VarId v) const { return tuple_name(tuple(v), n_); }

VarNamer VeroneseRing::namer() const {
  return [this](VarId v) { return var_name(v); };
}

std::string VeroneseRing::format(const Monomial& m) const { return veronese::format(m, namer()); }

Monomial VeroneseRing::parse_monomial(std::string_view text) const {
  std::vector<Monomial::Entry> entries;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse monomial '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) fail("trailing input after 1");
    return {};
  }
  for (;;) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'x') fail("expected variable");
    const std::size_t start = pos++;
    if (pos < text.size() && text[pos] == '{') {
      while (pos < text.size() && text[pos] != '}') ++pos;
      if (pos == text.size()) fail("unterminated '{'");
      ++pos;
    } else {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    const std::string name(text.substr(start, pos - start));
    auto it = lookup_.find(name);
    if (it == lookup_.end()) fail("unknown variable " + name);
    Exponent e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      const std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (digits == pos) fail("missing exponent");
      e = static_cast<Exponent>(std::stoul(std::string(text.substr(digits, pos - digits))));
    }
    entries.emplace_back(it->second, e);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') fail("expected '*'");
    ++pos;
  }
  return Monomial(std::move(entries));
}

Content VeroneseRing::content_of(VarId v) const {
  const auto& a = exponent(v).a;
  return Content{std::vector<std::uint64_t>(a.begin(), a.end())};
}

Content VeroneseRing::content_of(const Monomial& m) const {
  Content c{std::vector<std::uint64_t>(n_, 0)};
  for (const auto& [v, e] : m.entries()) {
    if (v >= num_vars()) throw std::invalid_argument("content_of: unknown variable id");
    const auto& a = exponent(v).a;
    for (unsigned j = 0; j < n_; ++j) c.mult[j] += static_cast<std::uint64_t>(a[j]) * e;
  }
  return c;
}

std::vector<Scalar> VeroneseRing::parametrize(const std::vector<Scalar>& u,
                                              const PrimeField& field) const {
  if (u.size() != n_) throw std::invalid_argument("parametrize: point has wrong dimension");
  std::vector<Scalar> x(num_vars());
  for (std::size_t v = 0; v < num_vars(); ++v) {
    Scalar acc = 1;
    for (unsigned j = 0; j < n_; ++j) acc = field.mul(acc, field.pow(u[j], listing_.exponents[v].a[j]));
    x[v] = acc;
  }
  return x;
}

}  // namespace veronese

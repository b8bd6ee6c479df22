#include "qtoric/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace qtoric {

namespace {

std::vector<std::int64_t> zeros(std::size_t k) { return std::vector<std::int64_t>(k, 0); }

std::vector<std::int64_t> ones_then_zeros(std::size_t k, int count, std::int64_t value) {
  std::vector<std::int64_t> v(k, 0);
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = value;
  return v;
}

std::int64_t l1_norm(const std::vector<std::int64_t>& v) {
  std::int64_t total = 0;
  for (auto x : v) total += x < 0 ? -x : x;
  return total;
}

std::string vec_to_string(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

HomeoClass make_class(Family family, int n, int m, CharPair representative) {
  HomeoClass c;
  c.family = family;
  c.n = n;
  c.m = m;
  c.representative = std::move(representative);
  return c;
}

HomeoClass bott_class(const NormalForm& nf) {
  const int n = nf.n, m = nf.m;
  const bool a_zero = nf.nonzero_a() == 0;
  const bool b_zero = nf.nonzero_b() == 0;
  const CharPair product{n, m, zeros(static_cast<std::size_t>(m)), zeros(static_cast<std::size_t>(n))};
  if (a_zero && b_zero) return make_class(Family::Product, n, m, product);

  if (b_zero) {
    if (tilde_equiv(nf.a, zeros(nf.a.size()), n)) return make_class(Family::Product, n, m, product);
    if (m == 1 && tilde_equiv(nf.a, std::vector<std::int64_t>{1}, n)) {
      return make_class(Family::ConnSumMinus, n, m, CharPair{n, 1, {1}, zeros(static_cast<std::size_t>(n))});
    }
    HomeoClass c = make_class(Family::BottBaseN, n, m, nf.char_pair());
    c.twist = nf.a;
    return c;
  }

  if (tilde_equiv(nf.b, zeros(nf.b.size()), m)) return make_class(Family::Product, n, m, product);
  HomeoClass c = make_class(Family::BottBaseM, n, m, nf.char_pair());
  c.twist = nf.b;
  return c;
}

// Non-Bott data over Delta^n x Delta^1, n > 1: a = (1) with b entries 2, or
// a = (2) with b entries 1; the class depends on the parity of n and of the
// number of nonzero b_i.
HomeoClass base_circle_class(const NormalForm& nf) {
  const int n = nf.n;
  const auto nn = static_cast<std::size_t>(n);
  const bool collapses = n % 2 == 0 || nf.nonzero_b() % 2 == 0;
  if (nf.a.front() == 1) {
    if (collapses) return make_class(Family::ConnSumMinus, n, 1, CharPair{n, 1, {1}, zeros(nn)});
    return make_class(Family::ConnSumPlus, n, 1, CharPair{n, 1, {1}, ones_then_zeros(nn, 1, 2)});
  }
  if (collapses) {
    HomeoClass c = make_class(Family::BottBaseN, n, 1, CharPair{n, 1, {2}, zeros(nn)});
    c.twist = {2};
    return c;
  }
  return make_class(Family::SpecialM21, n, 1, CharPair{n, 1, {2}, ones_then_zeros(nn, 1, 1)});
}

HomeoClass nonbott_class(const NormalForm& nf) {
  const int n = nf.n, m = nf.m;
  int s = nf.nonzero_a();
  int r = nf.nonzero_b();
  if (s > (m + 1) / 2) s = m + 1 - s;
  if (r > (n + 1) / 2) r = n + 1 - r;
  const bool two_on_a = nf.orientation == Orientation::TwoOnA;
  CharPair rep{n, m, ones_then_zeros(static_cast<std::size_t>(m), s, two_on_a ? 2 : 1),
               ones_then_zeros(static_cast<std::size_t>(n), r, two_on_a ? 1 : 2)};
  HomeoClass c = make_class(Family::NonBott, n, m, std::move(rep));
  c.s = s;
  c.r = r;
  c.orientation = nf.orientation;
  return c;
}

bool is_bott_family(Family f) {
  return f == Family::Product || f == Family::BottBaseN || f == Family::BottBaseM || f == Family::ConnSumMinus;
}

std::string describe(const HomeoClass& c) {
  std::ostringstream os;
  os << family_name(c.family) << " over Delta^" << c.n << " x Delta^" << c.m;
  if (c.family == Family::BottBaseN || c.family == Family::BottBaseM) os << " twist " << vec_to_string(c.twist);
  if (c.family == Family::NonBott) {
    os << " (s=" << c.s << ", r=" << c.r << ", "
       << (c.orientation == Orientation::TwoOnA ? "2s on the m-side" : "2s on the n-side") << ")";
  }
  return os.str();
}

// All nondecreasing sequences of length k over [-bound, bound].
void multisets(std::size_t k, int bound, std::vector<std::int64_t>& prefix,
               std::vector<std::vector<std::int64_t>>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  const std::int64_t start = prefix.empty() ? -bound : prefix.back();
  for (std::int64_t v = start; v <= bound; ++v) {
    prefix.push_back(v);
    multisets(k, bound, prefix, out);
    prefix.pop_back();
  }
}

auto representative_key(const CharPair& cp) { return std::make_tuple(l1_norm(cp.a) + l1_norm(cp.b), cp); }

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Product: return "product";
    case Family::BottBaseN: return "bott-base-n";
    case Family::BottBaseM: return "bott-base-m";
    case Family::NonBott: return "non-bott";
    case Family::ConnSumPlus: return "connected-sum-plus";
    case Family::ConnSumMinus: return "connected-sum-minus";
    case Family::SpecialM21: return "special-m21";
  }
  return "unknown";
}

int HomeoClass::twist_order() const { return family == Family::BottBaseM ? m : n; }

bool tilde_equiv(std::span<const Integer> u, std::span<const Integer> u_prime, int ell) {
  if (u.size() != u_prime.size() || u.empty()) {
    throw std::invalid_argument("twist vectors must have the same positive length");
  }
  if (ell < 1) throw std::invalid_argument("truncation order must be at least 1");
  const Integer k_plus_1 = static_cast<long>(u.size() + 1);
  const Integer sum_u = std::accumulate(u.begin(), u.end(), Integer{0});
  const Integer sum_u_prime = std::accumulate(u_prime.begin(), u_prime.end(), Integer{0});
  for (int eps : {1, -1}) {
    const Integer forced = eps * sum_u - sum_u_prime;
    if (forced % k_plus_1 != 0) continue;
    if (ell == 1) return true;  // the x-coefficient is the whole identity
    if (trunc_product_identity(u, u_prime, eps, forced / k_plus_1, static_cast<std::size_t>(ell))) return true;
  }
  return false;
}

bool tilde_equiv(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& u_prime, int ell) {
  const IntVector lhs = to_integers(u);
  const IntVector rhs = to_integers(u_prime);
  return tilde_equiv(std::span<const Integer>(lhs), std::span<const Integer>(rhs), ell);
}

HomeoClass canonical_class(const CharPair& cp) {
  const NormalForm nf = normalize(cp);
  if (is_generalized_bott(nf)) return bott_class(nf);
  if (nf.n == 1) {
    // Over the square the only non-Bott class is CP^2 # CP^2.
    return make_class(Family::ConnSumPlus, 1, 1, CharPair{1, 1, {2}, {1}});
  }
  if (nf.m == 1) return base_circle_class(nf);
  return nonbott_class(nf);
}

bool same_class(const HomeoClass& lhs, const HomeoClass& rhs) {
  if (lhs.family != rhs.family || lhs.n != rhs.n || lhs.m != rhs.m) return false;
  switch (lhs.family) {
    case Family::BottBaseN:
    case Family::BottBaseM:
      return tilde_equiv(lhs.twist, rhs.twist, lhs.twist_order());
    case Family::NonBott:
      return lhs.s == rhs.s && lhs.r == rhs.r && lhs.orientation == rhs.orientation;
    default:
      return true;
  }
}

HomeoVerdict homeomorphic(const CharPair& cp1, const CharPair& cp2) {
  if (!validate(cp1) || !validate(cp2)) throw InvalidInput("homeomorphism test requires valid characteristic data");
  if (cp1 == cp2) return {true, "reflexive", "identical characteristic data"};

  const NormalForm nf1 = normalize(cp1);
  const NormalForm nf2 = normalize(cp2);
  if (nf1.n != nf2.n || nf1.m != nf2.m) {
    std::ostringstream os;
    os << "orbit polytopes Delta^" << nf1.n << " x Delta^" << nf1.m << " and Delta^" << nf2.n << " x Delta^"
       << nf2.m << " differ; products of simplices are cohomologically rigid";
    return {false, "polytope-rigidity", os.str()};
  }

  const HomeoClass c1 = canonical_class(cp1);
  const HomeoClass c2 = canonical_class(cp2);
  const bool same = same_class(c1, c2);
  const std::string detail = describe(c1) + (same ? " == " : " != ") + describe(c2);

  std::string rule;
  const bool nonbott1 = c1.family == Family::NonBott, nonbott2 = c2.family == Family::NonBott;
  if (nonbott1 && nonbott2) {
    rule = c1.orientation != c2.orientation ? "nonbott-orientation" : "nonbott-fold";
  } else if (nonbott1 || nonbott2) {
    rule = "bott-vs-nonbott";
  } else if (nf1.m == 1 && (!is_generalized_bott(nf1) || !is_generalized_bott(nf2) ||
                            !is_bott_family(c1.family) || !is_bott_family(c2.family))) {
    rule = "base-circle-class";
  } else if ((c1.family == Family::BottBaseN && c2.family == Family::BottBaseM) ||
             (c1.family == Family::BottBaseM && c2.family == Family::BottBaseN)) {
    rule = "bott-base-side";
  } else {
    rule = "bott-twist-equivalence";
  }
  return {same, rule, detail};
}

bool class_less(const HomeoClass& lhs, const HomeoClass& rhs) {
  auto key = [](const HomeoClass& c) {
    return std::make_tuple(static_cast<int>(c.family), c.n, c.m, static_cast<int>(c.orientation), c.s, c.r,
                           l1_norm(c.twist), c.twist, c.representative);
  };
  return key(lhs) < key(rhs);
}

std::vector<HomeoClass> enumerate_classes(int n, int m, int bound) {
  if (m < 1 || n < m) throw InvalidInput("enumeration requires n >= m >= 1");
  if (bound < 0) throw InvalidInput("entry bound must be nonnegative");

  std::vector<std::vector<std::int64_t>> a_choices, b_choices;
  std::vector<std::int64_t> prefix;
  multisets(static_cast<std::size_t>(m), bound, prefix, a_choices);
  multisets(static_cast<std::size_t>(n), bound, prefix, b_choices);

  std::vector<CharPair> candidates;
  for (const auto& a : a_choices) {
    for (const auto& b : b_choices) {
      CharPair cp{n, m, a, b};
      if (validate(cp)) candidates.push_back(std::move(cp));
    }
  }
  // Smallest members first, so each class keeps its simplest representative.
  std::sort(candidates.begin(), candidates.end(),
            [](const CharPair& x, const CharPair& y) { return representative_key(x) < representative_key(y); });

  std::vector<HomeoClass> classes;
  for (const auto& cp : candidates) {
    HomeoClass c = canonical_class(cp);
    const bool seen = std::any_of(classes.begin(), classes.end(),
                                  [&](const HomeoClass& known) { return same_class(known, c); });
    if (!seen) classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), class_less);
  return classes;
}

long count_nonbott(int n, int m) {
  if (m < 1 || n < m) throw InvalidInput("count requires n >= m >= 1");
  const long half_n = (n + 1) / 2, half_m = (m + 1) / 2;
  if (n == 1) return 1;
  if (m == 1) return n % 2 == 0 ? 0 : 2;
  if (n == m) return half_n * half_n;
  return 2 * half_n * half_m;
}

}  // namespace qtoric

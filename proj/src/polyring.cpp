#include "qtoric/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtoric {

HomogPoly::HomogPoly(std::size_t degree) : coeffs_(degree + 1) {}

HomogPoly::HomogPoly(IntVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a homogeneous polynomial needs degree + 1 coefficients");
}

HomogPoly HomogPoly::linear(const LinearForm& form) { return HomogPoly(IntVector{form.x1, form.x2}); }

HomogPoly HomogPoly::monomial(std::size_t degree, std::size_t x2_power) {
  if (x2_power > degree) throw std::invalid_argument("monomial exponent exceeds degree");
  HomogPoly p(degree);
  p.coeffs_[x2_power] = 1;
  return p;
}

bool HomogPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string HomogPoly::to_string() const {
  std::ostringstream os;
  const std::size_t d = degree();
  bool first = true;
  for (std::size_t i = 0; i <= d; ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const bool has_monomial = d > 0;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const Integer mag = abs(c);
    if (mag != 1 || !has_monomial) os << mag;
    const std::size_t e1 = d - i, e2 = i;
    if (e1 > 0) os << "x1" << (e1 > 1 ? "^" + std::to_string(e1) : "");
    if (e2 > 0) os << "x2" << (e2 > 1 ? "^" + std::to_string(e2) : "");
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

HomogPoly homog_mul(const HomogPoly& p, const HomogPoly& q) {
  IntVector out(p.degree() + q.degree() + 1);
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j <= q.degree(); ++j) out[i + j] += p.coeffs()[i] * q.coeffs()[j];
  }
  return HomogPoly(std::move(out));
}

HomogPoly linear_product(const LinearForm& lead, std::span<const LinearForm> factors) {
  HomogPoly out = HomogPoly::linear(lead);
  for (const auto& f : factors) out = homog_mul(out, HomogPoly::linear(f));
  return out;
}

HomogPoly substitute_linear(const HomogPoly& p, const IntMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("substitution matrix must be 2x2");
  const std::size_t d = p.degree();
  const HomogPoly image1 = HomogPoly::linear({g(0, 0), g(0, 1)});
  const HomogPoly image2 = HomogPoly::linear({g(1, 0), g(1, 1)});

  // powers1[k] = image1^k, powers2[k] = image2^k
  std::vector<HomogPoly> powers1{HomogPoly::one()}, powers2{HomogPoly::one()};
  for (std::size_t k = 1; k <= d; ++k) {
    powers1.push_back(homog_mul(powers1.back(), image1));
    powers2.push_back(homog_mul(powers2.back(), image2));
  }

  IntVector out(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    const HomogPoly term = homog_mul(powers1[d - i], powers2[i]);
    for (std::size_t k = 0; k <= d; ++k) out[k] += c * term.coeffs()[k];
  }
  return HomogPoly(std::move(out));
}

TruncPoly::TruncPoly(std::size_t trunc) : trunc_(trunc), coeffs_(trunc + 1) {}

TruncPoly::TruncPoly(std::size_t trunc, IntVector coeffs) : trunc_(trunc), coeffs_(std::move(coeffs)) {
  coeffs_.resize(trunc + 1);
}

TruncPoly TruncPoly::one(std::size_t trunc) {
  TruncPoly p(trunc);
  p.coeffs_[0] = 1;
  return p;
}

TruncPoly TruncPoly::one_plus(std::size_t trunc, const Integer& c) {
  TruncPoly p = one(trunc);
  if (trunc >= 1) p.coeffs_[1] = c;
  return p;
}

TruncPoly& TruncPoly::operator*=(const TruncPoly& other) {
  if (other.trunc_ != trunc_) throw DimensionMismatch("truncation orders differ");
  IntVector out(trunc_ + 1);
  for (std::size_t i = 0; i <= trunc_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= trunc_; ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

bool trunc_product_identity(std::span<const Integer> u, std::span<const Integer> u_prime, int eps,
                            const Integer& w, std::size_t ell) {
  if (u.size() != u_prime.size() || u.empty()) {
    throw std::invalid_argument("twist vectors must have the same positive length");
  }
  if (ell < 1) throw std::invalid_argument("truncation order must be at least 1");
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");

  TruncPoly lhs = TruncPoly::one(ell);
  for (const auto& ui : u) lhs *= TruncPoly::one_plus(ell, ui);

  TruncPoly rhs = TruncPoly::one_plus(ell, eps * w);
  for (const auto& ui : u_prime) rhs *= TruncPoly::one_plus(ell, eps * (ui + w));
  return lhs == rhs;
}

LatticeBasis ideal_degree_lattice(std::span<const HomogPoly> gens, std::size_t d) {
  std::vector<IntVector> shifts;
  for (const auto& g : gens) {
    if (g.degree() > d) continue;
    const std::size_t room = d - g.degree();
    // x1^(room - beta) x2^beta * g shifts coefficient indices by beta.
    for (std::size_t beta = 0; beta <= room; ++beta) {
      IntVector v(d + 1);
      std::copy(g.coeffs().begin(), g.coeffs().end(), v.begin() + static_cast<std::ptrdiff_t>(beta));
      shifts.push_back(std::move(v));
    }
  }
  return LatticeBasis::span_of(d + 1, shifts);
}

}  // namespace qtoric

#include "energylab/algebra.hpp"

#include <string>

namespace energylab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

// Remainder of `num` modulo the monic `div` over GF(p); both are full
// coefficient vectors, lowest degree first.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> num, const std::vector<std::uint32_t>& div,
                                    std::uint32_t p) {
  const std::size_t d = div.size() - 1;
  while (num.size() > d) {
    const std::uint32_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - d;
      for (std::size_t i = 0; i <= d; ++i) {
        const std::uint64_t sub = static_cast<std::uint64_t>(lead) * div[i] % p;
        num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + p - sub) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

std::uint32_t int_pow(std::uint32_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= base;
    if (r > FiniteField::kMaxOrder) throw AlgebraError("field order exceeds 2^16");
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
  const std::size_t d = coeffs.size();
  if (d == 0) return false;
  if (d == 1) return true;
  std::vector<std::uint32_t> f(coeffs.begin(), coeffs.end());
  f.push_back(1);
  for (std::size_t deg = 1; deg <= d / 2; ++deg) {
    // enumerate monic divisors x^deg + ...
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> div(deg + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < deg; ++i) {
        div[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      div[deg] = 1;
      const auto r = poly_rem(f, div, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned e) : p_(p), e_(e) {
  if (!is_prime(p)) throw AlgebraError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw AlgebraError("field extension degree must be >= 1");
  q_ = int_pow(p, e);
  if (e == 1) {
    modulus_ = {0};
  } else {
    // Candidate index read with c_0 as the most significant digit, so the
    // scan order is lexicographic from the constant term upward.
    for (std::uint32_t idx = 0; idx < q_ && modulus_.empty(); ++idx) {
      std::vector<std::uint32_t> c(e, 0);
      std::uint32_t t = idx;
      for (unsigned i = e; i-- > 0;) {
        c[i] = t % p;
        t /= p;
      }
      if (c[0] != 0 && is_irreducible(p, c)) modulus_ = std::move(c);
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
  }
  if (q_ <= 256) {
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        mul_table_[a * q_ + b] = static_cast<std::uint16_t>(mul_slow({a}, {b}).value);
  }
}

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= q_) throw AlgebraError("field element index out of range");
  return {index};
}

FieldElement FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) throw AlgebraError("too many coefficients for field element");
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw AlgebraError("coefficient out of range");
    v = v * p_ + coeffs[i];
  }
  return {v};
}

std::vector<std::uint32_t> FiniteField::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> c(e_);
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = a.value % p_;
    a.value /= p_;
  }
  return c;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (e_ == 1) return {(a.value + b.value) % p_};
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a.value % p_ + b.value % p_) % p_) * scale;
    a.value /= p_;
    b.value /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FiniteField::neg(FieldElement a) const {
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((p_ - a.value % p_) % p_) * scale;
    a.value /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FiniteField::mul_slow(FieldElement a, FieldElement b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i)
    for (unsigned j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
  std::vector<std::uint32_t> mod(modulus_);
  mod.push_back(1);
  return from_coeffs(poly_rem(std::move(prod), mod, p_));
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (!mul_table_.empty()) return {mul_table_[a.value * q_ + b.value]};
  return mul_slow(a, b);
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t exp) const {
  FieldElement r = one();
  while (exp) {
    if (exp & 1U) r = mul(r, a);
    a = mul(a, a);
    exp >>= 1U;
  }
  return r;
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.value == 0) throw AlgebraError("inverse of zero");
  return pow(a, q_ - 2);
}

FiniteField field_make(std::uint32_t p, unsigned e) { return FiniteField(p, e); }

FiniteField field_of_order(std::uint32_t q) {
  if (q < 2) throw AlgebraError("field order must be a prime power >= 2");
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned e = 0;
    std::uint32_t t = q;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (t != 1) throw AlgebraError(std::to_string(q) + " is not a prime power");
    return FiniteField(p, e);
  }
  throw AlgebraError(std::to_string(q) + " is not a prime power");
}

FieldVector normalize_projective(const FiniteField& field, FieldVector v) {
  for (const auto& c : v) {
    if (c.value != 0) {
      const auto s = field.inv(c);
      for (auto& x : v) x = field.mul(x, s);
      return v;
    }
  }
  throw AlgebraError("zero vector has no projective point");
}

std::vector<FieldVector> projective_points(const FiniteField& field, unsigned dim) {
  if (dim < 2) throw AlgebraError("projective_points: dim must be >= 2");
  const std::uint64_t q = field.order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < dim; ++i) {
    total *= q;
    if (total > (1ULL << 32)) throw AlgebraError("projective_points: point count overflow");
  }
  std::vector<FieldVector> points;
  points.reserve((total - 1) / (q - 1));
  // Leading 1 at position `lead`, zeros before, free coordinates after.
  // Descending `lead` gives lexicographic order of the coordinate tuples.
  for (unsigned lead = dim; lead-- > 0;) {
    const unsigned free = dim - lead - 1;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < free; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      FieldVector v(dim, field.zero());
      v[lead] = field.one();
      std::uint64_t t = idx;
      for (unsigned i = dim; i-- > lead + 1;) {
        v[i] = {static_cast<std::uint32_t>(t % q)};
        t /= q;
      }
      points.push_back(std::move(v));
    }
  }
  return points;
}

FieldElement symplectic_form(const FiniteField& field, std::span<const FieldElement> u,
                             std::span<const FieldElement> v) {
  if (u.size() != v.size()) throw AlgebraError("symplectic_form: dimension mismatch");
  if (u.size() % 2 != 0 || u.empty()) throw AlgebraError("symplectic_form: dimension must be even and positive");
  FieldElement acc = field.zero();
  for (std::size_t i = 0; i < u.size(); i += 2) {
    acc = field.add(acc, field.mul(u[i], v[i + 1]));
    acc = field.sub(acc, field.mul(u[i + 1], v[i]));
  }
  return acc;
}

FieldElement dot(const FiniteField& field, std::span<const FieldElement> u, std::span<const FieldElement> v) {
  if (u.size() != v.size()) throw AlgebraError("dot: dimension mismatch");
  FieldElement acc = field.zero();
  for (std::size_t i = 0; i < u.size(); ++i) acc = field.add(acc, field.mul(u[i], v[i]));
  return acc;
}

std::set<std::uint32_t> quadratic_residues(std::uint32_t p) {
  if (!is_prime(p)) throw AlgebraError(std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw AlgebraError("quadratic_residues: p must be 1 mod 4 for an undirected Paley graph");
  std::set<std::uint32_t> out;
  for (std::uint64_t x = 1; x < p; ++x) out.insert(static_cast<std::uint32_t>(x * x % p));
  return out;
}

}  // namespace energylab

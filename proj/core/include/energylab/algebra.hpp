#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace energylab {

class AlgebraError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Deterministic Miller-Rabin for the full 64-bit range.
[[nodiscard]] bool is_prime(std::uint64_t n);

/// An element of GF(p^e), encoded as its residue polynomial read in base p
/// (coefficient of x^i is digit i). The parent field is passed explicitly.
struct FieldElement {
  std::uint32_t value = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^e) with a fixed monic irreducible modulus.
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// e, coefficients compared from the constant term upward. For e = 1 the
/// modulus is x.
class FiniteField {
public:
  static constexpr std::uint32_t kMaxOrder = 1U << 16;

  FiniteField(std::uint32_t p, unsigned e);

  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] unsigned degree() const { return e_; }
  [[nodiscard]] std::uint32_t order() const { return q_; }
  /// Coefficients c_0..c_{e-1} of the monic modulus (leading 1 implied).
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  [[nodiscard]] FieldElement zero() const { return {0}; }
  [[nodiscard]] FieldElement one() const { return {1}; }
  [[nodiscard]] FieldElement element(std::uint32_t index) const;
  [[nodiscard]] FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  [[nodiscard]] std::vector<std::uint32_t> coeffs(FieldElement a) const;

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement neg(FieldElement a) const;
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement pow(FieldElement a, std::uint64_t exp) const;
  /// Multiplicative inverse; throws on zero.
  [[nodiscard]] FieldElement inv(FieldElement a) const;

private:
  [[nodiscard]] FieldElement mul_slow(FieldElement a, FieldElement b) const;

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> mul_table_;  // populated for small q
};

/// Convenience for building fields from a prime power q.
[[nodiscard]] FiniteField field_make(std::uint32_t p, unsigned e);
[[nodiscard]] FiniteField field_of_order(std::uint32_t q);

/// Monic polynomial irreducibility over GF(p) by trial division.
/// `coeffs` are c_0..c_{d-1} of x^d + ... + c_0.
[[nodiscard]] bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs);

using FieldVector = std::vector<FieldElement>;

/// Normalized representatives of the points of PG(dim-1, q): nonzero vectors
/// of length dim whose first nonzero coordinate is 1, in lexicographic order
/// of their coordinate indices.
[[nodiscard]] std::vector<FieldVector> projective_points(const FiniteField& field, unsigned dim);

/// Scales v so that its first nonzero coordinate is 1.
[[nodiscard]] FieldVector normalize_projective(const FiniteField& field, FieldVector v);

/// Standard alternating form: sum over blocks of u_{2i} v_{2i+1} - u_{2i+1} v_{2i}.
[[nodiscard]] FieldElement symplectic_form(const FiniteField& field, std::span<const FieldElement> u,
                                           std::span<const FieldElement> v);

[[nodiscard]] FieldElement dot(const FiniteField& field, std::span<const FieldElement> u,
                               std::span<const FieldElement> v);

/// Nonzero squares mod p. Requires p prime with p = 1 mod 4.
[[nodiscard]] std::set<std::uint32_t> quadratic_residues(std::uint32_t p);

}  // namespace energylab

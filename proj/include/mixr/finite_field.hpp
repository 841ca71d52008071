#pragma once

// Exact arithmetic in small Galois fields.
//
// Elements are stored as integer codes: an element of an extension of degree k
// over a base field of size B is the polynomial c_0 + c_1 x + ... + c_{k-1} x^{k-1}
// in the generator x, encoded as sum c_i * B^i. The base is either the prime
// field GF(p) or another FieldTable, so GF(q^3) can be viewed as a
// three-dimensional vector space over GF(q) for any prime power q.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace mixr {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;

    /// Validates p prime, k >= 1 and p^k <= cap.
    static PrimePower make(std::uint32_t p, std::uint32_t k, std::uint64_t cap = kDefaultFieldCap);
    /// Decomposes q into p^k; throws InputError if q is not a prime power.
    static PrimePower from_order(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap);

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Coefficient view of an element: coeffs[i] multiplies the i-th power of the
/// generator. Coefficients are codes of the base field (residues mod p when the
/// base is prime).
struct FieldElement {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FieldTable {
public:
    using Code = std::uint32_t;

    /// GF(p^k) over GF(p) with the lexicographically smallest monic primitive
    /// modulus (coefficients compared from the constant term upwards).
    static FieldTable build(std::uint32_t p, std::uint32_t k, std::uint64_t cap = kDefaultFieldCap);

    /// Degree-k extension of `base` using the smallest primitive monic modulus
    /// over `base`, same ordering as build().
    static FieldTable extend(std::shared_ptr<const FieldTable> base, std::uint32_t k,
                             std::uint64_t cap = kDefaultFieldCap);

    /// GF(p^k) over GF(p) with an explicit monic modulus, given low-degree
    /// first without the leading 1. Throws if the generator is not primitive.
    static FieldTable with_modulus(std::uint32_t p, std::span<const std::uint32_t> modulus_low,
                                   std::uint64_t cap = kDefaultFieldCap);

    [[nodiscard]] const PrimePower& prime_power() const noexcept { return prime_power_; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return prime_power_.p; }
    /// Number of elements.
    [[nodiscard]] std::uint32_t size() const noexcept { return size_; }
    /// Degree over the base field.
    [[nodiscard]] std::uint32_t degree() const noexcept { return degree_; }
    [[nodiscard]] std::uint32_t base_size() const noexcept { return base_size_; }
    [[nodiscard]] const FieldTable* base() const noexcept { return base_.get(); }
    /// Monic modulus, low degree first, including the leading 1 (length degree()+1).
    [[nodiscard]] const std::vector<Code>& modulus() const noexcept { return modulus_; }

    [[nodiscard]] static constexpr Code zero() noexcept { return 0; }
    [[nodiscard]] static constexpr Code one() noexcept { return 1; }
    [[nodiscard]] Code alpha() const noexcept { return exp_[1 % exp_.size()]; }

    [[nodiscard]] Code add(Code a, Code b) const;
    [[nodiscard]] Code sub(Code a, Code b) const;
    [[nodiscard]] Code neg(Code a) const { return sub(0, a); }
    [[nodiscard]] Code mul(Code a, Code b) const;
    [[nodiscard]] Code inv(Code a) const;
    [[nodiscard]] Code pow(Code a, std::int64_t e) const;

    /// alpha^i; negative exponents are reduced modulo size()-1.
    [[nodiscard]] Code power(std::int64_t i) const;
    /// Discrete logarithm to base alpha; throws for zero.
    [[nodiscard]] std::uint32_t log(Code a) const;
    /// Least t >= 1 with a^t = 1; throws for zero.
    [[nodiscard]] std::uint32_t element_order(Code a) const;

    [[nodiscard]] FieldElement element(Code a) const;
    [[nodiscard]] Code code(const FieldElement& e) const;

private:
    FieldTable() = default;
    static FieldTable search_primitive(std::shared_ptr<const FieldTable> base, std::uint32_t p,
                                       std::uint32_t k, std::uint64_t cap);
    void init_tables();

    [[nodiscard]] Code base_add(Code a, Code b) const;
    [[nodiscard]] Code base_sub(Code a, Code b) const;
    [[nodiscard]] Code base_mul(Code a, Code b) const;

    PrimePower prime_power_;
    std::shared_ptr<const FieldTable> base_;  // null: prime field GF(p)
    std::uint32_t base_size_ = 0;
    std::uint32_t degree_ = 0;
    std::uint32_t size_ = 0;
    std::vector<Code> modulus_;
    std::vector<Code> exp_;  // exp_[i] = alpha^i, i < size_-1
    std::vector<std::uint32_t> log_;
};

}  // namespace mixr

#include "mixr/finite_field.hpp"

#include <numeric>
#include <string>

#include "mixr/error.hpp"

namespace mixr {

namespace {

using Code = FieldTable::Code;
using Poly = std::vector<Code>;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Arithmetic of the base field, either a FieldTable or the prime field GF(p).
struct BaseOps {
    const FieldTable* table;
    std::uint32_t p;

    [[nodiscard]] std::uint32_t size() const { return table ? table->size() : p; }
    [[nodiscard]] Code add(Code a, Code b) const { return table ? table->add(a, b) : (a + b) % p; }
    [[nodiscard]] Code sub(Code a, Code b) const { return table ? table->sub(a, b) : (a + p - b) % p; }
    [[nodiscard]] Code mul(Code a, Code b) const {
        return table ? table->mul(a, b)
                     : static_cast<Code>((std::uint64_t{a} * b) % p);
    }
};

// Product of two reduced polynomials modulo the monic `mod` (length k+1).
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, const BaseOps& ops) {
    const std::size_t k = mod.size() - 1;
    Poly r(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
    }
    for (std::size_t d = 2 * k; d-- > k;) {
        const Code c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        for (std::size_t i = 0; i < k; ++i) r[d - k + i] = ops.sub(r[d - k + i], ops.mul(c, mod[i]));
    }
    r.resize(k);
    return r;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod, const BaseOps& ops) {
    Poly result(mod.size() - 1, 0);
    result[0] = 1;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, mod, ops);
        base = mulmod(base, base, mod, ops);
        e >>= 1;
    }
    return result;
}

// The residue class of x modulo `mod`.
Poly generator(const Poly& mod, const BaseOps& ops) {
    const std::size_t k = mod.size() - 1;
    Poly x(k, 0);
    if (k >= 2) {
        x[1] = 1;
    } else {
        x[0] = ops.sub(0, mod[0]);
    }
    return x;
}

bool is_one(const Poly& a) {
    if (a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

// The generator is primitive iff its order is exactly `group_order`. A unit
// group of that size forces the quotient ring to be a field, so this also
// certifies irreducibility.
bool generator_is_primitive(const Poly& mod, const BaseOps& ops, std::uint64_t group_order,
                            const std::vector<std::uint64_t>& factors) {
    const Poly x = generator(mod, ops);
    if (!is_one(powmod(x, group_order, mod, ops))) return false;
    for (const auto r : factors)
        if (is_one(powmod(x, group_order / r, mod, ops))) return false;
    return true;
}

bool has_root(const Poly& mod, const BaseOps& ops) {
    const std::uint32_t b = ops.size();
    for (Code v = 0; v < b; ++v) {
        Code acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) acc = ops.add(ops.mul(acc, v), mod[i]);
        if (acc == 0) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower PrimePower::make(std::uint32_t p, std::uint32_t k, std::uint64_t cap) {
    if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw InputError("field degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > cap) throw InputError("field size " + std::to_string(p) + "^" + std::to_string(k) +
                                      " exceeds the cap of " + std::to_string(cap));
    }
    return {p, k, static_cast<std::uint32_t>(q)};
}

PrimePower PrimePower::from_order(std::uint64_t q, std::uint64_t cap) {
    if (q < 2) throw InputError(std::to_string(q) + " is not a prime power");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    std::uint64_t rest = q;
    std::uint32_t k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw InputError(std::to_string(q) + " is not a prime power");
    return make(static_cast<std::uint32_t>(p), k, cap);
}

FieldTable FieldTable::build(std::uint32_t p, std::uint32_t k, std::uint64_t cap) {
    const auto pp = PrimePower::make(p, k, cap);
    return search_primitive(nullptr, pp.p, pp.k, cap);
}

FieldTable FieldTable::extend(std::shared_ptr<const FieldTable> base, std::uint32_t k,
                              std::uint64_t cap) {
    if (!base) throw InputError("extension requires a base field");
    if (k == 0) throw InputError("field degree must be at least 1");
    const auto& bp = base->prime_power();
    PrimePower::make(bp.p, bp.k * k, cap);  // cap check
    return search_primitive(std::move(base), bp.p, k, cap);
}

FieldTable FieldTable::search_primitive(std::shared_ptr<const FieldTable> base, std::uint32_t p,
                                        std::uint32_t k, std::uint64_t cap) {
    const BaseOps ops{base.get(), p};
    const std::uint32_t b = ops.size();
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) order *= b;
    if (order > cap) throw InputError("field size exceeds the cap of " + std::to_string(cap));
    const std::uint64_t group_order = order - 1;
    const auto factors = prime_factors(group_order);

    // Odometer over (c_0, ..., c_{k-1}) with c_0 most significant, so candidates
    // come out in lexicographic order of their low-degree-first coefficient list.
    Poly mod(k + 1, 0);
    mod[k] = 1;
    mod[0] = 1;  // c_0 = 0 makes x a zero divisor
    while (true) {
        const bool root_free = k == 1 || !has_root(mod, ops);
        if (root_free && generator_is_primitive(mod, ops, group_order, factors)) break;
        std::size_t pos = k;
        while (pos-- > 0) {
            if (++mod[pos] < b) break;
            mod[pos] = 0;
            if (pos == 0) throw std::logic_error("no primitive polynomial found");
        }
    }

    FieldTable t;
    t.base_ = std::move(base);
    t.base_size_ = b;
    t.degree_ = k;
    t.size_ = static_cast<std::uint32_t>(order);
    t.prime_power_ = {p, t.base_ ? t.base_->prime_power().k * k : k, t.size_};
    t.modulus_ = std::move(mod);
    t.init_tables();
    return t;
}

FieldTable FieldTable::with_modulus(std::uint32_t p, std::span<const std::uint32_t> modulus_low,
                                    std::uint64_t cap) {
    const auto pp = PrimePower::make(p, static_cast<std::uint32_t>(modulus_low.size()), cap);
    const BaseOps ops{nullptr, p};
    Poly mod(modulus_low.begin(), modulus_low.end());
    for (auto c : mod)
        if (c >= p) throw InputError("modulus coefficient out of range");
    mod.push_back(1);
    const std::uint64_t group_order = pp.q - 1;
    if (!generator_is_primitive(mod, ops, group_order, prime_factors(group_order)))
        throw InputError("modulus is not a primitive polynomial");
    FieldTable t;
    t.prime_power_ = pp;
    t.base_size_ = p;
    t.degree_ = pp.k;
    t.size_ = pp.q;
    t.modulus_ = std::move(mod);
    t.init_tables();
    return t;
}

void FieldTable::init_tables() {
    const BaseOps ops{base_.get(), prime_power_.p};
    const std::uint32_t group = size_ - 1;
    exp_.assign(group == 0 ? 1 : group, 0);
    log_.assign(size_, 0);
    const Poly x = generator(modulus_, ops);
    Poly cur(degree_, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i < exp_.size(); ++i) {
        Code c = 0;
        for (std::size_t d = degree_; d-- > 0;) c = c * base_size_ + cur[d];
        exp_[i] = c;
        log_[c] = i;
        cur = mulmod(cur, x, modulus_, ops);
    }
}

Code FieldTable::base_add(Code a, Code b) const {
    return base_ ? base_->add(a, b) : (a + b) % prime_power_.p;
}

Code FieldTable::base_sub(Code a, Code b) const {
    return base_ ? base_->sub(a, b) : (a + prime_power_.p - b) % prime_power_.p;
}

Code FieldTable::base_mul(Code a, Code b) const {
    return base_ ? base_->mul(a, b)
                 : static_cast<Code>((std::uint64_t{a} * b) % prime_power_.p);
}

Code FieldTable::add(Code a, Code b) const {
    Code out = 0;
    Code scale = 1;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        out += base_add(a % base_size_, b % base_size_) * scale;
        a /= base_size_;
        b /= base_size_;
        scale *= base_size_;
    }
    return out;
}

Code FieldTable::sub(Code a, Code b) const {
    Code out = 0;
    Code scale = 1;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        out += base_sub(a % base_size_, b % base_size_) * scale;
        a /= base_size_;
        b /= base_size_;
        scale *= base_size_;
    }
    return out;
}

Code FieldTable::mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    return exp_[s % exp_.size()];
}

Code FieldTable::inv(Code a) const {
    if (a == 0) throw InputError("zero has no inverse");
    const std::uint32_t group = static_cast<std::uint32_t>(exp_.size());
    return exp_[(group - log_[a]) % group];
}

Code FieldTable::pow(Code a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw InputError("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t group = static_cast<std::int64_t>(exp_.size());
    std::int64_t r = ((e % group) * static_cast<std::int64_t>(log_[a])) % group;
    if (r < 0) r += group;
    return exp_[static_cast<std::size_t>(r)];
}

Code FieldTable::power(std::int64_t i) const {
    const std::int64_t group = static_cast<std::int64_t>(exp_.size());
    std::int64_t r = i % group;
    if (r < 0) r += group;
    return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t FieldTable::log(Code a) const {
    if (a == 0 || a >= size_) throw InputError("logarithm of zero or out-of-range element");
    return log_[a];
}

std::uint32_t FieldTable::element_order(Code a) const {
    const std::uint32_t l = log(a);
    const std::uint32_t group = size_ - 1;
    return group / std::gcd(group, l);
}

FieldElement FieldTable::element(Code a) const {
    FieldElement e;
    e.coeffs.resize(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) {
        e.coeffs[i] = a % base_size_;
        a /= base_size_;
    }
    return e;
}

Code FieldTable::code(const FieldElement& e) const {
    if (e.coeffs.size() != degree_) throw InputError("element has the wrong number of coefficients");
    Code c = 0;
    for (std::size_t d = degree_; d-- > 0;) {
        if (e.coeffs[d] >= base_size_) throw InputError("coefficient out of range");
        c = c * base_size_ + e.coeffs[d];
    }
    return c;
}

}  // namespace mixr

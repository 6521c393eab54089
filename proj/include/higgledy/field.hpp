/**
 * @file field.hpp
 * @brief Exact arithmetic in GF(p^k) with deterministic element enumeration.
 *
 * A Field is a lightweight handle (shared immutable state) for a concrete
 * finite field GF(q), q = p^k.  Elements are Scalar values holding the
 * enumeration index of the element: the coefficient vector of the element
 * in the power basis of the modulus root, read as a base-p integer
 * (little-endian, so index 0 is 0 and index 1 is 1; for prime fields the
 * index is the residue itself).
 *
 * Extension fields are constructed over the lexicographically smallest
 * monic irreducible modulus (coefficients compared low-degree first), so
 * element coordinates are reproducible across runs and machines.
 *
 * All operations are pure functions on immutable values; a Field handle
 * may be shared freely across threads.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace higgledy {

/// Thrown when an operation would exceed a configured enumeration budget.
/// Carries a human-readable estimate of the required work.
class BudgetError : public std::runtime_error {
   public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A field element, identified by its enumeration index.
/// Scalars are value-semantic, ordered and hashable; arithmetic goes
/// through the owning Field.
struct Scalar {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Scalar, Scalar) = default;
    friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Dense little-endian polynomials over Z_p with plain integer coefficients.
// Only used while constructing extension fields.
using ZpPoly = std::vector<std::uint32_t>;

inline void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    zp_trim(out);
    return out;
}

// Remainder of a modulo the monic polynomial m.
inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, std::uint64_t p) {
    zp_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = (lead * m[i]) % p;
            std::uint64_t cur = a[shift + i];
            a[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
        zp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t dg = 1; 2 * dg <= k; ++dg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t n = 0; n < count; ++n) {
            ZpPoly div(dg + 1, 0);
            std::uint64_t rem = n;
            for (std::size_t i = 0; i < dg; ++i) {
                div[i] = static_cast<std::uint32_t>(rem % p);
                rem /= p;
            }
            div[dg] = 1;
            if (zp_mod(f, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field {
   public:
    /// Largest supported prime field (direct modular arithmetic).
    static constexpr std::uint64_t kMaxPrimeSize = 1u << 20;
    /// Largest supported extension field (lookup-table arithmetic).
    static constexpr std::uint64_t kMaxExtensionSize = 1024;

    Field() = default;

    /// GF(p), p prime.
    static Field prime(std::uint64_t p) { return Field(p, 1, {}); }

    /// GF(p^k) over the lexicographically smallest monic irreducible
    /// modulus of degree k (coefficients compared low-degree first).
    static Field extension(std::uint64_t p, unsigned k) {
        if (k == 0) throw std::invalid_argument("extension degree must be positive");
        if (k == 1) return prime(p);
        return Field(p, k, find_modulus(p, k));
    }

    /// GF(p^k) with an explicitly given monic irreducible modulus
    /// (little-endian coefficients, length k+1).  Used when reading
    /// serialized reports that pin their modulus.
    static Field with_modulus(std::uint64_t p, const std::vector<std::uint32_t>& modulus) {
        if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
        if (modulus.size() == 2) return prime(p);
        return Field(p, static_cast<unsigned>(modulus.size() - 1), modulus);
    }

    /// Parses a field spec string: "7", "2^3", or a plain prime power "9".
    static Field parse(std::string_view s);

    std::uint64_t characteristic() const { return impl_->p; }
    unsigned degree() const { return impl_->k; }
    std::uint64_t size() const { return impl_->q; }

    /// Modulus coefficients, little-endian; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

    Scalar zero() const { return {0}; }
    Scalar one() const { return {1}; }

    Scalar element(std::uint64_t index) const {
        if (index >= impl_->q) throw std::out_of_range("element index out of range");
        return {static_cast<std::uint32_t>(index)};
    }

    /// Image of n under the ring map Z -> GF(p^k).
    Scalar from_int(std::int64_t n) const {
        const std::int64_t p = static_cast<std::int64_t>(impl_->p);
        std::int64_t r = n % p;
        if (r < 0) r += p;
        return {static_cast<std::uint32_t>(r)};
    }

    Scalar add(Scalar a, Scalar b) const {
        const Impl& f = *impl_;
        if (f.k == 1) return {static_cast<std::uint32_t>((std::uint64_t(a.v) + b.v) % f.p)};
        return {f.add_lut[std::size_t(a.v) * f.q + b.v]};
    }

    Scalar neg(Scalar a) const {
        const Impl& f = *impl_;
        if (f.k == 1) return {a.v == 0 ? 0u : static_cast<std::uint32_t>(f.p - a.v)};
        return {f.neg_lut[a.v]};
    }

    Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

    Scalar mul(Scalar a, Scalar b) const {
        const Impl& f = *impl_;
        if (f.k == 1) return {static_cast<std::uint32_t>((std::uint64_t(a.v) * b.v) % f.p)};
        return {f.mul_lut[std::size_t(a.v) * f.q + b.v]};
    }

    Scalar inv(Scalar a) const {
        if (a.v == 0) throw std::domain_error("division by zero in GF(q)");
        const Impl& f = *impl_;
        if (f.k == 1) return pow(a, static_cast<std::int64_t>(f.p) - 2);
        return {f.inv_lut[a.v]};
    }

    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

    /// Square-and-multiply; negative exponents require a nonzero base.
    Scalar pow(Scalar a, std::int64_t e) const {
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        Scalar acc = one();
        Scalar base = a;
        std::uint64_t n = static_cast<std::uint64_t>(e);
        while (n > 0) {
            if (n & 1) acc = mul(acc, base);
            base = mul(base, base);
            n >>= 1;
        }
        return acc;
    }

    /// Coefficient of x^i in the element's power-basis representation.
    std::uint32_t coefficient(Scalar a, unsigned i) const {
        std::uint64_t r = a.v;
        for (unsigned j = 0; j < i; ++j) r /= impl_->p;
        return static_cast<std::uint32_t>(r % impl_->p);
    }

    std::uint64_t multiplicative_order(Scalar a) const {
        if (a.v == 0) throw std::domain_error("zero has no multiplicative order");
        std::uint64_t ord = 1;
        Scalar x = a;
        while (x != one()) {
            x = mul(x, a);
            ++ord;
        }
        return ord;
    }

    /// First element in enumeration order generating the multiplicative
    /// group.  For GF(2) the group is trivial and 1 is returned.
    Scalar primitive_element() const { return {impl_->primitive}; }

    std::string str(Scalar a) const;
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k && a.impl_->modulus == b.impl_->modulus;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

   private:
    struct Impl {
        std::uint64_t p = 0;
        unsigned k = 0;
        std::uint64_t q = 0;
        std::vector<std::uint32_t> modulus;  // little-endian, monic; empty for k == 1
        std::vector<std::uint32_t> add_lut;  // q*q, extension fields only
        std::vector<std::uint32_t> mul_lut;  // q*q
        std::vector<std::uint32_t> neg_lut;  // q
        std::vector<std::uint32_t> inv_lut;  // q (inv_lut[0] unused)
        std::uint32_t primitive = 1;
    };

    Field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus) {
        if (!detail::is_prime(p)) throw std::invalid_argument("characteristic must be prime: " + std::to_string(p));
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->k = k;
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q > kMaxPrimeSize) throw BudgetError("field size exceeds budget: " + std::to_string(p) + "^" + std::to_string(k));
        }
        impl->q = q;
        if (k > 1) {
            if (q > kMaxExtensionSize)
                throw BudgetError("extension field size exceeds lookup-table budget: q = " + std::to_string(q));
            if (modulus.size() != k + 1 || modulus.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree k");
            for (auto c : modulus)
                if (c >= p) throw std::invalid_argument("modulus coefficient not reduced mod p");
            if (!detail::zp_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
            impl->modulus = std::move(modulus);
            build_luts(*impl);
        }
        impl->primitive = find_primitive(*impl);
        impl_ = std::move(impl);
    }

    static std::vector<std::uint32_t> find_modulus(std::uint64_t p, unsigned k);
    static void build_luts(Impl& f);
    static std::uint32_t find_primitive(const Impl& f);

    std::shared_ptr<const Impl> impl_;
};

inline std::vector<std::uint32_t> Field::find_modulus(std::uint64_t p, unsigned k) {
    // Candidates ordered lexicographically with the low-degree coefficient
    // most significant; the leading coefficient is fixed to 1.
    std::vector<std::uint32_t> coeffs(k + 1, 0);
    coeffs[k] = 1;
    while (true) {
        if (detail::zp_irreducible(coeffs, p)) return coeffs;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && coeffs[i] == p - 1) coeffs[i--] = 0;
        if (i < 0) throw std::logic_error("no irreducible polynomial found");  // cannot happen
        ++coeffs[i];
    }
}

inline void Field::build_luts(Impl& f) {
    const std::uint64_t q = f.q;
    const std::uint64_t p = f.p;
    const unsigned k = f.k;
    auto digits = [&](std::uint64_t n) {
        detail::ZpPoly d(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            d[i] = static_cast<std::uint32_t>(n % p);
            n /= p;
        }
        return d;
    };
    auto index_of = [&](const detail::ZpPoly& d) {
        std::uint64_t n = 0;
        for (std::size_t i = d.size(); i-- > 0;) n = n * p + d[i];
        return static_cast<std::uint32_t>(n);
    };

    f.add_lut.resize(q * q);
    f.mul_lut.resize(q * q);
    f.neg_lut.resize(q);
    f.inv_lut.assign(q, 0);
    std::vector<detail::ZpPoly> elems(q);
    for (std::uint64_t a = 0; a < q; ++a) elems[a] = digits(a);

    for (std::uint64_t a = 0; a < q; ++a) {
        detail::ZpPoly nd(k, 0);
        for (unsigned i = 0; i < k; ++i) nd[i] = static_cast<std::uint32_t>((p - elems[a][i]) % p);
        f.neg_lut[a] = index_of(nd);
        for (std::uint64_t b = 0; b < q; ++b) {
            detail::ZpPoly s(k, 0);
            for (unsigned i = 0; i < k; ++i) s[i] = static_cast<std::uint32_t>((elems[a][i] + elems[b][i]) % p);
            f.add_lut[a * q + b] = index_of(s);

            detail::ZpPoly prod = detail::zp_mul(elems[a], elems[b], p);
            prod = detail::zp_mod(prod, f.modulus, p);
            prod.resize(k, 0);
            const std::uint32_t pi = index_of(prod);
            f.mul_lut[a * q + b] = pi;
            if (pi == 1) f.inv_lut[a] = static_cast<std::uint32_t>(b);
        }
    }
}

inline std::uint32_t Field::find_primitive(const Impl& f) {
    if (f.q == 2) return 1;
    auto mul = [&](std::uint32_t a, std::uint32_t b) {
        if (f.k == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % f.p);
        return f.mul_lut[std::size_t(a) * f.q + b];
    };
    for (std::uint32_t g = 1; g < f.q; ++g) {
        std::uint64_t ord = 1;
        std::uint32_t x = g;
        while (x != 1) {
            x = mul(x, g);
            ++ord;
        }
        if (ord == f.q - 1) return g;
    }
    throw std::logic_error("no primitive element found");  // cannot happen
}

inline std::string Field::str(Scalar a) const {
    const Impl& f = *impl_;
    if (f.k == 1) return std::to_string(a.v);
    std::string out;
    for (unsigned i = f.k; i-- > 0;) {
        const std::uint32_t c = coefficient(a, i);
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::string Field::name() const {
    const Impl& f = *impl_;
    if (f.k == 1) return "GF(" + std::to_string(f.p) + ")";
    std::string mod;
    for (unsigned i = f.k + 1; i-- > 0;) {
        const std::uint32_t c = f.modulus[i];
        if (c == 0) continue;
        if (!mod.empty()) mod += "+";
        if (i == 0) {
            mod += std::to_string(c);
        } else {
            if (c != 1) mod += std::to_string(c);
            mod += "x";
            if (i > 1) mod += "^" + std::to_string(i);
        }
    }
    return "GF(" + std::to_string(f.q) + ")=GF(" + std::to_string(f.p) + ")[x]/(" + mod + ")";
}

inline Field Field::parse(std::string_view s) {
    const auto caret = s.find('^');
    auto to_u64 = [](std::string_view t) {
        if (t.empty()) throw std::invalid_argument("empty field spec");
        std::uint64_t v = 0;
        for (char c : t) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad field spec");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return v;
    };
    if (caret != std::string_view::npos) {
        const std::uint64_t p = to_u64(s.substr(0, caret));
        const std::uint64_t k = to_u64(s.substr(caret + 1));
        return extension(p, static_cast<unsigned>(k));
    }
    const std::uint64_t q = to_u64(s);
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    // Plain number: accept primes and prime powers.
    std::uint64_t p = q;
    for (std::uint64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    unsigned k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0 && rest > 1) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::invalid_argument("field size is not a prime power: " + std::to_string(q));
    return extension(p, k);
}

}  // namespace higgledy

template <>
struct std::hash<higgledy::Scalar> {
    std::size_t operator()(higgledy::Scalar s) const noexcept { return std::hash<std::uint32_t>{}(s.v); }
};

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charcond::cyclo {

using BigInt = boost::multiprecision::cpp_int;

/**
 * RootOfUnity: the root zeta_modulus^exponent on the unit circle, stored with
 * 0 <= exponent < modulus.  `modulus` is the order of the ambient root, not
 * necessarily the order of the value; reduced() divides out the gcd.
 */
struct RootOfUnity {
    long long modulus = 1;
    long long exponent = 0;

    RootOfUnity() = default;
    RootOfUnity(long long m, long long e);

    long long order() const;
    RootOfUnity reduced() const;

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.modulus == b.modulus && a.exponent == b.exponent;
    }
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
        return a.modulus != b.modulus ? a.modulus < b.modulus : a.exponent < b.exponent;
    }
};

/** A root of unity together with a sign, i.e. +/- zeta_m^e. */
struct SignedRoot {
    int sign;          // +1 or -1
    RootOfUnity root;  // reduced to lowest terms
};

/**
 * CyclotomicInteger: an exact element of Z[zeta_N] held in the canonical
 * tensor-product basis.  For N = prod p^e the basis consists of the exponents
 * whose Chinese-remainder component at each p^e lies in [0, phi(p^e)); any
 * other power of zeta_N is rewritten through the prime-power relation
 * zeta^{phi(p^e)} = -(1 + zeta^{p^{e-1}} + ... + zeta^{(p-2)p^{e-1}}).
 *
 * The stored modulus is canonical: construction with N = 2 mod 4 rewrites
 * every term into Z[zeta_{N/2}] (zeta_N = -zeta_{N/2}^{(N/2+1)/2}), so a
 * stored modulus is either odd or divisible by 4.  Two elements with the same
 * modulus are equal iff their term lists are identical.
 *
 * Coefficients are arbitrary-precision integers.  Values are immutable and
 * safe to share across threads.
 */
class CyclotomicInteger {
  public:
    using Term = std::pair<long long, BigInt>;

    /// Sum of coeff * zeta_modulus^exponent over `terms`; exponents may be any
    /// integers and may repeat.  Throws std::invalid_argument for modulus < 1.
    static CyclotomicInteger make(long long modulus, const std::vector<Term>& terms);

    static CyclotomicInteger root(long long modulus, long long exponent);
    static CyclotomicInteger from_integer(BigInt value);
    static CyclotomicInteger from_integer(long long value);
    static CyclotomicInteger zero(long long modulus = 1);
    static CyclotomicInteger one();

    long long modulus() const { return modulus_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    std::optional<BigInt> rational_value() const;

    /// Re-expresses the element in Z[zeta_M]; the canonical form of M (M/2
    /// when M = 2 mod 4) must be a multiple of the stored modulus.
    CyclotomicInteger embed(long long target_modulus) const;

    /// Galois action zeta_N -> zeta_N^s; s must be invertible mod N.
    CyclotomicInteger galois(long long s) const;
    CyclotomicInteger conjugate() const { return galois(-1); }

    /// True iff galois(s) equals *this (cheaper than building the image).
    bool fixed_by(long long s) const;

    CyclotomicInteger pow(unsigned long long e) const;

    /// Recognizes +/- a root of unity; prefers the +1 presentation when both
    /// signs denote the same value (possible only when 4 | modulus).
    std::optional<SignedRoot> as_root_of_unity() const;

    /// Smallest n with the value in Q(zeta_n), computed by scanning the
    /// divisors of the modulus in ascending order and testing fixedness under
    /// the Galois subgroup {s = 1 mod d}.  Never returns n = 2 mod 4.
    long long conductor() const;

    /// Canonical serialization; equal strings iff equal modulus and value.
    std::string encode() const;

    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        return !(a == b);
    }

    CyclotomicInteger operator-() const;
    friend CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b);
    friend CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b);
    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const BigInt& c);
    friend CyclotomicInteger operator*(const BigInt& c, const CyclotomicInteger& a);

  private:
    CyclotomicInteger(long long modulus, std::vector<Term> terms)
        : modulus_(modulus), terms_(std::move(terms)) {}

    long long modulus_;
    std::vector<Term> terms_;
};

/// Embeds both operands into Z[zeta_lcm] so mixed-modulus arithmetic can run.
std::pair<CyclotomicInteger, CyclotomicInteger> lift_to_common(const CyclotomicInteger& a,
                                                               const CyclotomicInteger& b);

/// Equality as complex numbers, regardless of ambient modulus.
bool value_equal(const CyclotomicInteger& a, const CyclotomicInteger& b);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace charcond::cyclo

#pragma once

#include "charcond/cyclotomic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace charcond::ffield {

/**
 * F_{p^f} in a deterministic presentation.  The modulus is the
 * lexicographically least monic irreducible of degree f over F_p, ordered by
 * the coefficient tuple (a_{f-1}, ..., a_0); the generator is the smallest
 * element of multiplicative order p^f - 1.
 *
 * Elements are addressed by their index in 0..p^f-1, read as base-p digits
 * c_0 + c_1 p + ... with c_i the coefficient of x^i; index arithmetic keeps
 * the tables compact.  Immutable after construction.
 */
class FiniteField {
public:
    FiniteField(long long p, int f);

    long long characteristic() const { return p_; }
    int degree() const { return f_; }
    long long size() const { return q_; }

    /// Coefficients a_0..a_{f-1} of the monic modulus (x^f term implied).
    const std::vector<int>& modulus_polynomial() const { return modulus_; }

    long long generator() const { return generator_; }

    long long add(long long a, long long b) const;
    long long neg(long long a) const;
    long long mul(long long a, long long b) const;
    long long pow(long long a, long long e) const;

    /// Tr(x) = x + x^p + ... + x^{p^{f-1}}, landing in the prime field.
    int trace(long long a) const;

    /// Discrete log base the generator; a must be nonzero.
    long long discrete_log(long long a) const;

    /// Nonzero a is a square iff its discrete log is even.
    bool is_square(long long a) const;

private:
    long long p_;
    int f_;
    long long q_;
    std::vector<int> modulus_;
    long long generator_ = 0;
    std::vector<long long> dlog_;  // dlog_[generator^i] = i

    std::vector<int> decode(long long a) const;
    long long encode(const std::vector<int>& coords) const;
};

/**
 * Quadratic Gauss sum of F_{p^f}, p odd: the sum of chi(t) zeta_p^{Tr(t)}
 * over nonzero t, where chi is the quadratic residue character.  Its square
 * is (-1)^{(q-1)/2} q, which pins the quadratic subfield of Q(zeta_p).
 */
cyclo::CyclotomicInteger gauss_sum(long long p, int f);

/** Factors q as p^f with p prime, or nothing when q is not a prime power. */
std::optional<std::pair<long long, int>> as_prime_power(long long q);

}  // namespace charcond::ffield

#pragma once

#include "charcond/cyclotomic.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

namespace charcond::cyclo::detail {

/**
 * ModulusContext: per-modulus tables shared by every element of Z[zeta_n].
 * Built once behind a global cache; n is always canonical here (odd or
 * divisible by 4).  The root table maps the canonical encoding of +/-zeta^k to
 * its (sign, exponent) presentation and is built lazily because only root
 * recognition needs it.
 */
struct ModulusContext {
    long long n = 1;
    long long phi = 1;
    std::vector<std::pair<long long, int>> factors;  // (p, e), ascending p
    std::vector<long long> prime_power;              // p^e
    std::vector<long long> cofactor;                 // n / p^e
    std::vector<long long> crt_inv;                  // (n/p^e)^{-1} mod p^e
    std::vector<long long> phi_pp;                   // phi(p^e)
    std::vector<long long> low_pow;                  // p^{e-1}
    std::vector<long long> divisors;                 // ascending
    std::vector<long long> units;                    // ascending residues coprime to n
    std::vector<bool> is_unit;
    std::vector<bool> is_basis;                      // exponent lies in the tensor basis
    std::vector<long long> basis_exponents;          // ascending, size phi
    std::vector<long long> basis_index;              // exponent -> row, -1 off basis

    // lazy: canonical encoding of +/- zeta_n^k  ->  (sign, k)
    mutable std::once_flag root_once;
    mutable std::unordered_map<std::string, std::pair<int, long long>> root_table;

    const std::unordered_map<std::string, std::pair<int, long long>>& roots() const;

    /// CRT component of exponent e at factor index i.
    long long component(long long e, std::size_t i) const;
};

/// Cached lookup; builds the context on first use.  Thread-safe.
/// Throws std::invalid_argument for n < 1, n = 2 mod 4, or n past the size cap.
const ModulusContext& modulus_context(long long n);

/// Collapses raw (exponent, coefficient) pairs into the canonical basis form:
/// exponents reduced mod n, out-of-basis powers expanded through the
/// prime-power relations, like terms merged, zeros dropped, result sorted.
std::vector<CyclotomicInteger::Term> normalize_terms(
    const ModulusContext& ctx, std::vector<CyclotomicInteger::Term> raw);

long long power_mod(long long base, long long exp, long long mod);

}  // namespace charcond::cyclo::detail

#include "charcond/ffield.hpp"

#include <algorithm>
#include <stdexcept>

namespace charcond::ffield {

namespace {

constexpr long long kFieldSizeCap = 1LL << 20;

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Little-endian coefficient vectors over F_p, trimmed of leading zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, long long p) {
    a = trim(std::move(a));
    while (a.size() >= b.size()) {
        int lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            long long v = a[shift + i] - static_cast<long long>(lead) * b[i];
            a[shift + i] = static_cast<int>(((v % p) + p) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

bool divides(const Poly& d, const Poly& a, long long p) {
    return poly_mod(a, d, p).empty();
}

// Irreducibility over F_p by trial division with every monic divisor degree
// candidate up to half the degree.
bool is_irreducible(const Poly& candidate, long long p) {
    int f = static_cast<int>(candidate.size()) - 1;
    for (int d = 1; 2 * d <= f; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            Poly divisor(d + 1, 0);
            divisor[d] = 1;
            long long rest = v;
            for (int i = 0; i < d; ++i) {
                divisor[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            if (divides(divisor, candidate, p)) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> FiniteField::decode(long long a) const {
    std::vector<int> coords(f_, 0);
    for (int i = 0; i < f_; ++i) {
        coords[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return coords;
}

long long FiniteField::encode(const std::vector<int>& coords) const {
    long long v = 0;
    for (int i = f_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(coords.size()) ? coords[i] : 0);
    return v;
}

FiniteField::FiniteField(long long p, int f) : p_(p), f_(f) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (f < 1) throw std::invalid_argument("degree must be positive");
    q_ = 1;
    for (int i = 0; i < f; ++i) {
        q_ *= p;
        if (q_ > kFieldSizeCap) throw std::invalid_argument("field size exceeds cap");
    }

    // Lex-least monic irreducible: v = sum a_i p^i walks the coefficient
    // tuples (a_{f-1}, ..., a_0) in ascending lexicographic order.
    modulus_.assign(f, 0);
    bool found = false;
    for (long long v = 0; v < q_ && !found; ++v) {
        Poly candidate(f + 1, 0);
        candidate[f] = 1;
        long long rest = v;
        for (int i = 0; i < f; ++i) {
            candidate[i] = static_cast<int>(rest % p);
            rest /= p;
        }
        if (is_irreducible(candidate, p)) {
            for (int i = 0; i < f; ++i) modulus_[i] = candidate[i];
            found = true;
        }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");

    // Smallest element of full multiplicative order.
    std::vector<long long> prime_factors;
    long long m = q_ - 1;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 1) prime_factors.push_back(m);
    for (long long g = 1; g < q_; ++g) {
        bool full = true;
        for (long long r : prime_factors) {
            if (pow(g, (q_ - 1) / r) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            generator_ = g;
            break;
        }
    }

    dlog_.assign(q_, -1);
    long long x = 1;
    for (long long i = 0; i < q_ - 1; ++i) {
        dlog_[x] = i;
        x = mul(x, generator_);
    }
}

long long FiniteField::add(long long a, long long b) const {
    long long out = 0, mult = 1;
    for (int i = 0; i < f_; ++i) {
        long long da = (a % p_ + b % p_) % p_;
        out += da * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

long long FiniteField::neg(long long a) const {
    long long out = 0, mult = 1;
    for (int i = 0; i < f_; ++i) {
        out += ((p_ - a % p_) % p_) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

long long FiniteField::mul(long long a, long long b) const {
    std::vector<int> ca = decode(a);
    std::vector<int> cb = decode(b);
    Poly prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < f_; ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long long>(ca[i]) * cb[j]) % p_);
    }
    Poly mod_poly(modulus_);
    mod_poly.push_back(1);
    Poly rem = poly_mod(std::move(prod), mod_poly, p_);
    rem.resize(f_, 0);
    return encode(rem);
}

long long FiniteField::pow(long long a, long long e) const {
    long long result = 1;
    long long base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FiniteField::trace(long long a) const {
    long long acc = 0;
    long long x = a;
    for (int i = 0; i < f_; ++i) {
        acc = add(acc, x);
        x = pow(x, p_);
    }
    // The trace is Galois-fixed, hence lies in the prime field.
    return static_cast<int>(acc % p_);
}

long long FiniteField::discrete_log(long long a) const {
    if (a <= 0 || a >= q_) throw std::invalid_argument("discrete log of a non-unit");
    return dlog_[a];
}

bool FiniteField::is_square(long long a) const {
    // In characteristic 2 the multiplicative group has odd order, so squaring
    // is a bijection and every nonzero element is a square.
    if (p_ == 2) {
        discrete_log(a);  // keep the nonzero-argument contract
        return true;
    }
    return discrete_log(a) % 2 == 0;
}

cyclo::CyclotomicInteger gauss_sum(long long p, int f) {
    if (p == 2) throw std::invalid_argument("gauss sum needs odd characteristic");
    FiniteField field(p, f);
    std::vector<cyclo::BigInt> coeff(p, 0);
    for (long long t = 1; t < field.size(); ++t) {
        int e = field.trace(t);
        coeff[e] += field.is_square(t) ? 1 : -1;
    }
    std::vector<cyclo::CyclotomicInteger::Term> terms;
    for (long long e = 0; e < p; ++e)
        if (coeff[e] != 0) terms.push_back({e, coeff[e]});
    return cyclo::CyclotomicInteger::make(p, std::move(terms));
}

std::optional<std::pair<long long, int>> as_prime_power(long long q) {
    if (q < 2) return std::nullopt;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        int f = 0;
        long long rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++f;
        }
        if (rest != 1) return std::nullopt;
        return std::make_pair(p, f);
    }
    return std::make_pair(q, 1);  // q itself is prime
}

}  // namespace charcond::ffield

#include "charcond/cyclotomic.hpp"

#include "modulus_context.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace charcond::cyclo {

using detail::ModulusContext;
using detail::modulus_context;
using detail::normalize_terms;

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) a = std::exchange(b, a % b);
    return a;
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

RootOfUnity::RootOfUnity(long long m, long long e) : modulus(m) {
    if (m < 1) throw std::invalid_argument("root order must be positive");
    exponent = e % m;
    if (exponent < 0) exponent += m;
}

long long RootOfUnity::order() const {
    return modulus / gcd_ll(modulus, exponent);
}

RootOfUnity RootOfUnity::reduced() const {
    long long g = gcd_ll(modulus, exponent);
    return RootOfUnity(modulus / g, exponent / g);
}

CyclotomicInteger CyclotomicInteger::make(long long modulus, const std::vector<Term>& terms) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    std::vector<Term> raw = terms;
    if (modulus % 4 == 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m, so fold into Z[zeta_m].
        long long m = modulus / 2;
        long long half = (m + 1) / 2;
        for (auto& [e, c] : raw) {
            long long r = e % modulus;
            if (r < 0) r += modulus;
            if (r & 1) c = -c;
            e = r % m * (half % m) % m;
        }
        modulus = m;
    }
    const ModulusContext& ctx = modulus_context(modulus);
    return CyclotomicInteger(modulus, normalize_terms(ctx, std::move(raw)));
}

CyclotomicInteger CyclotomicInteger::root(long long modulus, long long exponent) {
    return make(modulus, {{exponent, BigInt(1)}});
}

CyclotomicInteger CyclotomicInteger::from_integer(BigInt value) {
    std::vector<Term> t;
    if (value != 0) t.emplace_back(0, std::move(value));
    return CyclotomicInteger(1, std::move(t));
}

CyclotomicInteger CyclotomicInteger::from_integer(long long value) {
    return from_integer(BigInt(value));
}

CyclotomicInteger CyclotomicInteger::zero(long long modulus) {
    return make(modulus, {});
}

CyclotomicInteger CyclotomicInteger::one() {
    return from_integer(1);
}

bool CyclotomicInteger::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

std::optional<BigInt> CyclotomicInteger::rational_value() const {
    if (terms_.empty()) return BigInt(0);
    if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
    return std::nullopt;
}

CyclotomicInteger CyclotomicInteger::embed(long long target_modulus) const {
    if (target_modulus < 1) throw std::invalid_argument("modulus must be positive");
    long long target = target_modulus % 4 == 2 ? target_modulus / 2 : target_modulus;
    if (target % modulus_ != 0)
        throw std::invalid_argument("embed target is not a multiple of the modulus");
    if (target == modulus_) return *this;
    modulus_context(target);  // validates the cap
    long long scale = target / modulus_;
    std::vector<Term> t = terms_;
    for (auto& [e, c] : t) e *= scale;
    // The tensor basis is stable under exponent scaling, so no renormalization.
    return CyclotomicInteger(target, std::move(t));
}

CyclotomicInteger CyclotomicInteger::galois(long long s) const {
    long long n = modulus_;
    long long sm = s % n;
    if (sm < 0) sm += n;
    if (gcd_ll(sm, n) != 1) throw std::invalid_argument("galois exponent must be a unit");
    std::vector<Term> raw = terms_;
    for (auto& [e, c] : raw) e = e * sm % n;
    const ModulusContext& ctx = modulus_context(n);
    return CyclotomicInteger(n, normalize_terms(ctx, std::move(raw)));
}

bool CyclotomicInteger::fixed_by(long long s) const {
    long long n = modulus_;
    long long sm = s % n;
    if (sm < 0) sm += n;
    if (gcd_ll(sm, n) != 1) throw std::invalid_argument("galois exponent must be a unit");
    if (sm == 1 % n || terms_.empty()) return true;
    const ModulusContext& ctx = modulus_context(n);
    bool all_basis = true;
    for (const auto& [e, c] : terms_) {
        if (!ctx.is_basis[e * sm % n]) {
            all_basis = false;
            break;
        }
    }
    if (all_basis) {
        // The image permutes basis exponents, so compare term by term.
        for (const auto& [e, c] : terms_) {
            long long img = e * sm % n;
            auto it = std::lower_bound(
                terms_.begin(), terms_.end(), img,
                [](const Term& t, long long v) { return t.first < v; });
            if (it == terms_.end() || it->first != img || it->second != c) return false;
        }
        return true;
    }
    return galois(sm) == *this;
}

CyclotomicInteger CyclotomicInteger::pow(unsigned long long e) const {
    CyclotomicInteger result = make(modulus_, {{0, BigInt(1)}});
    CyclotomicInteger base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::optional<SignedRoot> CyclotomicInteger::as_root_of_unity() const {
    if (terms_.empty()) return std::nullopt;
    const ModulusContext& ctx = modulus_context(modulus_);
    const auto& table = ctx.roots();
    auto it = table.find(encode());
    if (it == table.end()) return std::nullopt;
    auto [sign, k] = it->second;
    return SignedRoot{sign, RootOfUnity(modulus_, k).reduced()};
}

long long CyclotomicInteger::conductor() const {
    const ModulusContext& ctx = modulus_context(modulus_);
    for (long long d : ctx.divisors) {
        bool fixed = true;
        for (long long s = 1 + d; s < ctx.n; s += d) {
            if (!ctx.is_unit[s]) continue;
            if (!fixed_by(s)) {
                fixed = false;
                break;
            }
        }
        if (fixed) return d;
    }
    return modulus_;
}

std::string CyclotomicInteger::encode() const {
    std::ostringstream os;
    os << 'm' << modulus_;
    for (const auto& [e, c] : terms_) os << '|' << e << ':' << c;
    return os.str();
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& [e, c] : t) c = -c;
    return CyclotomicInteger(modulus_, std::move(t));
}

CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.modulus_ != b.modulus_)
        throw std::invalid_argument("modulus mismatch; lift_to_common first");
    // Both inputs are canonical, so a sorted merge stays canonical.
    std::vector<CyclotomicInteger::Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            out.push_back(*ib++);
        } else {
            BigInt c = ia->second + ib->second;
            if (c != 0) out.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return CyclotomicInteger(a.modulus_, std::move(out));
}

CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return a + (-b);
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.modulus_ != b.modulus_)
        throw std::invalid_argument("modulus mismatch; lift_to_common first");
    long long n = a.modulus_;
    std::vector<CyclotomicInteger::Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) raw.emplace_back((ea + eb) % n, ca * cb);
    const ModulusContext& ctx = modulus_context(n);
    return CyclotomicInteger(n, normalize_terms(ctx, std::move(raw)));
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const BigInt& c) {
    if (c == 0) return CyclotomicInteger::zero(a.modulus_);
    std::vector<CyclotomicInteger::Term> t = a.terms_;
    for (auto& [e, coeff] : t) coeff *= c;
    return CyclotomicInteger(a.modulus_, std::move(t));
}

CyclotomicInteger operator*(const BigInt& c, const CyclotomicInteger& a) {
    return a * c;
}

std::pair<CyclotomicInteger, CyclotomicInteger> lift_to_common(const CyclotomicInteger& a,
                                                               const CyclotomicInteger& b) {
    long long m = lcm_ll(a.modulus(), b.modulus());
    return {a.embed(m), b.embed(m)};
}

bool value_equal(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.modulus() == b.modulus()) return a == b;
    auto [x, y] = lift_to_common(a, b);
    return x == y;
}

}  // namespace charcond::cyclo

#include "charcond/chartab.hpp"

#include "charcond/ffield.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace charcond::chartab {

using cyclo::CyclotomicInteger;

namespace {

// For q = 2^{2n+1} this is the integer sqrt(2q) = 2^{n+1}; 0 if q is not a
// valid Suzuki field size.
long long suzuki_root(long long q) {
    if (q < 2) return 0;
    long long v = q;
    int e = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++e;
    }
    if (v != 1 || e % 2 == 0) return 0;
    return 1LL << ((e + 1) / 2);
}

void require_prime_power(Group group, long long q) {
    if (group == Group::Suzuki) {
        if (suzuki_root(q) == 0)
            throw std::invalid_argument("Suzuki field size must be an odd power of 2");
        return;
    }
    if (!ffield::as_prime_power(q).has_value())
        throw std::invalid_argument("field size must be a prime power");
}

Witness single(const char* name, long long v) {
    return Witness{{v}, std::string(name) + "=" + std::to_string(v)};
}

CyclotomicInteger root_power(long long modulus, long long exponent) {
    exponent %= modulus;
    if (exponent < 0) exponent += modulus;
    return CyclotomicInteger::root(modulus, exponent);
}

using ValueFn = std::function<void(const Witness&, const CyclotomicInteger&)>;

// {xi^a : 0 <= a <= q-2} for xi = epsilon^k; shared by Linear and Steinberg.
void cyclic_values(long long q, long long k, const ValueFn& fn) {
    long long m = q - 1;
    for (long long a = 0; a <= q - 2; ++a) fn(single("a", a), root_power(m, k * a));
}

void x_family_values(long long q, long long m, long long n, const ValueFn& fn) {
    long long mod = q - 1;
    for (long long a = 0; a <= q - 2; ++a)
        fn(Witness{{0, a}, "a=" + std::to_string(a)}, root_power(mod, (m + n) * a));
    for (long long c = 0; c <= q - 2; ++c)
        for (long long d = c + 1; d <= q - 2; ++d) {
            auto value = root_power(mod, n * c + m * d) + root_power(mod, n * d + m * c);
            fn(Witness{{1, c, d},
                       "(c,d)=(" + std::to_string(c) + "," + std::to_string(d) + ")"},
               value);
        }
}

void y_family_values(long long q, long long n, const ValueFn& fn) {
    long long mod = q * q - 1;
    for (long long a = 0; a <= q - 2; ++a)
        fn(Witness{{0, a}, "a=" + std::to_string(a)}, root_power(mod, n * a * (q + 1)));
    for (long long e : orbit_reps(mod, q)) {
        if (e % (q + 1) == 0) continue;
        auto value = -(root_power(mod, n * e) + root_power(mod, n * e * q));
        fn(Witness{{1, e}, "e=" + std::to_string(e)}, value);
    }
}

// {eps^{ka} + eps^{-ka}} over a window; serves Xp, Yp, and SuX, which differ
// only in the root order and the window end.
void real_pair_values(long long order, long long k, long long a_max, const char* name,
                      const ValueFn& fn) {
    for (long long a = 1; a <= a_max; ++a)
        fn(single(name, a), root_power(order, k * a) + root_power(order, -k * a));
}

void suzuki_quad_values(long long order, long long q, long long m, const char* name,
                        const ValueFn& fn) {
    for (long long b = 1; b < order; ++b) {
        auto value = -(root_power(order, m * b) + root_power(order, m * b * q) +
                       root_power(order, -m * b) + root_power(order, -m * b * q));
        fn(single(name, b), value);
    }
}

void split_value(long long q, const ValueFn& fn) {
    auto pf = ffield::as_prime_power(q);
    fn(Witness{{1}, "g"}, ffield::gauss_sum(pf->first, pf->second));
}

// The four unipotent characters (q >= 8): trivial and Steinberg are rational,
// the remaining two have fields Q(i) and are represented by generators +/-i.
void suzuki_unipotent_values(long long j, const ValueFn& fn) {
    switch (j) {
        case 0: fn(single("a", 0), CyclotomicInteger::one()); break;
        case 1: fn(single("a", 0), CyclotomicInteger::one()); break;
        case 2: fn(single("a", 1), CyclotomicInteger::root(4, 1)); break;
        case 3: fn(single("a", 1), CyclotomicInteger::root(4, 3)); break;
        default: throw std::logic_error("bad unipotent index");
    }
}

// 2B2(2) is a Frobenius group of order 20: four linear characters factoring
// through C4 (fields Q or Q(i)) and one rational character of degree 4.
void suzuki_q2_values(long long j, const ValueFn& fn) {
    if (j < 4) {
        for (long long a = 0; a <= 3; ++a) fn(single("a", a), root_power(4, j * a));
        return;
    }
    fn(single("a", 0), CyclotomicInteger::from_integer(4));
    fn(single("a", 1), CyclotomicInteger::from_integer(-1));
    fn(single("a", 2), CyclotomicInteger::zero());
}

int family_rank(Family f) { return static_cast<int>(f); }

}  // namespace

std::string group_name(Group g) {
    switch (g) {
        case Group::GL2: return "GL2";
        case Group::SL2: return "SL2";
        case Group::Suzuki: return "Suzuki";
    }
    return "?";
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Linear: return "Linear";
        case Family::Steinberg: return "Steinberg";
        case Family::X: return "X";
        case Family::Y: return "Y";
        case Family::Xp: return "Xp";
        case Family::Yp: return "Yp";
        case Family::SplitXp: return "SplitXp";
        case Family::SplitYp: return "SplitYp";
        case Family::SuX: return "SuX";
        case Family::SuY: return "SuY";
        case Family::SuZ: return "SuZ";
        case Family::SuUnipotent: return "SuUnipotent";
    }
    return "?";
}

std::string CharacterId::display_name() const {
    std::ostringstream out;
    out << group_name(group) << "(" << q << ") " << family_name(family) << "(";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) out << ",";
        out << params[i];
    }
    out << ")";
    return out.str();
}

bool operator<(const CharacterId& a, const CharacterId& b) {
    if (a.group != b.group) return a.group < b.group;
    if (a.q != b.q) return a.q < b.q;
    if (a.family != b.family) return family_rank(a.family) < family_rank(b.family);
    return a.params < b.params;
}

std::vector<long long> orbit_reps(long long modulus, long long multiplier) {
    if (modulus < 1) throw std::invalid_argument("orbit_reps needs modulus >= 1");
    long long t = multiplier % modulus;
    if (t < 0) t += modulus;
    if (std::gcd(t, modulus) != 1)
        throw std::invalid_argument("orbit multiplier must be a unit mod the modulus");
    std::vector<char> seen(modulus, 0);
    std::vector<long long> reps;
    for (long long x = 0; x < modulus; ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (long long y = x; !seen[y]; y = y * t % modulus) seen[y] = 1;
    }
    return reps;
}

std::vector<CharacterId> enumerate(Group group, long long q) {
    require_prime_power(group, q);
    std::vector<CharacterId> out;
    auto add = [&](Family f, std::vector<long long> params) {
        out.push_back({group, q, f, std::move(params)});
    };

    if (group == Group::GL2) {
        for (long long k = 0; k <= q - 2; ++k) add(Family::Linear, {k});
        for (long long k = 0; k <= q - 2; ++k) add(Family::Steinberg, {k});
        for (long long m = 0; m <= q - 2; ++m)
            for (long long n = m + 1; n <= q - 2; ++n) add(Family::X, {m, n});
        for (long long n : orbit_reps(q * q - 1, q))
            if (n % (q + 1) != 0) add(Family::Y, {n});
        return out;
    }

    if (group == Group::SL2) {
        add(Family::Linear, {0});
        add(Family::Steinberg, {0});
        for (long long k = 1; k <= (q - 2) / 2; ++k) add(Family::Xp, {k});
        for (long long n = 1; n <= q / 2; ++n) add(Family::Yp, {n});
        if (q % 2 == 1) {
            for (long long u = 1; u <= 2; ++u) add(Family::SplitXp, {(q - 1) / 2, u});
            for (long long u = 1; u <= 2; ++u) add(Family::SplitYp, {(q + 1) / 2, u});
        }
        return out;
    }

    if (q == 2) {
        for (long long j = 0; j <= 4; ++j) add(Family::SuUnipotent, {j});
        return out;
    }
    long long r = suzuki_root(q);
    for (long long j = 0; j <= 3; ++j) add(Family::SuUnipotent, {j});
    for (long long n = 1; n <= (q - 2) / 2; ++n) add(Family::SuX, {n});
    for (long long m : orbit_reps(q + r + 1, q))
        if (m != 0) add(Family::SuY, {m});
    for (long long k : orbit_reps(q - r + 1, q))
        if (k != 0) add(Family::SuZ, {k});
    return out;
}

long long degree(const CharacterId& c) {
    long long q = c.q;
    long long r = suzuki_root(q);
    switch (c.family) {
        case Family::Linear: return 1;
        case Family::Steinberg: return q;
        case Family::X:
        case Family::Xp: return q + 1;
        case Family::Y:
        case Family::Yp: return q - 1;
        case Family::SplitXp: return (q + 1) / 2;
        case Family::SplitYp: return (q - 1) / 2;
        case Family::SuX: return q * q + 1;
        case Family::SuY: return (q - 1) * (q - r + 1);
        case Family::SuZ: return (q - 1) * (q + r + 1);
        case Family::SuUnipotent:
            if (q == 2) return c.params[0] < 4 ? 1 : 4;
            switch (c.params[0]) {
                case 0: return 1;
                case 1: return q * q;
                default: return (r / 2) * (q - 1);  // r/2 = sqrt(q/2)
            }
    }
    throw std::logic_error("bad family");
}

std::string degree_formula(const CharacterId& c) {
    switch (c.family) {
        case Family::Linear: return "1";
        case Family::Steinberg: return "q";
        case Family::X:
        case Family::Xp: return "q+1";
        case Family::Y:
        case Family::Yp: return "q-1";
        case Family::SplitXp: return "(q+1)/2";
        case Family::SplitYp: return "(q-1)/2";
        case Family::SuX: return "q^2+1";
        case Family::SuY: return "(q-1)(q-sqrt(2q)+1)";
        case Family::SuZ: return "(q-1)(q+sqrt(2q)+1)";
        case Family::SuUnipotent:
            if (c.q == 2) return c.params[0] < 4 ? "1" : "4";
            switch (c.params[0]) {
                case 0: return "1";
                case 1: return "q^2";
                default: return "sqrt(q/2)(q-1)";
            }
    }
    throw std::logic_error("bad family");
}

void for_each_value(const CharacterId& c, const ValueFn& fn) {
    long long q = c.q;
    long long r = suzuki_root(q);
    const auto& p = c.params;
    switch (c.family) {
        case Family::Linear:
        case Family::Steinberg:
            // SL2 has only the trivial and Steinberg unipotent characters,
            // both rational-valued.
            if (c.group == Group::SL2)
                fn(single("a", 0), CyclotomicInteger::one());
            else
                cyclic_values(q, p[0], fn);
            return;
        case Family::X: x_family_values(q, p[0], p[1], fn); return;
        case Family::Y: y_family_values(q, p[0], fn); return;
        case Family::Xp: real_pair_values(q - 1, p[0], (q - 2) / 2, "a", fn); return;
        case Family::Yp: real_pair_values(q + 1, p[0], (q - 1) / 2, "b", fn); return;
        case Family::SplitXp:
        case Family::SplitYp: split_value(q, fn); return;
        case Family::SuX: real_pair_values(q - 1, p[0], q - 2, "a", fn); return;
        case Family::SuY: suzuki_quad_values(q + r + 1, q, p[0], "b", fn); return;
        case Family::SuZ: suzuki_quad_values(q - r + 1, q, p[0], "c", fn); return;
        case Family::SuUnipotent:
            if (q == 2)
                suzuki_q2_values(p[0], fn);
            else
                suzuki_unipotent_values(p[0], fn);
            return;
    }
    throw std::logic_error("bad family");
}

ReducedValueSet reduced_values(const CharacterId& c) {
    ReducedValueSet set;
    set.character = c;
    std::unordered_map<std::string, size_t> index;
    for_each_value(c, [&](const Witness& w, const CyclotomicInteger& value) {
        auto key = value.encode();
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(std::move(key), set.entries.size());
            set.entries.push_back({value, {w}});
        } else {
            set.entries[it->second].witnesses.push_back(w);
        }
    });
    return set;
}

}  // namespace charcond::chartab

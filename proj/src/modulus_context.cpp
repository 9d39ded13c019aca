#include "modulus_context.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace charcond::cyclo::detail {

namespace {

constexpr long long kModulusCap = 1'000'000;

long long mod_inverse(long long a, long long m) {
    long long t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("element not invertible");
    return t < 0 ? t + m : t;
}

std::unique_ptr<ModulusContext> build_context(long long n) {
    auto ctx = std::make_unique<ModulusContext>();
    ctx->n = n;

    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        long long pe = 1;
        while (rest % p == 0) {
            rest /= p;
            pe *= p;
            ++e;
        }
        ctx->factors.emplace_back(p, e);
        ctx->prime_power.push_back(pe);
    }
    if (rest > 1) {
        ctx->factors.emplace_back(rest, 1);
        ctx->prime_power.push_back(rest);
    }

    ctx->phi = 1;
    for (std::size_t i = 0; i < ctx->factors.size(); ++i) {
        auto [p, e] = ctx->factors[i];
        long long pe = ctx->prime_power[i];
        ctx->cofactor.push_back(n / pe);
        ctx->crt_inv.push_back(mod_inverse((n / pe) % pe, pe));
        ctx->phi_pp.push_back(pe / p * (p - 1));
        ctx->low_pow.push_back(pe / p);
        ctx->phi *= pe / p * (p - 1);
    }

    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ctx->divisors.push_back(d);
        if (d * d != n) ctx->divisors.push_back(n / d);
    }
    std::sort(ctx->divisors.begin(), ctx->divisors.end());

    ctx->is_unit.assign(n, false);
    for (long long s = 0; s < n; ++s) {
        if (gcd_ll(s, n) == 1) {
            ctx->is_unit[s] = true;
            ctx->units.push_back(s);
        }
    }

    ctx->is_basis.assign(n, true);
    ctx->basis_index.assign(n, -1);
    for (long long e = 0; e < n; ++e) {
        for (std::size_t i = 0; i < ctx->factors.size(); ++i) {
            if (ctx->component(e, i) >= ctx->phi_pp[i]) {
                ctx->is_basis[e] = false;
                break;
            }
        }
        if (ctx->is_basis[e]) {
            ctx->basis_index[e] = static_cast<long long>(ctx->basis_exponents.size());
            ctx->basis_exponents.push_back(e);
        }
    }
    return ctx;
}

}  // namespace

long long ModulusContext::component(long long e, std::size_t i) const {
    return (e % prime_power[i]) * crt_inv[i] % prime_power[i];
}

const std::unordered_map<std::string, std::pair<int, long long>>& ModulusContext::roots() const {
    std::call_once(root_once, [this] {
        for (int sign : {1, -1}) {
            for (long long k = 0; k < n; ++k) {
                CyclotomicInteger value = CyclotomicInteger::make(n, {{k, BigInt(sign)}});
                root_table.emplace(value.encode(), std::make_pair(sign, k));
            }
        }
    });
    return root_table;
}

const ModulusContext& modulus_context(long long n) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    if (n % 4 == 2) throw std::invalid_argument("modulus 2 mod 4 is not canonical");
    if (n > kModulusCap) throw std::invalid_argument("modulus exceeds size cap");

    static std::mutex mu;
    static std::unordered_map<long long, std::unique_ptr<ModulusContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_context(n)).first;
    return *it->second;
}

std::vector<CyclotomicInteger::Term> normalize_terms(const ModulusContext& ctx,
                                                     std::vector<CyclotomicInteger::Term> raw) {
    const long long n = ctx.n;
    std::vector<CyclotomicInteger::Term> flat;
    flat.reserve(raw.size());

    std::vector<std::pair<BigInt, std::vector<long long>>> work;
    for (auto& [e, c] : raw) {
        if (c == 0) continue;
        long long r = e % n;
        if (r < 0) r += n;
        if (ctx.is_basis[r]) {
            flat.emplace_back(r, std::move(c));
            continue;
        }
        std::vector<long long> comps(ctx.factors.size());
        for (std::size_t i = 0; i < comps.size(); ++i) comps[i] = ctx.component(r, i);
        work.emplace_back(std::move(c), std::move(comps));
        while (!work.empty()) {
            auto [coeff, comps_cur] = std::move(work.back());
            work.pop_back();
            std::size_t bad = comps_cur.size();
            for (std::size_t i = 0; i < comps_cur.size(); ++i) {
                if (comps_cur[i] >= ctx.phi_pp[i]) {
                    bad = i;
                    break;
                }
            }
            if (bad == comps_cur.size()) {
                long long exponent = 0;
                for (std::size_t i = 0; i < comps_cur.size(); ++i)
                    exponent = (exponent + comps_cur[i] % n * (ctx.cofactor[i] % n)) % n;
                flat.emplace_back(exponent, std::move(coeff));
                continue;
            }
            // zeta^{phi(p^e)+r} = -sum_j zeta^{r + j p^{e-1}}, 0 <= j <= p-2
            auto [p, e_unused] = ctx.factors[bad];
            (void)e_unused;
            long long r2 = comps_cur[bad] - ctx.phi_pp[bad];
            for (long long j = 0; j <= p - 2; ++j) {
                auto next = comps_cur;
                next[bad] = r2 + j * ctx.low_pow[bad];
                work.emplace_back(-coeff, std::move(next));
            }
        }
    }

    std::sort(flat.begin(), flat.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<CyclotomicInteger::Term> out;
    out.reserve(flat.size());
    for (auto& [e, c] : flat) {
        if (!out.empty() && out.back().first == e) {
            out.back().second += c;
            if (out.back().second == 0) out.pop_back();
        } else {
            out.emplace_back(e, std::move(c));
        }
    }
    return out;
}

long long power_mod(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

}  // namespace charcond::cyclo::detail

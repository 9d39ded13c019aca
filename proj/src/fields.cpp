#include "charcond/fields.hpp"

#include "modulus_context.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace charcond::cyclo {

using detail::ModulusContext;
using detail::modulus_context;
using Rational = boost::multiprecision::cpp_rational;

bool FieldHandle::contains_residue(long long s) const {
    long long r = s % ambient;
    if (r < 0) r += ambient;
    return std::binary_search(stabilizer.begin(), stabilizer.end(), r);
}

namespace {

long long stabilizer_conductor(const ModulusContext& ctx, const std::vector<bool>& stab_mask) {
    for (long long d : ctx.divisors) {
        bool contained = true;
        for (long long s = 1 + d; s < ctx.n; s += d) {
            if (!ctx.is_unit[s]) continue;
            if (!stab_mask[s]) {
                contained = false;
                break;
            }
        }
        if (contained) return d;
    }
    return ctx.n;
}

}  // namespace

FieldHandle field_of_set(const std::vector<CyclotomicInteger>& values) {
    if (values.empty()) return FieldHandle{1, {0}, 1};

    long long n = 1;
    for (const auto& v : values) n = lcm_ll(n, v.modulus());
    std::vector<CyclotomicInteger> lifted;
    lifted.reserve(values.size());
    for (const auto& v : values) lifted.push_back(v.embed(n));

    const ModulusContext& ctx = modulus_context(n);
    FieldHandle handle;
    handle.ambient = n;
    std::vector<bool> mask(n, false);
    for (long long s : ctx.units) {
        bool fixes_all = true;
        for (const auto& v : lifted) {
            if (!v.fixed_by(s)) {
                fixes_all = false;
                break;
            }
        }
        if (fixes_all) {
            mask[s] = true;
            handle.stabilizer.push_back(s);
        }
    }
    handle.conductor = stabilizer_conductor(ctx, mask);
    return handle;
}

FieldHandle field_of_element(const CyclotomicInteger& value) {
    return field_of_set({value});
}

bool field_equal(const FieldHandle& a, const FieldHandle& b) {
    long long m = lcm_ll(a.ambient, b.ambient);
    const ModulusContext& ctx = modulus_context(m);
    for (long long s : ctx.units) {
        if (a.contains_residue(s) != b.contains_residue(s)) return false;
    }
    return true;
}

long long index_in_conductor_field(const CyclotomicInteger& a) {
    const ModulusContext& ctx = modulus_context(a.modulus());
    long long stab = 0;
    for (long long s : ctx.units)
        if (a.fixed_by(s)) ++stab;
    long long c = a.conductor();
    return stab * modulus_context(c).phi / ctx.phi;
}

namespace {

// Coordinates of `a` over the tensor basis of its own modulus.
std::vector<Rational> coordinate_vector(const CyclotomicInteger& a, const ModulusContext& ctx) {
    std::vector<Rational> v(ctx.phi, Rational(0));
    for (const auto& [e, c] : a.terms()) v[ctx.basis_index[e]] = Rational(c);
    return v;
}

// Row-echelon basis of the Q-span of Z[zeta_d] inside Q(zeta_n); each row is a
// coordinate vector of length phi(n).
std::vector<std::vector<Rational>> subfield_rows(long long n, long long d) {
    const ModulusContext& ctx = modulus_context(n);
    long long dd = d % 4 == 2 ? d / 2 : d;
    const ModulusContext& sub = modulus_context(dd);

    std::vector<std::vector<Rational>> rows;
    for (long long j : sub.basis_exponents) {
        CyclotomicInteger b = CyclotomicInteger::root(dd, j).embed(n);
        rows.push_back(coordinate_vector(b, ctx));
    }

    // Forward elimination into echelon form.
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(ctx.phi) && pivot_row < rows.size();
         ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[pivot_row][col];
            for (std::size_t k = col; k < rows[r].size(); ++k)
                rows[r][k] -= f * rows[pivot_row][k];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

bool reduces_to_zero(std::vector<Rational> v, const std::vector<std::vector<Rational>>& rows) {
    for (const auto& row : rows) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        if (v[p] == 0) continue;
        Rational f = v[p] / row[p];
        for (std::size_t k = p; k < v.size(); ++k) v[k] -= f * row[k];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

bool subfield_membership_oracle(const CyclotomicInteger& a, long long d) {
    if (d < 1 || a.modulus() % d != 0)
        throw std::invalid_argument("divisor must divide the modulus");
    const ModulusContext& ctx = modulus_context(a.modulus());
    return reduces_to_zero(coordinate_vector(a, ctx), subfield_rows(a.modulus(), d));
}

struct MembershipCache::Impl {
    std::map<std::pair<long long, long long>, std::vector<std::vector<Rational>>> rows;
};

MembershipCache::MembershipCache() : impl_(std::make_unique<Impl>()) {}
MembershipCache::~MembershipCache() = default;

bool MembershipCache::contains(const CyclotomicInteger& a, long long d) {
    if (d < 1 || a.modulus() % d != 0)
        throw std::invalid_argument("divisor must divide the modulus");
    auto key = std::make_pair(a.modulus(), d);
    auto it = impl_->rows.find(key);
    if (it == impl_->rows.end())
        it = impl_->rows.emplace(key, subfield_rows(a.modulus(), d)).first;
    const ModulusContext& ctx = modulus_context(a.modulus());
    return reduces_to_zero(coordinate_vector(a, ctx), it->second);
}

long long conductor_by_membership(const CyclotomicInteger& a) {
    MembershipCache cache;
    return conductor_by_membership(a, cache);
}

long long conductor_by_membership(const CyclotomicInteger& a, MembershipCache& cache) {
    const ModulusContext& ctx = modulus_context(a.modulus());
    for (long long d : ctx.divisors) {
        if (d % 4 == 2) continue;
        if (cache.contains(a, d)) return d;
    }
    return a.modulus();
}

}  // namespace charcond::cyclo

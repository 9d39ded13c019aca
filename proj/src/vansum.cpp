#include "charcond/vansum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>

namespace charcond::vansum {

using cyclo::gcd_ll;
using cyclo::lcm_ll;

namespace {

long long canonical_modulus(long long n) { return n % 4 == 2 ? n / 2 : n; }

std::complex<double> unit(long long order, long long exponent) {
    const double pi = std::acos(-1.0);
    double x = 2.0 * pi * static_cast<double>(exponent) / static_cast<double>(order);
    return {std::cos(x), std::sin(x)};
}

std::complex<double> numeric(const CyclotomicInteger& a) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [e, c] : a.terms()) s += c.convert_to<double>() * unit(a.modulus(), e);
    return s;
}

// Quotient of two roots of unity, reduced to lowest order.
RootOfUnity root_ratio(const RootOfUnity& a, const RootOfUnity& b) {
    RootOfUnity ra = a.reduced();
    RootOfUnity rb = b.reduced();
    long long l = lcm_ll(ra.modulus, rb.modulus);
    long long e = ra.exponent * (l / ra.modulus) - rb.exponent * (l / rb.modulus);
    return RootOfUnity(l, e).reduced();
}

CyclotomicInteger exact_root(const RootOfUnity& r, long long target_modulus) {
    return CyclotomicInteger::root(r.modulus, r.exponent).embed(target_modulus);
}

long long common_modulus(const std::vector<RootOfUnity>& terms) {
    long long l = 1;
    for (const auto& r : terms) l = lcm_ll(l, r.order());
    return canonical_modulus(l);
}

CyclotomicInteger exact_sum(const std::vector<RootOfUnity>& terms) {
    long long m = common_modulus(terms);
    auto acc = CyclotomicInteger::zero().embed(m);
    for (const auto& r : terms) acc = acc + exact_root(r, m);
    return acc;
}

}  // namespace

RootOfUnity to_plain_root(const SignedRoot& r) {
    RootOfUnity root = r.root.reduced();
    if (r.sign >= 0) return root;
    long long o = root.modulus;
    if (o % 2 == 1) return RootOfUnity(2 * o, o + 2 * root.exponent).reduced();
    return RootOfUnity(o, root.exponent + o / 2).reduced();
}

std::vector<RootOfUnity> rotation_normal_form(const std::vector<RootOfUnity>& terms) {
    if (terms.empty()) throw std::invalid_argument("normal form of an empty sum");
    std::vector<RootOfUnity> best;
    for (const auto& pivot : terms) {
        std::vector<RootOfUnity> rotated;
        rotated.reserve(terms.size());
        for (const auto& t : terms) rotated.push_back(root_ratio(t, pivot));
        std::sort(rotated.begin(), rotated.end());
        if (best.empty() || rotated < best) best = std::move(rotated);
    }
    return best;
}

const std::vector<VanishingClass>& reference_table() {
    static const std::vector<VanishingClass> table = [] {
        auto row = [](std::string label, std::vector<RootOfUnity> terms) {
            VanishingClass c;
            c.term_count = static_cast<int>(terms.size());
            c.canonical_terms = rotation_normal_form(terms);
            c.label = std::move(label);
            return c;
        };
        std::vector<VanishingClass> t;
        t.push_back(row("2", {{1, 0}, {2, 1}}));
        t.push_back(row("3", {{1, 0}, {3, 1}, {3, 2}}));
        t.push_back(row("5", {{1, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}}));
        t.push_back(row("6", {{6, 1}, {6, 5}, {5, 1}, {5, 2}, {5, 3}, {5, 4}}));
        t.push_back(row("7a", {{1, 0}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5}, {7, 6}}));
        t.push_back(row("7b", {{6, 1}, {6, 5}, {30, 11}, {30, 1}, {5, 2}, {5, 3}, {5, 4}}));
        t.push_back(row("7c", {{6, 1}, {6, 5}, {5, 1}, {30, 17}, {30, 7}, {5, 3}, {5, 4}}));
        return t;
    }();
    return table;
}

namespace {

std::string match_reference(int term_count, const std::vector<RootOfUnity>& normal_form) {
    for (const auto& row : reference_table())
        if (row.term_count == term_count && row.canonical_terms == normal_form) return row.label;
    return "unlisted";
}

// First (smallest positions) vanishing subset of `remaining` with exactly
// `size` elements; positions index into `remaining`.
bool find_vanishing_subset(const std::vector<CyclotomicInteger>& elements,
                           const std::vector<int>& remaining, std::size_t size,
                           std::vector<int>& out) {
    std::vector<int> picked;
    auto rec = [&](auto&& self, std::size_t from, const CyclotomicInteger& sum) -> bool {
        if (picked.size() == size) {
            if (!sum.is_zero()) return false;
            out = picked;
            return true;
        }
        for (std::size_t i = from; i + (size - picked.size()) <= remaining.size(); ++i) {
            picked.push_back(remaining[i]);
            if (self(self, i + 1, sum + elements[remaining[i]])) return true;
            picked.pop_back();
        }
        return false;
    };
    return rec(rec, 0, CyclotomicInteger::zero().embed(elements.empty() ? 1 : elements[0].modulus()));
}

}  // namespace

std::vector<VanishingClass> classify_vanishing(const std::vector<RootOfUnity>& terms) {
    std::vector<RootOfUnity> reduced;
    reduced.reserve(terms.size());
    for (const auto& t : terms) reduced.push_back(t.reduced());

    if (reduced.empty()) return {};
    long long m = common_modulus(reduced);
    std::vector<CyclotomicInteger> elements;
    elements.reserve(reduced.size());
    auto total = CyclotomicInteger::zero().embed(m);
    for (const auto& r : reduced) {
        elements.push_back(exact_root(r, m));
        total = total + elements.back();
    }
    if (!total.is_zero()) throw std::domain_error("terms do not sum to zero");

    std::vector<int> remaining(reduced.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = static_cast<int>(i);

    std::vector<VanishingClass> parts;
    while (!remaining.empty()) {
        std::vector<int> subset;
        bool found = false;
        for (std::size_t size = 2; size <= std::min<std::size_t>(7, remaining.size()); ++size) {
            if (find_vanishing_subset(elements, remaining, size, subset)) {
                found = true;
                break;
            }
        }
        if (!found) subset = remaining;  // leftover vanishes but has no small part

        VanishingClass part;
        std::vector<RootOfUnity> part_roots;
        for (int i : subset) part_roots.push_back(reduced[i]);
        part.term_count = static_cast<int>(part_roots.size());
        part.canonical_terms = rotation_normal_form(part_roots);
        part.label = found ? match_reference(part.term_count, part.canonical_terms)
                           : "unclassified";
        parts.push_back(std::move(part));

        std::vector<int> next;
        for (int i : remaining)
            if (std::find(subset.begin(), subset.end(), i) == subset.end()) next.push_back(i);
        remaining = std::move(next);
    }
    return parts;
}

std::vector<VanishingClass> classify_vanishing(const std::vector<SignedRoot>& terms) {
    std::vector<RootOfUnity> plain;
    plain.reserve(terms.size());
    for (const auto& t : terms) plain.push_back(to_plain_root(t));
    return classify_vanishing(plain);
}

long long min_rep_order_bound(const CyclotomicInteger& a) { return lcm_ll(2, a.conductor()); }

namespace {

// Index of the plain root `r` in the universe of roots of order dividing L,
// or -1 when its order does not divide L.
long long universe_index(const RootOfUnity& r, long long bound) {
    RootOfUnity red = r.reduced();
    if (bound % red.modulus != 0) return -1;
    return red.exponent * (bound / red.modulus);
}

// Completion step: is the exact remainder a single universe root with index
// at least `min_index`?
long long complete_one(const CyclotomicInteger& remainder, long long bound, long long min_index) {
    auto sr = remainder.as_root_of_unity();
    if (!sr) return -1;
    long long j = universe_index(to_plain_root(*sr), bound);
    if (j < min_index) return -1;
    return j;
}

struct MinRepSearch {
    const CyclotomicInteger& target;
    long long bound;                            // universe: roots of order dividing this
    long long modulus;                          // ambient modulus of exact arithmetic
    std::vector<CyclotomicInteger> roots;       // universe roots, exact
    std::vector<std::complex<double>> numeric_roots;
    std::complex<double> numeric_target;

    MinRepSearch(const CyclotomicInteger& a, long long l)
        : target(a), bound(l), modulus(a.modulus()) {
        roots.reserve(bound);
        numeric_roots.reserve(bound);
        for (long long j = 0; j < bound; ++j) {
            roots.push_back(CyclotomicInteger::root(bound, j).embed(modulus));
            numeric_roots.push_back(unit(bound, j));
        }
        numeric_target = numeric(a);
    }

    void dfs(int k, int depth, long long from, const CyclotomicInteger& remainder,
             std::complex<double> numeric_remainder, std::vector<long long>& chosen,
             std::vector<std::vector<long long>>& solutions) const {
        if (std::abs(numeric_remainder) >
            static_cast<double>(k - depth) + 1e-9)
            return;
        if (depth == k - 1) {
            long long j = complete_one(remainder, bound, from);
            if (j >= 0) {
                chosen.push_back(j);
                solutions.push_back(chosen);
                chosen.pop_back();
            }
            return;
        }
        for (long long j = from; j < bound; ++j) {
            chosen.push_back(j);
            dfs(k, depth + 1, j, remainder - roots[j], numeric_remainder - numeric_roots[j],
                chosen, solutions);
            chosen.pop_back();
        }
    }

    std::vector<std::vector<long long>> solve(int k) const {
        std::vector<std::vector<long long>> solutions;
        if (k == 0) {
            if (target.is_zero()) solutions.push_back({});
            return solutions;
        }
        if (k == 4 && bound <= 600) {
            meet_in_the_middle(solutions);
            return solutions;
        }
        std::vector<long long> chosen;
        dfs(k, 0, 0, target, numeric_target, chosen, solutions);
        return solutions;
    }

    // Pair sums hashed by canonical form; every 4-multiset splits uniquely
    // into its first and second pair, with the join index ordered.
    void meet_in_the_middle(std::vector<std::vector<long long>>& solutions) const {
        std::map<std::string, std::vector<std::pair<long long, long long>>> pairs;
        for (long long j1 = 0; j1 < bound; ++j1)
            for (long long j2 = j1; j2 < bound; ++j2)
                pairs[(roots[j1] + roots[j2]).encode()].push_back({j1, j2});
        for (long long j1 = 0; j1 < bound; ++j1) {
            for (long long j2 = j1; j2 < bound; ++j2) {
                std::complex<double> rem =
                    numeric_target - numeric_roots[j1] - numeric_roots[j2];
                if (std::abs(rem) > 2.0 + 1e-9) continue;
                auto it = pairs.find((target - roots[j1] - roots[j2]).encode());
                if (it == pairs.end()) continue;
                const auto& list = it->second;
                auto lo = std::lower_bound(list.begin(), list.end(),
                                           std::make_pair(j2, j2));
                for (auto p = lo; p != list.end(); ++p)
                    solutions.push_back({j1, j2, p->first, p->second});
            }
        }
    }

    std::vector<RootOfUnity> reduced_terms(const std::vector<long long>& indices) const {
        std::vector<RootOfUnity> out;
        out.reserve(indices.size());
        for (long long j : indices) out.push_back(RootOfUnity(bound, j).reduced());
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

std::optional<MinRepResult> min_rep(const CyclotomicInteger& a, int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    long long bound = min_rep_order_bound(a);
    // The conductor divides the modulus, so the whole universe embeds there.
    MinRepSearch search(a, bound);
    for (int k = 0; k <= k_max; ++k) {
        auto solutions = search.solve(k);
        if (solutions.empty()) continue;
        std::vector<RootOfUnity> best;
        for (const auto& s : solutions) {
            auto terms = search.reduced_terms(s);
            if (best.empty() && k > 0) {
                best = std::move(terms);
            } else if (k > 0 && terms < best) {
                best = std::move(terms);
            }
        }
        MinRepResult result;
        result.length = k;
        result.terms = std::move(best);
        result.exhausted_bound = bound;
        return result;
    }
    return std::nullopt;
}

std::vector<VanishingClass> enumerate_minimal_vanishing(int k, long long order_bound) {
    if (k < 2 || k > 7) throw std::invalid_argument("term count must lie in 2..7");
    if (order_bound < 1) throw std::invalid_argument("order bound must be positive");

    // A prime p > k cannot appear in a minimal vanishing sum of k terms: the
    // p-power blocks would all need equal sums, forcing either p nonempty
    // blocks (too many terms) or a lone block, i.e. a rotation from a smaller
    // universe. A prime p = k contributes exactly the full p-th orbit.
    long long m = order_bound;
    std::vector<long long> primes;
    long long rest = order_bound;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) primes.push_back(rest);
    std::vector<long long> orbit_primes;
    for (long long p : primes) {
        if (p < k) continue;
        if (p == k) orbit_primes.push_back(p);
        while (m % p == 0) m /= p;
    }

    std::set<std::vector<RootOfUnity>> found;

    auto verify_and_insert = [&](const std::vector<RootOfUnity>& candidate) {
        if (!exact_sum(candidate).is_zero()) return;
        long long cm = common_modulus(candidate);
        std::vector<CyclotomicInteger> exact;
        for (const auto& r : candidate) exact.push_back(exact_root(r, cm));
        int n = static_cast<int>(candidate.size());
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            auto sub = CyclotomicInteger::zero().embed(cm);
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub = sub + exact[i];
            if (sub.is_zero()) return;  // a proper sub-sum vanishes
        }
        found.insert(rotation_normal_form(candidate));
    };

    // Exhaustive scan over the reduced universe; every rotation class with a
    // vanishing sum has a representative containing 1, so the first exponent
    // is fixed to zero.
    std::vector<std::complex<double>> units;
    units.reserve(m);
    for (long long e = 0; e < m; ++e) units.push_back(unit(m, e));

    std::vector<long long> exps{0};
    auto rec = [&](auto&& self, long long from, std::complex<double> partial) -> void {
        int rest = k - static_cast<int>(exps.size());
        if (std::abs(partial) > static_cast<double>(rest) + 1e-9) return;
        if (rest == 0) {
            if (std::abs(partial) > 1e-6) return;
            std::vector<RootOfUnity> candidate;
            candidate.reserve(exps.size());
            for (long long e : exps) candidate.push_back(RootOfUnity(m, e).reduced());
            verify_and_insert(candidate);
            return;
        }
        for (long long e = from; e < m; ++e) {
            exps.push_back(e);
            self(self, e, partial + units[e]);
            exps.pop_back();
        }
    };
    rec(rec, 0, units[0]);

    for (long long p : orbit_primes) {
        std::vector<RootOfUnity> orbit;
        for (long long e = 0; e < p; ++e) orbit.push_back(RootOfUnity(p, e).reduced());
        verify_and_insert(orbit);
    }

    std::vector<VanishingClass> classes;
    for (const auto& nf : found) {
        VanishingClass c;
        c.term_count = static_cast<int>(nf.size());
        c.canonical_terms = nf;
        c.label = match_reference(c.term_count, nf);
        classes.push_back(std::move(c));
    }
    return classes;
}

}  // namespace charcond::vansum

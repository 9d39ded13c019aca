#pragma once

#include "charcond/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charcond::vansum {

using cyclo::CyclotomicInteger;
using cyclo::RootOfUnity;
using cyclo::SignedRoot;

/**
 * Shortest presentation of a cyclotomic integer as a sum of roots of unity,
 * searched over roots whose orders divide `exhausted_bound`. The bound is
 * lcm(2, conductor) of the queried element; for representations of minimal
 * length this universe is exhaustive, so an absent result for small k_max
 * means no shorter presentation exists at all, while an absent result at the
 * requested maximum only certifies "none within the bound".
 */
struct MinRepResult {
    int length = 0;
    std::vector<RootOfUnity> terms;  // reduced and sorted; sums to the query
    long long exhausted_bound = 2;
};

/** Order bound used by min_rep searches: lcm(2, conductor(a)). */
long long min_rep_order_bound(const CyclotomicInteger& a);

/**
 * Searches k = 0, 1, ..., k_max for a presentation of `a` as a sum of k roots
 * of unity with orders dividing min_rep_order_bound(a). Returns the first
 * length that admits one, with the lexicographically least term list among
 * equal-length presentations; absent when none exists within the bound.
 */
std::optional<MinRepResult> min_rep(const CyclotomicInteger& a, int k_max);

/** One rotation class of minimal vanishing sums of roots of unity. */
struct VanishingClass {
    int term_count = 0;
    std::vector<RootOfUnity> canonical_terms;  // rotation normal form
    std::string label;                         // reference row id, or "unclassified"
};

/**
 * Canonical form of a term list under rotation: divide all terms by one of
 * them, reduce, and sort; the lexicographically least outcome over all pivot
 * choices. Two term lists are rotations of one another iff their normal forms
 * coincide, regardless of the moduli they were written with.
 */
std::vector<RootOfUnity> rotation_normal_form(const std::vector<RootOfUnity>& terms);

/** The built-in classification of minimal vanishing sums with at most 7 terms. */
const std::vector<VanishingClass>& reference_table();

/**
 * Partitions a vanishing sum of signed roots into minimal vanishing sub-sums,
 * extracting the smallest sub-sum first (ties broken toward earlier input
 * positions) and naming each part by its reference-table row. A leftover with
 * no vanishing sub-sum of at most 7 terms becomes a single part labeled
 * "unclassified". Inputs that do not sum to zero are rejected.
 */
std::vector<VanishingClass> classify_vanishing(const std::vector<SignedRoot>& terms);
std::vector<VanishingClass> classify_vanishing(const std::vector<RootOfUnity>& terms);

/**
 * Exhaustively enumerates rotation classes of minimal vanishing sums with
 * exactly k terms (2 <= k <= 7) drawn from roots of order dividing
 * order_bound, returned sorted by normal form.
 */
std::vector<VanishingClass> enumerate_minimal_vanishing(int k, long long order_bound);

/** Signed root rewritten as a plain root of unity (of possibly doubled order). */
RootOfUnity to_plain_root(const SignedRoot& r);

}  // namespace charcond::vansum

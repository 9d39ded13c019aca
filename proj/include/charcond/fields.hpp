#pragma once

#include "charcond/cyclotomic.hpp"

#include <memory>
#include <vector>

namespace charcond::cyclo {

/**
 * FieldHandle: the subfield of Q(zeta_ambient) cut out by a subgroup of
 * (Z/ambient)^x, recorded as the sorted list of residues fixing the field.
 * `conductor` is the smallest divisor d of ambient with the whole kernel
 * {s = 1 mod d} inside the stabilizer, i.e. the conductor of the field.
 */
struct FieldHandle {
    long long ambient = 1;
    std::vector<long long> stabilizer;  // sorted residues mod ambient
    long long conductor = 1;

    bool contains_residue(long long s) const;
};

/// Field generated by a set of values; inputs are lifted to the lcm of their
/// moduli first.  The empty set yields the rational field handle.
FieldHandle field_of_set(const std::vector<CyclotomicInteger>& values);

FieldHandle field_of_element(const CyclotomicInteger& value);

/// Equality as subfields of a common cyclotomic overfield.
bool field_equal(const FieldHandle& a, const FieldHandle& b);

/// Index [Q(zeta_c) : Q(a)] for c = conductor(a), via the stabilizer order.
long long index_in_conductor_field(const CyclotomicInteger& a);

/**
 * Subfield membership decided by exact rational linear algebra: a lies in
 * Q(zeta_d) iff its coordinate vector is a rational combination of the
 * embedded basis of Z[zeta_d].  Wholly independent of the Galois-fixedness
 * route, which makes it the cross-checking oracle for conductor().
 * Requires d >= 1 and d | modulus(a).
 */
bool subfield_membership_oracle(const CyclotomicInteger& a, long long d);

/// Caches the eliminated basis matrices so repeated membership queries against
/// the same (modulus, divisor) pair cost one back-substitution each.
class MembershipCache {
  public:
    MembershipCache();
    ~MembershipCache();
    MembershipCache(const MembershipCache&) = delete;
    MembershipCache& operator=(const MembershipCache&) = delete;

    bool contains(const CyclotomicInteger& a, long long d);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Conductor recomputed through subfield_membership_oracle only.
long long conductor_by_membership(const CyclotomicInteger& a);
long long conductor_by_membership(const CyclotomicInteger& a, MembershipCache& cache);

}  // namespace charcond::cyclo

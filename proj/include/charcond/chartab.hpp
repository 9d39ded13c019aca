#pragma once

#include "charcond/cyclotomic.hpp"

#include <functional>
#include <string>
#include <vector>

namespace charcond::chartab {

enum class Group { GL2, SL2, Suzuki };

enum class Family {
    Linear,
    Steinberg,
    X,            // GL2 principal-series pairs (m, n)
    Y,            // GL2 non-split torus characters (n)
    Xp,           // SL2 restrictions of X(0, k)
    Yp,           // SL2 restrictions of Y(n)
    SplitXp,      // the two halves of the decomposing X'((q-1)/2)
    SplitYp,      // the two halves of the decomposing Y'((q+1)/2)
    SuX,          // Suzuki split-torus characters
    SuY,          // Suzuki torus of order q + sqrt(2q) + 1
    SuZ,          // Suzuki torus of order q - sqrt(2q) + 1
    SuUnipotent,  // Suzuki unipotent characters (and the whole q = 2 case)
};

std::string group_name(Group g);
std::string family_name(Family f);

/**
 * CharacterId: one irreducible character, addressed by group, field size q,
 * family tag, and the family's parameter tuple.  Ordering is lexicographic on
 * (group, q, family, params), which fixes the sweep order everywhere.
 */
struct CharacterId {
    Group group;
    long long q;
    Family family;
    std::vector<long long> params;

    std::string display_name() const;  // e.g. "GL2(5) X(0,1)"

    friend bool operator==(const CharacterId& a, const CharacterId& b) {
        return a.group == b.group && a.q == b.q && a.family == b.family && a.params == b.params;
    }
    friend bool operator<(const CharacterId& a, const CharacterId& b);
};

/**
 * Witness: the parameter tuple of one printed value, e.g. {a} or {c, d}.
 * Families with several parameter domains prefix a domain index so tuples from
 * different domains never collide; `label` is the printable form ("a=3",
 * "(c,d)=(0,2)").  Witness order (lexicographic on params) breaks ties when a
 * verification report must name a single witness.
 */
struct Witness {
    std::vector<long long> params;
    std::string label;

    friend bool operator<(const Witness& a, const Witness& b) { return a.params < b.params; }
    friend bool operator==(const Witness& a, const Witness& b) { return a.params == b.params; }
};

/**
 * ReducedValueSet: the character's printed value set with every witness
 * retained.  Entries are deduplicated by exact value, in order of first
 * appearance; a value reachable from several witnesses lists them all.
 */
struct ReducedValueSet {
    struct Entry {
        cyclo::CyclotomicInteger value;
        std::vector<Witness> witnesses;
    };

    CharacterId character;
    std::vector<Entry> entries;
};

/// Least representatives of the orbits of x -> multiplier * x mod modulus,
/// in ascending order.  Throws if gcd(multiplier, modulus) != 1.
std::vector<long long> orbit_reps(long long modulus, long long multiplier);

/// Complete list of irreducible characters of the group over F_q, in sweep
/// order.  Validates q (prime power; for Suzuki, an odd power of 2).
std::vector<CharacterId> enumerate(Group group, long long q);

/// Character degree and its closed-form label (metadata only).
long long degree(const CharacterId& c);
std::string degree_formula(const CharacterId& c);

/// Streams the value set without materializing it: calls fn once per printed
/// witness, in a fixed generation order.  Values repeat when witnesses share
/// a value.
void for_each_value(const CharacterId& c,
                    const std::function<void(const Witness&, const cyclo::CyclotomicInteger&)>& fn);

/// Materialized, witness-retaining form of for_each_value.
ReducedValueSet reduced_values(const CharacterId& c);

}  // namespace charcond::chartab

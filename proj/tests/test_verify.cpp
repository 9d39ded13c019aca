#include <doctest.h>

#include "charcond/verify.hpp"

#include <set>

using namespace charcond::verify;
using charcond::chartab::CharacterId;
using charcond::chartab::Family;
using charcond::chartab::Group;
using charcond::cyclo::CyclotomicInteger;

TEST_SUITE("verify") {

TEST_CASE("cyclic character attains its conductor at the generator") {
    auto rep = verify_character({Group::GL2, 5, Family::Linear, {1}});
    CHECK(rep.conductor == 4);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->label == "a=1");
    CHECK(*rep.witness_value == CyclotomicInteger::root(4, 1));
    CHECK(rep.field_conductor_equal);
    CHECK(rep.generating_subset_size == 1);
    CHECK(rep.pass);
}

TEST_CASE("principal series case analysis at small q") {
    // (0,1) at q=5: the pair (0,1) evaluates to 1+i, a generic two-term sum.
    auto generic = verify_character({Group::GL2, 5, Family::X, {0, 1}});
    CHECK(generic.conductor == 4);
    CHECK(generic.case_label == "I-generic");
    REQUIRE(generic.witness.has_value());
    CHECK(generic.witness->label == "a=1");  // value i, least witness overall
    CHECK(generic.predicted_witness->label == "(c,d)=(0,1)");
    CHECK(generic.predicted_witness_ok);
    CHECK(generic.pass);

    // (1,3) at q=5: every solution of 3c+d=1 gives i^{3c+d} + i^{3d+c} = 0;
    // the value set is rational and the doubled pair predicts the conductor.
    auto zero = verify_character({Group::GL2, 5, Family::X, {1, 3}});
    CHECK(zero.conductor == 1);
    CHECK(zero.case_label == "II-zero");
    CHECK(zero.predicted_witness->label == "(c,d)=(0,2)");
    CHECK(zero.predicted_value->rational_value() == -2);
    CHECK(zero.predicted_witness_ok);
    CHECK(zero.generating_subset_size == 0);
    CHECK(zero.pass);

    // (1,5) at q=7: the single solution family gives zeta_6 + zeta_6^5 = 1,
    // a root of unity, and indeed the whole value set is rational.
    auto one_root = verify_character({Group::GL2, 7, Family::X, {1, 5}});
    CHECK(one_root.conductor == 1);
    CHECK(one_root.case_label == "III-one-root");
    CHECK(one_root.predicted_witness->label == "(c,d)=(0,1)");
    CHECK(one_root.predicted_witness_ok);
    CHECK(one_root.pass);
}

TEST_CASE("non-split torus case analysis at q = 5") {
    // n=1: eta + eta^5 is generic; the conductor 24 is attained at e=1.
    auto generic = verify_character({Group::GL2, 5, Family::Y, {1}});
    CHECK(generic.conductor == 24);
    CHECK(generic.case_label == "generic");
    REQUIRE(generic.witness.has_value());
    CHECK(generic.witness->label == "e=1");
    CHECK(generic.predicted_witness->label == "e=1");
    CHECK(generic.pass);

    // n=3: eta^3 + eta^15 = zeta_8 + zeta_8^5 = 0; conductor from -2*eta^6.
    auto zero = verify_character({Group::GL2, 5, Family::Y, {3}});
    CHECK(zero.conductor == 4);
    CHECK(zero.case_label == "zero");
    CHECK(zero.predicted_witness->label == "e=2");
    CHECK(charcond::cyclo::value_equal(*zero.predicted_value,
                                       CyclotomicInteger::make(4, {{1, -2}})));
    CHECK(zero.predicted_witness_ok);
    CHECK(zero.witness->label == "a=1");  // -i appears already among eta^{6a}
    CHECK(zero.pass);

    // n=2: eta^2 + eta^10 = i, a single root.
    auto one_root = verify_character({Group::GL2, 5, Family::Y, {2}});
    CHECK(one_root.conductor == 4);
    CHECK(one_root.case_label == "one-root");
    CHECK(one_root.predicted_witness->label == "e=1");
    CHECK(one_root.predicted_value->as_root_of_unity().has_value());
    CHECK(one_root.pass);
}

TEST_CASE("vanishing pairs require an even torus order") {
    for (long long q : {2, 4, 8}) {
        CAPTURE(q);
        for (const auto& c : charcond::chartab::enumerate(Group::GL2, q))
            if (c.family == Family::Y)
                CHECK(verify_character(c).case_label != "zero");
    }
}

TEST_CASE("special linear reports certify field generation") {
    auto yp = verify_character({Group::SL2, 7, Family::Yp, {1}});
    CHECK(yp.conductor == 8);
    CHECK(yp.witness->label == "b=1");
    CHECK(yp.field_generated_by_witness);
    CHECK(yp.generating_subset_size == 1);
    CHECK(yp.pass);

    auto split5 = verify_character({Group::SL2, 5, Family::SplitXp, {2, 1}});
    CHECK(split5.conductor == 5);
    CHECK(split5.witness->label == "g");
    CHECK(split5.pass);

    // q = 9: the gauss sum collapses to the rational 3.
    auto split9 = verify_character({Group::SL2, 9, Family::SplitYp, {5, 1}});
    CHECK(split9.conductor == 1);
    CHECK(split9.generating_subset_size == 0);
    CHECK(split9.witness.has_value());
    CHECK(split9.pass);

    // q = 2: the reduced value set of Yp(1) is empty (all values rational).
    auto empty = verify_character({Group::SL2, 2, Family::Yp, {1}});
    CHECK(empty.conductor == 1);
    CHECK(!empty.witness.has_value());
    CHECK(empty.generating_subset_size == 0);
    CHECK(empty.pass);
}

TEST_CASE("suzuki torus reports") {
    auto suy = verify_character({Group::Suzuki, 8, Family::SuY, {1}});
    CHECK(suy.conductor == 13);
    CHECK(suy.witness->label == "b=1");
    CHECK(suy.case_label == "generic");  // alpha_1 needs all four roots
    CHECK(suy.field_generated_by_witness);
    CHECK(suy.pass);

    // The order-5 torus: alpha_1 is the full orbit sum -1, a single root.
    auto suz = verify_character({Group::Suzuki, 8, Family::SuZ, {1}});
    CHECK(suz.conductor == 1);
    CHECK(suz.case_label == "one-root");
    CHECK(suz.predicted_value->rational_value() == 1);
    CHECK(suz.pass);

    for (const auto& rep : verify_group(Group::Suzuki, 8)) {
        CAPTURE(rep.character.display_name());
        CHECK(rep.pass);
        if (rep.case_label) CHECK(*rep.case_label != "vanishing");
    }
}

TEST_CASE("full sweeps pass at small field sizes") {
    std::set<std::string> seen_x_labels;
    for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        for (const auto& rep : verify_group(Group::GL2, q)) {
            CAPTURE(rep.character.display_name());
            CHECK(rep.pass);
            CHECK(rep.field_conductor_equal);
            CHECK(rep.predicted_witness_ok);
            CHECK(rep.generating_subset_size <= 1);
            if (rep.character.family == Family::X) seen_x_labels.insert(*rep.case_label);
        }
        for (const auto& rep : verify_group(Group::SL2, q)) {
            CAPTURE(rep.character.display_name());
            CHECK(rep.pass);
            CHECK(rep.field_generated_by_witness);
        }
    }
    // The scan must have exercised several branches of the case analysis.
    CHECK(seen_x_labels.count("I-generic") == 1);
    CHECK(seen_x_labels.count("II-zero") == 1);
}

TEST_CASE("concurrent verification is deterministic") {
    auto serial = verify_group(Group::GL2, 7, 2, 1);
    auto parallel = verify_group(Group::GL2, 7, 2, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].character == parallel[i].character);
        CHECK(serial[i].conductor == parallel[i].conductor);
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].witness.has_value() == parallel[i].witness.has_value());
        if (serial[i].witness)
            CHECK(serial[i].witness->params == parallel[i].witness->params);
        CHECK(serial[i].case_label == parallel[i].case_label);
    }
}

TEST_CASE("subset cap validation") {
    CHECK_THROWS_AS(verify_character({Group::GL2, 5, Family::Linear, {1}}, 0),
                    std::invalid_argument);
}

}  // TEST_SUITE

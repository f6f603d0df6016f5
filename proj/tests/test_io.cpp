#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hodge/io.hpp"

using namespace hodge;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

} // namespace

TEST_CASE("scalars") {
    CHECK(scalarToJson(Gauss(3)) == Json(3));
    CHECK(scalarToJson(Gauss(frac(1, 2))) == Json("1/2"));
    for (const Gauss& g : {Gauss(0), Gauss(-7), Gauss(frac(-3, 4)), Gauss(0, 1), Gauss(frac(1, 2), frac(-5, 3)), Gauss(0, -2)})
        CHECK(scalarFromJson(scalarToJson(g), "") == g);
    CHECK(scalarFromJson(Json("-i"), "") == Gauss(0, -1));
    CHECK_THROWS_AS(scalarFromJson(Json(0.5), "/x"), InputError);
    CHECK_THROWS_AS(scalarFromJson(Json("abc"), "/x"), InputError);
}

TEST_CASE("degeneration data round trip") {
    for (const char* name : {"kodaira.json", "odp_m3.json", "cycle3.json"}) {
        Json j = readJsonFile(fixture(name));
        DegenerationData d = degenerationFromJson(j);
        CHECK(validateDegenerationData(d).ok);
        Json once = degenerationToJson(d);
        Json twice = degenerationToJson(degenerationFromJson(once));
        CHECK(once == twice);
        CHECK(Json::parse(once.dump(2)).dump(2) == once.dump(2));
    }
    DegenerationData k = kodairaModel(3);
    DegenerationData back = degenerationFromJson(degenerationToJson(k));
    CHECK(back.restriction.at({1, 2}) == k.restriction.at({1, 2}));
    CHECK(back.strata.at(1).at(2)->pairing == k.strata.at(1).at(2)->pairing);
}

TEST_CASE("MHS round trip") {
    for (const char* name : {"elliptic.json", "tate3.json", "kodaira_mhs.json"}) {
        MHSData m = mhsFromJson(readJsonFile(fixture(name)));
        CHECK(checkMHS(m).ok);
        MHSData back = mhsFromJson(mhsToJson(m));
        CHECK(back.W == m.W);
        CHECK(back.F == m.F);
        CHECK(*back.N == *m.N);
        CHECK(mhsToJson(back) == mhsToJson(m));
    }
    // Gaussian entries survive
    MHSData e = extractMHS(smoothModel(ellipticCurveCohomology(), 1), 1);
    CHECK(mhsFromJson(mhsToJson(e)).F == e.F);
}

TEST_CASE("reports are deterministic and independent of the worker count") {
    DegenerationData d = degenerationFromJson(readJsonFile(fixture("odp_m3.json")));
    std::string one = toJson(nearbyHodgeIndex(d, 1)).dump(2);
    CHECK(toJson(nearbyHodgeIndex(d, 1)).dump(2) == one);
    CHECK(toJson(nearbyHodgeIndex(d, 4)).dump(2) == one);
    CHECK(Json::parse(one).dump(2) == one);
    MainTheoremReport r = verifyMainTheorem(mhsFromJson(readJsonFile(fixture("tate3.json"))));
    std::string rep = toJson(r).dump(2);
    CHECK(Json::parse(rep).dump(2) == rep);
}

TEST_CASE("schema violations name the field") {
    Json j = readJsonFile(fixture("kodaira.json"));
    Json bad = j;
    bad["strata"][0]["cohomology"][1]["types"] = Json::array();
    try {
        degenerationFromJson(bad);
        FAIL("expected an InputError");
    } catch (const InputError& e) {
        CHECK(e.path == "/strata/0/cohomology/1/types");
    }
    bad = j;
    bad.erase("m");
    CHECK_THROWS_AS(degenerationFromJson(bad), InputError);
    bad = j;
    bad["restriction"][0]["matrix"][0][0] = 1.5;
    try {
        degenerationFromJson(bad);
        FAIL("expected an InputError");
    } catch (const InputError& e) {
        CHECK(e.path == "/restriction/0/matrix/0/0");
    }
    Json m = readJsonFile(fixture("elliptic.json"));
    m["F"][1]["span"][0] = Json::array({1});
    CHECK_THROWS_AS(mhsFromJson(m), InputError);
    CHECK_THROWS_AS(readJsonFile(fixture("does_not_exist.json")), InputError);
}

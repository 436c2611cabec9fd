#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clsfe/inventory.hpp"
#include "test_util.hpp"

using namespace clsfe;

namespace {

const char* kSmallTable =
    "a\tvowel\tlength=short,height=mid,backness=central\n"
    "k\tconsonant\tplace=velar,manner=stop,voiced=false,aspirated=false\n";

// Independent recomputation of the weighted feature distance, written from
// the weight definition rather than the library code path.
double oracle_distance(const ClsPhone& a, const ClsPhone& b,
                       const FeatureWeights& w) {
    if (a.label == b.label) return 0.0;
    auto coord = [](Place p) {
        switch (p) {
            case Place::Bilabial: return 0.0;
            case Place::Labiodental: return 1.0;
            case Place::Dental: return 3.0;
            case Place::Alveolar: return 3.5;
            case Place::Retroflex: return 4.5;
            case Place::Palatal: return 6.0;
            case Place::Velar: return 8.0;
            case Place::Glottal: return 9.5;
            default: return 0.0;
        }
    };
    auto hv = [](Height h) {
        return h == Height::High ? 0.0 : h == Height::Mid ? 1.0 : 2.0;
    };
    auto bv = [](Backness b2) {
        return b2 == Backness::Front ? 0.0 : b2 == Backness::Central ? 1.0 : 2.0;
    };
    const PhoneFeatures &fa = a.features, &fb = b.features;
    double d = 0;
    if (fa.category != fb.category) d += w.category;
    if (fa.place != fb.place)
        d += (fa.place == Place::NA || fb.place == Place::NA)
                 ? w.place
                 : w.place * std::fabs(coord(fa.place) - coord(fb.place));
    if (fa.manner != fb.manner) d += w.manner;
    if (fa.length != fb.length) d += w.length;
    if (fa.vowel_height != fb.vowel_height)
        d += (fa.vowel_height == Height::NA || fb.vowel_height == Height::NA)
                 ? w.vowel_height
                 : w.vowel_height * std::fabs(hv(fa.vowel_height) - hv(fb.vowel_height));
    if (fa.vowel_backness != fb.vowel_backness)
        d += (fa.vowel_backness == Backness::NA || fb.vowel_backness == Backness::NA)
                 ? w.vowel_backness
                 : w.vowel_backness *
                       std::fabs(bv(fa.vowel_backness) - bv(fb.vowel_backness));
    if (fa.voiced != fb.voiced) d += w.voiced;
    if (fa.aspirated != fb.aspirated) d += w.aspirated;
    if (fa.nasalized != fb.nasalized) d += w.nasalized;
    if (d == 0.0) d = w.epsilon;
    return d;
}

}  // namespace

TEST_CASE("empty table is rejected") {
    CHECK_THROWS_WITH_AS(ClsInventory::load(""), doctest::Contains("no phones"),
                         FrontendError);
    CHECK_THROWS_AS(ClsInventory::load("# only comments\n"), FrontendError);
}

TEST_CASE("direct construction of a two-phone inventory") {
    ClsInventory inv = ClsInventory::load(kSmallTable);
    CHECK(inv.size() == 2);
    CHECK(inv.has("a"));
    CHECK(inv.phone("k").features.place == Place::Velar);
}

TEST_CASE("duplicate label reports the second line") {
    std::string table = std::string(kSmallTable) +
        "k\tconsonant\tplace=velar,manner=stop,voiced=false,aspirated=false\n";
    try {
        ClsInventory::load(table);
        FAIL("expected duplicate-label error");
    } catch (const FrontendError& e) {
        CHECK(std::string(e.what()).find("duplicate label 'k'") != std::string::npos);
        CHECK(e.line() == 3);
    }
}

TEST_CASE("malformed rows and unknown feature values") {
    CHECK_THROWS_AS(ClsInventory::load("x\n"), FrontendError);
    CHECK_THROWS_AS(
        ClsInventory::load("k\tconsonant\tplace=uvular,manner=stop\n"),
        FrontendError);
    CHECK_THROWS_AS(
        ClsInventory::load("k\tconsonant\tcolour=blue\n"), FrontendError);
    // category invariants
    CHECK_THROWS_AS(
        ClsInventory::load("a\tvowel\tlength=short,height=mid,backness=front,"
                           "place=velar,manner=stop\n"),
        FrontendError);
    CHECK_THROWS_AS(ClsInventory::load("a\tvowel\theight=mid,backness=front\n"),
                    FrontendError);
}

TEST_CASE("per-language subsets") {
    std::string table = std::string(kSmallTable) + "@lang\tempty\t\n";
    ClsInventory inv = ClsInventory::load(table);
    CHECK(inv.phones_for_language("empty").empty());
    CHECK_THROWS_AS(inv.phones_for_language("xx"), FrontendError);

    CHECK_THROWS_WITH_AS(
        ClsInventory::load(std::string(kSmallTable) + "@lang\thi\ta,q\n"),
        doctest::Contains("unknown label 'q'"), FrontendError);
}

TEST_CASE("declared subset resolves to full phone records") {
    std::string table =
        "a\tvowel\tlength=short,height=mid,backness=central\n"
        "aa\tvowel\tlength=long,height=low,backness=central\n"
        "k\tconsonant\tplace=velar,manner=stop,voiced=false,aspirated=false\n"
        "g\tconsonant\tplace=velar,manner=stop,voiced=true,aspirated=false\n"
        "m\tconsonant\tplace=bilabial,manner=nasal,voiced=true,aspirated=false\n"
        "@lang\thi\ta,aa,k,g,m\n";
    ClsInventory inv = ClsInventory::load(table);
    std::vector<ClsPhone> phones = inv.phones_for_language("hi");
    REQUIRE(phones.size() == 5);
    for (const ClsPhone& p : phones) CHECK(inv.has(p.label));
}

TEST_CASE("bundled inventory loads and respects configured weights") {
    const ClsInventory& inv = clsfe_test::pipeline().inventory;
    CHECK(inv.size() >= 45);
    CHECK(inv.weights().category == 100.0);
    CHECK(inv.weights().aspirated == 1.0);
    CHECK(inv.weights().epsilon == 0.5);
    // English additions carry full bundles
    CHECK(inv.phone("ae").features.category == Category::Vowel);
    CHECK(inv.phone("f").features.place == Place::Labiodental);
}

TEST_CASE("distance axioms over the full superset") {
    const ClsInventory& inv = clsfe_test::pipeline().inventory;
    for (const auto& [la, pa] : inv.superset()) {
        CHECK(inv.distance(la, la) == 0.0);
        for (const auto& [lb, pb] : inv.superset()) {
            double dab = inv.distance(la, lb);
            CHECK(dab == inv.distance(lb, la));
            if (la != lb) CHECK(dab > 0.0);
        }
    }
}

TEST_CASE("single-field difference costs exactly that weight") {
    const ClsInventory& inv = clsfe_test::pipeline().inventory;
    CHECK(inv.distance("k", "kh") == inv.weights().aspirated);
    CHECK(inv.distance("k", "g") == inv.weights().voiced);
}

TEST_CASE("retroflex stop is nearer the dental stop than the velar") {
    const ClsInventory& inv = clsfe_test::pipeline().inventory;
    double d_tx_t = inv.distance("tx", "t");
    double d_tx_k = inv.distance("tx", "k");
    CHECK(d_tx_t < d_tx_k);
    // cross-check all three pairs against the independent formula
    const FeatureWeights& w = inv.weights();
    for (auto [a, b] : {std::pair{"tx", "t"}, {"tx", "k"}, {"t", "k"}})
        CHECK(inv.distance(a, b) ==
              doctest::Approx(oracle_distance(inv.phone(a), inv.phone(b), w)));
}

TEST_CASE("distance matches the independent formula everywhere") {
    const ClsInventory& inv = clsfe_test::pipeline().inventory;
    const FeatureWeights& w = inv.weights();
    for (const auto& [la, pa] : inv.superset())
        for (const auto& [lb, pb] : inv.superset())
            CHECK(inv.distance(la, lb) ==
                  doctest::Approx(oracle_distance(pa, pb, w)));
}

TEST_CASE("cross-category pairs carry the category penalty") {
    const ClsInventory& inv = clsfe_test::pipeline().inventory;
    CHECK(inv.distance("a", "k") >= inv.weights().category);
    CHECK(inv.distance("sil", "k") >= inv.weights().category);
}

TEST_CASE("serialize round-trip yields an identical inventory") {
    const ClsInventory& inv = clsfe_test::pipeline().inventory;
    std::string canon = inv.serialize();
    ClsInventory again = ClsInventory::load(canon);
    CHECK(again.serialize() == canon);
    CHECK(again.size() == inv.size());
    for (const auto& [label, p] : inv.superset())
        CHECK(again.phone(label).features == p.features);
}

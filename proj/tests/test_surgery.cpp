#include "support/fixtures.hpp"

#include <catch_amalgamated.hpp>

using namespace tamefiber;
using namespace tamefiber::testing;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InternalInconsistency;
}

ComponentId new_component(const FiberConfiguration& before, const FiberConfiguration& after) {
    for (const Component& c : after.components())
        if (!before.find(c.id)) return c.id;
    FAIL("no new component");
    return {};
}

std::vector<BlowUpSite> all_sites(const FiberConfiguration& c) {
    std::vector<BlowUpSite> sites;
    for (std::size_t i = 0; i < c.size(); ++i) {
        sites.push_back(BlowUpSite::interior(c.component(i).id));
        if (c.loops(i) > 0) sites.push_back(BlowUpSite::node(c.component(i).id));
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c.pair_count(i, j) > 0) sites.push_back(BlowUpSite::intersection(c.component(i).id, c.component(j).id));
    }
    return sites;
}

} // namespace

TEST_CASE("blow_up at an interior point", "[surgery]") {
    const auto good = single_component(1, 2);
    const auto out = blow_up(good, BlowUpSite::interior("E"));
    REQUIRE(out.size() == 2);
    CHECK(out.component("E") == Component{"E", 1, 2, -1});
    CHECK(out.component("e1") == Component{"e1", 1, 0, -1});
    CHECK(out.pair_count(0, 1) == 1);
    CHECK(total_genus(out) == 2);
}

TEST_CASE("blow_up at a node gives the sncd form of I1", "[surgery]") {
    const auto out = blow_up(nodal_rational_fiber(), BlowUpSite::node("A"));
    CHECK(out.component("A") == Component{"A", 1, 0, -4});
    CHECK(out.component("e1") == Component{"e1", 2, 0, -1});
    CHECK(out.pair_count(0, 1) == 2);
    CHECK(out.loops(0) == 0);
    CHECK(validate(out).ok);
    CHECK(total_genus(out) == 1);
}

TEST_CASE("blow_up at an intersection point of I2", "[surgery]") {
    const auto out = blow_up(kodaira_config({KodairaKind::I, 2}), BlowUpSite::intersection("C0", "C1"));
    CHECK(out.size() == 3);
    CHECK(out.component("e1").multiplicity == 2);
    CHECK(out.pair_count(out.index_of("C0"), out.index_of("C1")) == 1);
    CHECK(*out.component("C0").self_intersection == -3);
    CHECK(total_genus(out) == 1);
}

TEST_CASE("blow_up rejects invalid sites", "[surgery]") {
    const auto two = kodaira_config({KodairaKind::II, 0});
    CHECK(kind_of([&] { (void)blow_up(two, BlowUpSite::interior("X")); }) == ErrorKind::InvalidSite);
    CHECK(kind_of([&] { (void)blow_up(two, BlowUpSite::intersection("A1", "A2")); }) == ErrorKind::InvalidSite);
    CHECK(kind_of([&] { (void)blow_up(two, BlowUpSite::node("C")); }) == ErrorKind::InvalidSite);
    CHECK(kind_of([&] { (void)blow_up(two, BlowUpSite::intersection("C", "C")); }) == ErrorKind::InvalidSite);
}

TEST_CASE("contract", "[surgery]") {
    const ContractionOutcome back = contract(kodaira_config({KodairaKind::I, 1}), "E");
    CHECK(back.cls == ContractionClass::StaysNcdOnly);
    CHECK(back.configuration == nodal_rational_fiber());

    const ContractionOutcome nnc = contract(kodaira_config({KodairaKind::II, 0}), "C");
    CHECK(nnc.cls == ContractionClass::NotNormalCrossings);
    CHECK_FALSE(nnc.usable());
    CHECK(nnc.configuration.size() == 3);

    const auto chain = blow_up(kodaira_config({KodairaKind::I, 2}), BlowUpSite::intersection("C0", "C1"));
    const ContractionOutcome merged = contract(chain, "e1");
    CHECK(merged.cls == ContractionClass::StaysSncd);
    CHECK(merged.configuration == kodaira_config({KodairaKind::I, 2}));

    CHECK(kind_of([] { (void)contract(kodaira_config({KodairaKind::I, 3}), "C0"); }) == ErrorKind::NotContractible);
    CHECK(kind_of([] { (void)contract(single_component(1, 1), "E"); }) == ErrorKind::NotContractible);
}

TEST_CASE("resolve_to_sncd", "[surgery]") {
    const auto i1 = resolve_to_sncd(nodal_rational_fiber());
    CHECK(i1.mode() == Mode::sncd);
    CHECK(i1.size() == 2);
    CHECK(i1.component("e1").multiplicity == 2);

    const auto loop_free = FiberConfiguration::make(0, Mode::ncd, {{"E", 1, 1, 0}}, {});
    const auto same = resolve_to_sncd(loop_free);
    CHECK(same.components() == loop_free.components());
    CHECK(same.pairings() == loop_free.pairings());

    const auto two_nodes = FiberConfiguration::make(0, Mode::ncd, {{"A", 3, 0, 0}}, {{"A", "A", 2}});
    REQUIRE(validate(two_nodes).ok);
    const auto resolved = resolve_to_sncd(two_nodes);
    CHECK(resolved.size() == 3);
    CHECK(resolved.component("e1").multiplicity == 6);
    CHECK(resolved.component("e2").multiplicity == 6);
    CHECK(total_genus(resolved) == 4);
}

TEST_CASE("is_relatively_minimal", "[surgery]") {
    CHECK(is_relatively_minimal(kodaira_config({KodairaKind::II, 0}), Mode::sncd).minimal);
    const auto i1 = kodaira_config({KodairaKind::I, 1});
    CHECK(is_relatively_minimal(i1, Mode::sncd).minimal);
    const MinimalityReport ncd = is_relatively_minimal(i1, Mode::ncd);
    CHECK_FALSE(ncd.minimal);
    CHECK(ncd.witnesses == std::vector<ComponentId>{"E"});

    const MinimalityReport blown =
        is_relatively_minimal(blow_up(single_component(1, 1), BlowUpSite::interior("E")), Mode::sncd);
    CHECK_FALSE(blown.minimal);
    CHECK(blown.witnesses == std::vector<ComponentId>{"e1"});
}

TEST_CASE("kodaira_config library", "[surgery]") {
    const auto two = kodaira_config({KodairaKind::II, 0});
    CHECK(validate(two).ok);
    CHECK(*two.component("C").self_intersection == -1);
    std::vector<Int> chis;
    for (const ComponentId id : {"A1", "A2", "A3", "C"}) chis.push_back(chi_open(two, id));
    CHECK(chis == std::vector<Int>{1, 1, 1, -1});

    const auto i3 = kodaira_config({KodairaKind::I, 3});
    CHECK(i3.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(chi_open(i3, i) == 0);

    const auto e8 = kodaira_config({KodairaKind::IIstar, 0});
    CHECK(e8.size() == 9);
    CHECK(*e8.component("C").self_intersection == -2);

    for (const KodairaType& t : kodaira_library()) {
        const auto c = kodaira_config(t);
        INFO(to_string(t));
        CHECK(validate(c).ok);
        CHECK(total_genus(c) == 1);
        CHECK(is_relatively_minimal(c, Mode::sncd).minimal);
        CHECK(is_relatively_minimal(c, Mode::ncd).minimal == !(t.kind == KodairaKind::I && t.n == 1));
    }
    CHECK(kind_of([] { (void)kodaira_config({KodairaKind::I, -1}); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("kodaira type names", "[surgery]") {
    CHECK(parse_kodaira_type("I0") == KodairaType{KodairaKind::I, 0});
    CHECK(parse_kodaira_type("I_7") == KodairaType{KodairaKind::I, 7});
    CHECK(parse_kodaira_type("I", 4) == KodairaType{KodairaKind::I, 4});
    CHECK(parse_kodaira_type("I2*") == KodairaType{KodairaKind::Istar, 2});
    CHECK(parse_kodaira_type("Istar", 3) == KodairaType{KodairaKind::Istar, 3});
    CHECK(parse_kodaira_type("IVstar") == KodairaType{KodairaKind::IVstar, 0});
    CHECK(parse_kodaira_type("III*") == KodairaType{KodairaKind::IIIstar, 0});
    CHECK_THROWS_AS(parse_kodaira_type("V"), Error);
    CHECK_THROWS_AS(parse_kodaira_type("II3"), Error);
    for (const KodairaType& t : kodaira_library()) CHECK(parse_kodaira_type(to_string(t)) == t);
}

TEST_CASE("blow-ups keep the identities and contract back", "[surgery][property]") {
    std::vector<FiberConfiguration> seeds;
    for (const Fixture& f : fixture_library()) seeds.push_back(f.config);
    seeds.push_back(nodal_rational_fiber());
    for (const auto& seed : seeds) {
        const Int g = total_genus(seed);
        for (const BlowUpSite& site : all_sites(seed)) {
            const auto out = blow_up(seed, site);
            CHECK(validate(out).ok);
            CHECK(total_genus(out) == g);
            const ContractionOutcome back = contract(out, new_component(seed, out));
            CHECK(back.usable());
            CHECK(back.configuration == seed);
        }
    }
}

TEST_CASE("interior blow-up on a p-divisible component destroys p-tameness", "[surgery][property]") {
    for (Int p : {2, 3})
        for (const Fixture& f : fixture_library(p))
            for (const Component& c : f.config.components())
                if (c.multiplicity % p == 0)
                    CHECK_FALSE(is_d_tame(blow_up(f.config, BlowUpSite::interior(c.id)), p));
}

#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "qh/applications.hpp"

using namespace qh;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream f(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(f.good());
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

Diagram fixture(const std::string& name) { return Diagram::parse(slurp(name)); }

}  // namespace

TEST_CASE("R_4 basis invariants") {
    const R4Basis& b = r4_basis();
    CHECK(b.pres.group_to_string() == "Z^2 (+) Z_2 (+) Z_2");
    HomologyClass cg = b.pres.reduce_cycle(b.f1 + b.f2 + b.t1 + b.t2);
    CHECK(cg == b.g);
    CHECK_FALSE(b.g.is_zero());
    // Torsion classes have order two.
    for (const HomologyClass* t : {&b.ct1, &b.ct2}) {
        CHECK_FALSE(t->is_zero());
        CHECK(t->free_coords == std::vector<Int>{0, 0});
    }
    // shift_multiple solves c1 - c2 = k*g with minimal |k|.
    HomologyClass zero = b.pres.reduce_cycle(Chain(2));
    auto k = b.shift_multiple(b.g, zero);
    REQUIRE(k.has_value());
    CHECK(*k == 1);
    auto k0 = b.shift_multiple(b.g, b.g);
    REQUIRE(k0.has_value());
    CHECK(*k0 == 0);
    // t1 is not congruent to 0 modulo multiples of g.
    CHECK_FALSE(b.shift_multiple(b.ct1, zero).has_value());
}

TEST_CASE("four half-twist closure classes land in {0, +g, -g}") {
    const R4Basis& b = r4_basis();
    Diagram d = fixture("twist4_closed.json");
    Quandle q = b.quandle;
    auto cols = enumerate_colorings(d, q);
    REQUIRE(cols.size() == 16);
    HomologyClass minus_g = b.pres.reduce_cycle(-(b.f1 + b.f2 + b.t1 + b.t2));
    int zero_count = 0;
    for (const Coloring& c : cols) {
        HomologyClass cls = b.pres.reduce_cycle(coloring_cycle(d, q, c));
        bool single_orbit = true;
        int orbit = -1;
        for (const auto& [arc, v] : c) {
            if (orbit == -1) orbit = q.orbit_of(v);
            if (q.orbit_of(v) != orbit) single_orbit = false;
        }
        if (cls.is_zero()) {
            ++zero_count;
            CHECK(single_orbit);
        } else {
            CHECK_FALSE(single_orbit);
            CHECK((cls == b.g || cls == minus_g));
        }
    }
    CHECK(zero_count == 8);
}

TEST_CASE("eight-term twist chain reduces to twice f1 + f2") {
    const R4Basis& b = r4_basis();
    // (a,b)+(a*b,b*a)+(b,a)+(b*a,a*b)+(a,b*a)+(a*b,b)+(b*a,a)+(b,a*b) at a=0, b=1.
    Chain c(2);
    for (Tuple t : {Tuple{0, 1}, {2, 3}, {1, 0}, {3, 2}, {0, 3}, {2, 1}, {3, 0}, {1, 2}})
        c.add(t, 1);
    HomologyClass cls = b.pres.reduce_cycle(c);
    HomologyClass twice = b.pres.reduce_cycle((b.f1 + b.f2) * 2);
    CHECK(cls == twice);
    CHECK(cls.free_coords == std::vector<Int>{2, 2});
    for (const Int& t : cls.torsion_coords) CHECK(t == 0);
    // It is also twice the full shift class g, since 2t1 and 2t2 die.
    HomologyClass twice_g = b.pres.reduce_cycle((b.f1 + b.f2 + b.t1 + b.t2) * 2);
    CHECK(cls == twice_g);
}

TEST_CASE("4-move distance lower bounds") {
    Diagram fig10 = fixture("fig10_link.json");
    Diagram unlink2 = fixture("unlink2.json");
    Diagram hopf = fixture("hopf.json");

    FourMoveReport r = four_move_bound(fig10, unlink2);
    CHECK_FALSE(r.infinite);
    CHECK(r.bound == 2);

    FourMoveReport self = four_move_bound(fig10, fig10);
    CHECK_FALSE(self.infinite);
    CHECK(self.bound == 0);

    FourMoveReport h = four_move_bound(hopf, unlink2);
    CHECK(h.infinite);
    CHECK(h.linking_mismatch);

    FourMoveReport hh = four_move_bound(hopf, hopf);
    CHECK_FALSE(hh.infinite);
    CHECK(hh.bound == 0);
}

TEST_CASE("tangle embedding obstruction verdicts") {
    Quandle r3 = make_dihedral(3);
    Diagram t = fixture("fig6_tangle.json");

    // Shadow mode against the flat clasp link: obstructed, and every link
    // class is trivial.
    ObstructionReport vs_fig5 = tangle_obstruction(t, fixture("fig5_link_k1.json"), r3, true);
    CHECK(vs_fig5.shadow);
    CHECK(vs_fig5.obstructed);
    for (const HomologyClass& c : vs_fig5.link_classes) CHECK(c.is_zero());

    // Against the matching-chirality trefoil: inconclusive.
    ObstructionReport vs_left = tangle_obstruction(t, fixture("trefoil_left.json"), r3, true);
    CHECK_FALSE(vs_left.obstructed);
    bool any_match = false;
    for (const auto& rec : vs_left.records) any_match |= rec.matched;
    CHECK(any_match);

    // Against the mirror trefoil: the nontrivial tangle classes find no
    // partner, so the embedding is obstructed.
    ObstructionReport vs_right = tangle_obstruction(t, fixture("trefoil.json"), r3, true);
    CHECK(vs_right.obstructed);
    CHECK(vs_right.class_obstruction);

    // Plain (non-shadow) mode over R_3 in degree 2 cannot distinguish them.
    ObstructionReport plain = tangle_obstruction(t, fixture("trefoil_left.json"), r3, false);
    CHECK_FALSE(plain.shadow);
    CHECK_FALSE(plain.obstructed);
}

TEST_CASE("periodicity exclusion for the seven-crossing link") {
    Quandle r4 = make_dihedral(4);
    PeriodicityReport rep =
        periodicity_candidates(fixture("l7a5.json"), r4, false, {2, 3, 5, 7});
    REQUIRE(rep.verdicts.size() == 4);
    std::map<int, bool> excluded;
    for (const auto& v : rep.verdicts) {
        excluded[v.prime] = v.excluded;
        // The violating class g is carried by exactly 8 of the 16 colorings.
        if (v.excluded) CHECK(v.coloring_count == 8);
    }
    CHECK_FALSE(excluded[2]);
    CHECK(excluded[3]);
    CHECK(excluded[5]);
    CHECK(excluded[7]);
    CHECK(rep.any_excluded());
}

TEST_CASE("periodicity finds nothing to exclude on trivial links") {
    Quandle r4 = make_dihedral(4);
    for (const char* name : {"unknot.json", "unlink2.json"}) {
        PeriodicityReport rep =
            periodicity_candidates(fixture(name), r4, false, {2, 3, 5, 7});
        CHECK_FALSE(rep.any_excluded());
    }
}

TEST_CASE("reports serialize to both text and JSON") {
    Quandle r3 = make_dihedral(3);
    ObstructionReport rep =
        tangle_obstruction(fixture("fig6_tangle.json"), fixture("fig5_link_k1.json"), r3, true);
    CHECK_FALSE(rep.to_text().empty());
    CHECK(rep.to_json().find("OBSTRUCTED") != std::string::npos);

    FourMoveReport fm = four_move_bound(fixture("hopf.json"), fixture("unlink2.json"));
    CHECK(fm.to_text().find("INFINITE") != std::string::npos);
    CHECK_FALSE(fm.to_json().empty());
}

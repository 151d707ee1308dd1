#include "qh/applications.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qh {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json class_json(const HomologyClass& c) {
    json free = json::array(), torsion = json::array();
    for (const auto& v : c.free_coords) free.push_back(int_json(v));
    for (const auto& v : c.torsion_coords) torsion.push_back(int_json(v));
    return {{"free", free}, {"torsion", torsion}};
}

json coloring_json(const Coloring& c) {
    json j = json::object();
    for (const auto& [arc, color] : c) j[std::to_string(arc)] = color;
    return j;
}

std::string coloring_text(const Coloring& c) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [arc, color] : c) {
        os << (first ? "" : ", ") << arc << ":" << color;
        first = false;
    }
    os << "}";
    return os.str();
}

bool monochromatic(const Coloring& c) {
    for (const auto& [arc, color] : c)
        if (color != c.begin()->second) return false;
    return true;
}

}  // namespace

// --- the R4 class basis ----------------------------------------------------

std::optional<Int> R4Basis::shift_multiple(const HomologyClass& c1,
                                           const HomologyClass& c2) const {
    Int k = 0;
    bool pinned = false;
    for (size_t i = 0; i < g.free_coords.size(); ++i) {
        Int delta = c1.free_coords[i] - c2.free_coords[i];
        if (g.free_coords[i] == 0) {
            if (delta != 0) return std::nullopt;
        } else if (!pinned) {
            if (delta % g.free_coords[i] != 0) return std::nullopt;
            k = delta / g.free_coords[i];
            pinned = true;
        } else if (delta != k * g.free_coords[i]) {
            return std::nullopt;
        }
    }
    // torsion must agree mod its moduli; when the free part leaves k open,
    // try the residues 0..m-1 and keep the smallest |k| that fits
    auto torsion_ok = [&](const Int& kk) {
        for (size_t i = 0; i < g.torsion_moduli.size(); ++i) {
            Int r = c1.torsion_coords[i] - c2.torsion_coords[i] - kk * g.torsion_coords[i];
            if (r % g.torsion_moduli[i] != 0) return false;
        }
        return true;
    };
    if (pinned) return torsion_ok(k) ? std::optional<Int>(k) : std::nullopt;
    Int period = 1;
    for (const auto& m : g.torsion_moduli) period *= m;
    for (Int kk = 0; kk < period; ++kk) {
        if (torsion_ok(kk)) return kk;
        if (torsion_ok(-kk)) return Int(-kk);
    }
    return std::nullopt;
}

const R4Basis& r4_basis() {
    static const R4Basis basis = [] {
        Quandle q = make_dihedral(4);
        HomologyPresentation pres(q, Theory::quandle, 2);
        // generators instantiated at a=0, b=1 (a*b=2, b*a=3)
        Chain f1(2), f2(2), t1(2), t2(2);
        f1.add({0, 1}, 1); f1.add({2, 1}, 1);
        f2.add({1, 0}, 1); f2.add({3, 0}, 1);
        t1.add({0, 2}, 1);
        t2.add({1, 3}, 1);
        R4Basis b{std::move(q), pres, f1, f2, t1, t2,
                  pres.reduce_cycle(f1), pres.reduce_cycle(f2),
                  pres.reduce_cycle(t1), pres.reduce_cycle(t2),
                  pres.reduce_cycle(f1 + f2 + t1 + t2)};

        auto fail = [](const std::string& what) {
            throw std::runtime_error("R4 basis self-check failed: " + what);
        };
        if (b.pres.group_to_string() != "Z^2 (+) Z_2 (+) Z_2") fail("group shape");
        // integral cocycles pair as the identity with (f1, f2)
        Cocycle phi1 = Cocycle::characteristic(2, 0, {{0, 1}, {0, 3}});
        Cocycle phi2 = Cocycle::characteristic(2, 0, {{1, 0}, {1, 2}});
        // mod-2 cocycles pair as the identity with (t1, t2) and kill f1, f2
        Cocycle c1 = Cocycle::characteristic(2, 2, {{0, 1}, {2, 1}, {0, 2}, {2, 0}});
        Cocycle c2 = Cocycle::characteristic(2, 2, {{1, 0}, {3, 0}, {1, 3}, {3, 1}});
        for (const Cocycle* f : {&phi1, &phi2, &c1, &c2})
            if (!cocycle_verify(b.quandle, *f)) fail("cocycle condition");
        const Chain* fs[] = {&b.f1, &b.f2};
        const Chain* ts[] = {&b.t1, &b.t2};
        const Cocycle* phis[] = {&phi1, &phi2};
        const Cocycle* cs[] = {&c1, &c2};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (cocycle_evaluate(*phis[i], *fs[j]) != (i == j ? 1 : 0)) fail("phi pairing");
                if (cocycle_evaluate(*cs[i], *ts[j]) != (i == j ? 1 : 0)) fail("c pairing");
                if (cocycle_evaluate(*cs[i], *fs[j]) != 0) fail("c on f");
            }
        for (const Chain* t : ts)
            if (!b.pres.reduce_cycle(*t * Int(2)).is_zero()) fail("torsion order");
        if (b.cf1.is_zero() || b.cf2.is_zero() || b.ct1.is_zero() || b.ct2.is_zero())
            fail("vanishing generator");
        for (int p : {2, 3, 5, 7})
            if (b.pres.divide_class(b.g, p)) fail("g divisible");
        return b;
    }();
    return basis;
}

// --- tangle embedding obstruction ------------------------------------------

ObstructionReport tangle_obstruction(const Diagram& t, const Diagram& l, const Quandle& q,
                                     bool shadow) {
    if (!t.is_tangle()) throw std::runtime_error("first diagram must be a tangle");
    if (l.is_tangle()) throw std::runtime_error("second diagram must be a link");
    ObstructionReport rep;
    rep.shadow = shadow;
    HomologyPresentation pres(q, Theory::quandle, shadow ? 3 : 2);

    std::set<HomologyClass> link_set;
    if (shadow) {
        for (const auto& s : enumerate_shadow(l, q))
            link_set.insert(pres.reduce_cycle(shadow_cycle(l, q, s)));
    } else {
        for (const auto& c : enumerate_colorings(l, q))
            link_set.insert(pres.reduce_cycle(coloring_cycle(l, q, c)));
    }
    rep.link_classes.assign(link_set.begin(), link_set.end());

    auto mono_counts = [&]() {
        for (const auto& c : enumerate_boundary_mono(t, q))
            if (!monochromatic(c)) rep.tangle_nontrivial++;
        for (const auto& c : enumerate_colorings(l, q))
            if (!monochromatic(c)) rep.link_nontrivial++;
    };
    mono_counts();
    rep.count_obstruction = rep.link_nontrivial < rep.tangle_nontrivial;

    for (const auto& c : enumerate_boundary_mono(t, q)) {
        if (shadow) {
            for (int w = 0; w < q.order(); ++w) {
                ObstructionReport::TangleRecord r;
                r.coloring = c;
                r.base_color = w;
                r.cls = tangle_shadow_class(t, q, shadow_extend(t, q, c, 0, w), pres);
                r.matched = link_set.count(r.cls) > 0;
                if (!r.matched) rep.class_obstruction = true;
                rep.records.push_back(std::move(r));
            }
        } else {
            ObstructionReport::TangleRecord r;
            r.coloring = c;
            r.cls = tangle_class(t, q, c, pres);
            r.matched = link_set.count(r.cls) > 0;
            if (!r.matched) rep.class_obstruction = true;
            rep.records.push_back(std::move(r));
        }
    }
    rep.obstructed = rep.class_obstruction || rep.count_obstruction;
    return rep;
}

std::string ObstructionReport::to_text() const {
    std::ostringstream os;
    os << "verdict: " << (obstructed ? "OBSTRUCTED" : "INCONCLUSIVE") << "\n";
    os << "nontrivial colorings: tangle " << tangle_nontrivial << ", link " << link_nontrivial
       << (count_obstruction ? "  (count obstruction)" : "") << "\n";
    for (const auto& r : records) {
        os << "tangle coloring " << coloring_text(r.coloring);
        if (r.base_color >= 0) os << " base " << r.base_color;
        os << " -> class " << r.cls.to_string() << " " << (r.matched ? "matched" : "UNMATCHED")
           << "\n";
    }
    return os.str();
}

std::string ObstructionReport::to_json() const {
    json recs = json::array();
    for (const auto& r : records) {
        json jr = {{"arcs", coloring_json(r.coloring)},
                   {"class", class_json(r.cls)},
                   {"matched", r.matched}};
        if (r.base_color >= 0) jr["base_color"] = r.base_color;
        recs.push_back(jr);
    }
    json links = json::array();
    for (const auto& c : link_classes) links.push_back(class_json(c));
    json j = {{"verdict", obstructed ? "OBSTRUCTED" : "INCONCLUSIVE"},
              {"shadow", shadow},
              {"tangle_records", recs},
              {"link_classes", links},
              {"tangle_nontrivial", tangle_nontrivial},
              {"link_nontrivial", link_nontrivial},
              {"count_obstruction", count_obstruction},
              {"class_obstruction", class_obstruction}};
    return j.dump(2);
}

// --- 4-move distance lower bound -------------------------------------------

namespace {

bool linking_matrices_match(const Diagram& a, const Diagram& b) {
    auto ma = linking_matrix_mod2(a), mb = linking_matrix_mod2(b);
    if (ma.size() != mb.size()) return false;
    std::vector<int> perm(ma.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (size_t i = 0; i < ma.size() && ok; ++i)
            for (size_t j = 0; j < ma.size() && ok; ++j)
                if (ma[i][j] != mb[perm[i]][perm[j]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// per coloring: the sorted list of orbits carried by the components
std::multiset<std::vector<int>> orbit_usage(const Diagram& d, const Quandle& q,
                                            const std::vector<Coloring>& colorings) {
    std::multiset<std::vector<int>> usage;
    for (const auto& c : colorings) {
        std::vector<int> per_comp(d.num_components(), -1);
        for (const auto& [arc, color] : c) per_comp[d.component_of(arc)] = q.orbit_of(color);
        std::sort(per_comp.begin(), per_comp.end());
        usage.insert(per_comp);
    }
    return usage;
}

}  // namespace

FourMoveReport four_move_bound(const Diagram& l1, const Diagram& l2) {
    const R4Basis& b = r4_basis();
    FourMoveReport rep;
    if (!linking_matrices_match(l1, l2)) {
        rep.infinite = rep.linking_mismatch = true;
        return rep;
    }
    auto c1 = enumerate_colorings(l1, b.quandle);
    auto c2 = enumerate_colorings(l2, b.quandle);
    if (c1.size() != c2.size()) {
        rep.infinite = rep.count_mismatch = true;
        return rep;
    }
    if (orbit_usage(l1, b.quandle, c1) != orbit_usage(l2, b.quandle, c2)) {
        rep.infinite = rep.orbit_mismatch = true;
        return rep;
    }
    std::set<HomologyClass> s1, s2;
    for (const auto& c : c1) s1.insert(b.pres.reduce_cycle(coloring_cycle(l1, b.quandle, c)));
    for (const auto& c : c2) s2.insert(b.pres.reduce_cycle(coloring_cycle(l2, b.quandle, c)));

    Int best = 0;
    std::string witness;
    auto direction = [&](const std::set<HomologyClass>& from, const std::set<HomologyClass>& to) {
        for (const auto& c : from) {
            std::optional<Int> dmin;
            const HomologyClass* partner = nullptr;
            for (const auto& d : to) {
                auto k = b.shift_multiple(c, d);
                if (k && (!dmin || abs(*k) < *dmin)) {
                    dmin = abs(*k);
                    partner = &d;
                }
            }
            if (!dmin) {
                rep.infinite = rep.unmatched_class = true;
                rep.witness = c.to_string();
                return;
            }
            if (*dmin > best) {
                best = *dmin;
                witness = c.to_string() + " vs " + partner->to_string();
            }
        }
    };
    direction(s1, s2);
    if (!rep.infinite) direction(s2, s1);
    if (!rep.infinite) {
        rep.bound = best;
        rep.witness = witness;
    }
    return rep;
}

std::string FourMoveReport::to_text() const {
    std::ostringstream os;
    if (infinite) {
        os << "lower bound: INFINITE\n";
        if (linking_mismatch) os << "reason: linking matrices mod 2 differ\n";
        if (count_mismatch) os << "reason: R4 coloring counts differ\n";
        if (orbit_mismatch) os << "reason: orbit-usage multisets differ\n";
        if (unmatched_class)
            os << "reason: class " << witness << " has no partner congruent mod g\n";
    } else {
        os << "lower bound: " << bound.get_str() << "\n";
        if (!witness.empty()) os << "maximizing pair: " << witness << "\n";
    }
    return os.str();
}

std::string FourMoveReport::to_json() const {
    json j = {{"bound", infinite ? json("INFINITE") : int_json(bound)},
              {"linking_mismatch", linking_mismatch},
              {"count_mismatch", count_mismatch},
              {"orbit_mismatch", orbit_mismatch},
              {"unmatched_class", unmatched_class},
              {"witness", witness}};
    return j.dump(2);
}

// --- periodicity exclusion -------------------------------------------------

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PeriodicityReport periodicity_candidates(const Diagram& l, const Quandle& q, bool shadow,
                                         const std::vector<int>& primes) {
    for (int p : primes)
        if (!is_prime(p)) throw std::runtime_error(std::to_string(p) + " is not prime");
    if (l.is_tangle()) throw std::runtime_error("periodicity needs a link diagram");
    PeriodicityReport rep;
    rep.shadow = shadow;
    HomologyPresentation pres(q, Theory::quandle, shadow ? 3 : 2);
    std::map<HomologyClass, long> counts;
    if (shadow) {
        for (const auto& s : enumerate_shadow(l, q))
            counts[pres.reduce_cycle(shadow_cycle(l, q, s))]++;
    } else {
        for (const auto& c : enumerate_colorings(l, q))
            counts[pres.reduce_cycle(coloring_cycle(l, q, c))]++;
    }
    for (int p : primes) {
        PeriodicityReport::PrimeVerdict v{p, false, {}, 0};
        for (const auto& [cls, n] : counts) {
            if (n % p == 0) continue;
            if (pres.divide_class(cls, p)) continue;
            v.excluded = true;
            v.violating_class = cls;
            v.coloring_count = n;
            break;
        }
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

bool PeriodicityReport::any_excluded() const {
    for (const auto& v : verdicts)
        if (v.excluded) return true;
    return false;
}

std::string PeriodicityReport::to_text() const {
    std::ostringstream os;
    for (const auto& v : verdicts) {
        os << "p=" << v.prime << ": ";
        if (v.excluded)
            os << "EXCLUDED (class " << v.violating_class.to_string() << " carried by "
               << v.coloring_count << " colorings)\n";
        else
            os << "CANDIDATE\n";
    }
    return os.str();
}

std::string PeriodicityReport::to_json() const {
    json arr = json::array();
    for (const auto& v : verdicts) {
        json jv = {{"prime", v.prime}, {"verdict", v.excluded ? "EXCLUDED" : "CANDIDATE"}};
        if (v.excluded) {
            jv["class"] = class_json(v.violating_class);
            jv["coloring_count"] = v.coloring_count;
        }
        arr.push_back(jv);
    }
    json j = {{"shadow", shadow}, {"primes", arr}};
    return j.dump(2);
}

}  // namespace qh

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qh/coloring.hpp"
#include "qh/diagram.hpp"
#include "qh/homology.hpp"
#include "qh/quandle.hpp"

namespace qh {

// H_2Q(R_4) = Z^2 (+) Z_2 (+) Z_2 with the fixed generator chains at a=0,
// b=1, and the 4-move shift class g. Construction re-verifies the cocycle
// pairings and orders before returning.
struct R4Basis {
    Quandle quandle;
    HomologyPresentation pres;
    Chain f1, f2, t1, t2;                  // generator chains
    HomologyClass cf1, cf2, ct1, ct2, g;   // their classes; g = [f1+f2+t1+t2]

    // k with c1 - c2 = k*g, minimizing |k|; absent when no k works.
    std::optional<Int> shift_multiple(const HomologyClass& c1, const HomologyClass& c2) const;
};

const R4Basis& r4_basis();

struct ObstructionReport {
    struct TangleRecord {
        Coloring coloring;
        int base_color = -1;   // shadow mode only
        HomologyClass cls;
        bool matched = false;
    };
    bool shadow = false;
    bool obstructed = false;
    std::vector<TangleRecord> records;
    std::vector<HomologyClass> link_classes;     // deduplicated, sorted
    int tangle_nontrivial = 0;                   // non-monochromatic coloring counts
    int link_nontrivial = 0;
    bool count_obstruction = false;              // link has fewer nontrivial colorings
    bool class_obstruction = false;

    std::string to_text() const;
    std::string to_json() const;
};

ObstructionReport tangle_obstruction(const Diagram& t, const Diagram& l, const Quandle& q,
                                     bool shadow);

struct FourMoveReport {
    bool infinite = false;
    Int bound = 0;                               // valid when !infinite
    bool linking_mismatch = false;
    bool count_mismatch = false;
    bool orbit_mismatch = false;
    bool unmatched_class = false;                // some class has no g-congruent partner
    std::string witness;                         // maximizing class pair, human-readable

    std::string to_text() const;
    std::string to_json() const;
};

// Lower bound for the 4-move distance, over R_4.
FourMoveReport four_move_bound(const Diagram& l1, const Diagram& l2);

struct PeriodicityReport {
    struct PrimeVerdict {
        int prime;
        bool excluded;
        HomologyClass violating_class;           // meaningful when excluded
        long coloring_count = 0;
    };
    bool shadow = false;
    std::vector<PrimeVerdict> verdicts;

    bool any_excluded() const;
    std::string to_text() const;
    std::string to_json() const;
};

PeriodicityReport periodicity_candidates(const Diagram& l, const Quandle& q, bool shadow,
                                         const std::vector<int>& primes);

}  // namespace qh

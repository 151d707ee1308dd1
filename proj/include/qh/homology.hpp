#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qh/int_matrix.hpp"
#include "qh/quandle.hpp"
#include "qh/snf.hpp"

namespace qh {

enum class Theory { rack, degenerate, quandle };

Theory theory_from_string(const std::string& s);
std::string theory_name(Theory t);

using Tuple = std::vector<int>;

// Sparse formal integer combination of n-tuples of quandle elements.
class Chain {
public:
    explicit Chain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Tuple, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const Tuple& t, const Int& coeff);
    Int coeff(const Tuple& t) const;

    Chain& operator+=(const Chain& o);
    Chain operator+(const Chain& o) const;
    Chain operator-() const;
    Chain operator-(const Chain& o) const;
    Chain operator*(const Int& k) const;
    bool operator==(const Chain& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    int degree_;
    std::map<Tuple, Int> terms_;  // no zero coefficients stored
};

// One term per line: "<sign><coeff> (x1,x2,...,xn)", e.g. "-1 (0,1,2)".
Chain chain_from_text(const std::string& text);
std::string chain_to_text(const Chain& c);

bool tuple_degenerate(const Tuple& t);

// Ordered basis tuples of degree n for the chosen theory, with index lookup.
class QuandleBasis {
public:
    QuandleBasis(const Quandle& q, Theory theory, int degree);

    int size() const { return int(tuples_.size()); }
    int degree() const { return degree_; }
    const Tuple& tuple(int i) const { return tuples_[i]; }
    int index(const Tuple& t) const;  // -1 when absent

    // Chain -> coefficient vector over this basis. Quandle theory silently
    // drops degenerate tuples (the quotient projection); rack/degenerate
    // theories reject tuples outside the basis.
    std::vector<Int> to_vector(const Chain& c) const;
    Chain to_chain(const std::vector<Int>& v) const;

private:
    int degree_;
    std::vector<Tuple> tuples_;
    std::map<Tuple, int> index_;
};

// Componentwise *a on every tuple, coefficients preserved.
Chain act_chain(const Quandle& q, const Chain& c, int a);

// Boundary homomorphism of the rack complex; quandle theory projects
// degenerate tuples to zero, degenerate theory restricts to the subcomplex.
Chain boundary(const Quandle& q, Theory theory, const Chain& c);

// Matrix of the boundary map from degree-n basis to degree-(n-1) basis.
// Column j is the boundary of basis tuple j.
IntMatrix boundary_matrix(const Quandle& q, Theory theory, int degree, bool parallel = true);
IntMatrix boundary_matrix_serial(const Quandle& q, Theory theory, int degree);

// Canonical coordinates of a homology class: free part plus residues.
struct HomologyClass {
    std::vector<Int> free_coords;
    std::vector<Int> torsion_coords;   // torsion_coords[i] in [0, torsion_moduli[i])
    std::vector<Int> torsion_moduli;

    bool is_zero() const;
    bool operator==(const HomologyClass& o) const;
    bool operator<(const HomologyClass& o) const;
    std::string to_string() const;
};

// H_n of the chosen theory over Z, with reduction data carrying any cycle
// to canonical coordinates.
class HomologyPresentation {
public:
    HomologyPresentation(const Quandle& q, Theory theory, int degree);

    const Quandle& quandle() const { return quandle_; }
    Theory theory() const { return theory_; }
    int degree() const { return degree_; }

    int free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }  // d1 | d2 | ..., each > 1
    std::string group_to_string() const;  // "Z^r (+) Z_d1 (+) ..."

    // z must be a cycle; throws with the nonzero boundary witness otherwise.
    HomologyClass reduce_cycle(const Chain& z) const;
    bool classes_equal(const Chain& z1, const Chain& z2) const;

    // Some class c~ with p * c~ = c, when one exists.
    std::optional<HomologyClass> divide_class(const HomologyClass& c, int p) const;

private:
    Quandle quandle_;
    Theory theory_;
    int degree_;
    QuandleBasis basis_;
    IntMatrix boundary_n_;
    SNFResult kernel_snf_;        // SNF of the kernel basis K, for cycle coordinates
    IntMatrix kernel_;            // columns span ker d_n
    IntMatrix rel_u_;             // U of SNF(Y) where K Y = d_{n+1}
    std::vector<int> free_slots_;
    std::vector<int> torsion_slots_;
    std::vector<Int> torsion_;
    int free_rank_;
};

HomologyPresentation homology_group(const Quandle& q, Theory theory, int degree);

// Cocycle with values mod m (m = 0 means integer coefficients), built from
// characteristic functions of tuples.
struct Cocycle {
    int degree;
    Int modulus;              // 0 for Z
    std::map<Tuple, Int> values;

    static Cocycle characteristic(int degree, const Int& modulus, const std::vector<Tuple>& tuples);
};

// f(d c) == 0 (mod m) for every basis tuple c of degree n+1 (quandle theory).
bool cocycle_verify(const Quandle& q, const Cocycle& f);

// Linear pairing, reduced mod m when m > 0.
Int cocycle_evaluate(const Cocycle& f, const Chain& z);

}  // namespace qh

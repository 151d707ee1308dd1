#pragma once

#include <string>
#include <vector>

namespace qh {

struct AxiomViolation {
    int axiom;                      // 1 = idempotence, 2 = right-invertibility, 3 = distributivity
    std::vector<int> witness;       // offending elements, axiom-specific
};

struct AxiomReport {
    bool passed = false;
    std::vector<AxiomViolation> violations;
};

// Exhaustive scan of the three quandle axioms over a square table.
// Witnesses are the first offenders in lexicographic scan order.
AxiomReport verify_axioms(const std::vector<std::vector<int>>& table);

// Finite quandle with elements 0..n-1 and operation table[i][j] = i*j.
class Quandle {
public:
    Quandle(std::string name, std::vector<std::vector<int>> table);

    int order() const { return int(table_.size()); }
    const std::string& name() const { return name_; }

    int op(int a, int b) const { return table_[a][b]; }
    // unique c with c*b = a
    int op_inverse(int a, int b) const { return inv_[a][b]; }

    bool contains(int x) const { return x >= 0 && x < order(); }

    const std::vector<std::vector<int>>& table() const { return table_; }

    // Connected components under the right translations x -> x*j and inverses.
    std::vector<std::vector<int>> orbits() const;
    int orbit_of(int x) const;

private:
    std::string name_;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> inv_;  // inv_[a][b] = c with c*b = a
};

// Dihedral quandle R_n: i*j = 2j - i mod n.
Quandle make_dihedral(int n);

// Alexander quandle on Z_m with a*b = t a + (1-t) b, gcd(t, m) = 1.
Quandle make_alexander(int m, int t);

// Conjugation quandle of a finite group: a*b = b^-1 a b.
Quandle make_conjugation(const std::vector<std::vector<int>>& group_table,
                         const std::vector<int>& inverses, const std::string& name = "Conj");

// Core quandle of a finite group: g*h = h g^-1 h.
Quandle make_core(const std::vector<std::vector<int>>& group_table,
                  const std::vector<int>& inverses, const std::string& name = "Core");

// JSON loader/saver for the quandle file format
// {"name": ..., "order": n, "table": [[...], ...]}.
Quandle quandle_from_json(const std::string& text);
std::string quandle_to_json(const Quandle& q);

// "R4" etc. resolve via make_dihedral; anything else is a file path.
Quandle resolve_quandle(const std::string& name_or_path);

}  // namespace qh

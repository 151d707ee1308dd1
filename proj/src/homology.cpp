#include "qh/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qh {

namespace {

constexpr int kMaxDegree = 5;

// bases one degree above the cap exist so that H_5 can see d_6
void check_degree(int degree, int max = kMaxDegree + 1) {
    if (degree < 1 || degree > max)
        throw std::invalid_argument("degree must be between 1 and " + std::to_string(max));
}

bool in_theory(Theory theory, const Tuple& t) {
    switch (theory) {
        case Theory::rack: return true;
        case Theory::degenerate: return tuple_degenerate(t);
        default: return !tuple_degenerate(t);
    }
}

// Rack boundary of a single tuple, written into `out` with multiplier k.
void tuple_boundary(const Quandle& q, const Tuple& t, const Int& k, Chain& out) {
    int n = int(t.size());
    for (int i = 2; i <= n; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1;
        Tuple face;
        face.reserve(n - 1);
        for (int j = 1; j <= n; ++j)
            if (j != i) face.push_back(t[j - 1]);
        out.add(face, sign * k);
        Tuple twisted;
        twisted.reserve(n - 1);
        for (int j = 1; j < i; ++j) twisted.push_back(q.op(t[j - 1], t[i - 1]));
        for (int j = i + 1; j <= n; ++j) twisted.push_back(t[j - 1]);
        out.add(twisted, -sign * k);
    }
}

}  // namespace

QuandleBasis::QuandleBasis(const Quandle& q, Theory theory, int degree) : degree_(degree) {
    check_degree(degree);
    int n = q.order();
    Tuple t(degree, 0);
    // lexicographic enumeration of all n^degree tuples, filtered by theory
    for (;;) {
        if (in_theory(theory, t)) {
            index_[t] = int(tuples_.size());
            tuples_.push_back(t);
        }
        int i = degree - 1;
        while (i >= 0 && t[i] == n - 1) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
}

int QuandleBasis::index(const Tuple& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
}

std::vector<Int> QuandleBasis::to_vector(const Chain& c) const {
    if (c.degree() != degree_) throw std::invalid_argument("chain degree does not match basis");
    std::vector<Int> v(tuples_.size());
    for (const auto& [t, k] : c.terms()) {
        int i = index(t);
        if (i < 0) {
            if (tuple_degenerate(t)) continue;  // quandle-theory projection
            throw std::invalid_argument("chain tuple outside basis");
        }
        v[i] = k;
    }
    return v;
}

Chain QuandleBasis::to_chain(const std::vector<Int>& v) const {
    if (v.size() != tuples_.size()) throw std::invalid_argument("vector length does not match basis");
    Chain c(degree_);
    for (size_t i = 0; i < v.size(); ++i) c.add(tuples_[i], v[i]);
    return c;
}

Chain boundary(const Quandle& q, Theory theory, const Chain& c) {
    if (c.degree() < 1) throw std::invalid_argument("boundary: degree must be >= 1");
    Chain rack_result(c.degree() - 1);
    for (const auto& [t, k] : c.terms()) {
        for (int x : t)
            if (!q.contains(x)) throw std::invalid_argument("boundary: tuple entry out of range");
        tuple_boundary(q, t, k, rack_result);
    }
    if (theory != Theory::quandle || c.degree() == 1) return rack_result;
    Chain projected(c.degree() - 1);
    for (const auto& [t, k] : rack_result.terms())
        if (!tuple_degenerate(t)) projected.add(t, k);
    return projected;
}

IntMatrix boundary_matrix_serial(const Quandle& q, Theory theory, int degree) {
    check_degree(degree);
    QuandleBasis domain(q, theory, degree);
    if (degree == 1) return IntMatrix(0, domain.size());
    QuandleBasis codomain(q, theory, degree - 1);
    IntMatrix m(codomain.size(), domain.size());
    for (int j = 0; j < domain.size(); ++j) {
        Chain c(degree);
        c.add(domain.tuple(j), 1);
        Chain b = boundary(q, theory, c);
        for (const auto& [t, k] : b.terms()) {
            int i = codomain.index(t);
            if (i < 0) throw std::logic_error("boundary left the subcomplex");
            m.at(i, j) = k;
        }
    }
    return m;
}

IntMatrix boundary_matrix(const Quandle& q, Theory theory, int degree, bool parallel) {
#ifdef _OPENMP
    if (parallel) {
        check_degree(degree);
        QuandleBasis domain(q, theory, degree);
        if (degree == 1) return IntMatrix(0, domain.size());
        QuandleBasis codomain(q, theory, degree - 1);
        IntMatrix m(codomain.size(), domain.size());
        // columns are independent, so the result cannot depend on the schedule
        bool bad = false;
#pragma omp parallel for schedule(dynamic)
        for (int j = 0; j < domain.size(); ++j) {
            Chain c(degree);
            c.add(domain.tuple(j), 1);
            Chain b = boundary(q, theory, c);
            for (const auto& [t, k] : b.terms()) {
                int i = codomain.index(t);
                if (i < 0) {
#pragma omp atomic write
                    bad = true;
                    continue;
                }
                m.at(i, j) = k;
            }
        }
        if (bad) throw std::logic_error("boundary left the subcomplex");
        return m;
    }
#else
    (void)parallel;
#endif
    return boundary_matrix_serial(q, theory, degree);
}

bool HomologyClass::is_zero() const {
    for (const Int& x : free_coords)
        if (x != 0) return false;
    for (const Int& x : torsion_coords)
        if (x != 0) return false;
    return true;
}

bool HomologyClass::operator==(const HomologyClass& o) const {
    return free_coords == o.free_coords && torsion_coords == o.torsion_coords &&
           torsion_moduli == o.torsion_moduli;
}

bool HomologyClass::operator<(const HomologyClass& o) const {
    if (free_coords != o.free_coords) return free_coords < o.free_coords;
    return torsion_coords < o.torsion_coords;
}

std::string HomologyClass::to_string() const {
    std::ostringstream os;
    os << "[free:";
    for (const Int& x : free_coords) os << " " << x.get_str();
    os << " | torsion:";
    for (size_t i = 0; i < torsion_coords.size(); ++i)
        os << " " << torsion_coords[i].get_str() << "(" << torsion_moduli[i].get_str() << ")";
    os << "]";
    return os.str();
}

HomologyPresentation::HomologyPresentation(const Quandle& q, Theory theory, int degree)
    : quandle_(q), theory_(theory), degree_(degree), basis_(q, theory, degree) {
    check_degree(degree, kMaxDegree);
    boundary_n_ = boundary_matrix(q, theory, degree);
    IntMatrix next = boundary_matrix(q, theory, degree + 1);
    // ker d_n
    kernel_ = kernel_basis(boundary_n_);
    kernel_snf_ = smith_normal_form(kernel_);
    int k = kernel_.cols();
    // image of d_{n+1} in kernel coordinates
    IntMatrix y(k, next.cols());
    for (int j = 0; j < next.cols(); ++j) {
        auto sol = solve_integer(kernel_snf_, next.column(j));
        if (!sol) throw std::logic_error("boundary image not contained in the kernel");
        for (int i = 0; i < k; ++i) y.at(i, j) = (*sol)[i];
    }
    SNFResult rel = smith_normal_form(y);
    rel_u_ = rel.U;
    int nd = std::min(y.rows(), y.cols());
    for (int i = 0; i < k; ++i) {
        Int d = i < nd ? rel.D.at(i, i) : Int(0);
        if (d == 0) {
            free_slots_.push_back(i);
        } else if (d > 1) {
            torsion_slots_.push_back(i);
            torsion_.push_back(d);
        }
    }
    free_rank_ = int(free_slots_.size());
}

std::string HomologyPresentation::group_to_string() const {
    std::ostringstream os;
    bool any = false;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
        any = true;
    }
    for (const Int& d : torsion_) {
        if (any) os << " (+) ";
        os << "Z_" << d.get_str();
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

HomologyClass HomologyPresentation::reduce_cycle(const Chain& z) const {
    std::vector<Int> v = basis_.to_vector(z);
    // cycle check with witness
    std::vector<Int> bz = boundary_n_.apply(v);
    for (const Int& x : bz)
        if (x != 0) {
            Chain witness = boundary(quandle_, theory_, basis_.to_chain(v));
            throw std::invalid_argument("reduce_cycle: not a cycle, boundary = " + witness.to_string());
        }
    auto y = solve_integer(kernel_snf_, v);
    if (!y) throw std::logic_error("cycle not in the span of the kernel basis");
    std::vector<Int> w = rel_u_.apply(*y);
    HomologyClass c;
    for (int s : free_slots_) c.free_coords.push_back(w[s]);
    for (size_t i = 0; i < torsion_slots_.size(); ++i) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), w[torsion_slots_[i]].get_mpz_t(), torsion_[i].get_mpz_t());
        c.torsion_coords.push_back(r);
    }
    c.torsion_moduli = torsion_;
    return c;
}

bool HomologyPresentation::classes_equal(const Chain& z1, const Chain& z2) const {
    return reduce_cycle(z1) == reduce_cycle(z2);
}

std::optional<HomologyClass> HomologyPresentation::divide_class(const HomologyClass& c, int p) const {
    if (p < 2) throw std::invalid_argument("divide_class: p must be prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("divide_class: p must be prime");
    HomologyClass out;
    out.torsion_moduli = torsion_;
    for (const Int& x : c.free_coords) {
        if (x % p != 0) return std::nullopt;
        out.free_coords.push_back(x / p);
    }
    for (size_t i = 0; i < c.torsion_coords.size(); ++i) {
        // solve p * t == r (mod d)
        const Int& r = c.torsion_coords[i];
        const Int& d = torsion_[i];
        Int g = gcd(Int(p), d);
        if (r % g != 0) return std::nullopt;
        Int d2 = d / g;
        Int pinv;
        if (mpz_invert(pinv.get_mpz_t(), Int(p / g).get_mpz_t(), d2.get_mpz_t()) == 0)
            throw std::logic_error("divide_class: inverse must exist");
        Int t;
        mpz_fdiv_r(t.get_mpz_t(), Int((r / g) * pinv).get_mpz_t(), d2.get_mpz_t());
        out.torsion_coords.push_back(t);
    }
    return out;
}

HomologyPresentation homology_group(const Quandle& q, Theory theory, int degree) {
    return HomologyPresentation(q, theory, degree);
}

Cocycle Cocycle::characteristic(int degree, const Int& modulus, const std::vector<Tuple>& tuples) {
    Cocycle f{degree, modulus, {}};
    for (const Tuple& t : tuples) {
        if (int(t.size()) != degree) throw std::invalid_argument("cocycle tuple has wrong degree");
        f.values[t] += 1;
    }
    return f;
}

bool cocycle_verify(const Quandle& q, const Cocycle& f) {
    QuandleBasis above(q, Theory::quandle, f.degree + 1);
    for (int j = 0; j < above.size(); ++j) {
        Chain c(f.degree + 1);
        c.add(above.tuple(j), 1);
        Int v = cocycle_evaluate(f, boundary(q, Theory::quandle, c));
        if (v != 0) return false;
    }
    return true;
}

Int cocycle_evaluate(const Cocycle& f, const Chain& z) {
    if (z.degree() != f.degree) throw std::invalid_argument("cocycle/chain degree mismatch");
    Int acc = 0;
    for (const auto& [t, k] : z.terms()) {
        auto it = f.values.find(t);
        if (it != f.values.end()) acc += k * it->second;
    }
    if (f.modulus > 0) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), f.modulus.get_mpz_t());
        return r;
    }
    return acc;
}

}  // namespace qh

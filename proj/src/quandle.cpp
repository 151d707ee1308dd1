#include "qh/quandle.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qh {

AxiomReport verify_axioms(const std::vector<std::vector<int>>& table) {
    int n = int(table.size());
    for (int i = 0; i < n; ++i) {
        if (int(table[i].size()) != n) throw std::invalid_argument("quandle table is not square");
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                throw std::invalid_argument("quandle table entry out of range");
    }
    AxiomReport rep;
    for (int i = 0; i < n; ++i)
        if (table[i][i] != i) { rep.violations.push_back({1, {i}}); break; }
    for (int j = 0; j < n; ++j) {
        std::vector<int> seen(n, 0);
        for (int i = 0; i < n; ++i) seen[table[i][j]]++;
        for (int v = 0; v < n; ++v)
            if (seen[v] != 1) { rep.violations.push_back({2, {j, v}}); goto axiom3; }
    }
axiom3:
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[table[i][k]][table[j][k]]) {
                    rep.violations.push_back({3, {i, j, k}});
                    goto done;
                }
done:
    rep.passed = rep.violations.empty();
    return rep;
}

Quandle::Quandle(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
    AxiomReport rep = verify_axioms(table_);
    if (!rep.passed) {
        std::ostringstream os;
        os << "not a quandle (" << name_ << "): axiom " << rep.violations.front().axiom << " fails";
        throw std::invalid_argument(os.str());
    }
    int n = order();
    inv_.assign(n, std::vector<int>(n, -1));
    for (int c = 0; c < n; ++c)
        for (int b = 0; b < n; ++b) inv_[table_[c][b]][b] = c;
}

std::vector<std::vector<int>> Quandle::orbits() const {
    int n = order();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int x) { while (rep[x] != x) x = rep[x] = rep[rep[x]]; return x; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = find(i), b = find(table_[i][j]);
            if (a != b) rep[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (block_of[r] < 0) { block_of[r] = int(blocks.size()); blocks.push_back({}); }
        blocks[block_of[r]].push_back(i);
    }
    return blocks;
}

int Quandle::orbit_of(int x) const {
    auto blocks = orbits();
    for (int b = 0; b < int(blocks.size()); ++b)
        for (int e : blocks[b])
            if (e == x) return b;
    return -1;
}

Quandle make_dihedral(int n) {
    if (n < 1) throw std::invalid_argument("make_dihedral: n must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = ((2 * j - i) % n + n) % n;
    return Quandle("R" + std::to_string(n), std::move(t));
}

Quandle make_alexander(int m, int t) {
    if (m < 1) throw std::invalid_argument("make_alexander: m must be positive");
    if (std::gcd(((t % m) + m) % m, m) != 1)
        throw std::invalid_argument("make_alexander: t must be invertible mod m");
    std::vector<std::vector<int>> tab(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) tab[a][b] = ((t * a + (1 - t) * b) % m + m) % m;
    return Quandle("Alex(" + std::to_string(m) + "," + std::to_string(t) + ")", std::move(tab));
}

namespace {

void check_group(const std::vector<std::vector<int>>& g, const std::vector<int>& inv) {
    int n = int(g.size());
    if (n == 0) throw std::invalid_argument("empty group table");
    if (int(inv.size()) != n) throw std::invalid_argument("inverse list has wrong length");
    for (int i = 0; i < n; ++i) {
        if (int(g[i].size()) != n) throw std::invalid_argument("group table is not square");
        for (int j = 0; j < n; ++j)
            if (g[i][j] < 0 || g[i][j] >= n) throw std::invalid_argument("group table entry out of range");
    }
    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool id = true;
        for (int x = 0; x < n && id; ++x) id = g[c][x] == x && g[x][c] == x;
        if (id) { e = c; break; }
    }
    if (e < 0) throw std::invalid_argument("group has no identity");
    for (int i = 0; i < n; ++i)
        if (g[i][inv[i]] != e || g[inv[i]][i] != e)
            throw std::invalid_argument("inverse list does not invert");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g[g[i][j]][k] != g[i][g[j][k]])
                    throw std::invalid_argument("group operation is not associative");
}

}  // namespace

Quandle make_conjugation(const std::vector<std::vector<int>>& g, const std::vector<int>& inv,
                         const std::string& name) {
    check_group(g, inv);
    int n = int(g.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = g[g[inv[b]][a]][b];
    return Quandle(name, std::move(t));
}

Quandle make_core(const std::vector<std::vector<int>>& g, const std::vector<int>& inv,
                  const std::string& name) {
    check_group(g, inv);
    int n = int(g.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = g[g[b][inv[a]]][b];
    return Quandle(name, std::move(t));
}

Quandle quandle_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::string name = j.value("name", "quandle");
    int order = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (int(table.size()) != order) throw std::invalid_argument("quandle file: order/table mismatch");
    return Quandle(name, std::move(table));
}

std::string quandle_to_json(const Quandle& q) {
    nlohmann::json j;
    j["name"] = q.name();
    j["order"] = q.order();
    j["table"] = q.table();
    return j.dump(2);
}

Quandle resolve_quandle(const std::string& s) {
    if (s.size() >= 2 && s[0] == 'R') {
        bool digits = true;
        for (size_t i = 1; i < s.size(); ++i) digits = digits && isdigit(s[i]);
        if (digits) return make_dihedral(std::stoi(s.substr(1)));
    }
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("cannot open quandle file: " + s);
    std::stringstream ss;
    ss << in.rdbuf();
    return quandle_from_json(ss.str());
}

}  // namespace qh

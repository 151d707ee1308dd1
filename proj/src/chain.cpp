#include "qh/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace qh {

Theory theory_from_string(const std::string& s) {
    if (s == "rack") return Theory::rack;
    if (s == "degenerate") return Theory::degenerate;
    if (s == "quandle") return Theory::quandle;
    throw std::invalid_argument("unknown theory: " + s);
}

std::string theory_name(Theory t) {
    switch (t) {
        case Theory::rack: return "rack";
        case Theory::degenerate: return "degenerate";
        default: return "quandle";
    }
}

void Chain::add(const Tuple& t, const Int& coeff) {
    if (coeff == 0) return;
    if (int(t.size()) != degree_) throw std::invalid_argument("chain term has wrong degree");
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int Chain::coeff(const Tuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Int(0) : it->second;
}

Chain& Chain::operator+=(const Chain& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("chain degree mismatch");
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

Chain Chain::operator+(const Chain& o) const { Chain r = *this; r += o; return r; }

Chain Chain::operator-() const {
    Chain r(degree_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

Chain Chain::operator-(const Chain& o) const { return *this + (-o); }

Chain Chain::operator*(const Int& k) const {
    Chain r(degree_);
    if (k != 0)
        for (const auto& [t, c] : terms_) r.terms_.emplace(t, c * k);
    return r;
}

std::string Chain::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " ";
        if (c >= 0 && !first) os << "+";
        os << c.get_str() << "*(";
        for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        os << ")";
        first = false;
    }
    return os.str();
}

Chain chain_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int degree = -1;
    std::vector<std::pair<Tuple, Int>> terms;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        size_t open = line.find('(');
        size_t close = line.find(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw std::invalid_argument("bad chain term: " + line);
        std::string coeff_str = line.substr(0, open);
        // trim
        while (!coeff_str.empty() && isspace(coeff_str.back())) coeff_str.pop_back();
        size_t b = coeff_str.find_first_not_of(" \t");
        coeff_str = b == std::string::npos ? "" : coeff_str.substr(b);
        if (!coeff_str.empty() && coeff_str[0] == '+') coeff_str.erase(0, 1);  // mpz rejects '+'
        if (coeff_str.empty()) coeff_str = "1";
        if (coeff_str == "-") coeff_str = "-1";
        Int coeff(coeff_str);
        Tuple t;
        std::string inner = line.substr(open + 1, close - open - 1);
        std::istringstream ts(inner);
        std::string tok;
        while (std::getline(ts, tok, ',')) t.push_back(std::stoi(tok));
        if (t.empty()) throw std::invalid_argument("empty tuple in chain term: " + line);
        if (degree < 0) degree = int(t.size());
        if (int(t.size()) != degree) throw std::invalid_argument("mixed degrees in chain");
        terms.emplace_back(std::move(t), coeff);
    }
    if (degree < 0) throw std::invalid_argument("empty chain text (degree unknown)");
    Chain c(degree);
    for (auto& [t, k] : terms) c.add(t, k);
    return c;
}

std::string chain_to_text(const Chain& c) {
    std::ostringstream os;
    for (const auto& [t, k] : c.terms()) {
        os << (k > 0 ? "+" : "") << k.get_str() << " (";
        for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        os << ")\n";
    }
    return os.str();
}

bool tuple_degenerate(const Tuple& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

Chain act_chain(const Quandle& q, const Chain& c, int a) {
    if (!q.contains(a)) throw std::invalid_argument("act_chain: element out of range");
    Chain r(c.degree());
    for (const auto& [t, k] : c.terms()) {
        Tuple s(t.size());
        for (size_t i = 0; i < t.size(); ++i) {
            if (!q.contains(t[i])) throw std::invalid_argument("act_chain: tuple entry out of range");
            s[i] = q.op(t[i], a);
        }
        r.add(s, k);
    }
    return r;
}

}  // namespace qh

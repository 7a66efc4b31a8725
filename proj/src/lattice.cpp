#include "bicover/lattice.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "bicover/hodge.hpp"

namespace bicover {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using BigMatrix = std::vector<std::vector<cpp_int>>;

enum class Atom { U, E8, D6, D4, A1, Nikulin, Rank1 };

struct Term {
    Atom atom;
    Int scale;  // twist for U/E8/D*/A1/N, the self-intersection for Rank1
    Int power;
    bool operator==(const Term& o) const { return atom == o.atom && scale == o.scale; }
};

IntMatrix cartan(const std::vector<std::pair<int, int>>& edges, int n) {
    IntMatrix g(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 2;
    for (auto [a, b] : edges) g[a][b] = g[b][a] = -1;
    return g;
}

IntMatrix atom_gram(Atom a) {
    switch (a) {
        case Atom::U: return {{0, 1}, {1, 0}};
        case Atom::E8: return cartan({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}}, 8);
        case Atom::D6: return cartan({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}, 6);
        case Atom::D4: return cartan({{0, 1}, {0, 2}, {0, 3}}, 4);
        case Atom::A1: return {{2}};
        case Atom::Nikulin: {
            // e1..e7 and v = (e1 + ... + e8)/2.
            IntMatrix g(8, Vec(8, 0));
            for (int i = 0; i < 7; ++i) {
                g[i][i] = -2;
                g[i][7] = g[7][i] = -1;
            }
            g[7][7] = -4;
            return g;
        }
        case Atom::Rank1: return {{1}};
    }
    return {};
}

std::string atom_name(Atom a) {
    switch (a) {
        case Atom::U: return "U";
        case Atom::E8: return "E8";
        case Atom::D6: return "D6";
        case Atom::D4: return "D4";
        case Atom::A1: return "A1";
        case Atom::Nikulin: return "N";
        case Atom::Rank1: return "";
    }
    return "";
}

std::string clean(const std::string& s) {
    static const std::vector<std::pair<std::string, std::string>> subs = {
        {"\xE2\x8A\x95", "+"},  // circled plus
        {"\xE2\x9F\xA8", "<"},  // mathematical angle brackets
        {"\xE2\x9F\xA9", ">"},
        {"\xE2\x8C\xA9", "<"},
        {"\xE2\x8C\xAA", ">"},
        {"\xE2\x88\x92", "-"},  // unicode minus
    };
    std::string out = s;
    for (const auto& [from, to] : subs) {
        std::size_t pos = 0;
        while ((pos = out.find(from, pos)) != std::string::npos) out.replace(pos, from.size(), to);
    }
    std::string r;
    for (char c : out)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') r += c;
    return r;
}

class Parser {
public:
    explicit Parser(std::string src) : s_(clean(src)), orig_(std::move(src)) {}

    std::vector<Term> parse() {
        std::vector<Term> terms;
        if (s_.empty()) fail("empty lattice expression");
        while (true) {
            terms.push_back(term());
            if (pos_ == s_.size()) break;
            expect('+');
        }
        return terms;
    }

private:
    std::string s_, orig_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error("cannot parse lattice \"" + orig_ + "\": " + why);
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "' at offset " + std::to_string(pos_));
        ++pos_;
    }
    Int integer() {
        std::size_t start = pos_;
        if (peek('-') || peek('+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected an integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }
    Int optional_twist(Int dflt) {
        if (!peek('(')) return dflt;
        ++pos_;
        Int k = integer();
        expect(')');
        if (k == 0) fail("twist by 0");
        return k;
    }
    bool accept(const std::string& word) {
        if (s_.compare(pos_, word.size(), word) != 0) return false;
        pos_ += word.size();
        return true;
    }
    Term term() {
        Term t{Atom::U, 1, 1};
        if (accept("U")) {
            t = {Atom::U, optional_twist(1), 1};
        } else if (accept("E8")) {
            t = {Atom::E8, optional_twist(-1), 1};
        } else if (accept("D6")) {
            t = {Atom::D6, optional_twist(-1), 1};
        } else if (accept("D4")) {
            t = {Atom::D4, optional_twist(-1), 1};
        } else if (accept("A1")) {
            t = {Atom::A1, optional_twist(-1), 1};
        } else if (accept("N")) {
            t = {Atom::Nikulin, optional_twist(1), 1};
        } else if (peek('<')) {
            ++pos_;
            Int k = integer();
            expect('>');
            if (k == 0) fail("<0> is degenerate");
            t = {Atom::Rank1, k, 1};
        } else {
            fail("unknown atom at offset " + std::to_string(pos_));
        }
        if (peek('^')) {
            ++pos_;
            bool brace = peek('{');
            if (brace) ++pos_;
            if (peek('+')) ++pos_;
            t.power = integer();
            if (brace) expect('}');
            if (t.power < 1) fail("power must be >= 1");
        }
        return t;
    }
};

std::vector<Term> merged(const std::vector<Term>& terms) {
    std::vector<Term> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back() == t) out.back().power += t.power;
        else out.push_back(t);
    }
    return out;
}

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix b(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) b[i].assign(m[i].begin(), m[i].end());
    return b;
}

cpp_int bareiss_det(BigMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    cpp_int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Smith normal form D = P A Q; returns the diagonal and Q.
std::pair<std::vector<cpp_int>, BigMatrix> smith(BigMatrix a) {
    const std::size_t n = a.size();
    BigMatrix q(n, std::vector<cpp_int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) q[i][i] = 1;
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(a[i][x], a[i][y]);
            std::swap(q[i][x], q[i][y]);
        }
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const cpp_int& f) {
        for (std::size_t i = 0; i < n; ++i) {
            a[i][dst] += f * a[i][src];
            q[i][dst] += f * q[i][src];
        }
    };
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // Pivot: smallest nonzero entry of the trailing block.
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi == n || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
            if (pi == n) return {std::vector<cpp_int>(n, 0), q};
            std::swap(a[pi], a[t]);
            if (pj != t) col_swap(pj, t);
            bool clean_pass = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                cpp_int f = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) clean_pass = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                cpp_int f = a[t][j] / a[t][t];
                col_addmul(j, t, -f);
                if (a[t][j] != 0) clean_pass = false;
            }
            if (!clean_pass) continue;
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
        }
        if (a[t][t] < 0) {
            for (std::size_t i = 0; i < n; ++i) {
                a[i][t] = -a[i][t];
                q[i][t] = -q[i][t];
            }
        }
    }
    std::vector<cpp_int> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a[i][i];
    return {diag, q};
}

Int to_int(const cpp_int& v, const char* what) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw Error(std::string(what) + " does not fit in 64 bits");
    return static_cast<Int>(v);
}

std::string fraction(const cpp_rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

}  // namespace

bool Lattice::is_even() const {
    for (int i = 0; i < rank(); ++i)
        if (gram[i][i] % 2 != 0) return false;
    return true;
}

Int DiscriminantGroup::order() const {
    Int o = 1;
    for (Int c : cyclic_orders) o *= c;
    return o;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    const int n = a.rank() + b.rank();
    Lattice out{IntMatrix(n, Vec(n, 0))};
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) out.gram[i][j] = a.gram[i][j];
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) out.gram[a.rank() + i][a.rank() + j] = b.gram[i][j];
    return out;
}

Lattice twist(const Lattice& l, Int k) {
    if (k == 0) throw Error("twist by 0 is degenerate");
    Lattice out = l;
    for (auto& row : out.gram)
        for (auto& x : row) x *= k;
    return out;
}

Lattice named(const std::string& expr) {
    Lattice out;
    for (const auto& t : Parser(expr).parse()) {
        Lattice one = twist(Lattice{atom_gram(t.atom)}, t.scale);
        for (Int i = 0; i < t.power; ++i) out = direct_sum(out, one);
    }
    return out;
}

std::string normalize(const std::string& expr) {
    std::string out;
    for (const auto& t : merged(Parser(expr).parse())) {
        if (!out.empty()) out += " \xE2\x8A\x95 ";
        if (t.atom == Atom::Rank1) {
            out += "<" + std::to_string(t.scale) + ">";
        } else {
            out += atom_name(t.atom);
            bool default_scale = (t.atom == Atom::U || t.atom == Atom::Nikulin) ? t.scale == 1 : false;
            if (!default_scale) out += "(" + std::to_string(t.scale) + ")";
        }
        if (t.power > 1) out += "^" + std::to_string(t.power);
    }
    return out;
}

Int det(const Lattice& l) { return to_int(bareiss_det(to_big(l.gram)), "determinant"); }

std::pair<int, int> signature(const Lattice& l) {
    const std::size_t n = l.gram.size();
    std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = l.gram[i][j];
    int pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!done[i] && a[i][i] != 0) p = i;
        if (p == n) {
            // Zero diagonal: replace e_i by e_i + e_j for some a_ij != 0 (congruence).
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
                        pi = i, pj = j;
                        break;
                    }
            if (pi == n) throw Error("degenerate lattice has no signature");
            for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            p = pi;
        }
        done[p] = true;
        (a[p][p] > 0 ? pos : neg)++;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p] == 0) continue;
            cpp_rational f = a[i][p] / a[p][p];
            for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
            for (std::size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
        }
    }
    return {pos, neg};
}

DiscriminantGroup discriminant_group(const Lattice& l) {
    if (l.rank() == 0) return {};
    auto big = to_big(l.gram);
    auto [diag, q] = smith(big);
    const std::size_t n = big.size();
    DiscriminantGroup g;
    const cpp_rational modulus = l.is_even() ? 2 : 1;
    std::vector<std::pair<cpp_int, std::string>> parts;
    for (std::size_t t = 0; t < n; ++t) {
        if (diag[t] == 0) throw Error("degenerate lattice has no discriminant group");
        if (diag[t] == 1) continue;
        // Generator q_t / d_t of the dual lattice modulo the lattice.
        cpp_int self = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) self += q[i][t] * big[i][j] * q[j][t];
        cpp_rational v(self, diag[t] * diag[t]);
        cpp_rational ratio = v / modulus;
        cpp_int whole = numerator(ratio) / denominator(ratio);
        v -= cpp_rational(whole) * modulus;
        if (v < 0) v += modulus;
        parts.emplace_back(diag[t], fraction(v));
    }
    std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [d, f] : parts) {
        g.cyclic_orders.push_back(to_int(d, "invariant factor"));
        g.form_values.push_back(f);
    }
    return g;
}

int delta_invariant(const Lattice& l) {
    auto g = discriminant_group(l);
    for (Int c : g.cyclic_orders)
        if (c != 2) throw Error("discriminant group is not 2-elementary");
    for (const auto& v : g.form_values)
        if (v.find('/') != std::string::npos) return 1;
    return 0;
}

namespace {

struct TableEntry {
    BaseSurface base;
    std::vector<Vec> components;
    LatticeEntry lattice;
};

std::vector<Vec> repeat(int times, Vec v) { return std::vector<Vec>(times, std::move(v)); }

std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Vec> key_of(const BaseSurface& base, std::vector<Vec> comps) {
    std::sort(comps.rbegin(), comps.rend());
    if (base.kind != SurfaceKind::Quadric) return comps;
    auto sw = comps;
    for (auto& c : sw) std::reverse(c.begin(), c.end());
    std::sort(sw.rbegin(), sw.rend());
    return std::max(comps, sw);
}

const std::vector<TableEntry>& table() {
    static const std::vector<TableEntry> entries = [] {
        const auto P2 = BaseSurface::plane();
        const auto Q = BaseSurface::quadric();
        return std::vector<TableEntry>{
            {P2, {{3}, {3}}, {"U^2 ⊕ E8(-2)", ""}},
            {P2, {{4}, {2}}, {"U^2 ⊕ D4(-1) ⊕ <-2>^5", ""}},
            {P2, {{5}, {1}}, {"U^2 ⊕ E8(-1) ⊕ <-2>^4", ""}},
            {P2, {{2}, {2}, {2}}, {"<2>^2 ⊕ <-2>^7", ""}},
            {P2, {{3}, {2}, {1}}, {"U ⊕ U(2) ⊕ <-2>^6", ""}},
            {P2, {{4}, {1}, {1}}, {"U^2 ⊕ D4(-1) ⊕ <-2>^4", ""}},
            {Q, concat({{4, 1}}, repeat(3, {0, 1})), {"<2>^2 ⊕ <-2>^6", "U(2)^2 ⊕ <-2>^4"}},
            {Q, concat(repeat(4, {1, 0}), repeat(4, {0, 1})), {"U(2)^2", ""}},
            {Q, {{3, 1}, {1, 3}}, {"<2>^2 ⊕ <-2>^8", "U(2)^2 ⊕ <-2>^6"}},
            {Q, {{3, 2}, {1, 2}}, {"U^2 ⊕ <-2>^8", ""}},
            {Q, {{3, 3}, {1, 1}}, {"U^2 ⊕ D6(-1) ⊕ <-2>^4", ""}},
            {Q, {{2, 2}, {2, 2}}, {"U^2 ⊕ E8(-2)", ""}},
            {Q, concat({{4, 2}}, repeat(2, {0, 1})), {"U^2 ⊕ N", ""}},
            {Q, concat(repeat(2, {1, 0}), repeat(2, {1, 2})), {"U(2)^2 ⊕ <-2>^4", ""}},
            {Q, {{2, 2}, {1, 1}, {1, 1}}, {"U ⊕ <2> ⊕ <-2>^7", ""}},
            {Q, {{2, 1}, {1, 2}, {1, 1}}, {"U(2)^2 ⊕ <-2>^5", ""}},
            {Q, concat(repeat(2, {1, 0}), {{1, 3}, {1, 1}}), {"U(2)^2 ⊕ <-2>^4", ""}},
        };
    }();
    return entries;
}

}  // namespace

LatticeEntry transcendental_of(const BaseSurface& base, const std::vector<DivisorClass>& branch_components) {
    std::vector<Vec> comps;
    std::string shown;
    for (const auto& c : branch_components) {
        if (c.base != base) throw Error("branch component " + c.str() + " is not on " + base.name());
        comps.push_back(c.c);
        shown += (shown.empty() ? "" : " + ") + c.str();
    }
    auto key = key_of(base, comps);
    for (const auto& e : table()) {
        if (e.base != base || key_of(base, e.components) != key) continue;
        Lattice l = named(e.lattice.expr);
        Int expected = 2 + moduli_count(base, branch_components);
        if (l.rank() != expected)
            throw Error("internal: lattice " + e.lattice.expr + " has rank " + std::to_string(l.rank()) +
                        " but the configuration has " + std::to_string(expected - 2) + " moduli");
        if (signature(l) != std::make_pair(2, l.rank() - 2))
            throw Error("internal: lattice " + e.lattice.expr + " does not have signature (2, rank-2)");
        return e.lattice;
    }
    throw Error("unassigned: no transcendental lattice tabulated for " + base.name() + " branched on " + shown);
}

std::vector<std::pair<std::string, std::vector<DivisorClass>>> tabulated_configurations() {
    std::vector<std::pair<std::string, std::vector<DivisorClass>>> out;
    for (const auto& e : table()) {
        std::vector<DivisorClass> comps;
        for (const auto& c : e.components) comps.emplace_back(e.base, c);
        out.emplace_back(e.lattice.expr, comps);
    }
    return out;
}

}  // namespace bicover

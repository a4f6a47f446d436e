#include "catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace dessin {

namespace {

long long mod(long long v, long long p) { return ((v % p) + p) % p; }

long long mulmod(long long a, long long b, long long p) { return mod(a * b, p); }

long long powmod(long long b, long long e, long long p) {
    long long r = 1;
    b = mod(b, p);
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

long long invmod(long long a, long long p) { return powmod(a, p - 2, p); }

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// permutation of {0..p-1, inf=p} induced by t -> (a t + c)/(b t + d)
Perm mobius_perm(long long p, const Mat2& m) {
    long long a = mod(m.a, p), b = mod(m.b, p), c = mod(m.c, p), d = mod(m.d, p);
    if (mod(a * d - b * c, p) != 1)
        throw Error("mobius: matrix is singular or not in SL2(p)");
    int n = static_cast<int>(p) + 1;
    std::vector<int> img(n, -1);
    for (long long t = 0; t < p; ++t) {
        long long num = mod(a * t + c, p);
        long long den = mod(b * t + d, p);
        img[t] = den == 0 ? p : static_cast<int>(mulmod(num, invmod(den, p), p));
    }
    img[p] = b == 0 ? static_cast<int>(p) : static_cast<int>(mulmod(a, invmod(b, p), p));
    return Perm(std::move(img));
}

}  // namespace

Dessin mobius_dessin(long long p, const Mat2& x_matrix, const Mat2& y_matrix) {
    if (!is_prime(p) || p == 2) throw Error("mobius_dessin: p must be an odd prime");
    return Dessin(mobius_perm(p, x_matrix), mobius_perm(p, y_matrix));
}

Dessin psl2_handle_dessin(long long p) {
    long long a, expected_trace;
    if (p == 13) { a = 0; expected_trace = 5; }
    else if (p == 29) { a = -3; expected_trace = 3; }
    else if (p == 41) { a = 9; expected_trace = 11; }
    else throw Error("psl2_handle_dessin: p must be 13, 29 or 41");
    long long i = 0;
    for (long long t = 1; t < p; ++t)
        if (mulmod(t, t, p) == p - 1) { i = t; break; }
    Mat2 x{mod(a, p), 1, mod(a * (1 - a) - 1, p), mod(1 - a, p)};
    Mat2 y{i, 0, 0, p - i};
    // tr(XY) must land in the advertised class +-trace
    long long tr = mod(x.a * y.a + x.b * y.c + x.c * y.b + x.d * y.d, p);
    if (tr != mod(expected_trace, p) && tr != mod(-expected_trace, p))
        throw Error("psl2_handle_dessin: z-trace check failed (internal error)");
    return mobius_dessin(p, x, y);
}

std::optional<Dessin> find_psl2_triple(long long p, long long target_trace) {
    if (!is_prime(p) || p == 2 || p > 100)
        throw Error("find_psl2_triple: p must be an odd prime <= 100");
    Mat2 y{0, p - 1, 1, 0};  // t -> -1/t
    Perm yp = mobius_perm(p, y);
    long long tt = mod(target_trace, p);
    // x of order 3: trace 1 (the -1 class is the same in PSL2)
    for (long long a = 0; a < p; ++a) {
        long long d = mod(1 - a, p);
        for (long long b = 0; b < p; ++b) {
            std::vector<long long> cs;
            if (b == 0) {
                if (mulmod(a, d, p) != 1) continue;
                for (long long c = 0; c < p; ++c) cs.push_back(c);
            } else {
                cs.push_back(mulmod(mod(a * d - 1, p), invmod(b, p), p));
            }
            for (long long c : cs) {
                Mat2 xm{a, b, c, d};
                // trace of X*Y with Y = [[0,-1],[1,0]] is b - c
                long long tr = mod(xm.b - xm.c, p);
                if (tr != tt && tr != mod(-tt, p)) continue;
                Perm xp = mobius_perm(p, xm);
                if (perm_order(xp) != 3) continue;
                Perm xy = compose(xp, yp);
                if (perm_order(xy) != 7) continue;
                try {
                    return Dessin(xp, yp);
                } catch (const Error&) {
                    continue;  // not transitive
                }
            }
        }
    }
    return std::nullopt;
}

Dessin modular_p(long long p) {
    if (!is_prime(p)) throw Error("modular_p: p must be prime");
    if (p == 2) throw Error("modular_p: p must be odd");
    Mat2 x{0, p - 1, 1, 1};   // t -> 1/(1-t)
    Mat2 y{0, p - 1, 1, 0};   // t -> -1/t
    Dessin d = mobius_dessin(p, x, y);
    // z must be t -> t+1 fixing the point at infinity: a p-cycle and a
    // 1-valent face
    for (long long t = 0; t < p; ++t)
        if (d.z()[t] != (t + 1) % p)
            throw Error("modular_p: face structure check failed (internal error)");
    if (d.z()[p] != p)
        throw Error("modular_p: face structure check failed (internal error)");
    return d;
}

namespace {

#ifndef DESSIN_DEFAULT_FIXTURES
#define DESSIN_DEFAULT_FIXTURES "fixtures"
#endif

const std::map<std::string, const char*>& fixture_files() {
    static const std::map<std::string, const char*> m = {
        {"S", "S.dsn"},       {"Sbar", "Sbar.dsn"}, {"B", "B.dsn"},
        {"C", "C.dsn"},       {"D", "D.dsn"},       {"E", "E.dsn"},
        {"G", "G.dsn"},       {"H", "H.dsn"},       {"I", "I.dsn"},
        {"J", "J.dsn"},       {"K", "K.dsn"},       {"L", "L.dsn"},
        {"M", "M.dsn"},       {"N", "N.dsn"},       {"Fig13", "Fig13.dsn"},
        {"Fig16", "Fig16.dsn"}, {"Fig17", "Fig17.dsn"}, {"Fig18", "Fig18.dsn"},
    };
    return m;
}

Dessin fig15() {
    // printed generators of the degree-21 dessin; the printed y contains an
    // impossible pair, so y is rebuilt as x^-1 z^-1 and checked
    Perm x = parse_cycles("(1,2,3)(4,5,6)(7,8,9)(11,12,13)(15,16,17)(18,19,20)", 21);
    Perm z = parse_cycles("(1,16,20,21,19,18,15)(2,17,3,6,13,7,4)(5,9,10,8,12,14,11)", 21);
    Perm y = compose(inverse(x), inverse(z));
    auto ca = cycle_analysis(y);
    if (perm_order(y) != 2 || ca.fixed_point_count != 1 || ca.fixed_points[0] != 18)
        throw Error("fig15: reconstructed y is not the expected involution");
    return Dessin(x, y);
}

}  // namespace

std::string fixtures_dir() {
    if (const char* env = std::getenv("DESSIN_FIXTURES")) return env;
    return DESSIN_DEFAULT_FIXTURES;
}

std::vector<std::string> catalog_names() {
    return {"S", "Sbar", "A", "B", "C", "D", "E", "F", "G", "H", "I", "J",
            "K", "L", "M", "N", "Fig13", "Fig15", "Fig16", "Fig17", "Fig18", "T"};
}

namespace {

// Cheap per-entry invariants checked on every load: degree, fixed-point
// counts of (x, y, z), genus, and disjoint (k)-handle counts. Group orders
// are left to the verification suite.
struct EntryRow {
    int degree, alpha, beta, gamma, genus, h1, h2, h3;
};

const std::map<std::string, EntryRow>& entry_rows() {
    static const std::map<std::string, EntryRow> rows = {
        {"S", {7, 1, 3, 0, 0, 1, 1, 0}},    {"Sbar", {7, 1, 3, 0, 0, 1, 1, 0}},
        {"A", {14, 2, 2, 0, 0, 1, 0, 0}},   {"B", {15, 0, 3, 1, 0, 0, 1, 1}},
        {"C", {21, 0, 5, 0, 0, 1, 0, 1}},   {"D", {22, 1, 2, 1, 0, 0, 1, 0}},
        {"E", {28, 1, 4, 0, 0, 1, 1, 0}},   {"F", {30, 0, 2, 2, 0, 0, 1, 0}},
        {"G", {42, 0, 6, 0, 0, 3, 0, 0}},   {"H", {42, 0, 6, 0, 0, 1, 0, 1}},
        {"I", {57, 0, 5, 1, 0, 0, 2, 0}},   {"J", {72, 0, 4, 2, 0, 2, 0, 0}},
        {"K", {72, 0, 4, 2, 0, 1, 0, 0}},   {"L", {102, 0, 2, 4, 0, 0, 1, 0}},
        {"M", {108, 0, 4, 3, 0, 1, 1, 0}},  {"N", {108, 0, 4, 3, 0, 1, 0, 1}},
        {"Fig13", {8, 2, 0, 1, 0, 0, 0, 0}},
        {"Fig15", {21, 3, 1, 0, 0, 0, 0, 0}},
        {"Fig16", {28, 4, 0, 0, 0, 0, 0, 0}},
        {"Fig17", {29, 2, 1, 1, 0, 0, 0, 0}},
        {"Fig18", {42, 3, 2, 0, 0, 0, 1, 0}},
    };
    return rows;
}

void check_entry(const std::string& name, const Dessin& d) {
    auto it = entry_rows().find(name);
    if (it == entry_rows().end()) return;
    const EntryRow& r = it->second;
    auto sig = genus_signature(d);
    auto hs = y_handles(d);
    bool ok = d.degree() == r.degree && sig.alpha == r.alpha &&
              sig.beta == r.beta && sig.gamma == r.gamma &&
              sig.genus == r.genus &&
              max_disjoint_handles(hs, 1, Axis::kY) == r.h1 &&
              max_disjoint_handles(hs, 2, Axis::kY) == r.h2 &&
              max_disjoint_handles(hs, 3, Axis::kY) == r.h3;
    if (!ok)
        throw Error("catalog entry " + name + " fails its invariant row");
}

}  // namespace

Dessin named(const std::string& name) {
    auto build = [&]() -> Dessin {
        if (name == "A") return psl2_handle_dessin(13);
        if (name == "F") return psl2_handle_dessin(29);
        if (name == "T") return psl2_handle_dessin(41);
        if (name == "Fig15") return fig15();
        if (name.size() > 1 && name[0] == 'P' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos)
            return modular_p(std::stoll(name.substr(1)));
        auto it = fixture_files().find(name);
        if (it == fixture_files().end()) throw Error("unknown dessin name: " + name);
        return load_dsn(fixtures_dir() + "/" + it->second);
    };
    Dessin d = build();
    check_entry(name, d);
    return d;
}

Dessin load_dsn(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    int degree = -1;
    std::string xtext, ytext;
    int xline = 0, yline = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string rest;
        std::getline(ls, rest);
        auto err = [&](const std::string& msg) {
            throw Error(path + ":" + std::to_string(lineno) + ": " + msg);
        };
        if (key == "degree") {
            try {
                degree = std::stoi(rest);
            } catch (...) {
                err("bad degree");
            }
            if (degree < 1) err("bad degree");
        } else if (key == "x") {
            if (degree < 0) err("degree must come before x");
            xtext = rest;
            xline = lineno;
        } else if (key == "y") {
            if (degree < 0) err("degree must come before y");
            ytext = rest;
            yline = lineno;
        } else {
            err("unknown key '" + key + "'");
        }
    }
    if (degree < 0) throw Error(path + ": missing degree");
    auto parse_at = [&](const std::string& text, int at) {
        try {
            return parse_cycles(text, degree);
        } catch (const Error& e) {
            throw Error(path + ":" + std::to_string(at) + ": " + e.what());
        }
    };
    return Dessin(parse_at(xtext, xline), parse_at(ytext, yline));
}

std::string to_dsn(const Dessin& d) {
    std::ostringstream os;
    os << "degree " << d.degree() << "\n";
    os << "x " << format_cycles(d.x()) << "\n";
    os << "y " << format_cycles(d.y()) << "\n";
    return os.str();
}

void save_dsn(const Dessin& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << to_dsn(d);
}

}  // namespace dessin

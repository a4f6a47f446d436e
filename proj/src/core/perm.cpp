#include "perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace dessin {

Perm::Perm(int degree) {
    if (degree < 1) throw Error("degree must be >= 1");
    img_.resize(degree);
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    if (img_.empty()) throw Error("degree must be >= 1");
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw Error("image array is not a bijection");
        seen[v] = 1;
    }
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw Error("degree mismatch in compose");
    std::vector<int> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[i] = q[p[i]];
    return Perm(std::move(r));
}

Perm inverse(const Perm& p) {
    std::vector<int> r(p.degree());
    for (int i = 0; i < p.degree(); ++i) r[p[i]] = i;
    return Perm(std::move(r));
}

Perm commutator(const Perm& p, const Perm& q) {
    return compose(compose(inverse(p), inverse(q)), compose(p, q));
}

Perm power(const Perm& p, long long e) {
    int n = p.degree();
    std::vector<int> r(n);
    // walk each cycle; image of i is e steps ahead modulo cycle length
    std::vector<int> cyc;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        cyc.clear();
        int j = i;
        do {
            seen[j] = 1;
            cyc.push_back(j);
            j = p[j];
        } while (j != i);
        long long L = static_cast<long long>(cyc.size());
        long long s = ((e % L) + L) % L;
        for (std::size_t t = 0; t < cyc.size(); ++t)
            r[cyc[t]] = cyc[(t + s) % cyc.size()];
    }
    return Perm(std::move(r));
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c{i};
        seen[i] = 1;
        for (int j = p[i]; j != i; j = p[j]) {
            seen[j] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

CycleAnalysis cycle_analysis(const Perm& p) {
    CycleAnalysis ca;
    std::map<int, int> counts;
    long long parity_sum = 0;
    for (const auto& c : cycles_of(p)) {
        int len = static_cast<int>(c.size());
        counts[len]++;
        parity_sum += len - 1;
        if (len == 1) ca.fixed_points.push_back(c[0]);
        ca.order = std::lcm(ca.order, static_cast<long long>(len));
    }
    std::sort(ca.fixed_points.begin(), ca.fixed_points.end());
    ca.fixed_point_count = static_cast<int>(ca.fixed_points.size());
    ca.odd = (parity_sum % 2) != 0;
    ca.cycle_type.assign(counts.begin(), counts.end());
    return ca;
}

long long perm_order(const Perm& p) { return cycle_analysis(p).order; }
bool is_odd(const Perm& p) { return cycle_analysis(p).odd; }

Perm parse_cycles(const std::string& text, int degree) {
    if (degree < 1) throw Error("degree must be >= 1");
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(degree, 0);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size()) {
            if (text[i] == '#') {  // comment to end of line
                while (i < text.size() && text[i] != '\n') ++i;
            } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
            } else {
                break;
            }
        }
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw Error("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
            if (i >= text.size()) throw Error("unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw Error("expected point number in cycle");
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > degree) throw Error("point out of range: " + std::to_string(v));
                ++i;
            }
            if (v < 1 || v > degree)
                throw Error("point out of range: " + std::to_string(v));
            int pt = static_cast<int>(v) - 1;  // file text is 1-indexed
            if (used[pt]) throw Error("repeated point: " + std::to_string(v));
            used[pt] = 1;
            cyc.push_back(pt);
        }
        for (std::size_t t = 0; t < cyc.size(); ++t)
            img[cyc[t]] = cyc[(t + 1) % cyc.size()];
        skip_ws();
    }
    return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
    std::vector<std::vector<int>> cs;
    for (auto& c : cycles_of(p)) {
        if (c.size() == 1) continue;
        auto it = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), it, c.end());
        cs.push_back(c);
    }
    std::sort(cs.begin(), cs.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t t = 0; t < c.size(); ++t) {
            if (t) out += ' ';
            out += std::to_string(c[t] + 1);
        }
        out += ')';
    }
    return out;
}

std::string cycle_type_str(const Perm& p) {
    auto ca = cycle_analysis(p);
    std::ostringstream os;
    bool first = true;
    for (auto [len, cnt] : ca.cycle_type) {
        if (!first) os << ' ';
        first = false;
        os << len;
        if (cnt > 1) os << '^' << cnt;
    }
    return os.str();
}

}  // namespace dessin

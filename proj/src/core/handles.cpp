#include "handles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dessin {

namespace {

std::vector<int> fixed_points(const Perm& p) {
    std::vector<int> out;
    for (int i = 0; i < p.degree(); ++i)
        if (p[i] == i) out.push_back(i);
    return out;
}

bool handle_sort(const Handle& a, const Handle& b) {
    return std::tie(a.k, a.a, a.b) < std::tie(b.k, b.a, b.b);
}

}  // namespace

std::vector<Handle> y_handles(const Dessin& d) {
    const Perm& x = d.x();
    const Perm& y = d.y();
    std::vector<int> yfix = fixed_points(y);
    std::set<int> yfixset(yfix.begin(), yfix.end());
    std::vector<Handle> out;
    for (int a : yfix) {
        for (int k = 1; k <= 3; ++k) {
            // b = a (xy)^(k-1) x; the k-1 intermediate y-steps must move
            int t = a;
            bool ok = true;
            for (int s = 0; s < k - 1; ++s) {
                t = x[t];
                if (y[t] == t) {
                    ok = false;
                    break;
                }
                t = y[t];
            }
            if (!ok) continue;
            int b = x[t];
            if (b != a && yfixset.count(b)) out.push_back({Axis::kY, k, a, b});
        }
    }
    std::sort(out.begin(), out.end(), handle_sort);
    return out;
}

std::vector<Handle> x_handles(const Dessin& d) {
    const Perm& x = d.x();
    const Perm& y = d.y();
    std::vector<int> xfix = fixed_points(x);
    std::set<int> xfixset(xfix.begin(), xfix.end());
    int n = d.degree();
    // raw relation b = a (yx)^k y; intermediate x-steps must move
    std::map<std::pair<int, int>, int> raw;
    for (int a : xfix) {
        int t = a;
        for (int k = 1; k <= n; ++k) {
            int ty = y[t];
            int tx = x[ty];
            if (tx == ty) break;  // walk hit a 1-valent vertex
            t = tx;
            int b = y[t];
            if (b != a && xfixset.count(b)) {
                raw[{a, b}] = k;
                break;
            }
        }
    }
    std::vector<Handle> out;
    for (auto [ab, k] : raw) {
        auto [a, b] = ab;
        auto rev = raw.find({b, a});
        if (rev != raw.end() &&
            (rev->second < k || (rev->second == k && b < a)))
            continue;  // the reversed orientation is canonical
        out.push_back({Axis::kX, k == 1 ? 1 : 2, a, b});
    }
    std::sort(out.begin(), out.end(), handle_sort);
    return out;
}

int max_disjoint_handles(const std::vector<Handle>& handles, int k, Axis axis) {
    std::vector<const Handle*> hs;
    for (const auto& h : handles)
        if (h.k == k && h.axis == axis) hs.push_back(&h);
    int m = static_cast<int>(hs.size());
    int best = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::set<int> pts;
        int cnt = 0;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            if (pts.count(hs[i]->a) || pts.count(hs[i]->b)) {
                ok = false;
                break;
            }
            pts.insert(hs[i]->a);
            pts.insert(hs[i]->b);
            ++cnt;
        }
        if (ok) best = std::max(best, cnt);
    }
    return best;
}

bool same_face_check(const Dessin& d) {
    if (!is_hurwitz_type(d)) throw Error("same_face_check: dessin is not of type (3,2,7)");
    auto hs = y_handles(d);
    // z-cycle id per point
    std::vector<int> face(d.degree(), -1);
    int fid = 0;
    for (const auto& c : cycles_of(d.z())) {
        for (int v : c) face[v] = fid;
        ++fid;
    }
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (face[hs[i].a] == face[hs[j].a]) return true;
    return false;
}

namespace {

void validate_y_handle(const Dessin& d, const Handle& h, const char* which) {
    if (h.axis != Axis::kY) throw Error(std::string(which) + ": not a y-handle");
    auto hs = y_handles(d);
    if (std::find(hs.begin(), hs.end(), h) == hs.end())
        throw Error(std::string(which) + ": handle is not valid in the dessin");
}

Perm shifted(const Perm& p, int offset, int total) {
    std::vector<int> img(total);
    for (int i = 0; i < total; ++i) img[i] = i;
    for (int i = 0; i < p.degree(); ++i) img[i + offset] = p[i] + offset;
    return Perm(std::move(img));
}

Dessin assemble_y_join(const Dessin& d1, const Dessin& d2,
                       const std::vector<std::pair<Handle, Handle>>& pairs,
                       bool twisted) {
    int n1 = d1.degree();
    int n = n1 + d2.degree();
    Perm x = compose(shifted(d1.x(), 0, n), shifted(d2.x(), n1, n));
    std::vector<int> yimg = compose(shifted(d1.y(), 0, n), shifted(d2.y(), n1, n)).images();
    std::set<int> used1, used2;
    for (const auto& [h1, h2] : pairs) {
        if (h1.k != h2.k) throw Error("y_join: handles have different k");
        if (!used1.insert(h1.a).second || !used1.insert(h1.b).second ||
            !used2.insert(h2.a).second || !used2.insert(h2.b).second)
            throw Error("y_join: handles overlap");
        int a1 = h1.a, b1 = h1.b, a2 = h2.a + n1, b2 = h2.b + n1;
        if (!twisted) {
            yimg[a1] = a2; yimg[a2] = a1;
            yimg[b1] = b2; yimg[b2] = b1;
        } else {
            yimg[a1] = b2; yimg[b2] = a1;
            yimg[b1] = a2; yimg[a2] = b1;
        }
    }
    return Dessin(std::move(x), Perm(std::move(yimg)));
}

}  // namespace

Dessin y_join(const Dessin& d1, const Handle& h1, const Dessin& d2,
              const Handle& h2) {
    return multiple_y_join(d1, d2, {{h1, h2}});
}

Dessin multiple_y_join(const Dessin& d1, const Dessin& d2,
                       const std::vector<std::pair<Handle, Handle>>& pairs) {
    if (pairs.empty()) throw Error("y_join: no handle pairs");
    for (const auto& [h1, h2] : pairs) {
        validate_y_handle(d1, h1, "y_join(left)");
        validate_y_handle(d2, h2, "y_join(right)");
    }
    Dessin out = assemble_y_join(d1, d2, pairs, false);
    // additivity bookkeeping for Hurwitz inputs; a failure here is a bug in
    // the join, not a user error
    if (is_hurwitz_type(d1) && is_hurwitz_type(d2)) {
        if (!is_hurwitz_type(out))
            throw Error("y_join: type (3,2,7) was not preserved (internal error)");
        auto s1 = genus_signature(d1), s2 = genus_signature(d2),
             so = genus_signature(out);
        int m = static_cast<int>(pairs.size());
        if (so.genus != s1.genus + s2.genus + m - 1 ||
            so.alpha != s1.alpha + s2.alpha ||
            so.beta != s1.beta + s2.beta - 4 * m ||
            so.gamma != s1.gamma + s2.gamma)
            throw Error("y_join: additivity bookkeeping failed (internal error)");
    }
    return out;
}

Dessin twist_y_join(const Dessin& d1, const Handle& h1, const Dessin& d2,
                    const Handle& h2) {
    validate_y_handle(d1, h1, "twist(left)");
    validate_y_handle(d2, h2, "twist(right)");
    if (h1.k != h2.k) throw Error("twist: handles have different k");
    return assemble_y_join(d1, d2, {{h1, h2}}, true);
}

Dessin x_join(const std::vector<std::pair<Dessin, Handle>>& parts) {
    int dcount = static_cast<int>(parts.size());
    if (dcount < 2) throw Error("x_join: need at least two parts");
    long long p = perm_order(parts[0].first.x());
    long long q = perm_order(parts[0].first.y());
    bool uniform_hurwitz = true;
    int total = 0;
    for (const auto& [d, h] : parts) {
        if (h.axis != Axis::kX) throw Error("x_join: not an x-handle");
        auto hs = x_handles(d);
        if (std::find(hs.begin(), hs.end(), h) == hs.end())
            throw Error("x_join: handle is not valid in the dessin");
        if (perm_order(d.x()) != p || perm_order(d.y()) != q)
            throw Error("x_join: mixed type (x or y orders differ)");
        uniform_hurwitz = uniform_hurwitz && is_hurwitz_type(d);
        total += d.degree();
    }
    if (p % dcount != 0)
        throw Error("x_join: number of parts does not divide the order of x");
    if (uniform_hurwitz) {
        for (const auto& [d, h] : parts)
            if (h.k != parts[0].second.k)
                throw Error("x_join: mixed k on type-(3,2,7) input");
    }
    std::vector<int> ximg(total), yimg(total);
    std::vector<int> a_pts, b_pts;
    int off = 0;
    for (const auto& [d, h] : parts) {
        for (int i = 0; i < d.degree(); ++i) {
            ximg[i + off] = d.x()[i] + off;
            yimg[i + off] = d.y()[i] + off;
        }
        a_pts.push_back(h.a + off);
        b_pts.push_back(h.b + off);
        off += d.degree();
    }
    // a-points become the cycle (a1 a2 ... ad); b-points the reversed cycle
    for (int i = 0; i < dcount; ++i) {
        ximg[a_pts[i]] = a_pts[(i + 1) % dcount];
        ximg[b_pts[(i + 1) % dcount]] = b_pts[i];
    }
    Dessin out(Perm(std::move(ximg)), Perm(std::move(yimg)));
    if (uniform_hurwitz) {
        if (!is_hurwitz_type(out))
            throw Error("x_join: type (3,2,7) was not preserved (internal error)");
        int gs = 0, as = 0, bs = 0, cs = 0;
        for (const auto& [d, h] : parts) {
            auto s = genus_signature(d);
            gs += s.genus;
            as += s.alpha;
            bs += s.beta;
            cs += s.gamma;
        }
        auto so = genus_signature(out);
        if (so.genus != gs || so.alpha != as - 2 * dcount || so.beta != bs ||
            so.gamma != cs)
            throw Error("x_join: additivity bookkeeping failed (internal error)");
    }
    return out;
}

bool handle_projection_check(const Dessin& cover, const Dessin& base,
                             const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != cover.degree())
        throw Error("handle_projection_check: phi has wrong length");
    for (int v = 0; v < cover.degree(); ++v) {
        if (phi[v] < 0 || phi[v] >= base.degree() ||
            phi[cover.x()[v]] != base.x()[phi[v]] ||
            phi[cover.y()[v]] != base.y()[phi[v]])
            throw Error("handle_projection_check: phi is not equivariant");
    }
    int sheets = cover.degree() / base.degree();
    for (Axis axis : {Axis::kY, Axis::kX}) {
        auto cov_hs = axis == Axis::kY ? y_handles(cover) : x_handles(cover);
        auto base_hs = axis == Axis::kY ? y_handles(base) : x_handles(base);
        // downward: each cover handle projects to a base handle, same k
        for (const auto& h : cov_hs) {
            Handle img{axis, h.k, phi[h.a], phi[h.b]};
            if (std::find(base_hs.begin(), base_hs.end(), img) == base_hs.end())
                return false;
        }
        // upward: unbranched base handles lift to sheet-many disjoint handles
        const Perm& gen = axis == Axis::kY ? cover.y() : cover.x();
        for (const auto& bh : base_hs) {
            bool unbranched = true;
            for (int v = 0; v < cover.degree(); ++v)
                if ((phi[v] == bh.a || phi[v] == bh.b) && gen[v] != v)
                    unbranched = false;
            if (!unbranched) continue;
            std::vector<Handle> lifts;
            for (const auto& h : cov_hs)
                if (h.k == bh.k && phi[h.a] == bh.a && phi[h.b] == bh.b)
                    lifts.push_back(h);
            if (static_cast<int>(lifts.size()) != sheets) return false;
            std::set<int> pts;
            for (const auto& h : lifts) {
                if (!pts.insert(h.a).second || !pts.insert(h.b).second)
                    return false;
            }
        }
    }
    return true;
}

}  // namespace dessin

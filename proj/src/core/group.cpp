#include "group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace dessin {

namespace {

int first_moved(const Perm& p) {
    for (int i = 0; i < p.degree(); ++i)
        if (p[i] != i) return i;
    return -1;
}

}  // namespace

// Incremental deterministic Schreier-Sims. Every Schreier generator of every
// level is processed exactly once (per-level done-counters, no restarts), so
// completion of the scan is itself the verification that the chain is exact.
// Transversal inverses are cached and sifting runs on raw image arrays.
struct ChainBuilder {
    int n;
    struct Lvl {
        int beta = -1;
        std::vector<int> orbit;            // discovery order
        std::vector<int> tidx;             // point -> orbit position, -1 outside
        std::vector<std::vector<int>> reps;      // reps[k]: beta -> orbit[k]
        std::vector<std::vector<int>> reps_inv;
        std::vector<std::vector<int>> gens;      // S^(level), stable order
        std::vector<std::vector<int>> gens_inv;
        std::vector<int> done;             // per orbit position: gens processed
    };
    std::vector<Lvl> lvls;
    std::vector<int> scratch_a, scratch_b;

    explicit ChainBuilder(int degree) : n(degree), scratch_a(degree), scratch_b(degree) {}

    static bool is_id(const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != static_cast<int>(i)) return false;
        return true;
    }

    void new_level(int beta) {
        Lvl l;
        l.beta = beta;
        l.tidx.assign(n, -1);
        l.orbit.push_back(beta);
        l.tidx[beta] = 0;
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        l.reps.push_back(id);
        l.reps_inv.push_back(id);
        l.done.push_back(0);
        lvls.push_back(std::move(l));
    }

    // append gen to level l (and extend the orbit closure under it)
    void add_gen(int li, std::vector<int> g) {
        Lvl& l = lvls[li];
        for (const auto& h : l.gens)
            if (h == g) return;  // duplicate strong generator
        std::vector<int> ginv(n);
        for (int i = 0; i < n; ++i) ginv[g[i]] = i;
        l.gens.push_back(std::move(g));
        l.gens_inv.push_back(std::move(ginv));
        extend_orbit(li);
    }

    void extend_orbit(int li) {
        Lvl& l = lvls[li];
        for (std::size_t head = 0; head < l.orbit.size(); ++head) {
            int p = l.orbit[head];
            for (std::size_t gi = 0; gi < l.gens.size(); ++gi) {
                int q = l.gens[gi][p];
                if (l.tidx[q] >= 0) continue;
                l.tidx[q] = static_cast<int>(l.orbit.size());
                l.orbit.push_back(q);
                // rep_q = rep_p * g ; inv = g^-1 * rep_p^-1
                const auto& rp = l.reps[l.tidx[p]];
                const auto& rpi = l.reps_inv[l.tidx[p]];
                const auto& g = l.gens[gi];
                const auto& gi_ = l.gens_inv[gi];
                std::vector<int> rq(n), rqi(n);
                for (int i = 0; i < n; ++i) {
                    rq[i] = g[rp[i]];
                    rqi[i] = rpi[gi_[i]];
                }
                l.reps.push_back(std::move(rq));
                l.reps_inv.push_back(std::move(rqi));
                l.done.push_back(0);
            }
        }
    }

    // sift g through levels [start..); returns level where it stuck (== size
    // when g reduced to identity); g is modified in place
    int strip(std::vector<int>& g, int start) {
        for (int i = start; i < static_cast<int>(lvls.size()); ++i) {
            Lvl& l = lvls[i];
            int p = g[l.beta];
            int k = l.tidx[p];
            if (k < 0) return i;
            const auto& ri = l.reps_inv[k];
            for (int t = 0; t < n; ++t) scratch_a[t] = ri[g[t]];
            g.swap(scratch_a);
            if (is_id(g)) return static_cast<int>(lvls.size());
        }
        return static_cast<int>(lvls.size());
    }

    void run(const std::vector<Perm>& generators) {
        std::vector<std::vector<int>> gens;
        for (const auto& g : generators)
            if (!g.is_identity()) gens.push_back(g.images());
        if (gens.empty()) return;
        int beta0 = n;
        for (const auto& g : gens) beta0 = std::min(beta0, first_moved(Perm(g)));
        new_level(beta0);
        for (auto& g : gens) add_gen(0, std::move(g));

        int i = 0;
        while (i >= 0) {
            Lvl& l = lvls[i];
            bool descended = false;
            for (std::size_t pos = 0; pos < l.orbit.size() && !descended; ++pos) {
                while (l.done[pos] < static_cast<int>(l.gens.size())) {
                    int gi = l.done[pos]++;
                    int p = l.orbit[pos];
                    const auto& g = l.gens[gi];
                    int q = g[p];
                    const auto& up = l.reps[pos];
                    const auto& uqi = l.reps_inv[l.tidx[q]];
                    // schreier = up * g * uq^-1
                    bool id = true;
                    for (int t = 0; t < n; ++t) {
                        scratch_b[t] = uqi[g[up[t]]];
                        if (scratch_b[t] != t) id = false;
                    }
                    if (id) continue;
                    std::vector<int> h = scratch_b;
                    int j = strip(h, i + 1);
                    if (j == static_cast<int>(lvls.size())) {
                        if (is_id(h)) continue;
                        new_level(first_moved(Perm(h)));
                    }
                    for (int k = i + 1; k <= j; ++k) add_gen(k, h);
                    i = j;
                    descended = true;
                    break;
                }
            }
            if (descended) continue;
            --i;  // level complete: every Schreier generator sifted to identity
        }
    }
};

StabilizerChain::StabilizerChain(const std::vector<Perm>& generators) {
    if (generators.empty()) throw Error("build_chain: no generators");
    degree_ = generators[0].degree();
    for (const auto& g : generators)
        if (g.degree() != degree_) throw Error("build_chain: degree mismatch");

    ChainBuilder b(degree_);
    b.run(generators);
    for (auto& bl : b.lvls) {
        Level l;
        l.beta = bl.beta;
        l.orbit = std::move(bl.orbit);
        l.transversal_index = std::move(bl.tidx);
        for (auto& r : bl.reps) l.reps.emplace_back(std::move(r));
        for (auto& g : bl.gens) l.gens.emplace_back(std::move(g));
        levels_.push_back(std::move(l));
    }
    verify(generators);
}

void StabilizerChain::verify(const std::vector<Perm>& generators) const {
    // structural checks on top of the exhaustive Schreier scan: strong
    // generators fix the base prefix, transversals reach their points, and
    // the original generators are members
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const Level& l = levels_[i];
        for (std::size_t k = 0; k < l.orbit.size(); ++k) {
            if (l.reps[k][l.beta] != l.orbit[k])
                throw Error("chain verification failed: transversal mismatch");
        }
        for (std::size_t j = i; j < levels_.size(); ++j)
            for (const auto& g : levels_[j].gens)
                for (std::size_t k = 0; k < i; ++k)
                    if (g[levels_[k].beta] != levels_[k].beta)
                        throw Error("chain verification failed: base not fixed");
    }
    for (const auto& g : generators)
        if (!contains(g))
            throw Error("chain verification failed: generator does not sift");
}

BigInt StabilizerChain::order() const {
    BigInt o(1);
    for (const auto& l : levels_) o.mul_small(l.orbit.size());
    return o;
}

bool StabilizerChain::contains(const Perm& p) const {
    if (p.degree() != degree_) throw Error("contains: degree mismatch");
    std::vector<int> g = p.images();
    std::vector<int> tmp(degree_);
    for (const auto& l : levels_) {
        int k = l.transversal_index[g[l.beta]];
        if (k < 0) return false;
        const Perm& rep = l.reps[k];
        // g := g * rep^-1 computed via rep-inverse lookup
        std::vector<int> repinv(degree_);
        for (int i = 0; i < degree_; ++i) repinv[rep[i]] = i;
        for (int i = 0; i < degree_; ++i) tmp[i] = repinv[g[i]];
        g.swap(tmp);
    }
    for (int i = 0; i < degree_; ++i)
        if (g[i] != i) return false;
    return true;
}

bool is_transitive(const std::vector<Perm>& gens) {
    if (gens.empty()) throw Error("is_transitive: no generators");
    int n = gens[0].degree();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            int w = g[v];
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// size of the minimal block containing {0, beta}: union-find refinement,
// repeatedly forcing a~b  =>  g(a)~g(b)
int minimal_block_size(const std::vector<Perm>& gens, int beta) {
    int n = gens[0].degree();
    UnionFind uf(n);
    std::vector<std::pair<int, int>> pending;
    if (uf.unite(0, beta)) pending.emplace_back(0, beta);
    while (!pending.empty()) {
        auto [a, b] = pending.back();
        pending.pop_back();
        for (const auto& g : gens) {
            int x = g[a], y = g[b];
            if (uf.unite(x, y)) pending.emplace_back(x, y);
        }
    }
    int root = uf.find(0);
    int size = 0;
    for (int i = 0; i < n; ++i)
        if (uf.find(i) == root) ++size;
    return size;
}

}  // namespace

bool is_primitive(const std::vector<Perm>& gens) {
    if (gens.empty()) throw Error("is_primitive: no generators");
    int n = gens[0].degree();
    if (n < 2) throw Error("is_primitive: degree must be >= 2");
    if (!is_transitive(gens)) throw Error("is_primitive: action not transitive");
    for (int beta = 1; beta < n; ++beta) {
        int bs = minimal_block_size(gens, beta);
        if (bs != n) return false;  // nontrivial block system found
    }
    return true;
}

std::string GroupFacts::recognition_str() const {
    switch (recognition) {
        case Recognition::kAlternating: return "Alternating(" + std::to_string(degree) + ")";
        case Recognition::kSymmetric: return "Symmetric(" + std::to_string(degree) + ")";
        case Recognition::kOther: return "Other(" + order.str() + ")";
    }
    return "?";
}

GroupFacts recognize(const std::vector<Perm>& gens) {
    if (gens.empty()) throw Error("recognize: no generators");
    GroupFacts f;
    f.degree = gens[0].degree();
    StabilizerChain chain(gens);
    f.order = chain.order();
    f.transitive = is_transitive(gens);
    for (const auto& g : gens) f.generator_odd.push_back(is_odd(g));
    if (f.transitive && f.degree >= 2 && f.degree <= kPrimitivityDegreeCap)
        f.primitive = is_primitive(gens) ? GroupFacts::Primitivity::kYes
                                         : GroupFacts::Primitivity::kNo;
    BigInt full = BigInt::factorial(f.degree);
    std::uint32_t rem = 0;
    BigInt half = full.div_small(2, &rem);
    bool all_even = std::none_of(f.generator_odd.begin(), f.generator_odd.end(),
                                 [](bool b) { return b; });
    if (f.order == full)
        f.recognition = GroupFacts::Recognition::kSymmetric;
    else if (f.order == half && all_even)
        f.recognition = GroupFacts::Recognition::kAlternating;
    else
        f.recognition = GroupFacts::Recognition::kOther;
    return f;
}

namespace {

// If some power of w has a single nontrivial cycle, return (exponent, length):
// needs exactly one cycle of a length L with gcd(L, lcm of other lengths) = 1.
std::optional<std::pair<long long, int>> single_cycle_power(const Perm& w, int max_len) {
    std::map<int, int> counts;
    for (const auto& c : cycles_of(w))
        if (c.size() > 1) counts[static_cast<int>(c.size())]++;
    for (auto [L, cnt] : counts) {
        if (cnt != 1 || L > max_len) continue;
        long long e = 1;
        bool ok = true;
        for (auto [M, cnt2] : counts) {
            if (M == L) continue;
            e = std::lcm(e, static_cast<long long>(M));
            if (e > (1LL << 40)) { ok = false; break; }
        }
        if (!ok) continue;
        if (std::gcd(e, static_cast<long long>(L)) != 1) continue;
        return std::make_pair(e, L);
    }
    return std::nullopt;
}

}  // namespace

std::optional<JordanCertificate> jordan_certificate(
    const std::vector<Perm>& gens, int budget, unsigned seed,
    const std::vector<std::string>& gen_names) {
    if (gens.empty()) throw Error("jordan_certificate: no generators");
    if (!is_transitive(gens)) throw Error("jordan_certificate: action not transitive");
    int n = gens[0].degree();
    int max_len = n - 3;
    if (max_len < 2) return std::nullopt;

    auto name = [&](std::size_t i) {
        if (i < gen_names.size()) return gen_names[i];
        return "g" + std::to_string(i);
    };
    auto check = [&](const Perm& w, const std::string& word)
        -> std::optional<JordanCertificate> {
        auto sc = single_cycle_power(w, max_len);
        if (!sc) return std::nullopt;
        auto [e, L] = *sc;
        JordanCertificate c;
        c.element = power(w, e);
        c.cycle_length = L;
        std::string base =
            word.find('*') == std::string::npos ? word : "(" + word + ")";
        c.word = e == 1 ? word : base + "^" + std::to_string(e);
        return c;
    };

    // deterministic candidates first: generators, pairwise products, commutators
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (auto c = check(gens[i], name(i))) return c;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            if (auto c = check(compose(gens[i], gens[j]), name(i) + "*" + name(j)))
                return c;
        }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            if (auto c = check(commutator(gens[i], gens[j]),
                               "[" + name(i) + "," + name(j) + "]"))
                return c;
        }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len_dist(2, 20);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) * 2 - 1);
    for (int t = 0; t < budget; ++t) {
        int len = len_dist(rng);
        Perm w(n);
        std::string word;
        for (int s = 0; s < len; ++s) {
            int c = pick(rng);
            std::size_t gi = c / 2;
            bool inv = c % 2;
            w = compose(w, inv ? inverse(gens[gi]) : gens[gi]);
            if (s) word += "*";
            word += name(gi) + (inv ? "'" : "");
        }
        if (auto c = check(w, word)) return c;
    }
    return std::nullopt;
}

long long fixed_points_via_class_formula(const std::vector<Perm>& gens,
                                         const Perm& h) {
    if (gens.empty()) throw Error("class formula: no generators");
    if (!is_transitive(gens)) throw Error("class formula: action not transitive");
    int n = gens[0].degree();
    if (h.degree() != n) throw Error("class formula: degree mismatch");
    StabilizerChain chain(gens);
    BigInt order = chain.order();
    if (!(order <= BigInt(static_cast<std::uint64_t>(kClassFormulaOrderCap))))
        throw Error("class formula: group order exceeds cap");
    if (!chain.contains(h)) throw Error("class formula: element not in group");
    long long g_order = static_cast<long long>(order.to_u64());

    // orbit of h under conjugation by the generators = conjugacy class
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ULL;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
                h *= 1099511628211ULL;
            }
            return h;
        }
    };
    std::unordered_set<std::vector<int>, VecHash> cls;
    std::vector<Perm> frontier{h};
    cls.insert(h.images());
    long long in_h = h[0] == 0 ? 1 : 0;
    while (!frontier.empty()) {
        Perm cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : gens) {
            Perm conj = compose(compose(inverse(g), cur), g);
            if (cls.insert(conj.images()).second) {
                if (conj[0] == 0) ++in_h;
                frontier.push_back(std::move(conj));
            }
        }
    }
    long long class_size = static_cast<long long>(cls.size());
    long long centralizer = g_order / class_size;
    long long stab = g_order / n;
    long long num = in_h * centralizer;
    if (num % stab != 0)
        throw Error("class formula: non-integral result (internal error)");
    return num / stab;
}

}  // namespace dessin

#include "dessin.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/claims.hpp"
#include "core/expr.hpp"
#include "core/handles.hpp"

using dessin::Dessin;

struct dsn_dessin {
    Dessin d;
};

namespace {

thread_local std::string g_error;

int fail(const std::string& msg, int code = DSN_ERROR) {
    g_error = msg;
    return code;
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return fail(e.what());
    } catch (...) {
        return fail("unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string axis_name(dessin::Axis a) { return a == dessin::Axis::kY ? "y" : "x"; }

std::string handles_to_text(const Dessin& d) {
    std::ostringstream os;
    auto print = [&](const std::vector<dessin::Handle>& hs) {
        std::map<int, int> index_within_k;
        for (const auto& h : hs) {
            int idx = index_within_k[h.k]++;
            os << "  " << axis_name(h.axis) << "-handle k=" << h.k << " @" << idx
               << ": (" << h.a + 1 << ", " << h.b + 1 << ")\n";
        }
    };
    auto yh = dessin::y_handles(d);
    auto xh = dessin::x_handles(d);
    os << "y-handles: " << yh.size() << " (disjoint by k: "
       << dessin::max_disjoint_handles(yh, 1, dessin::Axis::kY) << ", "
       << dessin::max_disjoint_handles(yh, 2, dessin::Axis::kY) << ", "
       << dessin::max_disjoint_handles(yh, 3, dessin::Axis::kY) << ")\n";
    print(yh);
    os << "x-handles: " << xh.size() << "\n";
    print(xh);
    return os.str();
}

}  // namespace

extern "C" {

const char* dsn_last_error(void) { return g_error.c_str(); }

int dsn_eval(const char* expr, dsn_dessin** out) {
    if (!expr || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *out = new dsn_dessin{dessin::evaluate(expr)};
        return DSN_OK;
    });
}

int dsn_load(const char* path, dsn_dessin** out) {
    if (!path || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *out = new dsn_dessin{dessin::load_dsn(path)};
        return DSN_OK;
    });
}

int dsn_from_cycles(int degree, const char* x_cycles, const char* y_cycles,
                    dsn_dessin** out) {
    if (!x_cycles || !y_cycles || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *out = new dsn_dessin{Dessin(dessin::parse_cycles(x_cycles, degree),
                                     dessin::parse_cycles(y_cycles, degree))};
        return DSN_OK;
    });
}

int dsn_mirror(const dsn_dessin* d, dsn_dessin** out) {
    if (!d || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *out = new dsn_dessin{dessin::mirror(d->d)};
        return DSN_OK;
    });
}

void dsn_release(dsn_dessin* d) { delete d; }

int dsn_degree(const dsn_dessin* d) { return d ? d->d.degree() : -1; }

int dsn_type(const dsn_dessin* d, long long* p, long long* q, long long* r) {
    if (!d || !p || !q || !r) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        auto t = dessin::dessin_type(d->d);
        *p = t.p;
        *q = t.q;
        *r = t.r;
        return DSN_OK;
    });
}

int dsn_signature(const dsn_dessin* d, int* genus, int* alpha, int* beta,
                  int* gamma) {
    if (!d) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        auto s = dessin::genus_signature(d->d);
        if (genus) *genus = s.genus;
        if (alpha) *alpha = s.alpha;
        if (beta) *beta = s.beta;
        if (gamma) *gamma = s.gamma;
        return DSN_OK;
    });
}

int dsn_is_isomorphic(const dsn_dessin* a, const dsn_dessin* b, int* result) {
    if (!a || !b || !result) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *result = dessin::is_isomorphic(a->d, b->d).has_value() ? 1 : 0;
        return DSN_OK;
    });
}

int dsn_covers(const dsn_dessin* cover, const dsn_dessin* base, int* sheets,
               int* handle_projection) {
    if (!cover || !base || !sheets) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        auto phi = dessin::is_quotient(cover->d, base->d);
        if (!phi) {
            *sheets = 0;
            if (handle_projection) *handle_projection = 0;
            return DSN_OK;
        }
        *sheets = cover->d.degree() / base->d.degree();
        if (handle_projection)
            *handle_projection =
                dessin::handle_projection_check(cover->d, base->d, *phi) ? 1 : 0;
        return DSN_OK;
    });
}

int dsn_automorphism_count(const dsn_dessin* d, int* count) {
    if (!d || !count) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *count = dessin::automorphism_count(d->d);
        return DSN_OK;
    });
}

int dsn_info(const dsn_dessin* d, char** out) {
    if (!d || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        std::ostringstream os;
        const Dessin& ds = d->d;
        os << "degree: " << ds.degree() << "\n";
        os << "type: " << dessin::dessin_type(ds).str() << "\n";
        auto sig = dessin::genus_signature(ds);
        os << "genus: " << sig.genus << "\n";
        os << "signature: " << sig.str() << "\n";
        os << "fixed points (alpha, beta, gamma): (" << sig.alpha << ", "
           << sig.beta << ", " << sig.gamma << ")\n";
        os << handles_to_text(ds);
        os << "automorphisms: " << dessin::automorphism_count(ds) << "\n";
        auto facts = dessin::analyze(ds);
        os << "monodromy order: " << facts.order.str() << "\n";
        os << "transitive: " << (facts.transitive ? "yes" : "no") << "\n";
        os << "primitive: "
           << (facts.primitive == dessin::GroupFacts::Primitivity::kYes  ? "yes"
               : facts.primitive == dessin::GroupFacts::Primitivity::kNo ? "no"
                                                                         : "not computed")
           << "\n";
        os << "recognition: " << facts.recognition_str() << "\n";
        *out = dup_string(os.str());
        return DSN_OK;
    });
}

int dsn_handles_text(const dsn_dessin* d, char** out) {
    if (!d || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *out = dup_string(handles_to_text(d->d));
        return DSN_OK;
    });
}

int dsn_group_order(const dsn_dessin* d, char** out) {
    if (!d || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        dessin::StabilizerChain chain(d->d.generators());
        *out = dup_string(chain.order().str());
        return DSN_OK;
    });
}

int dsn_export_dot(const dsn_dessin* d, char** out) {
    if (!d || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        const Dessin& ds = d->d;
        std::ostringstream os;
        os << "graph dessin {\n";
        auto zc = dessin::cycles_of(ds.z());
        os << "  // z-cycles:";
        for (const auto& c : zc) {
            os << " (";
            for (std::size_t i = 0; i < c.size(); ++i)
                os << (i ? " " : "") << c[i] + 1;
            os << ")";
        }
        os << "\n";
        std::vector<int> xcycle(ds.degree()), ycycle(ds.degree());
        int nx = 0, ny = 0;
        for (const auto& c : dessin::cycles_of(ds.x())) {
            for (int v : c) xcycle[v] = nx;
            os << "  x" << nx << " [shape=circle, style=filled, fillcolor=black, label=\"\"];\n";
            ++nx;
        }
        for (const auto& c : dessin::cycles_of(ds.y())) {
            for (int v : c) ycycle[v] = ny;
            os << "  y" << ny << " [shape=circle, label=\"\"];\n";
            ++ny;
        }
        for (int v = 0; v < ds.degree(); ++v)
            os << "  x" << xcycle[v] << " -- y" << ycycle[v] << " [label=\""
               << v + 1 << "\"];\n";
        os << "}\n";
        *out = dup_string(os.str());
        return DSN_OK;
    });
}

int dsn_export_dsn(const dsn_dessin* d, char** out) {
    if (!d || !out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *out = dup_string(dessin::to_dsn(d->d));
        return DSN_OK;
    });
}

int dsn_catalog_names(char** out) {
    if (!out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        std::string s;
        for (const auto& n : dessin::catalog_names()) s += n + "\n";
        *out = dup_string(s);
        return DSN_OK;
    });
}

int dsn_macbeath(long long q, char** out) {
    if (!out) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        *out = dup_string(dessin::macbeath_classify(q).str());
        return DSN_OK;
    });
}

void dsn_string_free(char* s) { std::free(s); }

int dsn_verify(const char* tier, unsigned seed, dsn_verify_line_fn cb,
               void* user, int* failures) {
    if (!tier) return fail("null argument", DSN_BAD_ARGUMENT);
    return guarded([&] {
        auto report = dessin::run_verify(tier, seed);
        for (const auto& r : report.results) {
            std::string line = std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.id +
                               "  " + r.description;
            if (!r.detail.empty()) line += "\n       " + r.detail;
            if (cb) cb(line.c_str(), user);
        }
        if (failures) *failures = report.failures;
        return DSN_OK;
    });
}

}  // extern "C"

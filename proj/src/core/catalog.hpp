#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dessin.hpp"
#include "handles.hpp"

namespace dessin {

// 2x2 matrix over F_p, entries reduced mod p.
struct Mat2 {
    long long a, b, c, d;
};

// Natural Mobius action of <x_matrix, y_matrix> <= SL2(p) on the projective
// line {0..p-1, inf}, with inf indexed last. Row-vector action
// t -> (a t + c)/(b t + d), so matrix product matches left-to-right
// composition of the permutations.
Dessin mobius_dessin(long long p, const Mat2& x_matrix, const Mat2& y_matrix);

// The natural PSL2(p) dessin in the unique trace class that carries a
// y-handle; exists only for p in {13, 29, 41} (kinds k = 1, 2, 3).
// Generators: y = diag(i, -i), x = [[a, 1], [a(1-a)-1, 1-a]] with a = 0, -3, 9.
Dessin psl2_handle_dessin(long long p);

// Exhaustive search over x of order 3 (y fixed as t -> -1/t) for xy of order
// 7 with trace +-target; returns the natural-action dessin, or nothing when
// the trace class contains no order-7 elements.
std::optional<Dessin> find_psl2_triple(long long p, long long target_trace);

// Modular-group dessin P(p): X: t -> 1/(1-t), Y: t -> -1/t on P^1(F_p).
Dessin modular_p(long long p);

// Named catalog: transcription fixtures (S, Sbar, B..E, G..N, Fig16..Fig18)
// plus algebraic builds (A, F, T, Fig13) and the printed Fig15. Names "P<p>"
// resolve to modular_p(p).
Dessin named(const std::string& name);
std::vector<std::string> catalog_names();

Dessin load_dsn(const std::string& path);
std::string to_dsn(const Dessin& d);
void save_dsn(const Dessin& d, const std::string& path);

// Fixture directory: DESSIN_FIXTURES env var, else the compiled-in default.
std::string fixtures_dir();

}  // namespace dessin

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dessin.hpp"

namespace dessin {

// Join-expression AST for the inline join notation:
//   A(1)C, B(2@1,0)B, X(A,A,A), TWIST(S,S), X(Fig18@0,Fig18,Fig18)
struct JoinExpr {
    enum class Kind { kAtom, kFile, kYJoin, kTwist, kXJoin };
    Kind kind;
    std::string name;                    // kAtom: catalog name; kFile: path
    int k = 0;                           // kYJoin
    int left_handle = 0, right_handle = 0;
    std::vector<std::unique_ptr<JoinExpr>> children;
    std::vector<int> x_handles;          // kXJoin: per-child handle index

    bool equals(const JoinExpr& o) const;
};

using ExprPtr = std::unique_ptr<JoinExpr>;

// Throws Error with a character position on bad syntax.
ExprPtr parse_expr(const std::string& text);
std::string format_expr(const JoinExpr& e);
Dessin evaluate(const JoinExpr& e);
Dessin evaluate(const std::string& text);

}  // namespace dessin

#pragma once

#include <string>
#include <vector>
#include <memory>
#include "smf/mpoly.hpp"

namespace smf {

// Covariant of the binary sextic: bihomogeneous of degree deg_a in a0..a6 and
// deg_x in x1,x2.
struct Covariant {
    MPoly poly;
    int deg_a = 0;
    int deg_x = 0;
};

// k-th transvectant of binary forms of degrees m, n (homogeneous in x1,x2):
//   ((m-k)!(n-k)!/(m!n!)) * sum_j (-1)^j C(k,j) d^k f/dx1^{k-j}dx2^j * d^k g/dx1^j dx2^{k-j}
MPoly transvectant(const MPoly& f, const MPoly& g, int k);

// f = sum_i a_i C(6,i) x1^{6-i} x2^i
const MPoly& universal_sextic();

// The 26 ring generators, by table name ("C_{2,0}", "C_{6,6}^{(1)}", ...).
// Built once from the transvectant recipes and cached.
const Covariant& generator(const std::string& name);
std::vector<std::string> generator_names();

// Expression trees over generator names, integer literals, + - * ^ and
// parenthesized sums.
struct CovariantExpr {
    enum class Kind { Name, Literal, Add, Sub, Mul, Pow };
    Kind kind;
    std::string name;          // Kind::Name
    Integer literal;           // Kind::Literal
    int exponent = 0;          // Kind::Pow
    std::vector<std::shared_ptr<CovariantExpr>> args;
};

using ExprPtr = std::shared_ptr<CovariantExpr>;

ExprPtr parse_expr(const std::string& text);
Covariant eval_expr(const ExprPtr& e);
Covariant eval_expr(const std::string& text);

} // namespace smf

#pragma once

#include <cstddef>
#include <vector>

#include "thv/rational.hpp"

namespace thv {

/// Dense row-major matrix over Q.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols);

std::size_t rank(RationalMatrix m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols);

}  // namespace thv

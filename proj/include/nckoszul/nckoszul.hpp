#ifndef NCKOSZUL_NCKOSZUL_HPP_
#define NCKOSZUL_NCKOSZUL_HPP_

#include "field.hpp"
#include "word.hpp"
#include "poly.hpp"
#include "linear.hpp"
#include "presentation.hpp"
#include "avoidance.hpp"
#include "rewrite.hpp"
#include "graphs.hpp"
#include "quadratic.hpp"

#endif  // NCKOSZUL_NCKOSZUL_HPP_

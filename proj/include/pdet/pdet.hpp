#ifndef PDET_PDET_HPP
#define PDET_PDET_HPP

#include <pdet/charpoly.hpp>
#include <pdet/complex.hpp>
#include <pdet/exact.hpp>
#include <pdet/graph.hpp>
#include <pdet/io.hpp>
#include <pdet/matrix.hpp>
#include <pdet/minors.hpp>
#include <pdet/numeric.hpp>
#include <pdet/random.hpp>
#include <pdet/scalar.hpp>
#include <pdet/selftest.hpp>

#endif  // PDET_PDET_HPP

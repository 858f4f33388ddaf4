#ifndef EULERBASIS_EULERBASIS_HPP
#define EULERBASIS_EULERBASIS_HPP

#include "rational.hpp"
#include "polynomial.hpp"
#include "poly_io.hpp"
#include "series.hpp"
#include "sequences.hpp"
#include "operators.hpp"
#include "euler_basis.hpp"
#include "identities.hpp"

#endif

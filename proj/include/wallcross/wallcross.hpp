#ifndef WALLCROSS_WALLCROSS_HPP
#define WALLCROSS_WALLCROSS_HPP

#include "characters.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "notation.hpp"
#include "polynomial.hpp"
#include "presets.hpp"
#include "rational.hpp"
#include "stability.hpp"
#include "walls.hpp"

#endif

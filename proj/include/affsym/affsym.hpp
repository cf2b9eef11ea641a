#ifndef AFFSYM_AFFSYM_HPP
#define AFFSYM_AFFSYM_HPP

#include "affsym/affine.hpp"
#include "affsym/dual.hpp"
#include "affsym/errors.hpp"
#include "affsym/linalg.hpp"
#include "affsym/momentum.hpp"
#include "affsym/odd_symplectic.hpp"
#include "affsym/orbit.hpp"
#include "affsym/random.hpp"

#endif  // AFFSYM_AFFSYM_HPP

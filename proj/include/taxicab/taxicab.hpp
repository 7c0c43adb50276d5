#ifndef TAXICAB_TAXICAB_HPP
#define TAXICAB_TAXICAB_HPP

// Umbrella header for the kernel (everything except the CLI front end).

#include "taxicab/angle.hpp"
#include "taxicab/circle.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/figures.hpp"
#include "taxicab/geometry.hpp"
#include "taxicab/i5t.hpp"
#include "taxicab/isometry.hpp"
#include "taxicab/json.hpp"
#include "taxicab/scalar.hpp"
#include "taxicab/svg.hpp"

#endif  // TAXICAB_TAXICAB_HPP

#ifndef ALTKIT_ALTKIT_HPP
#define ALTKIT_ALTKIT_HPP

#include "altkit/error.hpp"
#include "altkit/scalar.hpp"
#include "altkit/matrix.hpp"
#include "altkit/algebra.hpp"
#include "altkit/catalog.hpp"
#include "altkit/random.hpp"
#include "altkit/identities.hpp"
#include "altkit/units.hpp"
#include "altkit/structure.hpp"
#include "altkit/lie.hpp"
#include "altkit/io.hpp"
#include "altkit/suite.hpp"

#endif  // ALTKIT_ALTKIT_HPP

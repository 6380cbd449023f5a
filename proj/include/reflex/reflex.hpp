#pragma once

#include "reflex/canonical.hpp"
#include "reflex/constructions.hpp"
#include "reflex/enumeration.hpp"
#include "reflex/errors.hpp"
#include "reflex/fano.hpp"
#include "reflex/io.hpp"
#include "reflex/lattice.hpp"
#include "reflex/numeric.hpp"
#include "reflex/polytope.hpp"
#include "reflex/verifier.hpp"

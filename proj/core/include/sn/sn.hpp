#pragma once

#include "sn/action.hpp"
#include "sn/automorphism.hpp"
#include "sn/element.hpp"
#include "sn/errors.hpp"
#include "sn/factorization.hpp"
#include "sn/fredholm.hpp"
#include "sn/ideal.hpp"
#include "sn/identities.hpp"
#include "sn/lattice.hpp"
#include "sn/laurent.hpp"
#include "sn/laurent_matrix.hpp"
#include "sn/linalg.hpp"
#include "sn/mixed.hpp"
#include "sn/multi_index.hpp"
#include "sn/sampling.hpp"
#include "sn/scalar.hpp"
#include "sn/units.hpp"

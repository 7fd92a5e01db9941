#pragma once

#include "graver/errors.hpp"
#include "graver/fast.hpp"
#include "graver/io.hpp"
#include "graver/lattice.hpp"
#include "graver/models.hpp"
#include "graver/oracle.hpp"
#include "graver/pottier.hpp"
#include "graver/scalar.hpp"
#include "graver/solve.hpp"
#include "graver/sym_fast.hpp"
#include "graver/sym_pottier.hpp"
#include "graver/symmetry.hpp"
#include "graver/vector.hpp"

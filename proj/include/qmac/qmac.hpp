#pragma once

// Exact Macdonald q-difference operator toolkit for the hyperoctahedral
// root system: coefficient arithmetic in v = q^(1/2), multivariate Laurent
// polynomials, the operator and its triangular eigen-solver, one-row closed
// forms, contour-integral numerics and identity verifiers.

#include "qmac/contour.hpp"
#include "qmac/errors.hpp"
#include "qmac/identities.hpp"
#include "qmac/json_io.hpp"
#include "qmac/laurent.hpp"
#include "qmac/macdonald.hpp"
#include "qmac/onerow.hpp"
#include "qmac/partition.hpp"
#include "qmac/qseries.hpp"
#include "qmac/random.hpp"
#include "qmac/rational.hpp"
#include "qmac/vfrac.hpp"
#include "qmac/vpoly.hpp"
#include "qmac/weyl.hpp"

// qsd.hpp — umbrella header.

#pragma once

#include "qsd/complex_matrix.hpp"
#include "qsd/fock.hpp"
#include "qsd/oracle.hpp"
#include "qsd/spectral.hpp"
#include "qsd/states.hpp"
#include "qsd/verify.hpp"

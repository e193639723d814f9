#pragma once

#include "forca/cech.hpp"
#include "forca/errors.hpp"
#include "forca/field.hpp"
#include "forca/forcing.hpp"
#include "forca/frobenius.hpp"
#include "forca/groebner.hpp"
#include "forca/ideal.hpp"
#include "forca/jacobian.hpp"
#include "forca/linalg.hpp"
#include "forca/module_solve.hpp"
#include "forca/monomial.hpp"
#include "forca/parse.hpp"
#include "forca/polynomial.hpp"
#include "forca/presentation.hpp"
#include "forca/ring.hpp"

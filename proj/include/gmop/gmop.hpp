#pragma once

#include "gmop/error.hpp"
#include "gmop/rational.hpp"
#include "gmop/laurent.hpp"
#include "gmop/unipoly.hpp"
#include "gmop/qfactor.hpp"
#include "gmop/linalg.hpp"
#include "gmop/ab_element.hpp"
#include "gmop/gm_engine.hpp"
#include "gmop/ode_export.hpp"
#include "gmop/factor_engine.hpp"
#include "gmop/sparse_poly.hpp"
#include "gmop/integral_dependence.hpp"
#include "gmop/numeric_verify.hpp"
#include "gmop/json_io.hpp"
#include "gmop/identities.hpp"

#pragma once

#include "phdet/error.hpp"
#include "phdet/polyalg/rational.hpp"
#include "phdet/polyalg/monomial.hpp"
#include "phdet/polyalg/polynomial.hpp"
#include "phdet/polyalg/parser.hpp"
#include "phdet/polyalg/matrix.hpp"
#include "phdet/grobner/order.hpp"
#include "phdet/grobner/ideal.hpp"
#include "phdet/grobner/buchberger.hpp"
#include "phdet/grobner/dimension.hpp"
#include "phdet/grobner/solve.hpp"
#include "phdet/detvar/point.hpp"
#include "phdet/detvar/weights.hpp"
#include "phdet/detvar/model.hpp"
#include "phdet/detvar/classify.hpp"
#include "phdet/topo/euler.hpp"
#include "phdet/indexcalc/formulas.hpp"
#include "phdet/indexcalc/cstar.hpp"
#include "phdet/indexcalc/ledger.hpp"

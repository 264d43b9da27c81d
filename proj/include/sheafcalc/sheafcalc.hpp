#pragma once

#include "sheafcalc/betti.hpp"
#include "sheafcalc/chow_ring.hpp"
#include "sheafcalc/cohomology.hpp"
#include "sheafcalc/curve.hpp"
#include "sheafcalc/grammar.hpp"
#include "sheafcalc/mapping_cone.hpp"
#include "sheafcalc/numeric.hpp"
#include "sheafcalc/polynomial.hpp"
#include "sheafcalc/registry.hpp"
#include "sheafcalc/report.hpp"
#include "sheafcalc/sheaf.hpp"

#pragma once

// Umbrella header.

#include "trigrat/binomial.hpp"
#include "trigrat/cyc_poly.hpp"
#include "trigrat/cyclotomic.hpp"
#include "trigrat/gauss_sum.hpp"
#include "trigrat/metacyclic.hpp"
#include "trigrat/number_theory.hpp"
#include "trigrat/rat_poly.hpp"
#include "trigrat/rational.hpp"
#include "trigrat/root_membership.hpp"
#include "trigrat/sweep.hpp"
#include "trigrat/trig_values.hpp"

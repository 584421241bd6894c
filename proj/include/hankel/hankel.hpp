#pragma once

#include "closed_forms.hpp"
#include "combinatorics.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "harmonic_hankel.hpp"
#include "matrix.hpp"
#include "moments.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "stieltjes.hpp"

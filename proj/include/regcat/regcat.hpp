#pragma once

#include "regcat/error.hpp"
#include "regcat/gen_inverse.hpp"
#include "regcat/linear.hpp"
#include "regcat/matrix.hpp"
#include "regcat/obstructed_category.hpp"
#include "regcat/rational.hpp"
#include "regcat/regular_algebra.hpp"
#include "regcat/regular_monoidal.hpp"
#include "regcat/star_chain.hpp"
#include "regcat/tqft.hpp"

/*
 * superpoisson.hpp -- convenience umbrella, pulls in the whole library.
 */
#pragma once

#include "algebra.hpp"
#include "algebroid.hpp"
#include "derivation.hpp"
#include "document.hpp"
#include "driver.hpp"
#include "expr.hpp"
#include "forms.hpp"
#include "gerstenhaber.hpp"
#include "poisson.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "signature.hpp"

#pragma once

#include "psf/bernoulli.hpp"
#include "psf/bivariate.hpp"
#include "psf/cubic_forms.hpp"
#include "psf/exact.hpp"
#include "psf/identities.hpp"
#include "psf/latex.hpp"
#include "psf/polynomial.hpp"
#include "psf/powersum.hpp"
#include "psf/quadratic.hpp"
#include "psf/search.hpp"
#include "psf/serialize.hpp"

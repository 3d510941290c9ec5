#pragma once

#include "oscsum/core/errors.hpp"
#include "oscsum/core/exponent.hpp"
#include "oscsum/core/fft.hpp"
#include "oscsum/core/grids.hpp"
#include "oscsum/core/norms.hpp"
#include "oscsum/core/scan.hpp"
#include "oscsum/normest/bounds.hpp"
#include "oscsum/normest/fit.hpp"
#include "oscsum/normest/operator.hpp"
#include "oscsum/normest/opnorm.hpp"
#include "oscsum/oscint/amplitude.hpp"
#include "oscsum/oscint/integrate.hpp"
#include "oscsum/oscint/lemmas.hpp"
#include "oscsum/oscint/phase.hpp"
#include "oscsum/schrod/schrod.hpp"
#include "oscsum/trigsum/trigsum.hpp"

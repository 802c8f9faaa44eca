#pragma once

// Umbrella header: exact Bott-residue localization over circle-action
// fixed-point data, with the audits and obstruction certificates built on it.

#include "bottres/certifier.hpp"
#include "bottres/error.hpp"
#include "bottres/localization.hpp"
#include "bottres/numeric.hpp"
#include "bottres/partition.hpp"
#include "bottres/polynomial.hpp"
#include "bottres/profile.hpp"
#include "bottres/ratfunc.hpp"
#include "bottres/report.hpp"
#include "bottres/rigidity.hpp"
#include "bottres/semifree.hpp"
#include "bottres/symfunc.hpp"

#pragma once

// Everything in one include.

#include "crossed/analysis.hpp"
#include "crossed/budget.hpp"
#include "crossed/classical_double.hpp"
#include "crossed/constructions.hpp"
#include "crossed/convolution.hpp"
#include "crossed/double.hpp"
#include "crossed/duals.hpp"
#include "crossed/io.hpp"
#include "crossed/library.hpp"
#include "crossed/quasitriangular.hpp"
#include "crossed/ribbon.hpp"
#include "crossed/semisimple.hpp"

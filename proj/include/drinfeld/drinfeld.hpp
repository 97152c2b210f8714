#pragma once

#include "scalar.hpp"
#include "linear.hpp"
#include "generator.hpp"
#include "report.hpp"
#include "parallel.hpp"
#include "algebra.hpp"
#include "drinfeld_double.hpp"
#include "bialgebra.hpp"
#include "reps.hpp"
#include "io.hpp"

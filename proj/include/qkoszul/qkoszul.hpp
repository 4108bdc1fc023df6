#pragma once

// Umbrella header for the whole library.

#include "cli.hpp"
#include "cocycles.hpp"
#include "cohomology.hpp"
#include "errors.hpp"
#include "parse.hpp"
#include "presentation.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "scalar.hpp"

#pragma once

#include "analyzer.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "hadamard.hpp"
#include "intlat.hpp"
#include "metric.hpp"
#include "report.hpp"
#include "xform.hpp"

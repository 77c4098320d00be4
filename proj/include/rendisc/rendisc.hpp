#pragma once

#include "rendisc/analysis.hpp"
#include "rendisc/baseline_asy.hpp"
#include "rendisc/boundary.hpp"
#include "rendisc/density_expr.hpp"
#include "rendisc/geometry.hpp"
#include "rendisc/protocol.hpp"
#include "rendisc/report_io.hpp"
#include "rendisc/rgg.hpp"
#include "rendisc/rng.hpp"

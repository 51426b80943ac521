#pragma once

#include "gcomp/closed_forms.hpp"
#include "gcomp/combinatorics.hpp"
#include "gcomp/graph.hpp"
#include "gcomp/partition_oracle.hpp"
#include "gcomp/power_series.hpp"
#include "gcomp/spectrum.hpp"
#include "gcomp/union_find.hpp"
#include "gcomp/verify.hpp"

#pragma once

#include "binterp/bounds.hpp"
#include "binterp/config.hpp"
#include "binterp/diagnostics.hpp"
#include "binterp/divided_differences.hpp"
#include "binterp/grid.hpp"
#include "binterp/interp1d.hpp"
#include "binterp/interp_nd.hpp"
#include "binterp/mesh.hpp"
#include "binterp/pchip.hpp"
#include "binterp/stencil.hpp"

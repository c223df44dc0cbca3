#pragma once

#include "gfgmin/core.hpp"
#include "gfgmin/hoa.hpp"
#include "gfgmin/safe_structure.hpp"
#include "gfgmin/parity_game.hpp"
#include "gfgmin/oracle.hpp"
#include "gfgmin/random.hpp"
#include "gfgmin/nicer.hpp"
#include "gfgmin/minimizer.hpp"
#include "gfgmin/canonizer.hpp"
#include "gfgmin/iso.hpp"

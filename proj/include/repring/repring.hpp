#pragma once

#include "char_engine.hpp"
#include "coc_ring.hpp"
#include "exact.hpp"
#include "frt_model.hpp"
#include "nc_rewrite.hpp"
#include "root_data.hpp"
#include "twining.hpp"
#include "verification.hpp"

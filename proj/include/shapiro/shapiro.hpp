#pragma once

#include "shapiro/arc.hpp"
#include "shapiro/autocorrelation.hpp"
#include "shapiro/bounds.hpp"
#include "shapiro/circle_eval.hpp"
#include "shapiro/io.hpp"
#include "shapiro/rng.hpp"
#include "shapiro/root_angles.hpp"
#include "shapiro/rs_pair.hpp"
#include "shapiro/sturm.hpp"
#include "shapiro/zero_count.hpp"

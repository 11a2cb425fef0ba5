#pragma once

#include "warpds/car_fock.hpp"
#include "warpds/deformation.hpp"
#include "warpds/geometry.hpp"
#include "warpds/spin_group.hpp"
#include "warpds/verification.hpp"
#include "warpds/wedges.hpp"

#pragma once

#include "cra/bound_state.hpp"
#include "cra/dynamics.hpp"
#include "cra/ed_oracle.hpp"
#include "cra/errors.hpp"
#include "cra/model.hpp"
#include "cra/spectrum.hpp"
#include "cra/version.hpp"

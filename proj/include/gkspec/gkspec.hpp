#pragma once

#include "gkspec/errors.hpp"
#include "gkspec/gf2m.hpp"
#include "gkspec/group.hpp"
#include "gkspec/group_engine.hpp"
#include "gkspec/group_spec.hpp"
#include "gkspec/int128.hpp"
#include "gkspec/numth.hpp"
#include "gkspec/spectrum.hpp"
#include "gkspec/suzuki.hpp"
#include "gkspec/verify.hpp"

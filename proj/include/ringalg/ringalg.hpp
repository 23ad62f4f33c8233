#pragma once

// Umbrella header.

#include "ringalg/action.hpp"
#include "ringalg/errors.hpp"
#include "ringalg/exterior.hpp"
#include "ringalg/fuzz.hpp"
#include "ringalg/matrix.hpp"
#include "ringalg/poly.hpp"
#include "ringalg/rings.hpp"
#include "ringalg/rng.hpp"
#include "ringalg/text.hpp"
#include "ringalg/theorems.hpp"
#include "ringalg/transport.hpp"

#pragma once

// Umbrella header for the hypermoment library.

#include "hypermoment/character_sums.hpp"
#include "hypermoment/common.hpp"
#include "hypermoment/curves.hpp"
#include "hypermoment/cyclotomic.hpp"
#include "hypermoment/dimensions.hpp"
#include "hypermoment/eta.hpp"
#include "hypermoment/fft.hpp"
#include "hypermoment/hypergeometric.hpp"
#include "hypermoment/moments.hpp"
#include "hypermoment/prime_field.hpp"
#include "hypermoment/trace_formulas.hpp"

namespace hypermoment {
inline constexpr const char* version = "0.1.0";
}

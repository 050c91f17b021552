#pragma once

#include "seedwave/construct.hpp"
#include "seedwave/errors.hpp"
#include "seedwave/io.hpp"
#include "seedwave/matrix.hpp"
#include "seedwave/moments.hpp"
#include "seedwave/quadrature.hpp"
#include "seedwave/rng.hpp"
#include "seedwave/seed_sequence.hpp"
#include "seedwave/transform.hpp"
#include "seedwave/version.hpp"
#include "seedwave/wavelet.hpp"

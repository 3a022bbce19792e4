#pragma once

#include "roast/version.hpp"

#include "roast/core/band_split.hpp"
#include "roast/core/dpss.hpp"
#include "roast/core/error.hpp"
#include "roast/core/fft.hpp"
#include "roast/core/parallel.hpp"
#include "roast/core/prolate.hpp"
#include "roast/core/signals.hpp"
#include "roast/core/tridiagonal.hpp"
#include "roast/core/types.hpp"

#include "roast/transform/baselines.hpp"
#include "roast/transform/basis.hpp"
#include "roast/transform/rank_rules.hpp"
#include "roast/transform/roast_basis.hpp"
#include "roast/transform/serialize.hpp"

#include "roast/metrics/angles.hpp"
#include "roast/metrics/checks.hpp"
#include "roast/metrics/ledger.hpp"
#include "roast/metrics/linalg.hpp"
#include "roast/metrics/residual.hpp"
#include "roast/metrics/snr.hpp"
#include "roast/metrics/spectrum.hpp"

#include "roast/apps/recovery.hpp"

#pragma once

#include "mddkit/alignment.hpp"
#include "mddkit/histogram.hpp"
#include "mddkit/inventory.hpp"
#include "mddkit/manifest.hpp"
#include "mddkit/noiser.hpp"
#include "mddkit/orthography.hpp"
#include "mddkit/phonetiser.hpp"
#include "mddkit/report.hpp"
#include "mddkit/rules.hpp"
#include "mddkit/scorer.hpp"

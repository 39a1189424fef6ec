#pragma once

#include "brb/algebra.hpp"
#include "brb/convolution.hpp"
#include "brb/diffeo.hpp"
#include "brb/errors.hpp"
#include "brb/hopf.hpp"
#include "brb/linear.hpp"
#include "brb/rota_baxter.hpp"
#include "brb/series.hpp"
#include "brb/stuffle.hpp"
#include "brb/universal.hpp"
#include "brb/words.hpp"

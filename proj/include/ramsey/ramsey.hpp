#pragma once

#include "ramsey/colour.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/delta.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/hedgehog.hpp"
#include "ramsey/io.hpp"
#include "ramsey/rainbow.hpp"
#include "ramsey/report.hpp"
#include "ramsey/seqpat.hpp"
#include "ramsey/stepup.hpp"

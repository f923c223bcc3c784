#pragma once

#include "almost_increasing.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "evil.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "parseq.hpp"
#include "patterns.hpp"
#include "permutation.hpp"
#include "plot.hpp"
#include "rect.hpp"
#include "text.hpp"
#include "walks.hpp"
#include "words.hpp"

#pragma once

#include "ascent/bigint.hpp"
#include "ascent/cb_words.hpp"
#include "ascent/dyck.hpp"
#include "ascent/enumerate.hpp"
#include "ascent/extremal.hpp"
#include "ascent/formulas.hpp"
#include "ascent/gentree.hpp"
#include "ascent/io.hpp"
#include "ascent/lifting.hpp"
#include "ascent/pattern.hpp"
#include "ascent/polynomial.hpp"
#include "ascent/sequences.hpp"
#include "ascent/word.hpp"

#pragma once

#include "compmat/errors.hpp"
#include "compmat/integer.hpp"
#include "compmat/gaussian.hpp"
#include "compmat/modint.hpp"
#include "compmat/rings.hpp"
#include "compmat/ring_element.hpp"
#include "compmat/matrix.hpp"
#include "compmat/poly.hpp"
#include "compmat/normal_forms.hpp"
#include "compmat/bipoly.hpp"
#include "compmat/span.hpp"
#include "compmat/companion.hpp"
#include "compmat/generation.hpp"
#include "compmat/presentation.hpp"
#include "compmat/parse.hpp"
#include "compmat/random.hpp"

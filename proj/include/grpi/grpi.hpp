#pragma once

#include "grpi/algebra.hpp"
#include "grpi/bounds.hpp"
#include "grpi/combinatorics.hpp"
#include "grpi/engine.hpp"
#include "grpi/evaluate.hpp"
#include "grpi/field.hpp"
#include "grpi/group.hpp"
#include "grpi/io.hpp"
#include "grpi/linalg.hpp"
#include "grpi/models.hpp"
#include "grpi/parse.hpp"
#include "grpi/polynomial.hpp"
#include "grpi/semi.hpp"

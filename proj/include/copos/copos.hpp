#pragma once

#include <copos/engine.hpp>
#include <copos/error.hpp>
#include <copos/exact_linalg.hpp>
#include <copos/polytope.hpp>
#include <copos/rational.hpp>
#include <copos/simplex.hpp>
#include <copos/symmetric_matrix.hpp>

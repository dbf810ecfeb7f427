#pragma once

#include <gact/classify.hpp>
#include <gact/cone.hpp>
#include <gact/curve.hpp>
#include <gact/demazure.hpp>
#include <gact/field.hpp>
#include <gact/graded.hpp>
#include <gact/lattice.hpp>
#include <gact/lfihd.hpp>
#include <gact/pdiv.hpp>
#include <gact/poly.hpp>
#include <gact/polyhedron.hpp>
#include <gact/ratfunc.hpp>

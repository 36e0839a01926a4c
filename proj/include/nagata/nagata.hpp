#pragma once

// Exact engine for bigraded polynomials f = sum_r x_r^{d1} g_r with monomial
// facets g_r: skeleton-counting Hilbert tables, annihilator generators, a
// catalecticant ground-truth oracle, and Lefschetz rank checks.

#include "nagata/arith.hpp"
#include "nagata/monomial.hpp"
#include "nagata/input.hpp"
#include "nagata/face_model.hpp"
#include "nagata/hilbert.hpp"
#include "nagata/matrix.hpp"
#include "nagata/span.hpp"
#include "nagata/apolarity.hpp"
#include "nagata/annihilator.hpp"
#include "nagata/lefschetz.hpp"
#include "nagata/parse.hpp"
#include "nagata/io.hpp"

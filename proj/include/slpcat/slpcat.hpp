#pragma once

#include "characters.hpp"
#include "combinatorics.hpp"
#include "crystal.hpp"
#include "fock.hpp"
#include "fp_matrix.hpp"
#include "hecke.hpp"
#include "io.hpp"

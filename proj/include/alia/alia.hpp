#pragma once

/**
 * @file alia.hpp
 * @brief Umbrella header for the automorphic Lie algebra library.
 */

#include "alia/exactnum.hpp"
#include "alia/upoly.hpp"
#include "alia/matrix.hpp"
#include "alia/bipoly.hpp"
#include "alia/polyhedral.hpp"
#include "alia/rootsystem.hpp"
#include "alia/structure.hpp"
#include "alia/intertwiner.hpp"
#include "alia/export.hpp"

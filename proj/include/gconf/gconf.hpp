#pragma once

#include <gconf/cover_model.hpp>
#include <gconf/errors.hpp>
#include <gconf/graph.hpp>
#include <gconf/homology.hpp>
#include <gconf/integer.hpp>
#include <gconf/integer_matrix.hpp>
#include <gconf/pipeline.hpp>
#include <gconf/pointwise.hpp>
#include <gconf/presheaf_complex.hpp>
#include <gconf/prune.hpp>
#include <gconf/serialization.hpp>
#include <gconf/simplicial.hpp>
#include <gconf/stable.hpp>
#include <gconf/torus.hpp>

#pragma once

#include "cposet/coset.hpp"
#include "cposet/formulas.hpp"
#include "cposet/fp.hpp"
#include "cposet/group.hpp"
#include "cposet/homology.hpp"
#include "cposet/poset.hpp"
#include "cposet/shelling.hpp"
#include "cposet/symplectic.hpp"

#pragma once

#include "qhk/abelian.hpp"
#include "qhk/alexander.hpp"
#include "qhk/chain.hpp"
#include "qhk/group_homology.hpp"
#include "qhk/integer.hpp"
#include "qhk/json_io.hpp"
#include "qhk/matrix.hpp"
#include "qhk/modp.hpp"
#include "qhk/perm.hpp"
#include "qhk/quandle.hpp"
#include "qhk/smith.hpp"
#include "qhk/verify.hpp"

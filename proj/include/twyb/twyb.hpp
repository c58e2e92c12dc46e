#pragma once

#include "twyb/cochain.hpp"
#include "twyb/cochain_io.hpp"
#include "twyb/diagram.hpp"
#include "twyb/error.hpp"
#include "twyb/extension.hpp"
#include "twyb/families.hpp"
#include "twyb/group_ring.hpp"
#include "twyb/modular.hpp"
#include "twyb/parallel.hpp"
#include "twyb/statesum.hpp"
#include "twyb/structure_io.hpp"
#include "twyb/yb_core.hpp"
#include "twyb/zn_linalg.hpp"

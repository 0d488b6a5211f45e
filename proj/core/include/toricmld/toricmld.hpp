#pragma once

#include "toricmld/error.hpp"
#include "toricmld/lattice.hpp"
#include "toricmld/cone.hpp"
#include "toricmld/fan.hpp"
#include "toricmld/logpair.hpp"
#include "toricmld/snc.hpp"
#include "toricmld/pairfile.hpp"
#include "toricmld/verify.hpp"

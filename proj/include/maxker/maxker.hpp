// Umbrella header.

#ifndef MAXKER_MAXKER_HPP
#define MAXKER_MAXKER_HPP

#include "maxker/error.hpp"
#include "maxker/families.hpp"
#include "maxker/fmat.hpp"
#include "maxker/format.hpp"
#include "maxker/gf.hpp"
#include "maxker/linpoly.hpp"
#include "maxker/maxkernel.hpp"
#include "maxker/mrd.hpp"

#endif

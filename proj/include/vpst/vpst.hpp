#pragma once

#include "vpst/characters.hpp"
#include "vpst/cyclotomic.hpp"
#include "vpst/error.hpp"
#include "vpst/group.hpp"
#include "vpst/oracle.hpp"
#include "vpst/pst.hpp"
#include "vpst/spectrum.hpp"

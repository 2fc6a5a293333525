#pragma once

#include "coxeter.hpp"
#include "diagram.hpp"
#include "invariants.hpp"
#include "modring.hpp"
#include "poly.hpp"
#include "rack.hpp"
#include "rack_io.hpp"

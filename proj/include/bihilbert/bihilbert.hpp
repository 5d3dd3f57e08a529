#pragma once

#include "bihilbert/bicomplex.hpp"
#include "bihilbert/errors.hpp"
#include "bihilbert/l2.hpp"
#include "bihilbert/module.hpp"
#include "bihilbert/orthonormal.hpp"
